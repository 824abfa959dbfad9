"""Desk-scale exhaustive search over small integer games.

The key reduction: (A, B) rationalizes a dataset iff A alone satisfies
every row-player inequality and B alone every column-player inequality,
so the two sides factor. The search enumerates the integer box once,
filters each side, and combines; integer numpy arithmetic keeps it exact
(entries are tiny) and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import BudgetExceeded, SizeMismatch
from .graphs import RPGraph, implement_edges, is_acyclic
from .model import BimatrixGame, DataSet, StrategyProfile, Subgame, strict_equilibria


@dataclass(frozen=True)
class SearchConfig:
    """Budget and behavior of brute_force_min_rank.

    max_abs_payoff bounds every matrix entry in absolute value; max_n caps
    the game size (the box grows as (2M+1)^(2 n^2)). deterministic_order
    documents that enumeration runs in a fixed order; results are
    independent of any partitioning either way. zero_sum_shortcut answers
    rank-0 queries through the implement-graph acyclicity test before
    enumerating; disable it to keep the enumeration fully independent of
    the graph machinery.
    """

    max_abs_payoff: int = 3
    max_n: int = 2
    deterministic_order: bool = True
    zero_sum_shortcut: bool = True


def zero_sum_feasible(dataset: DataSet) -> bool:
    """Whether a zero-sum game rationalizes the dataset.

    With B = -A every column-player inequality also constrains A, so all
    implement edges become A-orderings on one graph; feasibility is that
    graph's acyclicity.
    """
    edges = set()
    for obs in dataset.observations:
        edges |= implement_edges(obs)
    return is_acyclic(RPGraph(dataset.n, frozenset(edges))).acyclic


def all_subgame_equilibria(game: BimatrixGame, dataset: DataSet) -> dict[Subgame, frozenset[StrategyProfile]]:
    """Strict equilibria of every distinct observed subgame."""
    if game.n != dataset.n:
        raise SizeMismatch(f"game is {game.n}x{game.n} but dataset expects n={dataset.n}")
    return {subgame: strict_equilibria(game, subgame) for subgame in dataset.subgames()}


def _enumerate_box(n: int, max_abs: int) -> np.ndarray:
    """All integer n x n matrices with entries in [-max_abs, max_abs],
    flattened row-major, in lexicographic order. Shape (count, n*n)."""
    values = range(-max_abs, max_abs + 1)
    return np.array(list(product(values, repeat=n * n)), dtype=np.int64)


def _feasible_sides(dataset: DataSet, box: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = dataset.n

    def cell(i: int, j: int) -> int:
        return (i - 1) * n + (j - 1)

    mask_a = np.ones(len(box), dtype=bool)
    mask_b = np.ones(len(box), dtype=bool)
    for obs in dataset.observations:
        (i, j), subgame = obs.choice, obs.subgame
        own = box[:, cell(i, j)]
        for i2 in subgame.rows:
            if i2 != i:
                mask_a &= own > box[:, cell(i2, j)]
        for j2 in subgame.cols:
            if j2 != j:
                mask_b &= own > box[:, cell(i, j2)]
    return box[mask_a], box[mask_b]


def brute_force_min_rank(dataset: DataSet, config: SearchConfig = SearchConfig()) -> int | None:
    """Minimum game rank over all rationalizing integer games in the box,
    or None when the box holds no rationalizing game.

    Exact for n <= 2: rank 0 is B = -A, and a 2x2 sum matrix has rank
    <= 1 iff its determinant vanishes.
    """
    n = dataset.n
    if n > config.max_n:
        space = (2 * config.max_abs_payoff + 1) ** (2 * n * n)
        raise BudgetExceeded(f"n={n} exceeds max_n={config.max_n} (search space {space})")
    if config.zero_sum_shortcut and zero_sum_feasible(dataset):
        return 0

    box = _enumerate_box(n, config.max_abs_payoff)
    side_a, side_b = _feasible_sides(dataset, box)
    if len(side_a) == 0 or len(side_b) == 0:
        return None

    b_keys = {row.tobytes() for row in side_b}
    if any((-row).tobytes() in b_keys for row in side_a):
        return 0
    if n == 1:
        return 1

    # n == 2: scan A + B determinants in chunks to bound memory.
    a0, a1, a2, a3 = (side_a[:, k] for k in range(4))
    b0, b1, b2, b3 = (side_b[:, k] for k in range(4))
    chunk = 512
    for start in range(0, len(side_a), chunk):
        end = start + chunk
        s0 = a0[start:end, None] + b0[None, :]
        s1 = a1[start:end, None] + b1[None, :]
        s2 = a2[start:end, None] + b2[None, :]
        s3 = a3[start:end, None] + b3[None, :]
        if np.any(s0 * s3 == s1 * s2):
            return 1
    return 2
