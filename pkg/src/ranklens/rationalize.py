"""Rationalizing-game synthesis and the rationalizability decision.

A dataset is rationalizable iff payoffs exist making every observed
choice a strict equilibrium of its subgame. The row-player inequalities
constrain A alone and live on row edges; the column-player inequalities
constrain B alone and live on column edges. Each side is satisfiable iff
its constraint graph is acyclic, and the two sides are independent, so
the decision reduces to two cycle checks.

Four synthesis routes, by structure:
  rank_one      full subgames, componentwise-distinct choices -> rank 1
  zero_sum      laminar + uniqueness -> rank 0, unique equilibria
  bounded_rank  uniqueness -> rank bounded by the crossing span
  general       any rationalizable dataset, no rank guarantee
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotLaminar, NotRationalizable, SubgameNotFull, UniquenessViolated
from .graphs import (
    COL,
    ROW,
    Edge,
    RPGraph,
    assign_payoffs_split,
    assign_payoffs_topological,
    build_split_graph,
    build_strong_laminar_graph,
    is_acyclic,
    topological_levels,
)
from .model import (
    BimatrixGame,
    DataSet,
    Observation,
    StrategyProfile,
    full_subgame,
    game_rank,
    rationalizes,
)
from .structure import dedupe_nested, is_laminar, satisfies_uniqueness


@dataclass(frozen=True)
class CycleWitness:
    """A cycle of strict preferences that cannot all hold at once."""

    player: str  # "row" or "column"
    cycle: tuple[StrategyProfile, ...]

    def inequalities(self) -> tuple[str, ...]:
        out = []
        k = len(self.cycle)
        for idx, vertex in enumerate(self.cycle):
            nxt = self.cycle[(idx + 1) % k]
            if self.player == "row":
                out.append(f"A[{vertex.row},{vertex.col}] > A[{nxt.row},{nxt.col}]")
            else:
                out.append(f"B[{nxt.row},{nxt.col}] > B[{vertex.row},{vertex.col}]")
        return tuple(out)


@dataclass(frozen=True)
class RationalizabilityResult:
    rationalizable: bool
    witness: CycleWitness | None

    def __bool__(self) -> bool:
        return self.rationalizable


def _row_constraint_graph(dataset: DataSet) -> RPGraph:
    edges = set()
    for obs in dataset.observations:
        (i, j) = obs.choice
        for i2 in obs.subgame.rows:
            if i2 != i:
                edges.add(Edge(StrategyProfile(i, j), StrategyProfile(i2, j), ROW))
    return RPGraph(dataset.n, frozenset(edges))


def _col_constraint_graph(dataset: DataSet) -> RPGraph:
    edges = set()
    for obs in dataset.observations:
        (i, j) = obs.choice
        for j2 in obs.subgame.cols:
            if j2 != j:
                edges.add(Edge(StrategyProfile(i, j2), StrategyProfile(i, j), COL))
    return RPGraph(dataset.n, frozenset(edges))


def is_rationalizable(dataset: DataSet) -> RationalizabilityResult:
    """Decide rationalizability; on failure, exhibit one player's cycle."""
    row_check = is_acyclic(_row_constraint_graph(dataset))
    if not row_check.acyclic:
        return RationalizabilityResult(False, CycleWitness("row", row_check.cycle))
    col_check = is_acyclic(_col_constraint_graph(dataset))
    if not col_check.acyclic:
        return RationalizabilityResult(False, CycleWitness("column", col_check.cycle))
    return RationalizabilityResult(True, None)


@dataclass(frozen=True)
class RationalizationCertificate:
    """A synthesized game plus what it guarantees.

    rank is exact; rank_bound is the method's a priori guarantee (None
    for the general method). uniqueness_guarantee means every observed
    subgame has the observed choice as its only strict equilibrium.
    """

    game: BimatrixGame
    method: str
    rank: int
    rank_bound: int | None
    per_observation: tuple[tuple[Observation, bool], ...]
    uniqueness_guarantee: bool


def _certify(
    game: BimatrixGame,
    dataset: DataSet,
    method: str,
    rank_bound: int | None,
    uniqueness_guarantee: bool,
) -> RationalizationCertificate:
    # Soundness gate: every synthesis result must verify before it leaves.
    report = rationalizes(game, dataset)
    if not report.ok:
        raise AssertionError(
            f"internal error: {method} produced a non-rationalizing game: {report.failures[0].inequality}"
        )
    rank = game_rank(game)
    if rank_bound is not None and rank > rank_bound:
        raise AssertionError(f"internal error: {method} exceeded its rank bound {rank_bound} (rank {rank})")
    failed = {f.observation for f in report.failures}
    per_observation = tuple((obs, obs not in failed) for obs in dataset.observations)
    return RationalizationCertificate(
        game=game,
        method=method,
        rank=rank,
        rank_bound=rank_bound,
        per_observation=per_observation,
        uniqueness_guarantee=uniqueness_guarantee,
    )


def rationalize_rank_one(dataset: DataSet) -> RationalizationCertificate:
    """Rank-1 rationalization when every subgame is the full game.

    Choices are relabeled onto the diagonal (sorted lexicographically, the
    k-th choice's row and column both map to k); in those coordinates
    A[i,j] = 2ij - i^2 + j^2 and B[i,j] = 2ij + i^2 - j^2 whenever i or j
    is at most the number of observations, else A = 0 and B = 4ij. Then
    A + B = [4ij], a rank-1 matrix, and the full game's strict equilibria
    are exactly the observed choices.
    """
    n = dataset.n
    full = full_subgame(n)
    for obs in dataset.observations:
        if obs.subgame != full:
            raise SubgameNotFull(f"observation {obs} is not on the full game")
    choices = sorted(obs.choice for obs in dataset.observations)
    rows_seen: dict[int, StrategyProfile] = {}
    cols_seen: dict[int, StrategyProfile] = {}
    for choice in choices:
        for seen, coord in ((rows_seen, choice.row), (cols_seen, choice.col)):
            if coord in seen:
                other = seen[coord]
                axis = "row" if seen is rows_seen else "column"
                raise NotRationalizable(
                    f"choices {other} and {choice} share a {axis}; "
                    "both cannot be strict equilibria of the full game",
                    witness=_shared_line_witness(other, choice),
                )
            seen[coord] = choice

    ell = len(choices)
    row_map = {choice.row: k for k, choice in enumerate(choices, start=1)}
    col_map = {choice.col: k for k, choice in enumerate(choices, start=1)}
    next_label = ell + 1
    for r in range(1, n + 1):
        if r not in row_map:
            row_map[r] = next_label
            next_label += 1
    next_label = ell + 1
    for c in range(1, n + 1):
        if c not in col_map:
            col_map[c] = next_label
            next_label += 1

    def entries(r: int, c: int) -> tuple[Fraction, Fraction]:
        i, j = row_map[r], col_map[c]
        if i <= ell or j <= ell:
            return Fraction(2 * i * j - i * i + j * j), Fraction(2 * i * j + i * i - j * j)
        return Fraction(0), Fraction(4 * i * j)

    a = tuple(tuple(entries(r, c)[0] for c in range(1, n + 1)) for r in range(1, n + 1))
    b = tuple(tuple(entries(r, c)[1] for c in range(1, n + 1)) for r in range(1, n + 1))
    game = BimatrixGame(n, a, b)
    return _certify(game, dataset, "rank_one", rank_bound=1, uniqueness_guarantee=True)


def _shared_line_witness(first: StrategyProfile, second: StrategyProfile) -> CycleWitness:
    if first.row == second.row:
        return CycleWitness("column", (first, second))
    return CycleWitness("row", (first, second))


def rationalize_zero_sum(dataset: DataSet) -> RationalizationCertificate:
    """Zero-sum rationalization of a laminar uniqueness dataset.

    Builds the strongly implementing graph on the deduplicated dataset and
    prices it by levels; the observed choice is then the unique strict
    equilibrium of every observed subgame.
    """
    if not is_laminar(dataset):
        raise NotLaminar("dataset has crossing subgames")
    check = satisfies_uniqueness(dataset)
    if not check.ok:
        raise UniquenessViolated(f"uniqueness fails for pair {check.violation}")
    deduped = dedupe_nested(dataset)
    graph = build_strong_laminar_graph(deduped)
    game = assign_payoffs_topological(graph)
    return _certify(game, dataset, "zero_sum", rank_bound=0, uniqueness_guarantee=True)


def _split_cycle_witness(cycle) -> CycleWitness:
    # A split-graph cycle alternates row and column edges; report it as
    # profile coordinates. Player attribution is mixed, label by majority tag.
    profiles = tuple(StrategyProfile(v.row, v.col) for v in cycle)
    tags = [v.tag for v in cycle]
    player = "column" if tags.count("C") > tags.count("R") else "row"
    return CycleWitness(player, profiles)


def rationalize_bounded_rank(dataset: DataSet) -> RationalizationCertificate:
    """Rationalization of a uniqueness dataset with rank at most the
    crossing span."""
    check = satisfies_uniqueness(dataset)
    if not check.ok:
        raise UniquenessViolated(f"uniqueness fails for pair {check.violation}")
    graph = build_split_graph(dataset)
    acyclic = is_acyclic(graph)
    if not acyclic.acyclic:
        raise NotRationalizable(
            f"split revealed-preference graph has cycle {acyclic.cycle}",
            witness=_split_cycle_witness(acyclic.cycle),
        )
    game = assign_payoffs_split(graph)
    return _certify(game, dataset, "bounded_rank", rank_bound=graph.span, uniqueness_guarantee=False)


def rationalize_general(dataset: DataSet) -> RationalizationCertificate:
    """Rationalization of any rationalizable dataset.

    A is priced by levels on the row-player constraint graph alone and B on
    the column-player graph alone (negated, so the choice's column payoff
    is largest in its row). No rank guarantee.
    """
    result = is_rationalizable(dataset)
    if not result.rationalizable:
        ineqs = ", ".join(result.witness.inequalities())
        raise NotRationalizable(f"contradictory preferences: {ineqs}", witness=result.witness)
    n = dataset.n
    row_levels = topological_levels(_row_constraint_graph(dataset))
    col_levels = topological_levels(_col_constraint_graph(dataset))
    a = tuple(
        tuple(Fraction(row_levels[StrategyProfile(i, j)]) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    b = tuple(
        tuple(Fraction(-col_levels[StrategyProfile(i, j)]) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    game = BimatrixGame(n, a, b)
    return _certify(game, dataset, "general", rank_bound=None, uniqueness_guarantee=False)


def rationalize_auto(dataset: DataSet) -> RationalizationCertificate:
    """Dispatch to the strongest applicable method.

    Full subgames -> rank_one; laminar + uniqueness -> zero_sum;
    uniqueness -> bounded_rank; otherwise general.
    """
    full = full_subgame(dataset.n)
    if all(subgame == full for subgame in dataset.subgames()):
        return rationalize_rank_one(dataset)
    unique = satisfies_uniqueness(dataset).ok
    if unique and is_laminar(dataset):
        return rationalize_zero_sum(dataset)
    if unique:
        return rationalize_bounded_rank(dataset)
    return rationalize_general(dataset)
