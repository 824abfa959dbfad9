"""Exact data model: observed play, bimatrix games, equilibrium tests, rank.

All indices are 1-based, matching the notation of the revealed-preference
literature this library serves. Payoffs are exact rationals; nothing in
this module touches floating point. Every type is immutable and stored in
a canonical form, so equal objects compare and serialize identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import (
    ChoiceOutsideSubgame,
    EmptySubgame,
    IndexOutOfRange,
    InvalidSize,
    ProfileOutsideSubgame,
    SizeMismatch,
)

RationalLike = Union[int, str, Fraction]


def _to_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating-point payoffs are not supported; use Fraction, int, or 'p/q' strings")
    return Fraction(value)


def _sign(value) -> int:
    return (value > 0) - (value < 0)


class StrategyProfile(NamedTuple):
    """A joint pure strategy (row, col)."""

    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


@dataclass(frozen=True, order=True)
class Subgame:
    """Restriction of a game to row set x column set.

    Index sets are stored sorted ascending without duplicates, so equality
    is set equality and the lexicographic dataclass order is canonical.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(sorted(set(self.rows)))
        cols = tuple(sorted(set(self.cols)))
        if not rows or not cols:
            raise EmptySubgame("a subgame needs at least one row and one column")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    def contains(self, profile: StrategyProfile) -> bool:
        return profile.row in self.rows and profile.col in self.cols

    def contains_subgame(self, other: "Subgame") -> bool:
        """Grid containment: other's grid is a subset of this grid."""
        return set(other.rows) <= set(self.rows) and set(other.cols) <= set(self.cols)

    def grid(self) -> tuple[StrategyProfile, ...]:
        return tuple(StrategyProfile(i, j) for i in self.rows for j in self.cols)

    def grid_size(self) -> int:
        return len(self.rows) * len(self.cols)

    def __str__(self) -> str:
        fmt = lambda xs: "{" + ",".join(map(str, xs)) + "}"
        return fmt(self.rows) + "x" + fmt(self.cols)


def full_subgame(n: int) -> Subgame:
    return Subgame(tuple(range(1, n + 1)), tuple(range(1, n + 1)))


@dataclass(frozen=True, order=True)
class Observation:
    """One observed outcome: a chosen profile within a subgame."""

    choice: StrategyProfile
    subgame: Subgame

    def __post_init__(self) -> None:
        choice = StrategyProfile(*self.choice)
        object.__setattr__(self, "choice", choice)
        if not self.subgame.contains(choice):
            raise ChoiceOutsideSubgame(f"choice {choice} lies outside subgame {self.subgame}")

    def __str__(self) -> str:
        return f"({self.choice},{self.subgame})"


@dataclass(frozen=True)
class DataSet:
    """A set of observations over an n x n strategy space.

    Set semantics: observations are deduplicated and kept sorted by
    (choice, subgame), so equal datasets have identical representations.
    """

    n: int
    observations: tuple[Observation, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidSize(f"game size must be at least 1, got {self.n}")
        observations = tuple(sorted(set(self.observations)))
        for obs in observations:
            for index in (*obs.subgame.rows, *obs.subgame.cols):
                if not 1 <= index <= self.n:
                    raise IndexOutOfRange(f"index {index} outside 1..{self.n} in observation {obs}")
        object.__setattr__(self, "observations", observations)

    def subgames(self) -> tuple[Subgame, ...]:
        """Distinct subgames, in canonical order."""
        return tuple(sorted({obs.subgame for obs in self.observations}))

    def observations_for(self, subgame: Subgame) -> tuple[Observation, ...]:
        return tuple(obs for obs in self.observations if obs.subgame == subgame)

    def choices(self) -> tuple[StrategyProfile, ...]:
        """Distinct observed choices, in canonical order."""
        return tuple(sorted({obs.choice for obs in self.observations}))

    def __len__(self) -> int:
        return len(self.observations)


def validate_dataset(
    raw_triples: Iterable[tuple[tuple[int, int], Iterable[int], Iterable[int]]],
    n: int,
) -> DataSet:
    """Build a canonical DataSet from ((row, col), rows, cols) triples.

    Raises EmptySubgame, ChoiceOutsideSubgame, InvalidSize, or
    IndexOutOfRange on the first offending triple.
    """
    observations = tuple(
        Observation(StrategyProfile(*choice), Subgame(tuple(rows), tuple(cols)))
        for choice, rows, cols in raw_triples
    )
    return DataSet(n, observations)


@dataclass(frozen=True)
class BimatrixGame:
    """An n x n two-player game with exact rational payoffs (A, B)."""

    n: int
    a: tuple[tuple[Fraction, ...], ...]
    b: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        a = tuple(tuple(_to_fraction(x) for x in row) for row in self.a)
        b = tuple(tuple(_to_fraction(x) for x in row) for row in self.b)
        for name, matrix in (("A", a), ("B", b)):
            if len(matrix) != self.n or any(len(row) != self.n for row in matrix):
                raise SizeMismatch(f"{name} must be {self.n}x{self.n}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_rows(
        cls,
        a: Sequence[Sequence[RationalLike]],
        b: Sequence[Sequence[RationalLike]],
    ) -> "BimatrixGame":
        return cls(len(a), tuple(map(tuple, a)), tuple(map(tuple, b)))

    def payoff_a(self, profile: StrategyProfile) -> Fraction:
        return self.a[profile.row - 1][profile.col - 1]

    def payoff_b(self, profile: StrategyProfile) -> Fraction:
        return self.b[profile.row - 1][profile.col - 1]

    def total(self) -> tuple[tuple[Fraction, ...], ...]:
        """The sum matrix A + B, whose rank classifies the game."""
        return tuple(
            tuple(x + y for x, y in zip(row_a, row_b))
            for row_a, row_b in zip(self.a, self.b)
        )

    @property
    def is_zero_sum(self) -> bool:
        return all(x + y == 0 for row_a, row_b in zip(self.a, self.b) for x, y in zip(row_a, row_b))


@dataclass(frozen=True)
class SignMatrix:
    """A square matrix over {-1, 0, +1}."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        m = len(entries)
        if any(len(row) != m for row in entries):
            raise SizeMismatch("sign matrix must be square")
        if any(x not in (-1, 0, 1) for row in entries for x in row):
            raise ValueError("sign matrix entries must be -1, 0, or +1")
        object.__setattr__(self, "entries", entries)

    @property
    def order(self) -> int:
        return len(self.entries)

    def transpose(self) -> "SignMatrix":
        return SignMatrix(tuple(zip(*self.entries))) if self.entries else self


def sign_pattern(rows: Sequence[Sequence[RationalLike]]) -> SignMatrix:
    """Entrywise sign of a square rational matrix."""
    return SignMatrix(tuple(tuple(_sign(_to_fraction(x)) for x in row) for row in rows))


def is_strict_equilibrium(game: BimatrixGame, subgame: Subgame, profile: StrategyProfile) -> bool:
    """Whether profile is a strict pure equilibrium of the subgame.

    Strictness is exact: the profile's payoff must beat every deviation
    within the subgame for the respective player, ties disqualify.
    """
    profile = StrategyProfile(*profile)
    if not subgame.contains(profile):
        raise ProfileOutsideSubgame(f"profile {profile} lies outside subgame {subgame}")
    i, j = profile
    own_a = game.a[i - 1][j - 1]
    for i2 in subgame.rows:
        if i2 != i and own_a <= game.a[i2 - 1][j - 1]:
            return False
    own_b = game.b[i - 1][j - 1]
    for j2 in subgame.cols:
        if j2 != j and own_b <= game.b[i - 1][j2 - 1]:
            return False
    return True


def strict_equilibria(game: BimatrixGame, subgame: Subgame) -> frozenset[StrategyProfile]:
    """All strict pure equilibria of the subgame."""
    for index in (*subgame.rows, *subgame.cols):
        if not 1 <= index <= game.n:
            raise IndexOutOfRange(f"index {index} outside 1..{game.n}")
    return frozenset(
        profile for profile in subgame.grid() if is_strict_equilibrium(game, subgame, profile)
    )


@dataclass(frozen=True)
class ObservationFailure:
    """An observation whose choice is not a strict equilibrium, with the
    first violated inequality spelled out."""

    observation: Observation
    inequality: str


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    failures: tuple[ObservationFailure, ...]


def _first_violation(game: BimatrixGame, obs: Observation) -> str | None:
    i, j = obs.choice
    own_a = game.a[i - 1][j - 1]
    for i2 in obs.subgame.rows:
        if i2 != i and own_a <= game.a[i2 - 1][j - 1]:
            return f"A[{i},{j}]={own_a} <= A[{i2},{j}]={game.a[i2 - 1][j - 1]}"
    own_b = game.b[i - 1][j - 1]
    for j2 in obs.subgame.cols:
        if j2 != j and own_b <= game.b[i - 1][j2 - 1]:
            return f"B[{i},{j}]={own_b} <= B[{i},{j2}]={game.b[i - 1][j2 - 1]}"
    return None


def rationalizes(game: BimatrixGame, dataset: DataSet) -> VerificationReport:
    """Check that every observed choice is a strict equilibrium of its subgame."""
    if game.n != dataset.n:
        raise SizeMismatch(f"game is {game.n}x{game.n} but dataset expects n={dataset.n}")
    failures = []
    for obs in dataset.observations:
        violation = _first_violation(game, obs)
        if violation is not None:
            failures.append(ObservationFailure(obs, violation))
    return VerificationReport(ok=not failures, failures=tuple(failures))


def rational_matrix_rank(rows: Sequence[Sequence[RationalLike]]) -> int:
    """Exact rank over the rationals.

    Each row is scaled to integers (rank-preserving), then eliminated by
    Bareiss fraction-free Gaussian elimination, pivoting on the first
    nonzero entry of each column. No floating point anywhere.
    """
    matrix = [[_to_fraction(x) for x in row] for row in rows]
    if not matrix or not matrix[0]:
        return 0
    width = len(matrix[0])
    if any(len(row) != width for row in matrix):
        raise SizeMismatch("ragged matrix")
    m: list[list[int]] = []
    for row in matrix:
        scale = math.lcm(*(x.denominator for x in row))
        m.append([int(x * scale) for x in row])
    n_rows = len(m)
    rank = 0
    prev_pivot = 1
    for col in range(width):
        pivot_row = None
        for r in range(rank, n_rows):
            if m[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, n_rows):
            factor = m[r][col]
            row_r = m[r]
            row_p = m[rank]
            for c in range(col, width):
                row_r[c] = (row_r[c] * pivot - factor * row_p[c]) // prev_pivot
        prev_pivot = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def game_rank(game: BimatrixGame) -> int:
    """Rank of A + B over the rationals; zero iff the game is zero-sum."""
    return rational_matrix_rank(game.total())
