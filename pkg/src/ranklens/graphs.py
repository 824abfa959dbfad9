"""Revealed-preference graphs and payoff assignment by topological levels.

Vertices are strategy profiles. A row edge (i,j) -> (i',j) records the
strict preference A[i,j] > A[i',j]; a column edge (i,j') -> (i,j) records
B[i,j] > B[i,j']. In the zero-sum reading (B = -A) every edge v -> w
means A_v > A_w, so an acyclic graph can be priced by a sink-first level
sweep.

Split graphs relax zero-sum exactly at the crossing choices: those
profiles appear twice, once carrying only row edges (pricing A) and once
carrying only column edges (pricing B), which confines any rank increase
of A + B to the split rows and columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, NamedTuple, Sequence

from .errors import CyclicGraph, NotDeduped, NotLaminar, UniquenessViolated
from .model import BimatrixGame, DataSet, Observation, StrategyProfile
from .structure import analyze, is_laminar, laminar_forest, satisfies_uniqueness

ROW = "row"
COL = "col"

# Canonical vertex order lists the row-edge copy before the column-edge copy.
_TAG_ORDER = {"": 0, "R": 1, "C": 2}


class Edge(NamedTuple):
    src: Hashable
    dst: Hashable
    kind: str


class SplitVertex(NamedTuple):
    row: int
    col: int
    tag: str  # "" intact, "R" row-edge copy, "C" column-edge copy

    def __str__(self) -> str:
        base = f"{self.row},{self.col}"
        return base if not self.tag else f"{base},{self.tag}"


def split_vertex_key(vertex: SplitVertex) -> tuple[int, int, int]:
    return (vertex.row, vertex.col, _TAG_ORDER[vertex.tag])


def _check_profile_edge(edge: Edge, n: int) -> None:
    src, dst = edge.src, edge.dst
    for p in (src, dst):
        if not (1 <= p.row <= n and 1 <= p.col <= n):
            raise ValueError(f"vertex {p} outside 1..{n}")
    if edge.kind == ROW:
        if src.col != dst.col or src.row == dst.row:
            raise ValueError(f"row edge must change row and keep column: {edge}")
    elif edge.kind == COL:
        if src.row != dst.row or src.col == dst.col:
            raise ValueError(f"column edge must change column and keep row: {edge}")
    else:
        raise ValueError(f"unknown edge kind {edge.kind!r}")


@dataclass(frozen=True)
class RPGraph:
    """Directed graph over all n*n profiles with row/column typed edges."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for edge in self.edges:
            _check_profile_edge(edge, self.n)

    @property
    def vertices(self) -> tuple[StrategyProfile, ...]:
        return tuple(
            StrategyProfile(i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
        )

    def to_dot(self) -> str:
        lines = ["digraph revealed_preference {"]
        for v in self.vertices:
            lines.append(f'  "{v.row},{v.col}";')
        for edge in sorted(self.edges):
            lines.append(
                f'  "{edge.src.row},{edge.src.col}" -> "{edge.dst.row},{edge.dst.col}" [kind={edge.kind}];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SplitRPGraph:
    """RP graph where each split profile is duplicated into an R and a C copy."""

    n: int
    split: frozenset[StrategyProfile]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        vertex_set = set(self.vertices)
        for edge in self.edges:
            src, dst = edge.src, edge.dst
            if src not in vertex_set or dst not in vertex_set:
                raise ValueError(f"edge endpoint not a vertex of this graph: {edge}")
            if edge.kind == ROW:
                if src.col != dst.col or src.row == dst.row:
                    raise ValueError(f"row edge must change row and keep column: {edge}")
                if src.tag == "C" or dst.tag == "C":
                    raise ValueError(f"row edge may not touch a C copy: {edge}")
            elif edge.kind == COL:
                if src.row != dst.row or src.col == dst.col:
                    raise ValueError(f"column edge must change column and keep row: {edge}")
                if src.tag == "R" or dst.tag == "R":
                    raise ValueError(f"column edge may not touch an R copy: {edge}")
            else:
                raise ValueError(f"unknown edge kind {edge.kind!r}")

    @property
    def vertices(self) -> tuple[SplitVertex, ...]:
        out = []
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                if StrategyProfile(i, j) in self.split:
                    out.append(SplitVertex(i, j, "R"))
                    out.append(SplitVertex(i, j, "C"))
                else:
                    out.append(SplitVertex(i, j, ""))
        return tuple(sorted(out, key=split_vertex_key))

    @property
    def row_span(self) -> int:
        return len({p.row for p in self.split})

    @property
    def col_span(self) -> int:
        return len({p.col for p in self.split})

    @property
    def span(self) -> int:
        return min(self.row_span, self.col_span)

    def to_dot(self) -> str:
        lines = ["digraph split_revealed_preference {"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for edge in sorted(self.edges, key=lambda e: (split_vertex_key(e.src), split_vertex_key(e.dst))):
            lines.append(f'  "{edge.src}" -> "{edge.dst}" [kind={edge.kind}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def implement_edges(observation: Observation) -> frozenset[Edge]:
    """Edges forcing the observed choice to be a strict equilibrium.

    Row edges point from the choice to each row deviation; column edges
    point from each column deviation to the choice.
    """
    (i, j), subgame = observation.choice, observation.subgame
    edges = set()
    for i2 in subgame.rows:
        if i2 != i:
            edges.add(Edge(StrategyProfile(i, j), StrategyProfile(i2, j), ROW))
    for j2 in subgame.cols:
        if j2 != j:
            edges.add(Edge(StrategyProfile(i, j2), StrategyProfile(i, j), COL))
    return frozenset(edges)


def build_strong_laminar_graph(dataset: DataSet) -> RPGraph:
    """Strongly implementing graph for a laminar dataset with unique,
    deduplicated choices.

    Per observation ((i,j), X, Y) with children taken from the containment
    forest: besides the implement edges, every vertex of a child containing
    row i gets a column edge toward column j, and every other off-choice
    vertex gets a row edge from row i. The result is acyclic and pins the
    observed choice as the unique strict equilibrium of each subgame once
    payoffs are assigned by levels.
    """
    if not is_laminar(dataset):
        raise NotLaminar("dataset has crossing subgames")
    check = satisfies_uniqueness(dataset)
    if not check.ok:
        raise UniquenessViolated(f"uniqueness fails for pair {check.violation}")
    seen_choices: dict[StrategyProfile, Observation] = {}
    for obs in dataset.observations:
        if obs.choice in seen_choices:
            raise NotDeduped(
                f"observations {seen_choices[obs.choice]} and {obs} share choice {obs.choice}"
            )
        seen_choices[obs.choice] = obs

    forest = laminar_forest(dataset)
    edges: set[Edge] = set()
    for obs in dataset.observations:
        (i, j) = obs.choice
        subgame = obs.subgame
        edges |= implement_edges(obs)
        children = forest.children_of(subgame)
        row_side: set[StrategyProfile] = set()
        col_side: set[StrategyProfile] = set()
        for child in children:
            target = row_side if i in child.rows else col_side
            target.update(child.grid())
        # A child grid holding the choice would collide with uniqueness
        # plus deduplication, which the checks above already rule out.
        assert obs.choice not in row_side and obs.choice not in col_side
        for r, c in sorted(row_side):
            edges.add(Edge(StrategyProfile(r, c), StrategyProfile(r, j), COL))
        remaining = [
            StrategyProfile(r, c)
            for r in subgame.rows
            for c in subgame.cols
            if r != i and c != j and StrategyProfile(r, c) not in row_side
        ]
        for r, c in sorted(set(col_side) | set(remaining)):
            edges.add(Edge(StrategyProfile(i, c), StrategyProfile(r, c), ROW))
    # Self-loops cannot arise: row-side vertices keep their own row for the
    # column edge, and the row-edge targets all avoid row i.
    return RPGraph(dataset.n, frozenset(edges))


def build_split_graph(dataset: DataSet) -> SplitRPGraph:
    """Split RP graph of a uniqueness dataset.

    Splits exactly the observed choices of crossing subgames and lays down
    the minimal implementing edge set: row-edge endpoints use the R copy of
    a split profile, column-edge endpoints the C copy.
    """
    check = satisfies_uniqueness(dataset)
    if not check.ok:
        raise UniquenessViolated(f"uniqueness fails for pair {check.violation}")
    report = analyze(dataset)
    split = frozenset(report.crossing_choices)

    def row_copy(profile: StrategyProfile) -> SplitVertex:
        return SplitVertex(profile.row, profile.col, "R" if profile in split else "")

    def col_copy(profile: StrategyProfile) -> SplitVertex:
        return SplitVertex(profile.row, profile.col, "C" if profile in split else "")

    edges: set[Edge] = set()
    for obs in dataset.observations:
        (i, j), subgame = obs.choice, obs.subgame
        for i2 in subgame.rows:
            if i2 != i:
                edges.add(Edge(row_copy(obs.choice), row_copy(StrategyProfile(i2, j)), ROW))
        for j2 in subgame.cols:
            if j2 != j:
                edges.add(Edge(col_copy(StrategyProfile(i, j2)), col_copy(obs.choice), COL))
    return SplitRPGraph(dataset.n, split, frozenset(edges))


class AcyclicityCheck(NamedTuple):
    acyclic: bool
    cycle: tuple | None


def _sorted_vertices(vertices: Sequence[Hashable]) -> list:
    sample = next(iter(vertices), None)
    if isinstance(sample, SplitVertex):
        return sorted(vertices, key=split_vertex_key)
    return sorted(vertices)


def is_acyclic(graph: RPGraph | SplitRPGraph) -> AcyclicityCheck:
    """Cycle test with a deterministic witness cycle when one exists."""
    vertices = _sorted_vertices(graph.vertices)
    adjacency: dict[Hashable, list] = {v: [] for v in vertices}
    for edge in graph.edges:
        adjacency[edge.src].append(edge.dst)
    for neighbors in adjacency.values():
        neighbors.sort(key=split_vertex_key if isinstance(next(iter(vertices), None), SplitVertex) else None)

    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in vertices}
    for start in vertices:
        if color[start] != WHITE:
            continue
        stack: list[tuple[Hashable, int]] = [(start, 0)]
        path = [start]
        color[start] = GRAY
        while stack:
            vertex, pointer = stack[-1]
            if pointer < len(adjacency[vertex]):
                stack[-1] = (vertex, pointer + 1)
                nxt = adjacency[vertex][pointer]
                if color[nxt] == GRAY:
                    cycle_start = path.index(nxt)
                    return AcyclicityCheck(False, tuple(path[cycle_start:]))
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    stack.append((nxt, 0))
                    path.append(nxt)
            else:
                color[vertex] = BLACK
                stack.pop()
                path.pop()
    return AcyclicityCheck(True, None)


def topological_levels(graph: RPGraph | SplitRPGraph) -> dict:
    """Sink-first level sweep.

    All current sinks (vertices without outgoing edges, isolated ones
    included) receive the current level, are removed, and the level
    increments; so every edge v -> w ends up with level(v) > level(w).
    Raises CyclicGraph when the sweep stalls.
    """
    vertices = _sorted_vertices(graph.vertices)
    out_degree = {v: 0 for v in vertices}
    predecessors: dict[Hashable, list] = {v: [] for v in vertices}
    for edge in graph.edges:
        out_degree[edge.src] += 1
        predecessors[edge.dst].append(edge.src)

    levels: dict = {}
    current = [v for v in vertices if out_degree[v] == 0]
    level = 1
    assigned = 0
    while current:
        next_wave = []
        for vertex in current:
            levels[vertex] = level
            assigned += 1
            for pred in predecessors[vertex]:
                out_degree[pred] -= 1
                if out_degree[pred] == 0:
                    next_wave.append(pred)
        current = _sorted_vertices(next_wave)
        level += 1
    if assigned != len(vertices):
        witness = is_acyclic(graph).cycle
        raise CyclicGraph(f"level sweep stalled on cycle {witness}")
    return levels


def assign_payoffs_topological(graph: RPGraph) -> BimatrixGame:
    """Zero-sum payoffs from levels: A[v] = level(v), B = -A."""
    levels = topological_levels(graph)
    a = tuple(
        tuple(Fraction(levels[StrategyProfile(i, j)]) for j in range(1, graph.n + 1))
        for i in range(1, graph.n + 1)
    )
    b = tuple(tuple(-x for x in row) for row in a)
    return BimatrixGame(graph.n, a, b)


def assign_payoffs_split(graph: SplitRPGraph) -> BimatrixGame:
    """Payoffs from split levels.

    Intact vertices price both matrices (A = level, B = -level); an R copy
    prices only A and a C copy only B, so A + B can be nonzero only on
    split rows and columns, bounding its rank by the graph's span.
    """
    levels = topological_levels(graph)
    a = [[Fraction(0)] * graph.n for _ in range(graph.n)]
    b = [[Fraction(0)] * graph.n for _ in range(graph.n)]
    for vertex, level in levels.items():
        r, c = vertex.row - 1, vertex.col - 1
        if vertex.tag in ("", "R"):
            a[r][c] = Fraction(level)
        if vertex.tag in ("", "C"):
            b[r][c] = Fraction(-level)
    return BimatrixGame(graph.n, tuple(map(tuple, a)), tuple(map(tuple, b)))
