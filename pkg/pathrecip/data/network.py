"""
Acyclic planar networks with ordered boundary sources and sinks.

Planarity is not checked. The clockwise boundary order s_1..s_m, t_m..t_1 is
taken as declared, and the determinant-versus-oracle comparison
(``oracle_nonintersecting_sum``) is what exposes a declared order that no planar
embedding realizes.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from pathrecip.core.config import settings
from pathrecip.core.errors import CapacityError, DimensionError, NetworkValidationError
from pathrecip.core.exact import ExactMatrix, RationalLike, SubsetIndex, to_rational
from pathrecip.models.schemas import ValidationReport, Violation

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Edge:
    """One weighted edge. Parallel edges are distinct records."""

    tail: str
    head: str
    weight: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "weight", to_rational(self.weight))

    def __repr__(self) -> str:
        return f"Edge({self.tail!r} -> {self.head!r}, {self.weight})"


@dataclass(frozen=True)
class Path:
    start: str
    edges: Tuple[Edge, ...] = ()

    @property
    def end(self) -> str:
        return self.edges[-1].head if self.edges else self.start

    @property
    def vertices(self) -> Tuple[str, ...]:
        return (self.start,) + tuple(e.head for e in self.edges)

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def weight(self) -> Fraction:
        return prod((e.weight for e in self.edges), start=Fraction(1))


@dataclass(frozen=True)
class PathTuple:
    paths: Tuple[Path, ...]

    @property
    def weight(self) -> Fraction:
        return prod((p.weight for p in self.paths), start=Fraction(1))

    @property
    def is_non_intersecting(self) -> bool:
        seen = set()
        for path in self.paths:
            vertices = set(path.vertices)
            if seen & vertices:
                return False
            seen |= vertices
        return True


@dataclass(frozen=True)
class PlanarNetwork:
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    sources: Tuple[str, ...]
    sinks: Tuple[str, ...]
    name: Optional[str] = None
    # G^0: each s_j is also t_j and there are no edges
    degenerate: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "sources", tuple(self.sources))
        object.__setattr__(self, "sinks", tuple(self.sinks))

    @classmethod
    def build(
        cls,
        vertices: Sequence[str],
        edges: Sequence[Tuple[str, str, RationalLike]],
        sources: Sequence[str],
        sinks: Sequence[str],
        name: Optional[str] = None,
    ) -> "PlanarNetwork":
        return cls(
            tuple(vertices),
            tuple(Edge(tail, head, weight) for tail, head, weight in edges),
            tuple(sources),
            tuple(sinks),
            name=name,
        )

    @property
    def m(self) -> int:
        return len(self.sources)

    @cached_property
    def signature(self) -> tuple:
        """Value identity of the network, used as a cache key."""
        return (
            self.vertices,
            tuple((e.tail, e.head, e.weight) for e in self.edges),
            self.sources,
            self.sinks,
        )

    @cached_property
    def graph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for e in self.edges:
            graph.add_edge(e.tail, e.head, record=e)
        return graph

    @cached_property
    def _adjacency(self) -> Dict[str, List[Edge]]:
        adjacency = defaultdict(list)
        for e in self.edges:
            adjacency[e.tail].append(e)
        return adjacency

    def validate(self) -> ValidationReport:
        return self._report

    @cached_property
    def _report(self) -> ValidationReport:
        violations: List[Violation] = []
        known = set(self.vertices)

        for vertex, count in Counter(self.vertices).items():
            if count > 1:
                violations.append(Violation(kind="duplicate_vertex", detail=f"vertex {vertex!r} listed {count} times"))
        for index, e in enumerate(self.edges):
            for end in (e.tail, e.head):
                if end not in known:
                    violations.append(Violation(kind="unknown_vertex", detail=f"edge {index} uses unknown vertex {end!r}"))
        for label, boundary in (("source", self.sources), ("sink", self.sinks)):
            for vertex in boundary:
                if vertex not in known:
                    violations.append(Violation(kind="unknown_vertex", detail=f"{label} {vertex!r} is not a vertex"))
            if len(set(boundary)) != len(boundary):
                violations.append(Violation(kind="boundary", detail=f"{label}s repeat a vertex"))
        if len(self.sources) != len(self.sinks):
            violations.append(
                Violation(kind="boundary", detail=f"{len(self.sources)} sources but {len(self.sinks)} sinks")
            )

        indegree = Counter(e.head for e in self.edges)
        outdegree = Counter(e.tail for e in self.edges)
        for vertex in self.sources:
            if indegree[vertex]:
                violations.append(Violation(kind="degree", detail=f"source {vertex!r} has indegree {indegree[vertex]}"))
        for vertex in self.sinks:
            if outdegree[vertex]:
                violations.append(Violation(kind="degree", detail=f"sink {vertex!r} has outdegree {outdegree[vertex]}"))

        if self.degenerate:
            if self.edges or self.sources != self.sinks:
                violations.append(
                    Violation(kind="overlap", detail="degenerate network must have s_j = t_j and no edges")
                )
        else:
            shared = sorted(set(self.sources) & set(self.sinks))
            if shared:
                violations.append(Violation(kind="overlap", detail=f"vertices {shared} are both sources and sinks"))

        try:
            cycle = nx.find_cycle(self.graph)
            trail = " -> ".join([str(cycle[0][0])] + [str(step[1]) for step in cycle])
            violations.append(Violation(kind="cycle", detail=f"directed cycle {trail}"))
        except nx.NetworkXNoCycle:
            pass

        if violations:
            logger.warning(f"Network {self.name or '<unnamed>'} has {len(violations)} violation(s)")
        return ValidationReport(network_id=self.name, violations=violations)

    def require_valid(self):
        report = self.validate()
        if not report.valid:
            summary = "; ".join(v.detail for v in report.violations)
            raise NetworkValidationError(f"invalid network: {summary}", report)

    def topological_order(self) -> List[str]:
        """Every edge points forward; ties are broken by vertex id."""
        try:
            return list(nx.lexicographical_topological_sort(self.graph))
        except nx.NetworkXUnfeasible:
            raise NetworkValidationError("cycle detected", self.validate())

    def longest_chain(self) -> int:
        return nx.dag_longest_path_length(self.graph)

    def path_matrix(self) -> ExactMatrix:
        """(P_G)_{i,j}: weighted sum over paths s_i -> t_j, one forward sweep per source."""
        self.require_valid()
        order = self.topological_order()
        rows = []
        for source in self.sources:
            reach: Dict[str, Fraction] = {source: Fraction(1)}
            for vertex in order:
                value = reach.get(vertex)
                if not value:
                    continue
                for e in self._adjacency.get(vertex, ()):
                    reach[e.head] = reach.get(e.head, Fraction(0)) + value * e.weight
            rows.append([reach.get(sink, Fraction(0)) for sink in self.sinks])
        return ExactMatrix(self.m, self.m, tuple(x for row in rows for x in row))

    def glue_power(self, n: int) -> "PlanarNetwork":
        """
        G^n: n copies glued sink-to-source.

        The boundary between copy i and copy i+1 is named ``b{i}_{j}`` (so the
        sources are ``b0_j`` and the sinks ``b{n}_j``); an internal vertex v of
        copy i becomes ``c{i}_{v}``. G^0 has the m vertices ``b0_j``, no edges.
        """
        self.require_valid()
        if n < 0:
            raise DimensionError(f"glue power needs n >= 0, got {n}")
        name = f"{self.name}^{n}" if self.name else None
        first = tuple(f"b0_{j}" for j in range(1, self.m + 1))
        if n == 0 or self.degenerate:
            return PlanarNetwork(first, (), first, first, name=name, degenerate=True)

        source_index = {s: j for j, s in enumerate(self.sources, 1)}
        sink_index = {t: j for j, t in enumerate(self.sinks, 1)}
        internal = [v for v in self.vertices if v not in source_index and v not in sink_index]

        vertices = list(first)
        edges = []
        for copy in range(1, n + 1):
            def rename(v: str, copy: int = copy) -> str:
                if v in source_index:
                    return f"b{copy - 1}_{source_index[v]}"
                if v in sink_index:
                    return f"b{copy}_{sink_index[v]}"
                return f"c{copy}_{v}"

            vertices.extend(rename(v) for v in internal)
            vertices.extend(f"b{copy}_{j}" for j in range(1, self.m + 1))
            edges.extend(Edge(rename(e.tail), rename(e.head), e.weight) for e in self.edges)
        last = tuple(f"b{n}_{j}" for j in range(1, self.m + 1))
        return PlanarNetwork(tuple(vertices), tuple(edges), first, last, name=name)

    def enumerate_paths(self, start: str, end: str) -> List[Path]:
        """All directed paths start -> end, depth first in edge declaration order."""
        for vertex in (start, end):
            if vertex not in self.graph:
                raise NetworkValidationError(f"unknown vertex {vertex!r}")
        self.require_valid()
        useful = nx.ancestors(self.graph, end) | {end}
        if start not in useful:
            return []

        found: List[Path] = []
        trail: List[Edge] = []

        def walk(vertex: str):
            if vertex == end:
                found.append(Path(start, tuple(trail)))
                return
            for e in self._adjacency.get(vertex, ()):
                if e.head in useful:
                    trail.append(e)
                    walk(e.head)
                    trail.pop()

        walk(start)
        return found


def oracle_nonintersecting_sum(
    net: PlanarNetwork, i: SubsetIndex, j: SubsetIndex, capacity: Optional[int] = None
) -> Fraction:
    """
    Brute-force sum of w(Pi) over non-intersecting tuples Pi: (s_i...) -> (t_j...).

    Enumerates the Cartesian product of per-pair path lists in a fixed order, so
    the result is deterministic. Independent of any determinant.
    """
    if len(i) != len(j):
        raise DimensionError(f"|I| = {len(i)} but |J| = {len(j)}")
    if not len(i):
        return Fraction(1)
    net.require_valid()
    for subset in (i, j):
        if subset.elements[-1] > net.m:
            raise DimensionError(f"subset {subset} exceeds the {net.m} boundary vertices")

    candidates = [
        net.enumerate_paths(net.sources[a - 1], net.sinks[b - 1])
        for a, b in zip(i.elements, j.elements)
    ]
    total = prod(len(c) for c in candidates)
    capacity = capacity if capacity is not None else settings.oracle_capacity
    if total > capacity:
        raise CapacityError(total, capacity)

    logger.info(f"Oracle: scanning {total} path tuples for I={i}, J={j} on {net.name or '<unnamed>'}")
    result = Fraction(0)
    for combo in itertools.product(*candidates):
        paths = PathTuple(combo)
        if paths.is_non_intersecting:
            result += paths.weight
    return result
