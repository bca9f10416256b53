"""
Immutable graphs and the line systems drawn from them.

Vertices are always ``0..v-1``; the adjacency is a tuple of frozensets so a
Graph can be shared between clique-search threads without copying.
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np

from parameters.models import PgParams

from .exceptions import InvalidGraph


@dataclass(frozen=True)
class Graph:
    v: int
    adjacency: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.v:
            raise InvalidGraph(problem='%d adjacency sets for %d vertices' % (len(self.adjacency), self.v), edge=None)
        for x, neighbours in enumerate(self.adjacency):
            if x in neighbours:
                raise InvalidGraph(problem='loop', edge=(x, x))
            for y in neighbours:
                if not 0 <= y < self.v:
                    raise InvalidGraph(problem='vertex out of range', edge=(x, y))
                if x not in self.adjacency[y]:
                    raise InvalidGraph(problem='asymmetric adjacency', edge=(x, y))

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        neighbours = [set() for _ in range(v)]
        for u, w in edges:
            if u == w:
                raise InvalidGraph(problem='loop', edge=(u, w))
            if not (0 <= u < v and 0 <= w < v):
                raise InvalidGraph(problem='vertex out of range', edge=(u, w))
            if w in neighbours[u]:
                raise InvalidGraph(problem='duplicate edge', edge=(min(u, w), max(u, w)))
            neighbours[u].add(w)
            neighbours[w].add(u)
        return cls(v, tuple(frozenset(n) for n in neighbours))

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> 'Graph':
        relabelled = nx.convert_node_labels_to_integers(nx_graph, ordering='sorted')
        return cls.from_edges(relabelled.number_of_nodes(), relabelled.edges())

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.v))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    def edges(self) -> List[Tuple[int, int]]:
        """Every edge once as ``(u, w)`` with ``u < w``, sorted."""
        return [(u, w) for u in range(self.v) for w in sorted(self.adjacency[u]) if u < w]

    def adjacent(self, u: int, w: int) -> bool:
        return w in self.adjacency[u]

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.v, self.v), dtype=np.int64)
        for u, w in self.edges():
            matrix[u, w] = matrix[w, u] = 1
        return matrix

    def complement(self) -> 'Graph':
        everyone = frozenset(range(self.v))
        return Graph(self.v, tuple(everyone - self.adjacency[x] - {x} for x in range(self.v)))


@dataclass(frozen=True)
class LineSystem:
    graph: Graph
    lines: Tuple[Tuple[int, ...], ...]
    sigma: Optional[int] = None
    origin: str = 'metsch'

    def __post_init__(self):
        object.__setattr__(self, 'lines', tuple(sorted(tuple(sorted(line)) for line in self.lines)))

    def lines_through(self) -> List[List[int]]:
        """Indices of the lines on each vertex."""
        through = [[] for _ in range(self.graph.v)]
        for index, line in enumerate(self.lines):
            for x in line:
                through[x].append(index)
        return through

    def tau(self) -> List[int]:
        return [len(indices) for indices in self.lines_through()]

    def incidence_matrix(self) -> np.ndarray:
        """|lines| x v 0/1 matrix M; M^T M = A + diag(tau)."""
        matrix = np.zeros((len(self.lines), self.graph.v), dtype=np.int64)
        for index, line in enumerate(self.lines):
            matrix[index, list(line)] = 1
        return matrix


@dataclass(frozen=True)
class LineAudit:
    tau: Tuple[int, ...]
    tau_D: Tuple[int, ...]
    delsarte_vertices: Tuple[int, ...]
    delsarte_order: int
    line_count: int
    incidence_rank: int
    g: int
    m: int
    tau_ok: bool
    line_count_ok: bool
    line_count_margin: int
    rank_ok: bool
    delsarte_share_ok: Optional[bool]
    alpha_ok: Optional[bool]
    delsarte_intersections_ok: Optional[bool]
    witnesses: Dict[str, object] = field(default_factory=dict)

    @property
    def passed(self):
        checks = (self.tau_ok, self.line_count_ok, self.rank_ok,
                  self.delsarte_share_ok, self.alpha_ok, self.delsarte_intersections_ok)
        return all(check is not False for check in checks)


@dataclass(frozen=True)
class PartialGeometryCheck:
    pg: Optional[PgParams]
    witness: Dict[str, object] = field(default_factory=dict)
