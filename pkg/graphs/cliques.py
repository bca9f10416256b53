"""
Maximal-clique enumeration: Bron–Kerbosch with pivoting.

The outer level runs one independent search per vertex ``x`` over the
neighbours of ``x`` that come later in the vertex order (earlier ones go to
the excluded set), so every maximal clique is found exactly once, in the
branch of its smallest vertex. Those branches are what ``parallel_map`` fans
out; the merged result is sorted, so the output does not depend on the
worker count.
"""
import logging
from typing import FrozenSet, Iterator, List, Sequence, Set, Tuple

from utils.concurrency import parallel_map

from .models import Graph

logger = logging.getLogger(__name__)

Clique = Tuple[int, ...]


def _expand(adjacency: Sequence[FrozenSet[int]], clique: List[int], candidates: Set[int],
            excluded: Set[int], min_size: int) -> Iterator[Clique]:
    if not candidates and not excluded:
        if len(clique) >= min_size:
            yield tuple(sorted(clique))
        return
    if len(clique) + len(candidates) < min_size:
        return
    pivot = max(candidates | excluded, key=lambda u: len(candidates & adjacency[u]))
    for x in sorted(candidates - adjacency[pivot]):
        neighbours = adjacency[x]
        clique.append(x)
        yield from _expand(adjacency, clique, candidates & neighbours, excluded & neighbours, min_size)
        clique.pop()
        candidates.discard(x)
        excluded.add(x)


def _branch(adjacency, x, min_size) -> Iterator[Clique]:
    later = {y for y in adjacency[x] if y > x}
    earlier = {y for y in adjacency[x] if y < x}
    if 1 + len(later) < min_size:
        return iter(())
    return _expand(adjacency, [x], later, earlier, min_size)


def iter_maximal_cliques(g: Graph, min_size: int = 1) -> Iterator[Clique]:
    """Lazy, sequential, vertex-ordered; callers that stop early never pay for the rest."""
    for x in range(g.v):
        yield from _branch(g.adjacency, x, min_size)


def maximal_cliques(g: Graph, min_size: int = 1) -> List[Clique]:
    """Every inclusion-maximal clique with at least ``min_size`` vertices, in canonical order."""
    adjacency = g.adjacency
    per_vertex = parallel_map(lambda x: list(_branch(adjacency, x, min_size)), range(g.v))
    cliques = sorted(clique for found in per_vertex for clique in found)
    logger.debug('%d maximal cliques of order >= %d on %d vertices', len(cliques), min_size, g.v)
    return cliques
