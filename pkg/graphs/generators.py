"""Named graphs for tests and for ``make_graph``."""
import networkx as nx
import sympy

from .models import Graph


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def triangular(n: int = 5) -> Graph:
    """T(n): the line graph of K_n, vertices are the 2-subsets of 0..n-1 in sorted order."""
    return Graph.from_networkx(nx.line_graph(nx.complete_graph(n)))


def rook(n: int = 5) -> Graph:
    """The n x n rook's graph, vertex i*n + j for cell (i, j)."""
    return Graph.from_networkx(nx.cartesian_product(nx.complete_graph(n), nx.complete_graph(n)))


def cycle(n: int = 5) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(n))


def complete(n: int = 4) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def clebsch() -> Graph:
    """Vectors of F_2^4, adjacent when they differ in one coordinate or in all four."""
    edges = [(x, y) for x in range(16) for y in range(x + 1, 16) if bin(x ^ y).count('1') in (1, 4)]
    return Graph.from_edges(16, edges)


def paley(q: int = 13) -> Graph:
    if not sympy.isprime(q) or q % 4 != 1:
        raise ValueError('Paley graphs here need a prime q = 1 mod 4, got %s' % q)
    squares = {(x * x) % q for x in range(1, q)}
    return Graph.from_edges(q, [(x, y) for x in range(q) for y in range(x + 1, q) if (y - x) % q in squares])


def random_graph(n: int, p: float = 0.5, seed: int = 0) -> Graph:
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


GENERATORS = {
    'petersen': petersen,
    'triangular': triangular,
    'rook': rook,
    'cycle': cycle,
    'complete': complete,
    'clebsch': clebsch,
    'paley': paley,
    'random': random_graph,
}
