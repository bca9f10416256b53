"""
Orthogonal arrays, MOLS, Latin-square graphs and net completion.

Cell arrays are numpy int64 matrices; column ``c`` of a generated array is
the cell ``(c // n, c % n)``.
"""
import logging
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import sympy

from graphs.cliques import iter_maximal_cliques
from graphs.exceptions import InvalidGraph, NotPartialLinearSpace
from graphs.models import Graph, LineSystem
from graphs.services import certify_partial_linear_space
from utils.concurrency import parallel_map
from utils.exceptions import DomainError

from .exceptions import (
    CountTooLarge,
    DimensionMismatch,
    NotGeometric,
    NotLatin,
    NotOrthogonal,
    NotPrime,
    ParallelismNotTransitive,
    RepeatedPair,
    ResultNotOA,
    SymbolOutOfRange,
)
from .models import CompletionReport, OrthogonalArray, ParallelClassSet

logger = logging.getLogger(__name__)


# Validation

def _as_matrix(raw) -> np.ndarray:
    rows = [list(row) for row in raw]
    if not rows:
        raise DimensionMismatch(problem='no rows')
    widths = {len(row) for row in rows}
    if len(widths) > 1:
        raise DimensionMismatch(problem='rows of different lengths %s' % sorted(widths))
    return np.array(rows, dtype=np.int64)


def _repeated_pair(cells, n, a, b):
    """First pair of columns on which rows a and b show the same symbol pair."""
    seen = {}
    for column, pair in enumerate(zip(cells[a].tolist(), cells[b].tolist())):
        if pair in seen:
            return RepeatedPair(rows=(a, b), pair=pair, columns=(seen[pair], column))
        seen[pair] = column
    return None


def validate_oa(raw, n: Optional[int] = None) -> OrthogonalArray:
    """Certify strength 2, index 1: any two rows show all n^2 ordered pairs."""
    cells = _as_matrix(raw)
    m, width = cells.shape
    if n is None:
        n = isqrt(width)
    if n < 1 or width != n * n:
        raise DimensionMismatch(problem='%d columns, expected n^2 = %d' % (width, n * n))
    if not 2 <= m <= n + 1:
        raise DimensionMismatch(problem='%d rows, expected 2..%d' % (m, n + 1))

    outside = np.argwhere((cells < 0) | (cells >= n))
    if len(outside):
        row, column = (int(x) for x in outside[0])
        raise SymbolOutOfRange(row=row, column=column, symbol=int(cells[row, column]), top=n - 1)

    for a, b in combinations(range(m), 2):
        codes = cells[a] * n + cells[b]
        if len(np.unique(codes)) != width:
            raise _repeated_pair(cells, n, a, b)
    return OrthogonalArray(m, n, cells)


# MOLS

def check_latin(square: np.ndarray, index: int = 0) -> None:
    n = square.shape[0]
    if square.shape != (n, n):
        raise DimensionMismatch(problem='square %d is %s, not square' % (index, square.shape))
    symbols = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(square[i]), symbols):
            raise NotLatin(square=index, line='row %d' % i)
        if not np.array_equal(np.sort(square[:, i]), symbols):
            raise NotLatin(square=index, line='column %d' % i)


def mols_to_oa(squares: Sequence, n: Optional[int] = None) -> OrthogonalArray:
    """OA(k+2, n) with rows i, j, L_1(i, j), ..., L_k(i, j)."""
    squares = [np.asarray(square, dtype=np.int64) for square in squares]
    if n is None:
        if not squares:
            raise DimensionMismatch(problem='the order n is needed when no squares are given')
        n = squares[0].shape[0]
    for index, square in enumerate(squares):
        if square.shape != (n, n):
            raise DimensionMismatch(problem='square %d is %s, expected %dx%d' % (index, square.shape, n, n))
        check_latin(square, index)

    for a, b in combinations(range(len(squares)), 2):
        codes = squares[a] * n + squares[b]
        if len(np.unique(codes)) != n * n:
            seen = {}
            for cell in np.ndindex(n, n):
                pair = (int(squares[a][cell]), int(squares[b][cell]))
                if pair in seen:
                    raise NotOrthogonal(squares=(a, b), pair=pair, cells=(seen[pair], cell))
                seen[pair] = cell

    symbols = np.arange(n, dtype=np.int64)
    rows = [np.repeat(symbols, n), np.tile(symbols, n)] + [square.reshape(-1) for square in squares]
    return validate_oa(np.vstack(rows), n)


def oa_to_mols(oa: OrthogonalArray) -> List[np.ndarray]:
    """Rows 0 and 1 index the cell, every further row fills one square."""
    squares = []
    for row in oa.cells[2:]:
        square = np.empty((oa.n, oa.n), dtype=np.int64)
        square[oa.cells[0], oa.cells[1]] = row
        squares.append(square)
    return squares


def gen_mols_prime(p: int, count: int) -> List[np.ndarray]:
    """L_a(i, j) = a i + j mod p for a = 1..count."""
    if not sympy.isprime(p):
        raise NotPrime(p=p)
    if not 1 <= count <= p - 1:
        raise CountTooLarge(count=count, p=p, maximum=p - 1)
    symbols = np.arange(p, dtype=np.int64)
    return [np.add.outer(a * symbols, symbols) % p for a in range(1, count + 1)]


# Latin-square graphs

def latin_square_parameters(m: int, n: int) -> Tuple[int, int, int, int]:
    return n * n, m * (n - 1), (m - 1) * (m - 2) + n - 2, m * (m - 1)


def agreement_matrix(oa: OrthogonalArray) -> np.ndarray:
    """Entry (c, d) counts the rows in which columns c and d hold the same symbol."""
    return sum((row[:, None] == row[None, :]).astype(np.int64) for row in oa.cells)


def latin_square_graph(oa: OrthogonalArray) -> Graph:
    """Columns adjacent when they agree in exactly one row."""
    agreement = agreement_matrix(oa)
    np.fill_diagonal(agreement, 0)
    clash = np.argwhere(agreement > 1)
    if len(clash):
        c, d = (int(x) for x in clash[0])
        rows = [r for r in range(oa.m) if oa.cells[r, c] == oa.cells[r, d]]
        raise RepeatedPair(rows=tuple(rows[:2]), pair=(int(oa.cells[rows[0], c]), int(oa.cells[rows[1], c])),
                           columns=(c, d))
    edges = np.argwhere(np.triu(agreement == 1, 1))
    return Graph.from_edges(oa.n * oa.n, [(int(u), int(w)) for u, w in edges])


def complement(g: Graph) -> Graph:
    result = g.complement()
    if result.complement() != g:
        raise InvalidGraph(problem='complement is not an involution', edge=None)
    return result


# Completion

def completion_bound(delta: int) -> Fraction:
    """Completion is guaranteed once n exceeds this value."""
    return Fraction(8, 3) * delta ** 3 - Fraction(16, 3) * delta ** 2 + 2 * delta + Fraction(2, 3)


def _clique_lines(g: Graph, n: int) -> List[Tuple[int, ...]]:
    lines = [tuple(sorted(component)) for component in nx.connected_components(g.to_networkx())]
    for line in lines:
        if len(line) != n or any(len(g.adjacency[x]) != n - 1 for x in line):
            raise NotGeometric(problem='component %s is not a clique of order %d' % (list(line[:n]), n))
    if len(lines) != n:
        raise NotGeometric(problem='%d components, expected %d' % (len(lines), n))
    return sorted(lines)


def _delsarte_lines(g: Graph, n: int, delta: int) -> List[Tuple[int, ...]]:
    limit = delta * n
    lines = []
    for clique in iter_maximal_cliques(g, n):
        if len(clique) > n:
            raise NotGeometric(problem='clique %s exceeds order %d' % (list(clique), n))
        lines.append(clique)
        if len(lines) > limit:
            raise NotGeometric(problem='more than %d cliques of order %d' % (limit, n))

    ls = LineSystem(g, tuple(lines), origin='delsarte')
    try:
        certify_partial_linear_space(ls)
    except NotPartialLinearSpace as error:
        raise NotGeometric(problem='edge %s lies on %s lines' % (error.witness['pair'], error.witness['count']))
    for x, count in enumerate(ls.tau()):
        if count != delta:
            raise NotGeometric(problem='column %d lies on %d lines, expected %d' % (x, count, delta))
    return list(ls.lines)


def parallel_classes(lines: Sequence[Tuple[int, ...]], n: int) -> ParallelClassSet:
    """Group lines by disjointness; each group must partition the n^2 columns into n lines."""
    ungrouped = sorted(lines)
    classes = []
    while ungrouped:
        first = set(ungrouped[0])
        group = [line for line in ungrouped if line == ungrouped[0] or first.isdisjoint(line)]
        covered = set().union(*group)
        if len(group) != n or len(covered) != n * n:
            raise ParallelismNotTransitive(line=list(ungrouped[0]), found=len(group), covered=len(covered))
        classes.append(tuple(sorted(group, key=min)))
        ungrouped = [line for line in ungrouped if line not in group]
    return ParallelClassSet(tuple(classes))


def _class_row(lines, n):
    row = np.empty(n * n, dtype=np.int64)
    for label, line in enumerate(lines):
        row[list(line)] = label
    return row


def _extend(oa: OrthogonalArray):
    n, delta = oa.n, oa.deficiency
    other = complement(latin_square_graph(oa))
    if delta == 1:
        method = 'clique_components'
        lines = _clique_lines(other, n)
    else:
        method = 'delsarte_cliques'
        lines = _delsarte_lines(other, n, delta)

    classes = parallel_classes(lines, n)
    new_rows = parallel_map(lambda group: _class_row(group, n), classes.classes)
    try:
        full = validate_oa(np.vstack([oa.cells] + new_rows), n)
    except (DimensionMismatch, SymbolOutOfRange, RepeatedPair) as error:
        raise ResultNotOA(problem=error.detail)
    return full, method, lines, classes


def complete(oa: OrthogonalArray) -> Tuple[OrthogonalArray, CompletionReport]:
    """Extend an OA(m, n) to a full OA(n+1, n) through the nets of its complement graph."""
    n, delta = oa.n, oa.deficiency
    bound = completion_bound(delta)
    context = dict(m=oa.m, n=n, delta=delta, bound=bound, bound_met=n > bound)
    warning = None
    if not context['bound_met'] and delta > 0:
        warning = 'n = %d does not exceed %s; completion is attempted but not guaranteed' % (n, bound)
        logger.warning(warning)

    if delta == 0:
        return oa, CompletionReport(method='already_full', **context)

    try:
        full, method, lines, classes = _extend(oa)
    except DomainError as error:
        if warning:
            error.params['bound_warning'] = warning
        raise

    logger.info('completed OA(%d, %d) with %d parallel classes', oa.m, n, len(classes.classes))
    report = CompletionReport(method=method, line_count=len(lines), class_count=len(classes.classes),
                              warning=warning, **context)
    return full, report
