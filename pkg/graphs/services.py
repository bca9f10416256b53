"""
Concrete-graph checks: strong regularity, line systems and their audits.
"""
import logging
from collections import Counter
from fractions import Fraction
from itertools import combinations
from typing import Optional

import networkx as nx
import numpy as np
from django.utils.translation import gettext_lazy as _

from parameters.exceptions import ConferenceGraph
from parameters.models import PgParams, StandardParams
from parameters.services import eigendata, metsch_conditions, metsch_line_threshold

from .cliques import maximal_cliques
from .exceptions import (
    DiameterExceeded,
    MetschConditionsNotMet,
    NotDelsarteGeometric,
    NotPartialLinearSpace,
    NotRegular,
    NotStronglyRegular,
    SigmaExceeded,
)
from .linalg import bareiss_rank
from .models import Graph, LineAudit, LineSystem, PartialGeometryCheck

logger = logging.getLogger(__name__)


def _first_pair(mask):
    u, w = np.argwhere(mask)[0]
    return int(u), int(w)


def verify_srg(g: Graph) -> StandardParams:
    """Confirm k-regularity, constant lambda and mu, diameter 2; return the quadruple."""
    nx_graph = g.to_networkx()
    if g.v == 0 or not nx.is_connected(nx_graph):
        reached = nx.node_connected_component(nx_graph, 0) if g.v else set()
        stranger = min(set(range(g.v)) - reached, default=0)
        raise DiameterExceeded(pair=(0, stranger))

    k = g.degree(0)
    for x in range(g.v):
        if g.degree(x) != k:
            raise NotRegular(vertex=x, degree=g.degree(x), k=k)

    adjacency = g.adjacency_matrix()
    common = adjacency @ adjacency
    upper = np.triu(np.ones((g.v, g.v), dtype=bool), 1)
    edge_mask = upper & (adjacency == 1)
    non_edge_mask = upper & (adjacency == 0)
    if not edge_mask.any() or not non_edge_mask.any():
        raise NotStronglyRegular(_('Complete and edgeless graphs are not strongly regular.'), pair=None)

    lam = int(common[edge_mask][0])
    mismatch = edge_mask & (common != lam)
    if mismatch.any():
        pair = _first_pair(mismatch)
        raise NotStronglyRegular(pair=pair, relation='adjacent', common=int(common[pair]), expected=lam)

    far = non_edge_mask & (common == 0)
    if far.any():
        raise DiameterExceeded(pair=_first_pair(far))

    mu = int(common[non_edge_mask][0])
    mismatch = non_edge_mask & (common != mu)
    if mismatch.any():
        pair = _first_pair(mismatch)
        raise NotStronglyRegular(pair=pair, relation='non-adjacent', common=int(common[pair]), expected=mu)

    sp = StandardParams(g.v, k, lam, mu)
    logger.info('verified %s', sp)
    return sp


def is_primitive(g: Graph) -> bool:
    """The graph and its complement are both connected."""
    if g.v < 2:
        return False
    return nx.is_connected(g.to_networkx()) and nx.is_connected(g.complement().to_networkx())


# Line systems

def certify_partial_linear_space(ls: LineSystem) -> None:
    """Every edge on exactly one line, and no line holds a non-adjacent pair."""
    g = ls.graph
    on_lines = Counter()
    for line in ls.lines:
        for u, w in combinations(line, 2):
            if not g.adjacent(u, w):
                raise NotPartialLinearSpace(pair=(u, w), count=1, problem='non-adjacent pair on a line')
            on_lines[u, w] += 1
    for edge in g.edges():
        if on_lines[edge] != 1:
            raise NotPartialLinearSpace(pair=edge, count=on_lines[edge], problem='every edge must lie on exactly one line')


def extract_lines(g: Graph, sp: StandardParams, sigma: int, override: bool = False) -> LineSystem:
    """Lines are the maximal cliques of order at least lambda + 2 - (mu - 1)(sigma - 1)."""
    if not metsch_conditions(sp, sigma):
        if not override:
            raise MetschConditionsNotMet(params=str(sp), sigma=sigma)
        logger.warning('Metsch conditions fail for %s with sigma %d; extracting anyway', sp, sigma)

    threshold = max(metsch_line_threshold(sp, sigma), 2)
    ls = LineSystem(g, tuple(maximal_cliques(g, threshold)), sigma=sigma, origin='metsch')
    certify_partial_linear_space(ls)
    for x, count in enumerate(ls.tau()):
        if count > sigma:
            raise SigmaExceeded(vertex=x, count=count, sigma=sigma)
    logger.info('%d lines of order >= %d', len(ls.lines), threshold)
    return ls


def _smallest_eigenvalue(sp: StandardParams):
    data = eigendata(sp)
    if data.m is None:
        raise ConferenceGraph(v=sp.v)
    return data


def delsarte_order(sp: StandardParams) -> Optional[int]:
    """1 + k/m when that is an integer, else no clique can meet the Delsarte bound."""
    m = _smallest_eigenvalue(sp).m
    if sp.k % m:
        return None
    return 1 + sp.k // m


def delsarte_lines(g: Graph, sp: StandardParams) -> LineSystem:
    """The Delsarte cliques as lines, certified as a partial linear space."""
    order = delsarte_order(sp)
    if order is None:
        raise NotDelsarteGeometric(order=Fraction(sp.k, _smallest_eigenvalue(sp).m) + 1, vertex=0)
    lines = tuple(clique for clique in maximal_cliques(g, order) if len(clique) == order)
    ls = LineSystem(g, lines, origin='delsarte')
    for x, count in enumerate(ls.tau()):
        if count == 0:
            raise NotDelsarteGeometric(order=order, vertex=x)
    certify_partial_linear_space(ls)
    return ls


def incidence_rank(ls: LineSystem) -> int:
    """Exact rank of the line-vertex incidence matrix M over the rationals."""
    return bareiss_rank(ls.incidence_matrix().tolist())


def gram_rank(ls: LineSystem) -> int:
    """Exact rank of A + diag(tau), which equals M^T M."""
    gram = ls.graph.adjacency_matrix() + np.diag(ls.tau())
    return bareiss_rank(gram.tolist())


def audit_lines(ls: LineSystem, sp: StandardParams) -> LineAudit:
    data = _smallest_eigenvalue(sp)
    m, g_mult, v = data.m, data.g_mult, ls.graph.v
    order = delsarte_order(sp)
    through = ls.lines_through()
    is_delsarte = [len(line) == order for line in ls.lines]

    tau = [len(indices) for indices in through]
    tau_D = [sum(is_delsarte[i] for i in indices) for indices in through]
    delsarte_vertices = [x for x in range(v) if tau[x] == m]
    witnesses = {}

    tau_ok = True
    for x in range(v):
        if tau[x] < m:
            tau_ok = False
            witnesses['tau'] = {'vertex': x, 'tau': tau[x], 'm': m}
            break
        if tau[x] == m and tau_D[x] != m:
            tau_ok = False
            witnesses['tau'] = {'vertex': x, 'tau': tau[x], 'tau_D': tau_D[x]}
            break

    room = min(g_mult, len(delsarte_vertices))
    margin = room - (v - len(ls.lines))
    rank = incidence_rank(ls)
    rank_ok = v - rank <= room
    if margin < 0:
        witnesses['line_count'] = {'min_g_vd': room, 'v_minus_lines': v - len(ls.lines)}
    if not rank_ok:
        witnesses['rank'] = {'min_g_vd': room, 'v_minus_rank': v - rank}

    delsarte_share_ok = None
    sigma = ls.sigma
    if (ls.origin == 'metsch' and sigma and sp.mu >= 2
            and sp.lam >= (2 * sigma - 1) * (sp.mu - 1)):
        required = (1 - Fraction(sigma, sigma * (sp.mu - 1) + 2)) * v
        delsarte_share_ok = len(delsarte_vertices) >= required
        if not delsarte_share_ok:
            witnesses['delsarte_share'] = {'delsarte_vertices': len(delsarte_vertices), 'required': str(required)}

    alpha_ok = None
    if len(delsarte_vertices) >= 2:
        alpha = Fraction(sp.mu, m) - 1
        alpha_ok = alpha.denominator == 1 and 0 <= alpha <= m - 1
        if not alpha_ok:
            witnesses['alpha'] = {'alpha': str(alpha), 'b': m - 1}

    intersections_ok = None
    if any(is_delsarte):
        expected = Fraction(sp.mu, m)
        intersections_ok = True
        adjacency = ls.graph.adjacency
        for line, delsarte in zip(ls.lines, is_delsarte):
            if not delsarte:
                continue
            members = set(line)
            outsider = next((x for x in range(v) if x not in members
                             and len(adjacency[x] & members) != expected), None)
            if outsider is not None:
                intersections_ok = False
                witnesses['delsarte_intersections'] = {
                    'line': list(line), 'vertex': outsider,
                    'neighbours': len(adjacency[outsider] & members), 'expected': str(expected),
                }
                break

    audit = LineAudit(
        tau=tuple(tau),
        tau_D=tuple(tau_D),
        delsarte_vertices=tuple(delsarte_vertices),
        delsarte_order=order,
        line_count=len(ls.lines),
        incidence_rank=rank,
        g=g_mult,
        m=m,
        tau_ok=tau_ok,
        line_count_ok=margin >= 0,
        line_count_margin=margin,
        rank_ok=rank_ok,
        delsarte_share_ok=delsarte_share_ok,
        alpha_ok=alpha_ok,
        delsarte_intersections_ok=intersections_ok,
        witnesses=witnesses,
    )
    if not audit.passed:
        logger.warning('line audit failed: %s', sorted(witnesses))
    return audit


# Partial geometries

def check_partial_geometry(ls: LineSystem) -> PartialGeometryCheck:
    """Exhaustive pg axiom check on a certified partial linear space."""
    if not ls.lines:
        return PartialGeometryCheck(None, {'axiom': 'K', 'problem': 'no lines'})

    sizes = {len(line) for line in ls.lines}
    K = len(ls.lines[0])
    if len(sizes) > 1:
        line = next(line for line in ls.lines if len(line) != K)
        return PartialGeometryCheck(None, {'axiom': 'K', 'line': list(line), 'size': len(line), 'expected': K})

    tau = ls.tau()
    R = tau[0]
    odd = next((x for x, count in enumerate(tau) if count != R), None)
    if odd is not None:
        return PartialGeometryCheck(None, {'axiom': 'R', 'vertex': odd, 'lines': tau[odd], 'expected': R})

    # a neighbour y of x on L is the unique line through x and y, so T(x, L) = |N(x) & L|
    adjacency = ls.graph.adjacency
    T = None
    for line in ls.lines:
        members = set(line)
        for x in range(ls.graph.v):
            if x in members:
                continue
            meeting = len(adjacency[x] & members)
            if T is None:
                T = meeting
            elif meeting != T:
                return PartialGeometryCheck(None, {'axiom': 'T', 'line': list(line), 'vertex': x,
                                                   'meeting': meeting, 'expected': T})
    if T is None:
        return PartialGeometryCheck(None, {'axiom': 'T', 'problem': 'no point lies off a line'})

    try:
        return PartialGeometryCheck(PgParams(K, R, T))
    except ValueError as error:
        return PartialGeometryCheck(None, {'axiom': 'range', 'problem': str(error)})


def is_partial_geometry(ls: LineSystem) -> Optional[PgParams]:
    return check_partial_geometry(ls).pg
