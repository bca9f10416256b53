"""
Exact calculus over strongly regular graph parameters.

Everything here is a pure function of integers and ``Fraction``s; the only
irrational values are the conference-graph eigenvalues, kept as sympy surds.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, floor, isqrt
from typing import Optional

import numpy as np
import sympy

from .exceptions import (
    ConferenceGraph,
    InvalidClassicalParameters,
    InvalidParameters,
    NonIntegralMultiplicity,
    NonIntegralNonConference,
    NonIntegralParameters,
)
from .models import (
    Bounds,
    ClassicalParams,
    Eigendata,
    PgFeasibility,
    PgParams,
    StandardParams,
    Verdict,
    VerdictKind,
)

logger = logging.getLogger(__name__)


# Eigenvalues and the standard <-> classical correspondence

def eigendata(sp: StandardParams) -> Eigendata:
    """Roots of x^2 - (lambda - mu) x - (k - mu) and their multiplicities."""
    v, k, lam, mu = sp.as_tuple()
    shift = lam - mu
    discriminant = shift * shift + 4 * (k - mu)
    root = isqrt(discriminant)
    conference = sp.is_conference_pattern

    if root * root == discriminant:
        theta1, theta2 = (shift + root) // 2, (shift - root) // 2
        spread = Fraction(2 * k + (v - 1) * shift, root)
        f_mult = (Fraction(v - 1) - spread) / 2
        g_mult = (Fraction(v - 1) + spread) / 2
        m = -theta2
    elif conference:
        surd = sympy.sqrt(discriminant)
        theta1 = (sympy.Integer(shift) + surd) / 2
        theta2 = (sympy.Integer(shift) - surd) / 2
        # 2k + (v-1)(lambda-mu) vanishes on the conference family
        f_mult = g_mult = Fraction(v - 1, 2)
        m = None
    else:
        raise NonIntegralNonConference(discriminant=discriminant)

    if min(f_mult, g_mult) < 0 or f_mult.denominator != 1 or g_mult.denominator != 1:
        raise NonIntegralMultiplicity(f=str(f_mult), g=str(g_mult))

    data = Eigendata(
        theta1=theta1,
        theta2=theta2,
        f_mult=int(f_mult),
        g_mult=int(g_mult),
        conference=conference,
        m=m,
    )
    if m is not None and k + data.f_mult * theta1 + data.g_mult * theta2 != 0:
        raise NonIntegralMultiplicity(f=str(f_mult), g=str(g_mult))
    return data


def to_classical(sp: StandardParams) -> ClassicalParams:
    """(b, alpha, beta) taking r as the negative eigenvalue."""
    m = eigendata(sp).m
    if m is None:
        raise ConferenceGraph(v=sp.v)
    return ClassicalParams(
        b=Fraction(m - 1),
        alpha=Fraction(sp.mu, m) - 1,
        beta=Fraction(sp.k, m),
    )


def from_classical(cp: ClassicalParams) -> StandardParams:
    b, alpha, beta = cp.as_tuple()
    if alpha == -1:
        raise InvalidClassicalParameters(b=b, alpha=alpha, beta=beta, rule='alpha = -1 gives mu = 0')
    values = {
        'v': 1 + (b + 1) * beta + b * beta * (beta - alpha) / (alpha + 1),
        'k': (b + 1) * beta,
        'lam': beta + alpha * b - 1,
        'mu': (alpha + 1) * (b + 1),
    }
    if any(value.denominator != 1 for value in values.values()):
        raise NonIntegralParameters(b=b, alpha=alpha, beta=beta, values={key: str(x) for key, x in values.items()})
    return StandardParams(**{key: int(value) for key, value in values.items()})


def eigenvalues_from_classical(cp: ClassicalParams):
    """The two non-trivial eigenvalues beta - alpha - 1 and -(b + 1)."""
    return cp.beta - cp.alpha - 1, -(cp.b + 1)


# Bounds on lambda and mu

def neumaier_bound(m: int, mu: int) -> Fraction:
    return Fraction(m * (m - 1) * (mu + 1), 2) + mu - m - 1


def improved_bound(m: int, mu: int) -> Fraction:
    return Fraction(8 * m * (mu - 1) - 2 * mu - 10, 3) + 3 * m


def mu_upper_bound(m: int) -> int:
    if m < 2:
        raise ValueError('the mu bound (2m-3)m^3 needs m >= 2, got %s' % m)
    return (2 * m - 3) * m ** 3


def lambda_threshold(bound: Fraction) -> int:
    """Smallest integer lambda with lambda > bound."""
    return floor(bound) + 1


@dataclass(frozen=True)
class BoundTable:
    """
    Both bounds for mu = 1..mu_max, as integer numerators over the common denominator 6.
    Columns are object arrays of Python ints.
    """
    m: int
    mu: np.ndarray
    neumaier6: np.ndarray
    improved6: np.ndarray

    def neumaier(self, index) -> Fraction:
        return Fraction(int(self.neumaier6[index]), 6)

    def improved(self, index) -> Fraction:
        return Fraction(int(self.improved6[index]), 6)

    def improved_smaller(self) -> np.ndarray:
        return np.less(self.improved6, self.neumaier6).astype(bool)


def bound_table(m: int, mu_max: Optional[int] = None) -> BoundTable:
    top = mu_upper_bound(m)
    if mu_max is not None:
        top = min(top, mu_max)
    mu = np.arange(1, top + 1, dtype=object)
    neumaier6 = 3 * m * (m - 1) * (mu + 1) + 6 * mu - 6 * m - 6
    improved6 = 16 * m * (mu - 1) - 4 * mu + 18 * m - 20
    return BoundTable(m=m, mu=mu, neumaier6=neumaier6, improved6=improved6)


# Partial geometries

def pg_point_graph(pg: PgParams) -> StandardParams:
    K, R, T = pg.as_tuple()
    numerator = K * (K - 1) * (R - 1)
    if numerator % T:
        raise InvalidParameters(v=Fraction(numerator, T) + K, k=R * (K - 1), lam=(R - 1) * (T - 1) + K - 2,
                                mu=R * T, rule='T does not divide K(K-1)(R-1)')
    return StandardParams(K + numerator // T, R * (K - 1), (R - 1) * (T - 1) + K - 2, R * T)


def has_geometric_parameters(sp: StandardParams) -> Optional[PgParams]:
    """pg(k/m + 1, m, mu/m) when k/m is an integer and mu <= m^2."""
    m = eigendata(sp).m
    if m is None or sp.k % m or sp.mu > m * m or sp.mu % m:
        return None
    try:
        pg = PgParams(K=sp.k // m + 1, R=m, T=sp.mu // m)
    except ValueError:
        return None
    if pg_point_graph(pg) != sp:
        raise AssertionError('%s does not reproduce %s' % (pg, sp))
    return pg


def geometric_from_classical(cp: ClassicalParams) -> Optional[PgParams]:
    b, alpha, beta = cp.as_tuple()
    if any(x.denominator != 1 or x < 0 for x in (b, alpha, beta)):
        return None
    if alpha > b or alpha > beta:
        return None
    try:
        return PgParams(K=int(beta) + 1, R=int(b) + 1, T=int(alpha) + 1)
    except ValueError:
        return None


def _line_size_inequality(size, other, T, label):
    """size - 1 <= (other - T)^2 (2T - 1), equality only when T = 1 or other = 2T + 1."""
    ceiling = (other - T) ** 2 * (2 * T - 1)
    if size - 1 > ceiling:
        return '%s: %d exceeds %d' % (label, size - 1, ceiling)
    if size - 1 == ceiling and not (T == 1 or other == 2 * T + 1):
        return '%s: equality %d without T = 1 or 2T + 1 = %d' % (label, ceiling, other)
    return None


def pg_feasible(pg: PgParams) -> PgFeasibility:
    K, R, T = pg.as_tuple()
    checks = []
    if T <= R - 2:
        checks.append(_line_size_inequality(K, R, T, 'K - 1 <= (R - T)^2 (2T - 1)'))
    if T <= K - 2:
        checks.append(_line_size_inequality(R, K, T, 'R - 1 <= (K - T)^2 (2T - 1)'))
    failures = [reason for reason in checks if reason]
    if failures:
        return PgFeasibility(False, '; '.join(failures))
    if not checks:
        return PgFeasibility(True, 'no inequality applies (T > R - 2 and T > K - 2)')
    return PgFeasibility(True, 'inequality holds')


# Line systems: Metsch conditions and the SPLS thresholds

def metsch_conditions(sp: StandardParams, sigma: int) -> bool:
    if sigma < 1:
        raise ValueError('sigma must be positive, got %s' % sigma)
    k, lam, mu = sp.k, sp.lam, sp.mu
    first = (sigma + 1) * (lam + 1) - k > (mu - 1) * comb(sigma + 1, 2)
    second = lam + 1 > (mu - 1) * (2 * sigma - 1)
    return first and second


def metsch_line_threshold(sp: StandardParams, sigma: int) -> int:
    """Minimum order of a line: lambda + 2 - (mu - 1)(sigma - 1)."""
    return sp.lam + 2 - (sp.mu - 1) * (sigma - 1)


def spls_sigma(b) -> int:
    return ceil(Fraction(4 * Fraction(b) + 1, 3))


def _require_classical(cp: ClassicalParams, min_b: int):
    b, alpha, beta = cp.as_tuple()
    if b.denominator != 1 or b < min_b:
        raise InvalidClassicalParameters(b=b, alpha=alpha, beta=beta, rule='b must be an integer >= %d' % min_b)
    if (alpha + 1) * (b + 1) < 2:
        raise InvalidClassicalParameters(b=b, alpha=alpha, beta=beta, rule='mu = (alpha + 1)(b + 1) must be >= 2')


def spls_thresholds(cp: ClassicalParams):
    b, alpha = cp.b, cp.alpha
    s = cp.mu_minus_one
    lead = Fraction(8, 3) * (b + 1) * s
    return (
        lead - Fraction(2, 3) * s - 4 * b * alpha,
        lead - Fraction(5, 3) * s - b * alpha,
    )


def spls_threshold_ok(cp: ClassicalParams) -> bool:
    """beta above both thresholds certifies SPLS(ceil((4b+1)/3))."""
    _require_classical(cp, min_b=1)
    return cp.beta > max(spls_thresholds(cp))


def geometric_threshold(cp: ClassicalParams) -> Fraction:
    return Fraction(5, 2) * cp.b * cp.mu_minus_one


def geometric_threshold_ok(cp: ClassicalParams) -> bool:
    _require_classical(cp, min_b=2)
    return cp.beta >= geometric_threshold(cp)


def mu_one_obstructed(sp: StandardParams) -> bool:
    """mu = 1 forces (lambda + 1)(lambda + 2) <= k."""
    return sp.mu == 1 and (sp.lam + 1) * (sp.lam + 2) > sp.k


# Classification

def _bounds(m, lam, mu):
    bounds = Bounds(neumaier=neumaier_bound(m, mu), improved=improved_bound(m, mu))
    return dict(
        m=m,
        bounds=bounds,
        exceeds_neumaier=lam > bounds.neumaier,
        exceeds_improved=lam > bounds.improved,
    )


def dispatch(m: int, lam: int, mu: int) -> Verdict:
    """The lambda-versus-bound decision for a smallest eigenvalue -m."""
    context = _bounds(m, lam, mu)
    if m <= 2:
        return Verdict(VerdictKind.SMALL_M, reason='m <= 2: the lambda bounds do not apply', **context)
    if mu > mu_upper_bound(m):
        return Verdict(VerdictKind.INFEASIBLE, reason='mu_exceeds_bound', **context)
    if not context['exceeds_improved']:
        return Verdict(VerdictKind.WITHIN_BOUND, **context)
    if mu == m * (m - 1):
        structure = {'latin_square_order': lam - m * (m - 3)}
        return Verdict(VerdictKind.FORCED_LATIN_SQUARE, forced_structure=structure, **context)
    if mu == m * m:
        points = lam * (m - 1) - m * (m - 1) * (m - 2) + m
        structure = {'design': [points, m, 1]}
        return Verdict(VerdictKind.FORCED_STEINER, forced_structure=structure, **context)
    return Verdict(VerdictKind.INFEASIBLE, reason='exceeds_improved_bound', **context)


def classify(sp: StandardParams) -> Verdict:
    if not sp.is_primitive:
        # complete multipartite: the smallest eigenvalue is minus the part size
        try:
            context = _bounds(eigendata(sp).m, sp.lam, sp.mu)
        except (NonIntegralNonConference, NonIntegralMultiplicity):
            context = {}
        return Verdict(VerdictKind.INFEASIBLE, reason='imprimitive', **context)
    try:
        eigen = eigendata(sp)
    except (NonIntegralNonConference, NonIntegralMultiplicity) as error:
        return Verdict(VerdictKind.INFEASIBLE, reason=error.code)
    if eigen.conference:
        return Verdict(VerdictKind.CONFERENCE, m=eigen.m)

    m = eigen.m
    if m <= 2:
        return dispatch(m, sp.lam, sp.mu)
    if sp.mu > mu_upper_bound(m):
        return Verdict(VerdictKind.INFEASIBLE, reason='mu_exceeds_bound', **_bounds(m, sp.lam, sp.mu))
    if mu_one_obstructed(sp):
        return Verdict(VerdictKind.INFEASIBLE, reason='mu_one_obstruction', **_bounds(m, sp.lam, sp.mu))

    verdict = dispatch(m, sp.lam, sp.mu)
    if verdict.kind.forced:
        pg = has_geometric_parameters(sp)
        if pg is not None:
            feasibility = pg_feasible(pg)
            verdict.forced_structure.update(
                pg=list(pg.as_tuple()),
                pg_feasible=feasibility.feasible,
                pg_reason=feasibility.reason,
            )
    logger.debug('%s classified as %s', sp, verdict.kind.value)
    return verdict


def classify_quadruple(v: int, k: int, lam: int, mu: int) -> Verdict:
    """classify() on raw integers; inadmissible quadruples are an Infeasible verdict."""
    try:
        sp = StandardParams(v, k, lam, mu)
    except InvalidParameters as error:
        return Verdict(VerdictKind.INFEASIBLE, reason='invalid_parameters: %s' % error.witness['rule'])
    return classify(sp)
