"""
Parameter records of a strongly regular graph.

These are plain frozen dataclasses rather than ORM models: every record is a
value computed exactly from four integers, and only the census archive in
``reports`` is persisted.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

import sympy

from .exceptions import InvalidParameters

ExactValue = Union[int, sympy.Expr]


@dataclass(frozen=True)
class StandardParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        rule = self._broken_rule()
        if rule:
            raise InvalidParameters(v=self.v, k=self.k, lam=self.lam, mu=self.mu, rule=rule)

    def _broken_rule(self):
        v, k, lam, mu = self.v, self.k, self.lam, self.mu
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (v, k, lam, mu)):
            return 'parameters must be integers'
        if not 0 < k < v - 1:
            return '0 < k < v - 1 is required'
        if lam < 0 or lam > k - 1:
            return '0 <= lambda <= k - 1 is required'
        if mu < 1 or mu > k:
            return '1 <= mu <= k is required'
        if (v - k - 1) * mu != k * (k - lam - 1):
            return '(v - k - 1) mu = k (k - lambda - 1) fails'
        return None

    @property
    def is_conference_pattern(self):
        """(4t+1, 2t, t-1, t) for some integer t."""
        t = self.mu
        return (self.v, self.k, self.lam) == (4 * t + 1, 2 * t, t - 1)

    @property
    def is_primitive(self):
        # mu = k exactly when the complement is disconnected (complete multipartite)
        return self.mu < self.k

    def as_tuple(self):
        return self.v, self.k, self.lam, self.mu

    def __str__(self):
        return 'srg(%d, %d, %d, %d)' % self.as_tuple()


@dataclass(frozen=True)
class Eigendata:
    theta1: ExactValue
    theta2: ExactValue
    f_mult: int
    g_mult: int
    conference: bool
    m: Optional[int] = None

    @property
    def integral(self):
        return self.m is not None


@dataclass(frozen=True)
class ClassicalParams:
    b: Fraction
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        for name in ('b', 'alpha', 'beta'):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def mu_minus_one(self):
        """b*alpha + b + alpha, i.e. mu - 1."""
        return self.b * self.alpha + self.b + self.alpha

    def as_tuple(self):
        return self.b, self.alpha, self.beta

    def __str__(self):
        return '(%s, %s, %s)' % self.as_tuple()


@dataclass(frozen=True)
class PgParams:
    K: int
    R: int
    T: int

    def __post_init__(self):
        if not (self.K >= 2 and self.R >= 2 and 1 <= self.T <= min(self.K, self.R)):
            raise ValueError('pg(%s, %s, %s) needs K, R >= 2 and 1 <= T <= min(K, R)' % (self.K, self.R, self.T))

    def as_tuple(self):
        return self.K, self.R, self.T


@dataclass(frozen=True)
class PgFeasibility:
    feasible: bool
    reason: str


class VerdictKind(str, Enum):
    INFEASIBLE = 'Infeasible'
    CONFERENCE = 'Conference'
    SMALL_M = 'SmallM'
    FORCED_LATIN_SQUARE = 'ForcedLatinSquareGeometric'
    FORCED_STEINER = 'ForcedSteinerGeometric'
    WITHIN_BOUND = 'WithinBound'

    @property
    def forced(self):
        return self in (VerdictKind.FORCED_LATIN_SQUARE, VerdictKind.FORCED_STEINER)


@dataclass(frozen=True)
class Bounds:
    neumaier: Fraction
    improved: Fraction


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    reason: Optional[str] = None
    m: Optional[int] = None
    bounds: Optional[Bounds] = None
    exceeds_neumaier: bool = False
    exceeds_improved: bool = False
    # the forced net or Steiner design plus the advisory pg check
    forced_structure: dict = field(default_factory=dict)
