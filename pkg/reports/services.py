"""
Census rows, bound tables, sweeps and the census archive.
"""
import csv
import io
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Tuple

from django.db import transaction

from graphs.models import Graph, LineSystem
from graphs.services import delsarte_lines, extract_lines
from parameters.exceptions import InvalidParameters, NonIntegralMultiplicity, NonIntegralNonConference
from parameters.models import ClassicalParams, Eigendata, PgFeasibility, PgParams, StandardParams, Verdict
from parameters.services import (
    bound_table,
    classify_quadruple,
    eigendata,
    has_geometric_parameters,
    lambda_threshold,
    pg_feasible,
    to_classical,
)
from utils.concurrency import parallel_map

from .models import CensusRecord
from .serializers import CensusRowSerializer

logger = logging.getLogger(__name__)

Quadruple = Tuple[int, int, int, int]


@dataclass(frozen=True)
class CensusRow:
    quadruple: Quadruple
    verdict: Verdict
    params: Optional[StandardParams] = None
    eigendata: Optional[Eigendata] = None
    classical: Optional[ClassicalParams] = None
    pg: Optional[PgParams] = None
    pg_feasibility: Optional[PgFeasibility] = None


def census_row(v: int, k: int, lam: int, mu: int) -> CensusRow:
    quadruple = (v, k, lam, mu)
    verdict = classify_quadruple(v, k, lam, mu)
    try:
        sp = StandardParams(v, k, lam, mu)
    except InvalidParameters:
        return CensusRow(quadruple, verdict)
    try:
        data = eigendata(sp)
    except (NonIntegralNonConference, NonIntegralMultiplicity):
        return CensusRow(quadruple, verdict, params=sp)
    if data.m is None:
        return CensusRow(quadruple, verdict, params=sp, eigendata=data)

    pg = has_geometric_parameters(sp)
    return CensusRow(
        quadruple,
        verdict,
        params=sp,
        eigendata=data,
        classical=to_classical(sp),
        pg=pg,
        pg_feasibility=pg_feasible(pg) if pg else None,
    )


# Bound census over mu for a fixed m

@dataclass(frozen=True)
class BoundRow:
    mu: int
    neumaier: Fraction
    improved: Fraction
    smaller: str
    forced: str
    neumaier_lambda: Optional[int] = None
    improved_lambda: Optional[int] = None


def census_table(m: int, mu_max: Optional[int] = None, lambda_mode: bool = False) -> List[BoundRow]:
    if m < 3:
        raise ValueError('the census needs m >= 3, got %s' % m)
    table = bound_table(m, mu_max)
    forced = {m * (m - 1): 'latin_square', m * m: 'steiner'}
    rows = []
    for index, mu in enumerate(table.mu.tolist()):
        neumaier, improved = table.neumaier(index), table.improved(index)
        smaller = 'improved' if improved < neumaier else 'neumaier' if neumaier < improved else 'equal'
        rows.append(BoundRow(
            mu=mu,
            neumaier=neumaier,
            improved=improved,
            smaller=smaller,
            forced=forced.get(mu, ''),
            neumaier_lambda=lambda_threshold(neumaier) if lambda_mode else None,
            improved_lambda=lambda_threshold(improved) if lambda_mode else None,
        ))
    return rows


def bound_rows_tsv(rows: Iterable[BoundRow], lambda_mode: bool = False) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter='\t', lineterminator='\n')
    header = ['mu', 'neumaier', 'improved', 'smaller', 'forced']
    if lambda_mode:
        header += ['neumaier_lambda', 'improved_lambda']
    writer.writerow(header)
    for row in rows:
        line = [row.mu, row.neumaier, row.improved, row.smaller, row.forced]
        if lambda_mode:
            line += [row.neumaier_lambda, row.improved_lambda]
        writer.writerow(line)
    return buffer.getvalue()


# Sweeps over all quadruples

def sweep_quadruples(v_max: int) -> Iterator[Quadruple]:
    """Every (v, k, lambda, mu) with v <= v_max satisfying (v-k-1) mu = k (k-lambda-1), 1 <= mu <= k."""
    for v in range(4, v_max + 1):
        for k in range(1, v - 1):
            for lam in range(k):
                numerator = k * (k - lam - 1)
                if numerator % (v - k - 1) == 0 and 1 <= numerator // (v - k - 1) <= k:
                    yield v, k, lam, numerator // (v - k - 1)


def sweep(v_max: int, include_all: bool = False) -> List[CensusRow]:
    """Census rows in (v, k, lambda) order; by default only sets passing the integrality conditions."""
    rows = parallel_map(lambda quadruple: census_row(*quadruple), list(sweep_quadruples(v_max)))
    if not include_all:
        rows = [row for row in rows if row.eigendata is not None]
    logger.info('sweep to v = %d: %d rows', v_max, len(rows))
    return rows


def census_rows_tsv(rows: Iterable[CensusRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter='\t', lineterminator='\n')
    writer.writerow(['v', 'k', 'lambda', 'mu', 'kind', 'reason', 'm', 'classical', 'pg'])
    for row in rows:
        verdict = row.verdict
        writer.writerow(list(row.quadruple) + [
            verdict.kind.value,
            verdict.reason or '',
            '' if verdict.m is None else verdict.m,
            row.classical or '',
            '' if row.pg is None else 'pg(%d, %d, %d)' % row.pg.as_tuple(),
        ])
    return buffer.getvalue()


# Archive

def archive(rows: Iterable[CensusRow]) -> int:
    """Upsert one CensusRecord per row; all or nothing."""
    count = 0
    with transaction.atomic():
        for row in rows:
            v, k, lam, mu = row.quadruple
            verdict = row.verdict
            CensusRecord.objects.update_or_create(
                v=v, k=k, lam=lam, mu=mu,
                defaults={
                    'kind': verdict.kind.value,
                    'reason': verdict.reason or '',
                    'm': verdict.m,
                    'neumaier_bound': str(verdict.bounds.neumaier) if verdict.bounds else '',
                    'improved_bound': str(verdict.bounds.improved) if verdict.bounds else '',
                    'classical': str(row.classical) if row.classical else '',
                    'pg': 'pg(%d, %d, %d)' % row.pg.as_tuple() if row.pg else '',
                    'report': CensusRowSerializer(row).data,
                },
            )
            count += 1
    logger.info('archived %d census records', count)
    return count


# Line systems for the graph commands

def line_system(g: Graph, sp: StandardParams, sigma: Optional[int] = None, override: bool = False) -> LineSystem:
    """Metsch lines when sigma is given, the Delsarte cliques otherwise."""
    if sigma is None:
        return delsarte_lines(g, sp)
    return extract_lines(g, sp, sigma, override=override)
