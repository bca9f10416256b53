from django.utils.translation import gettext_lazy as _

from utils.exceptions import DomainError


class GraphFormatError(DomainError):
    code = 'graph_format'
    usage = True
    message = _('Graph file line %(line)s: %(problem)s.')


class InvalidGraph(DomainError):
    code = 'invalid_graph'
    message = _('Graph is not simple: %(problem)s (edge %(edge)s).')


class NotRegular(DomainError):
    code = 'not_regular'
    message = _('Vertex %(vertex)s has degree %(degree)s, vertex 0 has degree %(k)s.')


class NotStronglyRegular(DomainError):
    code = 'not_strongly_regular'
    message = _('Pair %(pair)s (%(relation)s) has %(common)s common neighbours, expected %(expected)s.')


class DiameterExceeded(DomainError):
    code = 'diameter_exceeded'
    message = _('Pair %(pair)s is at distance greater than 2.')


class NotPartialLinearSpace(DomainError):
    code = 'not_partial_linear_space'
    message = _('Pair %(pair)s lies on %(count)s lines: %(problem)s.')


class SigmaExceeded(DomainError):
    code = 'sigma_exceeded'
    message = _('Vertex %(vertex)s lies on %(count)s lines, more than sigma = %(sigma)s.')


class MetschConditionsNotMet(DomainError):
    code = 'metsch_conditions_not_met'
    message = _('Metsch conditions fail for %(params)s with sigma = %(sigma)s; pass --override to extract anyway.')


class NotDelsarteGeometric(DomainError):
    code = 'not_delsarte_geometric'
    message = _('No Delsarte clique of order %(order)s through vertex %(vertex)s.')
