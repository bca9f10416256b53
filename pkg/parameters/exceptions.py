from django.utils.translation import gettext_lazy as _

from utils.exceptions import DomainError


class InvalidParameters(DomainError):
    code = 'invalid_parameters'
    message = _('(%(v)s, %(k)s, %(lam)s, %(mu)s) is not an admissible parameter set: %(rule)s.')


class NonIntegralNonConference(DomainError):
    code = 'non_integral_non_conference'
    message = _('Discriminant %(discriminant)s is not a square and the parameters are not of conference type.')


class NonIntegralMultiplicity(DomainError):
    code = 'non_integral_multiplicity'
    message = _('Eigenvalue multiplicities (%(f)s, %(g)s) are not non-negative integers.')


class ConferenceGraph(DomainError):
    code = 'conference_graph'
    message = _('Conference parameters with irrational eigenvalues have no classical parameters.')


class NonIntegralParameters(DomainError):
    code = 'non_integral_parameters'
    message = _('Classical parameters (%(b)s, %(alpha)s, %(beta)s) give non-integral values: %(values)s.')


class InvalidClassicalParameters(DomainError):
    code = 'invalid_classical_parameters'
    message = _('Classical parameters (%(b)s, %(alpha)s, %(beta)s) are outside the range: %(rule)s.')
