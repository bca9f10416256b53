from django.utils.translation import gettext_lazy as _

from utils.exceptions import DomainError


class ArrayFormatError(DomainError):
    code = 'array_format'
    usage = True
    message = _('Array file line %(line)s: %(problem)s.')


class DimensionMismatch(DomainError):
    code = 'dimension_mismatch'
    message = _('Array shape is wrong: %(problem)s.')


class SymbolOutOfRange(DomainError):
    code = 'symbol_out_of_range'
    message = _('Row %(row)s, column %(column)s holds %(symbol)s, outside 0..%(top)s.')


class RepeatedPair(DomainError):
    code = 'repeated_pair'
    message = _('Rows %(rows)s repeat the symbol pair %(pair)s in columns %(columns)s.')


class NotLatin(DomainError):
    code = 'not_latin'
    message = _('Square %(square)s repeats a symbol in %(line)s.')


class NotOrthogonal(DomainError):
    code = 'not_orthogonal'
    message = _('Squares %(squares)s repeat the pair %(pair)s in cells %(cells)s.')


class NotPrime(DomainError):
    code = 'not_prime'
    message = _('%(p)s is not a prime; cyclic MOLS need a prime order.')


class CountTooLarge(DomainError):
    code = 'count_too_large'
    message = _('Cannot build %(count)s cyclic MOLS of order %(p)s, the range is 1..%(maximum)s.')


class NotGeometric(DomainError):
    code = 'not_geometric'
    message = _('The complement graph is not covered by a net: %(problem)s.')


class ParallelismNotTransitive(DomainError):
    code = 'parallelism_not_transitive'
    message = _('Lines disjoint from %(line)s do not form a parallel class (%(found)s lines, %(covered)s points).')


class ResultNotOA(DomainError):
    code = 'result_not_oa'
    message = _('The completed array is not an orthogonal array: %(problem)s.')
