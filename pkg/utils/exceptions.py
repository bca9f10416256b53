from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _


class DomainError(ValidationError):
    """
    Base class for every property failure in srgforge.
    The witness (violating pair, vertex, cell ...) travels in ``params`` so that
    the message can interpolate it and the commands can emit it as JSON.
    """
    code = 'domain_error'
    message = _('Domain check failed.')
    # malformed input rather than a failed property
    usage = False

    def __init__(self, message=None, **witness):
        super().__init__(message or self.message, code=self.code, params=witness)

    @property
    def witness(self):
        return dict(self.params or {})

    @property
    def detail(self):
        return self.messages[0]
