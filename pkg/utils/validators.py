from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _


def only_int(token, what='value'):
    """Parse a decimal integer token from a data file."""
    token = token.strip()
    if not token.lstrip('-').isdigit():
        raise ValidationError(_('%(what)s contains characters: %(token)r'), params={'what': what, 'token': token})
    return int(token)


def data_lines(text):
    """Non-empty lines of a data file, stripped."""
    return [line.strip() for line in text.splitlines() if line.strip()]
