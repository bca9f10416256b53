from fractions import Fraction

from django.utils.translation import gettext_lazy as _
from rest_framework import serializers


class FractionField(serializers.Field):
    """Exact rational as a ``"p/q"`` string (``"p"`` when integral); never a float."""
    default_error_messages = {
        'invalid': _('A rational number written as "p" or "p/q" is required.'),
    }

    def to_representation(self, value):
        return str(Fraction(value))

    def to_internal_value(self, data):
        if isinstance(data, float):
            self.fail('invalid')
        try:
            return Fraction(str(data).strip())
        except (ValueError, ZeroDivisionError):
            self.fail('invalid')


class ExactValueField(serializers.Field):
    """Integer eigenvalues stay JSON integers, quadratic surds become their sympy string."""

    def to_representation(self, value):
        if isinstance(value, int):
            return value
        return str(value)
