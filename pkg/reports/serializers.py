from rest_framework import serializers

from parameters.serializers import (
    ClassicalParamsSerializer,
    EigendataSerializer,
    PgFeasibilitySerializer,
    PgParamsSerializer,
    VerdictSerializer,
)
from utils.fields import FractionField


class TripleSerializer(serializers.Serializer):
    """(m, lambda, mu) for the triple-level dispatch."""
    m = serializers.IntegerField(min_value=1)
    mu = serializers.IntegerField(min_value=1)

    def get_fields(self):
        fields = super().get_fields()
        return {
            'm': fields['m'],
            'lambda': serializers.IntegerField(min_value=0, source='lam'),
            'mu': fields['mu'],
        }


class CensusRowSerializer(serializers.Serializer):
    parameters = serializers.SerializerMethodField()
    admissible = serializers.SerializerMethodField()
    eigendata = EigendataSerializer(allow_null=True)
    classical = ClassicalParamsSerializer(allow_null=True)
    pg = PgParamsSerializer(allow_null=True)
    pg_feasibility = PgFeasibilitySerializer(allow_null=True)
    verdict = VerdictSerializer()

    def get_parameters(self, obj):
        v, k, lam, mu = obj.quadruple
        return {'v': v, 'k': k, 'lambda': lam, 'mu': mu}

    def get_admissible(self, obj):
        return obj.params is not None


class BoundRowSerializer(serializers.Serializer):
    mu = serializers.IntegerField()
    neumaier = FractionField()
    improved = FractionField()
    smaller = serializers.CharField()
    forced = serializers.CharField(allow_blank=True)
    neumaier_lambda = serializers.IntegerField(allow_null=True)
    improved_lambda = serializers.IntegerField(allow_null=True)
