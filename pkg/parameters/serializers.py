from rest_framework import serializers

from utils.fields import ExactValueField, FractionField


class StandardParamsSerializer(serializers.Serializer):
    """(v, k, lambda, mu); ``lambda`` is a keyword, so the field is added in get_fields()."""
    v = serializers.IntegerField(min_value=0)
    k = serializers.IntegerField(min_value=0)
    mu = serializers.IntegerField(min_value=0)

    def get_fields(self):
        fields = super().get_fields()
        lam = serializers.IntegerField(min_value=0, source='lam')
        return {
            'v': fields['v'],
            'k': fields['k'],
            'lambda': lam,
            'mu': fields['mu'],
        }


class EigendataSerializer(serializers.Serializer):
    theta1 = ExactValueField()
    theta2 = ExactValueField()
    integral = serializers.BooleanField()
    m = serializers.IntegerField(allow_null=True)
    f_mult = serializers.IntegerField()
    g_mult = serializers.IntegerField()
    conference = serializers.BooleanField()


class ClassicalParamsSerializer(serializers.Serializer):
    b = FractionField()
    alpha = FractionField()
    beta = FractionField()
    triple = serializers.SerializerMethodField()

    def get_triple(self, obj):
        return str(obj)


class PgParamsSerializer(serializers.Serializer):
    K = serializers.IntegerField()
    R = serializers.IntegerField()
    T = serializers.IntegerField()


class PgFeasibilitySerializer(serializers.Serializer):
    feasible = serializers.BooleanField()
    reason = serializers.CharField()


class BoundsSerializer(serializers.Serializer):
    neumaier = FractionField()
    improved = FractionField()


class VerdictSerializer(serializers.Serializer):
    kind = serializers.SerializerMethodField()
    reason = serializers.CharField(allow_null=True)
    m = serializers.IntegerField(allow_null=True)
    bounds = BoundsSerializer(allow_null=True)
    exceeds_neumaier = serializers.BooleanField()
    exceeds_improved = serializers.BooleanField()
    forced_structure = serializers.DictField()

    def get_kind(self, obj):
        return obj.kind.value
