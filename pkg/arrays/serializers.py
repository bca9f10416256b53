from rest_framework import serializers

from utils.fields import FractionField


class OrthogonalArraySerializer(serializers.Serializer):
    m = serializers.IntegerField()
    n = serializers.IntegerField()
    deficiency = serializers.IntegerField()
    full = serializers.BooleanField()


class CompletionReportSerializer(serializers.Serializer):
    m = serializers.IntegerField()
    n = serializers.IntegerField()
    delta = serializers.IntegerField()
    bound = FractionField()
    bound_met = serializers.BooleanField()
    already_full = serializers.BooleanField()
    method = serializers.CharField()
    line_count = serializers.IntegerField()
    class_count = serializers.IntegerField()
    warning = serializers.CharField(allow_null=True)
