from rest_framework import serializers

from parameters.serializers import PgParamsSerializer


class GraphSummarySerializer(serializers.Serializer):
    v = serializers.IntegerField()
    e = serializers.SerializerMethodField()

    def get_e(self, obj):
        return len(obj.edges())


class LineSystemSerializer(serializers.Serializer):
    origin = serializers.CharField()
    sigma = serializers.IntegerField(allow_null=True)
    line_count = serializers.SerializerMethodField()
    line_orders = serializers.SerializerMethodField()
    lines = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))

    def get_line_count(self, obj):
        return len(obj.lines)

    def get_line_orders(self, obj):
        return sorted({len(line) for line in obj.lines})


class LineAuditSerializer(serializers.Serializer):
    m = serializers.IntegerField()
    g = serializers.IntegerField()
    delsarte_order = serializers.IntegerField(allow_null=True)
    line_count = serializers.IntegerField()
    incidence_rank = serializers.IntegerField()
    tau = serializers.ListField(child=serializers.IntegerField())
    tau_D = serializers.ListField(child=serializers.IntegerField())
    delsarte_vertices = serializers.ListField(child=serializers.IntegerField())
    all_delsarte = serializers.SerializerMethodField()
    tau_ok = serializers.BooleanField()
    line_count_ok = serializers.BooleanField()
    line_count_margin = serializers.IntegerField()
    rank_ok = serializers.BooleanField()
    delsarte_share_ok = serializers.BooleanField(allow_null=True)
    alpha_ok = serializers.BooleanField(allow_null=True)
    delsarte_intersections_ok = serializers.BooleanField(allow_null=True)
    passed = serializers.BooleanField()
    witnesses = serializers.DictField()

    def get_all_delsarte(self, obj):
        return len(obj.delsarte_vertices) == len(obj.tau)


class PartialGeometryCheckSerializer(serializers.Serializer):
    pg = PgParamsSerializer(allow_null=True)
    witness = serializers.DictField()
