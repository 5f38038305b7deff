from django.conf import settings
from rest_framework import serializers
from rest_framework.renderers import JSONRenderer


class ReportRenderer(JSONRenderer):
    """Two-space indented JSON in declared key order, without trailing blanks."""

    def render(self, data, accepted_media_type=None, renderer_context=None):
        text = super().render(data, accepted_media_type, {'indent': 2})
        return b'\n'.join(line.rstrip() for line in text.split(b'\n')) + b'\n'


class EnvelopeSerializer(serializers.Serializer):
    """Serializer for the common report envelope"""
    schema_version = serializers.SerializerMethodField()
    command = serializers.CharField()
    provenance = serializers.CharField()
    result = serializers.JSONField()

    def get_schema_version(self, obj):
        return getattr(settings, 'ULRICH_SCHEMA_VERSION', 1)


class QuotientPieceSerializer(serializers.Serializer):
    """Serializer for graded quotient reports; fields depend on the coefficient domain"""
    domain = serializers.CharField()
    degree = serializers.IntegerField()
    ambient_dim = serializers.IntegerField()
    ideal_dim = serializers.IntegerField()
    quotient_dim = serializers.IntegerField(allow_null=True)
    free_rank = serializers.IntegerField(allow_null=True)
    torsion = serializers.ListField(child=serializers.IntegerField())
    torsion_reps = serializers.ListField(child=serializers.CharField())
    basis = serializers.ListField(child=serializers.CharField())

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if instance.is_integral:
            for key in ('quotient_dim', 'basis'):
                data.pop(key)
        else:
            for key in ('free_rank', 'torsion', 'torsion_reps'):
                data.pop(key)
        return data


class FactorizationSerializer(serializers.Serializer):
    """Serializer for cyclic factorization certificates"""
    field = serializers.SerializerMethodField()
    vars = serializers.SerializerMethodField()
    d = serializers.IntegerField()
    s = serializers.SerializerMethodField()
    size = serializers.IntegerField()
    rank = serializers.IntegerField()
    zeta = serializers.IntegerField(allow_null=True)
    b = serializers.SerializerMethodField()
    A = serializers.SerializerMethodField()
    verified = serializers.SerializerMethodField()
    determinantal = serializers.SerializerMethodField()
    provenance = serializers.CharField()

    def get_field(self, obj):
        return obj.b.domain.spelling

    def get_vars(self, obj):
        return list(obj.b.context.names)

    def get_s(self, obj):
        return obj.decomposition.s if obj.decomposition is not None else None

    def get_b(self, obj):
        return obj.b.format()

    def get_A(self, obj):
        return obj.matrix.to_strings()

    def get_verified(self, obj):
        # CyclicFactorization refuses matrices failing A^d = b*I
        return True

    def get_determinantal(self, obj):
        return self.context.get('determinantal')


class VerificationSerializer(serializers.Serializer):
    """Serializer for verify reports"""
    d = serializers.IntegerField()
    size = serializers.IntegerField()
    r = serializers.IntegerField(allow_null=True)
    b = serializers.CharField()
    power = serializers.BooleanField()
    power_mismatch = serializers.JSONField(allow_null=True)
    determinantal = serializers.BooleanField(allow_null=True)
    determinantal_mismatch = serializers.JSONField(allow_null=True)
    verified = serializers.BooleanField()


class PfaffianSerializer(serializers.Serializer):
    """Serializer for skew-symmetric forms of the 4x4 doubling"""
    b = serializers.CharField()
    A = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))
    skew = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))
    row_order = serializers.ListField(child=serializers.IntegerField())
    signs = serializers.ListField(child=serializers.IntegerField())
    pfaffian = serializers.CharField()
    sign = serializers.IntegerField(allow_null=True)
    squares_to_det = serializers.BooleanField()


class ExtTableSerializer(serializers.Serializer):
    """Serializer for the normal bundle / ext table row"""
    m = serializers.IntegerField()
    q = serializers.IntegerField()
    h0N = serializers.IntegerField()
    h1N = serializers.IntegerField()
    hom = serializers.IntegerField()
    ext1 = serializers.IntegerField()
    ext2 = serializers.IntegerField()
    ext3 = serializers.IntegerField()
    valid = serializers.BooleanField()


class BottSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    i = serializers.IntegerField()
    top_row = serializers.CharField()
    h = serializers.ListField(child=serializers.IntegerField())
    euler_characteristic = serializers.IntegerField()


class CohomologyTableSerializer(serializers.Serializer):
    """Serializer for complete intersection cohomology"""
    n = serializers.IntegerField()
    m = serializers.IntegerField()
    sheaf = serializers.CharField()
    i = serializers.IntegerField()
    h = serializers.ListField(child=serializers.IntegerField())
    euler_characteristic = serializers.IntegerField()
    hilbert_poly = serializers.CharField()
    hilbert_binomial = serializers.ListField(child=serializers.CharField())
    arithmetic_genus = serializers.IntegerField()


class CoverSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    m = serializers.IntegerField()
    d = serializers.IntegerField()
    r = serializers.IntegerField()
    pushforward = serializers.ListField(child=serializers.IntegerField())
    canonical_twist = serializers.IntegerField()
    ulrich_degree = serializers.IntegerField()
    ulrich_h0 = serializers.IntegerField()
    ulrich_hilbert = serializers.CharField()
    c2_degree = serializers.IntegerField(allow_null=True)


class TrialSerializer(serializers.Serializer):
    """Serializer for seeded genericity trials"""
    n = serializers.IntegerField()
    m = serializers.IntegerField()
    domain = serializers.CharField()
    seed = serializers.IntegerField()
    trials = serializers.IntegerField()
    successes = serializers.IntegerField()
    ratio = serializers.SerializerMethodField()
    failures = serializers.ListField(child=serializers.IntegerField())

    def get_ratio(self, obj):
        return str(obj.ratio)


class CountingSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    m = serializers.IntegerField()
    v_m_dim = serializers.IntegerField()
    v_2m_dim = serializers.IntegerField()
    parameter_count = serializers.IntegerField()
    rank1_gap = serializers.IntegerField(allow_null=True)
    rank2_gap = serializers.IntegerField()
    noic_dim = serializers.IntegerField(allow_null=True)
    noic_codim = serializers.IntegerField(allow_null=True)


class GoldenItemSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField()
    detail = serializers.CharField(allow_blank=True)


class SelftestSerializer(serializers.Serializer):
    """Serializer for the golden suite outcome"""
    top_row = serializers.CharField()
    total = serializers.IntegerField()
    passed = serializers.IntegerField()
    failed = serializers.IntegerField()
    items = GoldenItemSerializer(many=True)


class MatrixInputSerializer(serializers.Serializer):
    """
    Validates ``--matrix`` input: a bare array of rows of polynomial strings,
    or a certificate object carrying the rows under ``A``.
    """
    A = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField(trim_whitespace=True)),
        allow_empty=False,
    )
    d = serializers.IntegerField(required=False, min_value=1)
    b = serializers.CharField(required=False)
    field = serializers.CharField(required=False)
    vars = serializers.ListField(child=serializers.CharField(), required=False)

    def to_internal_value(self, data):
        if isinstance(data, list):
            data = {'A': data}
        return super().to_internal_value(data)

    def validate_A(self, value):
        size = len(value)
        if any(len(row) != size for row in value):
            raise serializers.ValidationError('Matrix must be square')
        return value
