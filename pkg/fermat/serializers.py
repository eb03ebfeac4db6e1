import io

from rest_framework import serializers
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from fermat.arith import GaussianInt, Rt2Int
from fermat.elliptic import ReductionType
from fermat.obstruction import Branch, Step, StepKind, Target, Verdict, VerdictReport


class Rt2IntField(serializers.Field):
    """Z[sqrt(2)] values as {"rat": r, "irr": k}; "k*rt2" strings are accepted on input."""

    default_error_messages = {
        'invalid': 'Expected {{"rat": int, "irr": int}} or a "k*rt2" literal.',
    }

    def to_representation(self, value):
        value = Rt2Int.coerce(value)
        return {'rat': value.rat, 'irr': value.irr}

    def to_internal_value(self, data):
        if isinstance(data, int) and not isinstance(data, bool):
            return Rt2Int(data)
        if isinstance(data, str):
            try:
                return Rt2Int.parse(data)
            except ValueError:
                self.fail('invalid')
        if isinstance(data, dict) and set(data) <= {'rat', 'irr'}:
            rat, irr = data.get('rat', 0), data.get('irr', 0)
            if all(isinstance(v, int) and not isinstance(v, bool) for v in (rat, irr)):
                return Rt2Int(rat, irr)
        self.fail('invalid')


class GaussianIntField(serializers.Field):
    default_error_messages = {
        'invalid': 'Expected {{"re": int, "im": int}}.',
    }

    def to_representation(self, value):
        value = GaussianInt.coerce(value)
        return {'re': value.re, 'im': value.im}

    def to_internal_value(self, data):
        if isinstance(data, dict) and set(data) <= {'re', 'im'}:
            re, im = data.get('re', 0), data.get('im', 0)
            if all(isinstance(v, int) and not isinstance(v, bool) for v in (re, im)):
                return GaussianInt(re, im)
        self.fail('invalid')


class EigenvalueField(Rt2IntField):
    """Rational eigenvalues stay plain integers; sqrt(2) ones become {"rat", "irr"}."""

    def to_representation(self, value):
        if isinstance(value, int):
            return value
        return super().to_representation(value)


class StepSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=StepKind.choices)
    label = serializers.CharField()
    inputs = serializers.DictField(required=False, default=dict)
    outputs = serializers.DictField(required=False, default=dict)
    paper_quote = serializers.CharField(source='quote', required=False, allow_blank=True, default='')
    succeeded = serializers.BooleanField(default=True)

    def validate(self, data):
        if data['kind'] == StepKind.AXIOM and (data['inputs'] or data['outputs']):
            raise serializers.ValidationError("Axiom steps carry no inputs or outputs.")
        return data


class VerdictReportSerializer(serializers.Serializer):
    p = serializers.IntegerField(min_value=2)
    target = serializers.ChoiceField(choices=Target.choices)
    verdict = serializers.ChoiceField(choices=Verdict.choices)
    note = serializers.CharField(required=False, allow_blank=True, default='')
    steps = StepSerializer(many=True)

    def create(self, validated_data):
        steps = tuple(
            Step(
                kind=StepKind(step['kind']),
                label=step['label'],
                inputs=dict(step['inputs']),
                outputs=dict(step['outputs']),
                quote=step['quote'],
                succeeded=step['succeeded'],
            )
            for step in validated_data['steps']
        )
        try:
            return VerdictReport(
                p=validated_data['p'],
                target=Target(validated_data['target']),
                verdict=Verdict(validated_data['verdict']),
                steps=steps,
                note=validated_data['note'],
            )
        except AssertionError as exc:
            raise serializers.ValidationError({'verdict': [str(exc)]}) from exc


class TwoSquaresRepSerializer(serializers.Serializer):
    alpha = serializers.IntegerField()
    beta = serializers.IntegerField()
    n = serializers.IntegerField(min_value=0)

    def validate(self, data):
        if data['alpha'] ** 2 + data['beta'] ** 2 != data['n']:
            raise serializers.ValidationError("alpha^2 + beta^2 must equal n.")
        return data


class QAnalysisSerializer(serializers.Serializer):
    q = serializers.IntegerField()
    p = serializers.IntegerField()
    branch = serializers.ChoiceField(choices=Branch.choices)
    decomposition = TwoSquaresRepSerializer()
    forced = serializers.DictField(child=serializers.BooleanField())


class QcurveTraceSerializer(serializers.Serializer):
    q = serializers.IntegerField()
    value = Rt2IntField()
    sign_determined = serializers.BooleanField()


class ReductionSerializer(serializers.Serializer):
    prime = GaussianIntField()
    reduction = serializers.ChoiceField(choices=ReductionType.choices)


class TableRowSerializer(serializers.Serializer):
    label = serializers.CharField()
    level = serializers.IntegerField()
    primes = serializers.ListField(child=serializers.IntegerField())
    values = serializers.ListField(child=EigenvalueField())
    verified = serializers.BooleanField()


class A3RowSerializer(serializers.Serializer):
    residues = serializers.ListField(child=serializers.IntegerField())
    lift = serializers.ListField(child=serializers.IntegerField())
    ab = QcurveTraceSerializer()
    ba = QcurveTraceSerializer()


class SolutionSerializer(serializers.Serializer):
    A = serializers.IntegerField()
    B = serializers.IntegerField()
    C = serializers.IntegerField()
    p = serializers.IntegerField()


class SideClaimViolationSerializer(serializers.Serializer):
    A = serializers.IntegerField()
    B = serializers.IntegerField()
    claim = serializers.CharField()
    detail = serializers.CharField()


class SearchReportSerializer(serializers.Serializer):
    bound = serializers.IntegerField()
    primes_tested = serializers.ListField(child=serializers.IntegerField())
    pairs_checked = serializers.IntegerField()
    solutions_found = SolutionSerializer(many=True)
    side_claim_violations = SideClaimViolationSerializer(many=True)


def render_json(data):
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode()


def parse_json(text):
    return JSONParser().parse(io.BytesIO(text.encode()))
