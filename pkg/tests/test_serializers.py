"""
Serializer Tests

JSON output of the library types and the reconstruction of verdict
reports from JSON.
"""
from django.test import SimpleTestCase
from rest_framework import serializers

from fermat.arith import GaussianInt, Rt2Int
from fermat.frey import Variant, build_frey, trace_inert
from fermat.obstruction import (
    Axiom,
    Step,
    StepKind,
    Target,
    Verdict,
    first_case_candidate,
    plus_one_exemplar,
    replay_step,
    theorem1_verdict,
    theorem2_verdict,
)
from fermat.serializers import (
    EigenvalueField,
    GaussianIntField,
    QcurveTraceSerializer,
    Rt2IntField,
    StepSerializer,
    TwoSquaresRepSerializer,
    VerdictReportSerializer,
    parse_json,
    render_json,
)


def round_trip(report):
    text = render_json(VerdictReportSerializer(report).data)
    serializer = VerdictReportSerializer(data=parse_json(text))
    serializer.is_valid(raise_exception=True)
    return text, serializer.save()


class FieldTest(SimpleTestCase):
    """Test the custom number fields"""

    def test_rt2_representation(self):
        """Test values render as rat/irr pairs"""
        self.assertEqual(Rt2IntField().to_representation(Rt2Int(3, -2)), {'rat': 3, 'irr': -2})
        self.assertEqual(Rt2IntField().to_representation(5), {'rat': 5, 'irr': 0})

    def test_rt2_input(self):
        """Test the accepted input forms"""
        field = Rt2IntField()
        self.assertEqual(field.run_validation({'rat': 1, 'irr': 2}), Rt2Int(1, 2))
        self.assertEqual(field.run_validation({'irr': -2}), Rt2Int(0, -2))
        self.assertEqual(field.run_validation('-2*rt2'), Rt2Int(0, -2))
        self.assertEqual(field.run_validation(6), Rt2Int(6))

    def test_rt2_invalid(self):
        """Test malformed values"""
        for data in ('sqrt2', True, {'rat': 1, 'other': 2}, {'rat': 1.5}, [1, 2]):
            with self.assertRaises(serializers.ValidationError):
                Rt2IntField().run_validation(data)

    def test_gaussian(self):
        """Test Gaussian integers as re/im pairs"""
        field = GaussianIntField()
        self.assertEqual(field.to_representation(GaussianInt(1, -14)), {'re': 1, 'im': -14})
        self.assertEqual(field.run_validation({'re': 3, 'im': 2}), GaussianInt(3, 2))
        with self.assertRaises(serializers.ValidationError):
            field.run_validation('3+2i')

    def test_eigenvalue(self):
        """Test rational eigenvalues stay integers"""
        self.assertEqual(EigenvalueField().to_representation(-2), -2)
        self.assertEqual(EigenvalueField().to_representation(Rt2Int(0, 2)), {'rat': 0, 'irr': 2})


class ValueSerializerTest(SimpleTestCase):
    """Test serializers of plain results"""

    def test_two_squares_validation(self):
        """Test alpha^2 + beta^2 = n is enforced"""
        self.assertTrue(TwoSquaresRepSerializer(data={'alpha': 1, 'beta': 14, 'n': 197}).is_valid())
        self.assertFalse(TwoSquaresRepSerializer(data={'alpha': 1, 'beta': 2, 'n': 6}).is_valid())

    def test_qcurve_trace(self):
        """Test an inert trace renders its magnitude and the sign flag"""
        data = QcurveTraceSerializer(trace_inert(build_frey(0, 1, Variant.BA), 3)).data
        self.assertEqual(data, {'q': 3, 'value': {'rat': 0, 'irr': 2}, 'sign_determined': False})

    def test_render_and_parse(self):
        """Test the JSON helpers are inverse on plain data"""
        data = {'a': [1, 2], 'b': {'c': 'd'}}
        self.assertEqual(parse_json(render_json(data)), data)
        self.assertIn('\n  ', render_json(data))


class VerdictReportSerializerTest(SimpleTestCase):
    """Test verdict reports survive JSON"""

    def reports(self):
        return [
            theorem1_verdict(17),
            theorem1_verdict(19),
            theorem1_verdict(23),
            theorem2_verdict(19),
            first_case_candidate(plus_one_exemplar(19).n, 19),
        ]

    def test_round_trip(self):
        """Test rebuilt reports equal the originals and render identically"""
        for report in self.reports():
            text, rebuilt = round_trip(report)
            self.assertEqual(rebuilt, report)
            self.assertEqual(render_json(VerdictReportSerializer(rebuilt).data), text)

    def test_rebuilt_steps_replay(self):
        """Test computed steps read back from JSON still replay"""
        _, rebuilt = round_trip(theorem2_verdict(23))
        for step in rebuilt.computed_steps():
            self.assertTrue(replay_step(step), step.label)

    def test_json_shape(self):
        """Test field names and enum values"""
        data = parse_json(render_json(VerdictReportSerializer(theorem1_verdict(17)).data))
        self.assertEqual(set(data), {'p', 'target', 'verdict', 'note', 'steps'})
        self.assertEqual(data['target'], Target.THEOREM1.value)
        self.assertEqual(data['verdict'], Verdict.ELIMINATED.value)
        self.assertEqual(data['steps'][0]['kind'], StepKind.AXIOM.value)
        self.assertEqual(data['steps'][0]['paper_quote'], Axiom.MODULARITY.label)
        self.assertNotIn('quote', data['steps'][0])

    def test_failed_step_on_positive_verdict(self):
        """Test an Eliminated report with a failed step cannot be rebuilt"""
        data = {
            'p': 19,
            'target': 'Theorem1',
            'verdict': 'Eliminated',
            'note': '',
            'steps': [{
                'kind': 'computed', 'label': 'legendre', 'inputs': {'a': -1, 'p': 5},
                'outputs': {'symbol': 1}, 'paper_quote': '', 'succeeded': False,
            }],
        }
        serializer = VerdictReportSerializer(data=data)
        self.assertTrue(serializer.is_valid())
        with self.assertRaises(serializers.ValidationError):
            serializer.save()

    def test_unknown_verdict(self):
        """Test enum values are validated"""
        serializer = VerdictReportSerializer(data={'p': 19, 'target': 'Theorem9', 'verdict': 'Eliminated', 'steps': []})
        self.assertFalse(serializer.is_valid())
        self.assertIn('target', serializer.errors)

    def test_axiom_with_inputs(self):
        """Test axiom steps carry no inputs"""
        serializer = StepSerializer(data={'kind': 'axiom', 'label': 'Modularity', 'inputs': {'p': 5}})
        self.assertFalse(serializer.is_valid())

    def test_step_defaults(self):
        """Test optional step fields"""
        serializer = StepSerializer(data={'kind': 'axiom', 'label': 'Modularity'})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertTrue(serializer.validated_data['succeeded'])
        self.assertEqual(StepSerializer(Step(kind=StepKind.AXIOM, label='Modularity')).data['inputs'], {})
