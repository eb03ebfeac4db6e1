"""
Obstruction Tests

Cartan types, the eliminations of f3..f6, the level-raising constraint on
primes of C, the product-formula conclusion and the verdict reports built
from them.
"""
import dataclasses

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from fermat.arith import is_prime, primes_up_to
from fermat.exceptions import DomainError, VerificationError
from fermat.newforms import CMField
from fermat.obstruction import (
    STEP_OPERATIONS,
    Axiom,
    Branch,
    CartanType,
    Step,
    StepKind,
    Target,
    Verdict,
    VerdictReport,
    analyze_q,
    axiom,
    cartan_type,
    computed,
    eliminate_f3_f4,
    eliminate_f5_f6,
    f5_f6_norms,
    first_case_candidate,
    first_case_constraint,
    frey_form_level,
    level_raising_rhs,
    plus_one_exemplar,
    power_representations,
    product_formula_conclusion,
    proposition_verdict,
    replay_step,
    theorem1_range,
    theorem1_verdict,
    theorem2_verdict,
)
from fermat.two_squares import TwoSquaresRep, decompose_prime, decompose_prime_naive


def expected_branch(q, p):
    """Branch from first principles, with the brute-force decomposition."""
    if (q * q - 1) % p:
        return Branch.EXCLUDED
    if q % p == p - 1:
        return Branch.MINUS_ONE_CONTRADICTION
    rep = decompose_prime_naive(q)
    for a, b in ((rep.alpha, rep.beta), (rep.beta, rep.alpha)):
        if a * a % p == 1 and b % p == 0:
            return Branch.PLUS_ONE_SHAPE
    return Branch.SHAPE_VIOLATED


class CartanTypeTest(SimpleTestCase):
    """Test split versus non-split by the splitting of p in the CM field"""

    def test_sweep(self):
        """Test every odd prime below 10^4"""
        for p in primes_up_to(10**4)[1:]:
            gaussian = cartan_type(CMField.GAUSSIAN, p)
            self.assertEqual(gaussian == CartanType.SPLIT, p % 4 == 1, p)
            sqrt_minus_2 = cartan_type(CMField.SQRT_MINUS_2, p)
            self.assertEqual(sqrt_minus_2 == CartanType.SPLIT, p % 8 in (1, 3), p)

    def test_two(self):
        """Test p = 2 ramifies in both fields"""
        self.assertEqual(cartan_type('Q(i)', 2), CartanType.RAMIFIED)
        self.assertEqual(cartan_type('Q(sqrt-2)', 2), CartanType.RAMIFIED)

    def test_domain(self):
        """Test unknown fields and non-primes"""
        with self.assertRaises(DomainError):
            cartan_type('Q(sqrt3)', 5)
        with self.assertRaises(DomainError):
            cartan_type(CMField.GAUSSIAN, 9)


class EliminationTest(SimpleTestCase):
    """Test the a_3 comparisons that rule out f3..f6"""

    def test_norms(self):
        """Test the norms of a - t for the allowed a_3 and t = ±2"""
        self.assertEqual(f5_f6_norms(), [-4, 2, 4])

    def test_f5_f6(self):
        """Test elimination for every odd prime and failure at 2"""
        self.assertTrue(all(eliminate_f5_f6(p) for p in primes_up_to(1000)[1:]))
        self.assertFalse(eliminate_f5_f6(2))

    def test_f3_f4(self):
        """Test ±2*sqrt(2) ≢ 0 above every odd prime"""
        self.assertTrue(all(eliminate_f3_f4(p) for p in primes_up_to(1000)[1:]))
        self.assertFalse(eliminate_f3_f4(2))

    def test_domain(self):
        """Test non-prime p"""
        with self.assertRaises(DomainError):
            eliminate_f5_f6(15)
        with self.assertRaises(DomainError):
            eliminate_f3_f4(1)


class LevelRaisingTest(SimpleTestCase):
    """Test q(q+1)^2 mod p"""

    def test_examples(self):
        """Test hand-checked residues"""
        self.assertEqual(level_raising_rhs(29, 7), 4)
        self.assertEqual(level_raising_rhs(13, 7), 0)
        self.assertEqual(level_raising_rhs(5, 19), 9)

    def test_domain(self):
        """Test q = p and composite inputs"""
        with self.assertRaises(DomainError):
            level_raising_rhs(7, 7)
        with self.assertRaises(DomainError):
            level_raising_rhs(9, 7)

    @settings(deadline=None)
    @given(st.sampled_from(primes_up_to(5000)), st.sampled_from([19, 23, 31, 43, 47, 59]))
    def test_dichotomy(self, q, p):
        """Test q ≡ 1 gives 4 and q ≡ -1 gives 0"""
        if q == p:
            return
        rhs = level_raising_rhs(q, p)
        if q % p == 1:
            self.assertEqual(rhs, 4)
        elif q % p == p - 1:
            self.assertEqual(rhs, 0)


class FirstCaseConstraintTest(SimpleTestCase):
    """Test the branch a prime q | C lands in"""

    def test_examples(self):
        """Test one prime per branch"""
        plus = first_case_constraint(197, 7)
        self.assertEqual(plus.branch, Branch.PLUS_ONE_SHAPE)
        self.assertEqual((plus.decomposition.alpha, plus.decomposition.beta), (1, 14))
        self.assertTrue(plus.forced['alpha_sq_is_1'])
        self.assertTrue(plus.forced['p_divides_beta'])
        self.assertEqual(first_case_constraint(13, 7).branch, Branch.MINUS_ONE_CONTRADICTION)
        self.assertEqual(first_case_constraint(5, 19).branch, Branch.EXCLUDED)
        self.assertEqual(first_case_constraint(29, 7).branch, Branch.SHAPE_VIOLATED)

    def test_domain(self):
        """Test p ≡ 1 (mod 4) and q ≢ 1 (mod 4)"""
        with self.assertRaises(DomainError):
            first_case_constraint(197, 13)
        with self.assertRaises(DomainError):
            first_case_constraint(7, 19)
        with self.assertRaises(DomainError):
            first_case_constraint(25, 19)
        with self.assertRaises(DomainError):
            first_case_constraint(5, 2)

    def test_swapped_shape(self):
        """Test the forced flags follow (beta, alpha) when that order has the shape"""
        analysis = first_case_constraint(113, 7)
        self.assertEqual((analysis.decomposition.alpha, analysis.decomposition.beta), (7, 8))
        self.assertEqual(analysis.branch, Branch.PLUS_ONE_SHAPE)
        self.assertEqual(analysis.forced, {'alpha_sq_is_1': True, 'p_divides_beta': True, 'swapped': True})
        self.assertFalse(first_case_constraint(197, 7).forced['swapped'])

    def test_forced_agrees_with_branch(self):
        """Test both flags hold exactly on the plus-one shape, for every q ≡ 1 (mod p) below 10^4"""
        for p in (7, 11, 19):
            for q in primes_up_to(10**4):
                if q % 4 != 1 or q % p != 1:
                    continue
                analysis = first_case_constraint(q, p)
                both = analysis.forced['alpha_sq_is_1'] and analysis.forced['p_divides_beta']
                self.assertEqual(both, analysis.branch == Branch.PLUS_ONE_SHAPE, (q, p))

    def test_totality(self):
        """Test every prime q ≡ 1 (mod 4) below 10^5 lands in the expected branch"""
        primes = [q for q in primes_up_to(10**5) if q % 4 == 1]
        for p in (19, 23, 31):
            for q in primes:
                self.assertEqual(first_case_constraint(q, p).branch, expected_branch(q, p), (q, p))

    def test_analyze_q(self):
        """Test the branch comes with the level-raising residue"""
        analysis, rhs = analyze_q(29, 7)
        self.assertEqual(analysis.branch, Branch.SHAPE_VIOLATED)
        self.assertEqual(rhs, 4)


class ProductFormulaTest(SimpleTestCase):
    """Test p | RS for every C^p = R^2 + S^2 when every prime of C has the forced shape"""

    def test_single_prime(self):
        """Test C = 197, p = 7"""
        self.assertTrue(product_formula_conclusion([decompose_prime(197)], 7))
        self.assertEqual(len(power_representations([decompose_prime(197)], 7)), 4)

    def test_two_primes(self):
        """Test C = 197 * 421, p = 7"""
        shapes = [decompose_prime(197), decompose_prime(421)]
        self.assertTrue(product_formula_conclusion(shapes, 7))
        self.assertEqual(len(power_representations(shapes, 7)), 32)

    def test_repeated_prime(self):
        """Test C = 197^2 counts the prime twice"""
        reps = power_representations([decompose_prime(197)] * 2, 7)
        self.assertTrue(all(rep.n == 197**14 for rep in reps))
        self.assertTrue(product_formula_conclusion([decompose_prime(197)] * 2, 7))

    def test_exemplars(self):
        """Test the exemplar prime for several p ≡ 3 (mod 4)"""
        for p in (19, 23, 31, 43):
            rep = plus_one_exemplar(p)
            self.assertTrue(is_prime(rep.n))
            self.assertEqual(first_case_constraint(rep.n, p).branch, Branch.PLUS_ONE_SHAPE)
            self.assertTrue(product_formula_conclusion([rep], p))

    def test_shape_required(self):
        """Test a prime without the shape is refused"""
        with self.assertRaises(DomainError):
            product_formula_conclusion([decompose_prime(29)], 7)
        with self.assertRaises(DomainError):
            power_representations([TwoSquaresRep(0, 3, 9)], 7)

    def test_plus_one_exemplar(self):
        """Test the smallest exemplar for p = 7"""
        rep = plus_one_exemplar(7)
        self.assertEqual((rep.alpha, rep.beta, rep.n), (1, 14, 197))
        with self.assertRaises(DomainError):
            plus_one_exemplar(2)

    def test_frey_form_level(self):
        """Test 32 * rad(C)"""
        self.assertEqual(frey_form_level(1), 32)
        self.assertEqual(frey_form_level(17), 32 * 17)
        self.assertEqual(frey_form_level(17**2 * 41), 32 * 17 * 41)


class Theorem1Test(SimpleTestCase):
    """Test the no-solutions verdict"""

    def test_examples(self):
        """Test one prime per residue class mod 8 and the small primes"""
        self.assertEqual(theorem1_verdict(17).verdict, Verdict.ELIMINATED)
        self.assertEqual(theorem1_verdict(19).verdict, Verdict.ELIMINATED)
        self.assertEqual(theorem1_verdict(29).verdict, Verdict.ELIMINATED)
        self.assertEqual(theorem1_verdict(23).verdict, Verdict.NOT_COVERED)
        self.assertEqual(theorem1_verdict(13).verdict, Verdict.NOT_COVERED)
        self.assertEqual(theorem1_verdict(5).verdict, Verdict.NOT_COVERED)

    def test_split_case_steps(self):
        """Test p ≡ 1 (mod 4) ends with the split Cartan axiom"""
        report = theorem1_verdict(17)
        self.assertEqual(report.target, Target.THEOREM1)
        self.assertEqual(report.steps[-1].label, Axiom.SPLIT_CARTAN_IMPOSSIBLE.value)
        self.assertEqual(report.steps[0].label, Axiom.MODULARITY.value)

    def test_non_split_case_steps(self):
        """Test p ≡ 3 (mod 8) passes through both eliminations"""
        labels = [step.label for step in theorem1_verdict(19).steps]
        for label in ('a3_table', 'eliminate_f3_f4', 'eliminate_f5_f6', 'candidates_congruent'):
            self.assertIn(label, labels)
        self.assertEqual(labels.count('cartan_type'), 2)

    def test_sweep(self):
        """Test every prime 13 < p <= 1009: eliminated unless p ≡ 7 (mod 8)"""
        for report in theorem1_range(14, 1009):
            expected = Verdict.NOT_COVERED if report.p % 8 == 7 else Verdict.ELIMINATED
            self.assertEqual(report.verdict, expected, report.p)
            self.assertTrue(all(step.succeeded for step in report.computed_steps()))

    def test_range(self):
        """Test the range covers primes only"""
        self.assertEqual([report.p for report in theorem1_range(10, 30)], [11, 13, 17, 19, 23, 29])
        self.assertEqual(theorem1_range(0, 1), [])

    def test_not_prime(self):
        """Test composite p"""
        with self.assertRaises(DomainError):
            theorem1_verdict(21)


class Theorem2Test(SimpleTestCase):
    """Test the First Case verdict"""

    def test_examples(self):
        """Test the classical, excluded and proved cases"""
        self.assertEqual(theorem2_verdict(7).verdict, Verdict.NOT_COVERED)
        for p in (3, 5, 11, 13):
            report = theorem2_verdict(p)
            self.assertEqual(report.verdict, Verdict.EXTERNAL_CLASSICAL)
            self.assertEqual(report.steps[0].label, Axiom.CLASSICAL_SMALL_PRIMES.value)
        for p in (17, 19, 23, 31, 47, 103):
            self.assertEqual(theorem2_verdict(p).verdict, Verdict.FIRST_CASE_PROVED, p)

    def test_chain(self):
        """Test p ≡ 7 (mod 8) is proved through the level-raising chain"""
        labels = [step.label for step in theorem2_verdict(23).steps]
        for label in ('level_raising_dichotomy', 'legendre', 'first_case_constraint', 'product_formula_conclusion'):
            self.assertIn(label, labels)
        self.assertIn(Axiom.CUSP_FIELD_OF_DEFINITION.value, labels)

    def test_steps_succeed(self):
        """Test every computed step of a proved verdict succeeded"""
        for p in primes_up_to(200):
            report = theorem2_verdict(p)
            if report.verdict == Verdict.FIRST_CASE_PROVED:
                self.assertTrue(all(step.succeeded for step in report.computed_steps()), p)


class PropositionTest(SimpleTestCase):
    """Test f5 and f6 are never congruent to a Frey Q-curve"""

    def test_odd_primes(self):
        """Test elimination for odd p"""
        for p in (3, 5, 7, 11, 13, 101):
            report = proposition_verdict(p)
            self.assertEqual(report.verdict, Verdict.ELIMINATED)
            self.assertEqual(report.target, Target.PROPOSITION)

    def test_two(self):
        """Test p = 2 divides every norm"""
        report = proposition_verdict(2)
        self.assertEqual(report.verdict, Verdict.NOT_COVERED)
        self.assertTrue(report.note)


class FirstCaseCandidateTest(SimpleTestCase):
    """Test the analysis of a given C"""

    def test_shared_factor_with_six(self):
        """Test 3 | C refutes"""
        report = first_case_candidate(21, 19)
        self.assertEqual(report.verdict, Verdict.REFUTED)
        self.assertEqual(report.steps[-1].outputs, {'gcd': 3})

    def test_prime_three_mod_four(self):
        """Test 7 | C refutes"""
        report = first_case_candidate(35, 19)
        self.assertEqual(report.verdict, Verdict.REFUTED)
        self.assertIn('7', report.note)

    def test_excluded_prime(self):
        """Test q = 5 fails q^2 ≡ 1 (mod 19)"""
        report = first_case_candidate(5, 19)
        self.assertEqual(report.verdict, Verdict.REFUTED)
        self.assertIn(Branch.EXCLUDED.value, report.note)

    def test_forces_second_case(self):
        """Test a C built from primes of the forced shape"""
        q = plus_one_exemplar(19).n
        for C in (q, q * q):
            report = first_case_candidate(C, 19)
            self.assertEqual(report.verdict, Verdict.FORCES_SECOND_CASE)
            self.assertEqual(report.steps[1].outputs, {'level': 32 * q})
            self.assertTrue(report.steps[-1].outputs['holds'])

    def test_domain(self):
        """Test p must be ≡ 3 (mod 4) and > 13, and C > 1"""
        for C, p in ((197, 7), (197, 17), (1, 19), (197, 21)):
            with self.assertRaises(DomainError):
                first_case_candidate(C, p)


class ComputedStepTest(SimpleTestCase):
    """Test computed steps whose inputs share names with the step fields"""

    def test_label_input(self):
        """Test a label input reaches the operation and the step keeps the operation name"""
        step = computed('table_eigenvalue', label='f5', q=3)
        self.assertEqual(step.label, 'table_eigenvalue')
        self.assertEqual(step.inputs, {'label': 'f5', 'q': 3})
        self.assertEqual(step.outputs, {'a_q': '-2'})
        self.assertTrue(replay_step(step))

    def test_quote_is_not_an_input(self):
        """Test quote and expect stay out of the recorded inputs"""
        step = computed('legendre', a=-1, p=7, quote='-1 is not a square mod 7', expect=lambda out: out['symbol'] == -1)
        self.assertEqual(step.inputs, {'a': -1, 'p': 7})
        self.assertEqual(step.quote, '-1 is not a square mod 7')
        self.assertTrue(step.succeeded)

    def test_theorem1_non_split(self):
        """Test p = 19 builds the table-eigenvalue steps for f1, f3 and f4"""
        report = theorem1_verdict(19)
        self.assertEqual(report.verdict, Verdict.ELIMINATED)
        labels = [step.inputs['label'] for step in report.steps if step.label == 'table_eigenvalue']
        self.assertEqual(labels, ['f1', 'f3', 'f4'])
        for step in report.computed_steps():
            self.assertTrue(replay_step(step), step.label)

    def test_proposition(self):
        """Test p = 17 builds the table-eigenvalue steps for f5 and f6"""
        report = proposition_verdict(17)
        self.assertEqual(report.verdict, Verdict.ELIMINATED)
        values = {step.inputs['label']: step.outputs['a_q'] for step in report.steps if step.label == 'table_eigenvalue'}
        self.assertEqual(values, {'f5': '-2', 'f6': '2'})


class AxiomTextTest(SimpleTestCase):
    """Test axiom steps carry the statements they stand for"""

    def test_statements(self):
        """Test each axiom quotes its statement"""
        phrases = {
            Axiom.MODULARITY: 'that they are modular',
            Axiom.IRREDUCIBILITY_ABOVE_13: 'if ℓ > 13 the residual representation',
            Axiom.LEVEL_LOWERING: 'giving 32 for the case of E_{A,B}',
            Axiom.SPLIT_CARTAN_IMPOSSIBLE: 'the case of a split Cartan subgroup is impossible',
            Axiom.CUSP_FIELD_OF_DEFINITION: 'that q^2 ≡ 1 (mod p)',
            Axiom.LEVEL_RAISING: 'a_q^2 ≡ q(q+1)^2 (mod P)',
            Axiom.PRIMES_OF_C: 'all primes dividing C are of the form 4k+1',
            Axiom.CLASSICAL_SMALL_PRIMES: 'was already solved à la Kummer',
        }
        self.assertEqual(set(phrases), set(Axiom))
        for name, phrase in phrases.items():
            step = axiom(name)
            self.assertIn(phrase, step.quote)
            self.assertEqual(str(step), f"[axiom] {name.value}: {name.label}")


class ReplayTest(SimpleTestCase):
    """Test computed steps are reproducible"""

    def reports(self):
        return [
            theorem1_verdict(17),
            theorem1_verdict(19),
            theorem2_verdict(23),
            proposition_verdict(5),
            first_case_candidate(plus_one_exemplar(19).n, 19),
            first_case_candidate(21, 19),
        ]

    def test_every_step_replays(self):
        """Test replay_step reproduces every computed step"""
        for report in self.reports():
            for step in report.computed_steps():
                self.assertIn(step.label, STEP_OPERATIONS)
                self.assertTrue(replay_step(step), (report.p, step.label))

    def test_tampered_output(self):
        """Test a changed output does not replay"""
        step = computed('legendre', a=-1, p=19)
        self.assertFalse(replay_step(dataclasses.replace(step, outputs={'symbol': 1})))

    def test_axiom_not_replayable(self):
        """Test axioms cannot be replayed"""
        with self.assertRaises(DomainError):
            replay_step(axiom(Axiom.MODULARITY))

    def test_unknown_operation(self):
        """Test unregistered labels"""
        step = Step(kind=StepKind.COMPUTED, label='no_such_operation')
        with self.assertRaises(DomainError):
            replay_step(step)

    def test_failed_expectation_logged(self):
        """Test a step whose check fails is marked and logged"""
        with self.assertLogs('fermat.obstruction', level='WARNING'):
            step = computed('legendre', a=-1, p=5, expect=lambda out: out['symbol'] == -1)
        self.assertFalse(step.succeeded)


class VerdictReportTest(SimpleTestCase):
    """Test the report invariants"""

    def failed_step(self):
        return Step(kind=StepKind.COMPUTED, label='legendre', inputs={'a': -1, 'p': 5}, outputs={'symbol': 1}, succeeded=False)

    def test_positive_verdict_needs_succeeded_steps(self):
        """Test a positive verdict with a failed step is a verification error"""
        with self.assertRaises(VerificationError):
            VerdictReport(p=19, target=Target.THEOREM1, verdict=Verdict.ELIMINATED, steps=(self.failed_step(),))

    def test_negative_verdict_allows_failed_steps(self):
        """Test NotCovered may carry a failed step"""
        report = VerdictReport(p=19, target=Target.THEOREM1, verdict=Verdict.NOT_COVERED, steps=(self.failed_step(),))
        self.assertEqual(len(report.computed_steps()), 1)

    def test_str(self):
        """Test the one-line summary"""
        self.assertEqual(str(theorem1_verdict(17)), 'Theorem1 at p = 17: Eliminated')
        self.assertIn('FAILED', str(self.failed_step()))
        self.assertIn('[axiom]', str(axiom(Axiom.LEVEL_LOWERING)))
