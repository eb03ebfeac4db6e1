"""
The proof engine.

Each verdict is an ordered list of steps. Computed steps are re-runnable
operations of this package, recorded with JSON-native inputs and outputs so
that ``replay_step`` can reproduce them. Axiom steps name the external facts
the argument rests on; nothing outside them is assumed.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import count, product
from math import gcd

from django.db import models

from fermat.arith import (
    Rt2Int,
    congruent_above_p,
    factorize,
    is_prime,
    legendre,
    radical,
    require_odd_prime,
    rt2_norm,
)
from fermat.exceptions import DomainError, VerificationError
from fermat.frey import CONDUCTOR_AB, a3_table, weil_candidates
from fermat.newforms import CMField, eigenvalue
from fermat.two_squares import TwoSquaresRep, decompose_prime, representations_of_product

logger = logging.getLogger(__name__)


class CartanType(models.TextChoices):
    SPLIT = 'Split', 'Split Cartan'
    NON_SPLIT = 'NonSplit', 'Non-split Cartan'
    RAMIFIED = 'Ramified', 'Ramified'


class Target(models.TextChoices):
    THEOREM1 = 'Theorem1', 'No solutions for p > 13, p ≢ -1 (mod 8)'
    THEOREM2 = 'Theorem2', 'No First Case solutions for p != 7'
    PROPOSITION = 'Proposition', 'f5 and f6 cannot be congruent to a Frey Q-curve'
    FIRST_CASE_CANDIDATE = 'FirstCaseCandidate', 'Analysis of a candidate C'


class Verdict(models.TextChoices):
    ELIMINATED = 'Eliminated', 'Eliminated'
    FIRST_CASE_PROVED = 'FirstCaseProved', 'First Case proved'
    NOT_COVERED = 'NotCovered', 'Not covered'
    EXTERNAL_CLASSICAL = 'ExternalClassical', 'Settled classically'
    REFUTED = 'Refuted', 'Candidate refuted'
    FORCES_SECOND_CASE = 'ForcesSecondCase', 'Candidate forces p | AB'


POSITIVE_VERDICTS = frozenset({
    Verdict.ELIMINATED, Verdict.FIRST_CASE_PROVED, Verdict.REFUTED, Verdict.FORCES_SECOND_CASE,
})


class StepKind(models.TextChoices):
    COMPUTED = 'computed', 'Computed'
    AXIOM = 'axiom', 'Axiom'


class Axiom(models.TextChoices):
    MODULARITY = (
        'Modularity',
        'Both have good reduction at primes not dividing 2C, and because 3 ∤ C this already '
        'implies (cf. [ES]) that they are modular.',
    )
    IRREDUCIBILITY_ABOVE_13 = (
        'IrreducibilityAbove13',
        'if ℓ > 13 the residual representation ρ̄_{E,λ} is irreducible.',
    )
    LEVEL_LOWERING = (
        'LevelLowering',
        'The exact value of this conductor was computed in [E], giving 32 for the case of '
        'E_{A,B} (recall A is even) and 256 for E_{B,A}.',
    )
    SPLIT_CARTAN_IMPOSSIBLE = (
        'SplitCartanImpossible',
        'it is proved in [E] that the case of a split Cartan subgroup is impossible, the case '
        'of a non-split Cartan subgroup remaining the only case to be considered.',
    )
    CUSP_FIELD_OF_DEFINITION = (
        'CuspFieldOfDefinition',
        'the residue field Z[i]/q̌ must contain ζ_p + ζ_p^{-1} for q̌ | q, and this implies '
        '(because q splits in Q(i)) that q^2 ≡ 1 (mod p)',
    )
    LEVEL_RAISING = (
        'LevelRaising',
        "Ribet's level raising result gives a constraint for such congruence primes (see [G]): "
        'a_q^2 ≡ q(q+1)^2 (mod P)',
    )
    PRIMES_OF_C = (
        'PrimesOfC',
        'from the equation A^4+B^4=C^p and (A,B)=1 it is a very old result that all primes '
        'dividing C are of the form 4k+1. It is an elementary exercise to see that (6,C)=1.',
    )
    CLASSICAL_SMALL_PRIMES = (
        'ClassicalSmallPrimes',
        'The First Case for the remaining small primes different from 7 (and more generally for '
        'p ≢ ±1 (mod 8)) was already solved à la Kummer (see [P] and [C]).',
    )


class Branch(models.TextChoices):
    EXCLUDED = 'ExcludedByQSquared', 'q^2 ≢ 1 (mod p)'
    MINUS_ONE_CONTRADICTION = 'MinusOneBranchContradiction', 'q ≡ -1 (mod p) forces beta^2 ≡ -1'
    PLUS_ONE_SHAPE = 'PlusOneBranchShape', 'alpha^2 ≡ 1 (mod p) and p | beta'
    SHAPE_VIOLATED = 'ShapeViolated', 'q ≡ 1 (mod p) without the forced shape'


@dataclass(frozen=True)
class Step:
    kind: StepKind
    label: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    quote: str = ''
    succeeded: bool = True

    def __str__(self):
        if self.kind == StepKind.AXIOM:
            return f"[axiom] {self.label}: {self.quote}"
        status = 'ok' if self.succeeded else 'FAILED'
        args = ', '.join(f"{k}={v}" for k, v in self.inputs.items())
        return f"[{status}] {self.label}({args}) -> {self.outputs}"


@dataclass(frozen=True)
class VerdictReport:
    p: int
    target: Target
    verdict: Verdict
    steps: tuple = ()
    note: str = ''

    def __post_init__(self):
        if self.verdict in POSITIVE_VERDICTS:
            failed = [step.label for step in self.steps if step.kind == StepKind.COMPUTED and not step.succeeded]
            if failed:
                raise VerificationError(f"{self.verdict} for p = {self.p} with failed steps {failed}")

    def computed_steps(self):
        return [step for step in self.steps if step.kind == StepKind.COMPUTED]

    def __str__(self):
        return f"{Target(self.target).value} at p = {self.p}: {Verdict(self.verdict).value}"


@dataclass(frozen=True)
class QAnalysis:
    q: int
    p: int
    branch: Branch
    decomposition: TwoSquaresRep
    forced: dict = field(default_factory=dict, hash=False)


def _cm_field(value):
    try:
        return CMField(value)
    except ValueError:
        raise DomainError(f"unknown CM field {value!r}") from None


def cartan_type(cm_field, p):
    """Split or non-split according to whether p splits in the CM field."""
    cm_field = _cm_field(cm_field)
    if p == 2:
        return CartanType.RAMIFIED
    require_odd_prime(p)
    symbol = legendre(cm_field.discriminant, p)
    return CartanType.NON_SPLIT if symbol == -1 else CartanType.SPLIT


def _congruent(x, y, p):
    # 2 ramifies as (sqrt 2)^2, so the norm test is valid at p = 2 as well.
    if p == 2:
        return rt2_norm(Rt2Int.coerce(x) - Rt2Int.coerce(y)) % 2 == 0
    return congruent_above_p(x, y, p)


def _require_prime(p):
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p}")


def f5_f6_norms():
    """Norms of a - t over a in weil_candidates(3) and t = ±2."""
    return sorted({rt2_norm(a - t) for a, t in product(weil_candidates(3), (2, -2))})


def eliminate_f5_f6(p):
    """No a_3 allowed for the Q-curve is congruent to a_3(f5), a_3(f6) = ∓2 above p."""
    _require_prime(p)
    return not any(_congruent(a, t, p) for a, t in product(weil_candidates(3), (2, -2)))


def eliminate_f3_f4(p):
    """a'_3 = ±2*sqrt(2) cannot be ≡ a_3(f3) = a_3(f4) = 0 above p."""
    _require_prime(p)
    return not _congruent(Rt2Int(0, 2), 0, p)


def level_raising_rhs(q, p):
    """q(q+1)^2 mod p."""
    _require_prime(q)
    _require_prime(p)
    if q == p:
        raise DomainError("level raising needs q != p")
    return q * (q + 1) ** 2 % p


def _shape_orientation(rep, p):
    """(unit, multiple, swapped): alpha and beta in whichever order gives the shape."""
    a, b = rep.alpha, rep.beta
    if not (a * a % p == 1 and b % p == 0) and (b * b % p == 1 and a % p == 0):
        return b, a, True
    return a, b, False


def _has_plus_one_shape(rep, p):
    unit, multiple, _ = _shape_orientation(rep, p)
    return unit * unit % p == 1 and multiple % p == 0


def first_case_constraint(q, p):
    """
    Which branch a prime q | C lands in, for p ≡ 3 (mod 4).

    q^2 ≡ 1 (mod p) is required; q ≡ -1 is impossible since -1 is not a square
    mod p; q ≡ 1 forces alpha^2 ≡ 1 and p | beta, which is checked against the
    actual decomposition of q. The roles of alpha and beta may be exchanged;
    ``forced`` reports the order that fits, with ``swapped`` set when it is
    (beta, alpha).
    """
    require_odd_prime(p)
    if p % 4 != 3:
        raise DomainError(f"first_case_constraint needs p ≡ 3 (mod 4), got {p}")
    if not is_prime(q) or q % 4 != 1:
        raise DomainError(f"q must be a prime ≡ 1 (mod 4), got {q}")

    rep = decompose_prime(q)
    unit, multiple, swapped = _shape_orientation(rep, p)
    forced = {
        'alpha_sq_is_1': unit * unit % p == 1,
        'p_divides_beta': multiple % p == 0,
        'swapped': swapped,
    }
    if (q * q - 1) % p:
        branch = Branch.EXCLUDED
    elif q % p == p - 1:
        if legendre(-1, p) != -1:
            raise VerificationError(f"-1 is a square mod {p}")
        branch = Branch.MINUS_ONE_CONTRADICTION
    elif _has_plus_one_shape(rep, p):
        branch = Branch.PLUS_ONE_SHAPE
    else:
        branch = Branch.SHAPE_VIOLATED
    logger.debug("q = %d, p = %d: %s via %s", q, p, branch, rep)
    return QAnalysis(q=q, p=p, branch=branch, decomposition=rep, forced=forced)


def power_representations(q_shapes, p):
    """Every canonical representation of C^p, C the product of the listed primes."""
    by_prime = {}
    multiplicity = Counter()
    for rep in q_shapes:
        if not is_prime(rep.n) or rep.n % 4 != 1:
            raise DomainError(f"{rep} is not the decomposition of a prime ≡ 1 (mod 4)")
        by_prime[rep.n] = rep
        multiplicity[rep.n] += 1
    split = [(by_prime[q].as_gaussian(), multiplicity[q] * p) for q in sorted(by_prime)]
    return representations_of_product(split)


def product_formula_conclusion(q_shapes, p):
    """
    True iff p | RS for every way of writing C^p = R^2 + S^2, where every
    listed prime has the shape alpha^2 ≡ 1 (mod p), p | beta.
    """
    require_odd_prime(p)
    for rep in q_shapes:
        if not _has_plus_one_shape(rep, p):
            raise DomainError(f"{rep} does not have the shape alpha^2 ≡ 1, p | beta for p = {p}")
    reps = power_representations(q_shapes, p)
    logger.debug("C^%d has %d canonical representations", p, len(reps))
    return all(rep.alpha * rep.beta % p == 0 for rep in reps)


def frey_form_level(C):
    """Level 32 * rad(C) of the newform attached to E_{A,B}."""
    return CONDUCTOR_AB * radical(C)


def plus_one_exemplar(p):
    """The first prime q = alpha^2 + beta^2 with alpha ≡ ±1 (mod p), 2p | beta."""
    require_odd_prime(p)
    for beta in count(2 * p, 2 * p):
        for alpha in range(1, beta, 2):
            if alpha % p in (1, p - 1) and is_prime(alpha * alpha + beta * beta):
                return decompose_prime(alpha * alpha + beta * beta)


# Operations a computed step may name, with JSON-native outputs.

def _op_cartan_type(cm_field, p):
    return {'cartan': cartan_type(cm_field, p).value}


def _op_weil_candidates(q):
    return {'candidates': [str(a) for a in weil_candidates(q)]}


def _op_candidates_congruent(q, p, target):
    target = Rt2Int.parse(target)
    return {'candidates': [str(a) for a in weil_candidates(q) if _congruent(a, target, p)]}


def _op_table_eigenvalue(label, q):
    return {'a_q': str(eigenvalue(label, q))}


def _op_a3_table():
    rows = a3_table()
    return {
        'vanishing_classes': [list(row.residues) for row in rows if row.ab.value == Rt2Int(0)],
        'ba_magnitudes': [str(row.ba.magnitude()) for row in rows if row.ab.value == Rt2Int(0)],
    }


def _op_eliminate_f3_f4(p):
    return {'eliminated': eliminate_f3_f4(p)}


def _op_eliminate_f5_f6(p):
    return {'eliminated': eliminate_f5_f6(p)}


def _op_f5_f6_norms():
    return {'norms': f5_f6_norms()}


def _op_legendre(a, p):
    return {'symbol': legendre(a, p)}


def _op_level_raising_dichotomy(p):
    # q ≡ 1 and q ≡ -1 substituted into q(q+1)^2.
    def rhs(residue):
        return residue * (residue + 1) ** 2 % p
    return {'q_plus_one': rhs(1), 'q_minus_one': rhs(p - 1)}


def _op_level_raising_rhs(q, p):
    return {'rhs': level_raising_rhs(q, p)}


def _op_first_case_constraint(q, p):
    analysis = first_case_constraint(q, p)
    rep = analysis.decomposition
    return {'branch': analysis.branch.value, 'alpha': rep.alpha, 'beta': rep.beta}


def _op_plus_one_exemplar(p):
    rep = plus_one_exemplar(p)
    return {'q': rep.n, 'alpha': rep.alpha, 'beta': rep.beta}


def _op_product_formula_conclusion(primes, p):
    shapes = [decompose_prime(q) for q in primes]
    return {
        'holds': product_formula_conclusion(shapes, p),
        'representations': len(power_representations(shapes, p)),
    }


def _op_factorize(n):
    return {'factors': [[q, e] for q, e in factorize(n)]}


def _op_frey_form_level(C):
    return {'level': frey_form_level(C)}


def _op_gcd_with_six(C):
    return {'gcd': gcd(6, C)}


STEP_OPERATIONS = {
    'cartan_type': _op_cartan_type,
    'weil_candidates': _op_weil_candidates,
    'candidates_congruent': _op_candidates_congruent,
    'table_eigenvalue': _op_table_eigenvalue,
    'a3_table': _op_a3_table,
    'eliminate_f3_f4': _op_eliminate_f3_f4,
    'eliminate_f5_f6': _op_eliminate_f5_f6,
    'f5_f6_norms': _op_f5_f6_norms,
    'legendre': _op_legendre,
    'level_raising_dichotomy': _op_level_raising_dichotomy,
    'level_raising_rhs': _op_level_raising_rhs,
    'first_case_constraint': _op_first_case_constraint,
    'plus_one_exemplar': _op_plus_one_exemplar,
    'product_formula_conclusion': _op_product_formula_conclusion,
    'factorize': _op_factorize,
    'frey_form_level': _op_frey_form_level,
    'gcd_with_six': _op_gcd_with_six,
}


def computed(operation, /, quote='', expect=None, **inputs):
    """Run a registered operation and record it; expect(outputs) decides success.

    ``operation`` is positional-only so that inputs such as ``label`` reach the
    operation itself.
    """
    outputs = STEP_OPERATIONS[operation](**inputs)
    succeeded = True if expect is None else bool(expect(outputs))
    if not succeeded:
        logger.warning("step %s(%s) gave %s", operation, inputs, outputs)
    return Step(
        kind=StepKind.COMPUTED, label=operation, inputs=inputs, outputs=outputs, quote=quote, succeeded=succeeded,
    )


def axiom(name):
    name = Axiom(name)
    return Step(kind=StepKind.AXIOM, label=name.value, quote=name.label)


def replay_step(step):
    """Re-run a computed step; True iff the outputs match exactly."""
    if step.kind != StepKind.COMPUTED:
        raise DomainError(f"axiom {step.label} cannot be replayed")
    try:
        operation = STEP_OPERATIONS[step.label]
    except KeyError:
        raise DomainError(f"no operation is registered for {step.label!r}") from None
    return operation(**step.inputs) == step.outputs


def _galois_steps():
    return [axiom(Axiom.MODULARITY), axiom(Axiom.IRREDUCIBILITY_ABOVE_13), axiom(Axiom.LEVEL_LOWERING)]


def _expect(key, value):
    return lambda outputs: outputs[key] == value


def theorem1_verdict(p):
    _require_prime(p)
    target = Target.THEOREM1
    if p <= 13:
        return VerdictReport(p=p, target=target, verdict=Verdict.NOT_COVERED, note='p > 13 required')
    if p % 8 == 7:
        return VerdictReport(
            p=p, target=target, verdict=Verdict.NOT_COVERED, note='theorem excludes p ≡ -1 (mod 8)',
        )

    steps = _galois_steps()
    if p % 4 == 1:
        steps += [
            computed(
                'cartan_type', cm_field=CMField.GAUSSIAN.value, p=p,
                quote='f1 has CM by Q(i); p splits there', expect=_expect('cartan', CartanType.SPLIT.value),
            ),
            axiom(Axiom.SPLIT_CARTAN_IMPOSSIBLE),
        ]
        return VerdictReport(p=p, target=target, verdict=Verdict.ELIMINATED, steps=tuple(steps))

    steps += [
        computed(
            'cartan_type', cm_field=CMField.GAUSSIAN.value, p=p,
            quote='p inert in Q(i): the non-split case remains', expect=_expect('cartan', CartanType.NON_SPLIT.value),
        ),
        axiom(Axiom.PRIMES_OF_C),
        computed('table_eigenvalue', label='f1', q=3, quote='a_3(f1) = 0', expect=_expect('a_q', '0')),
        computed('weil_candidates', q=3, quote='a_3 = z*sqrt(2) with |a_3| <= 2 sqrt(3)'),
        computed(
            'candidates_congruent', q=3, p=p, target='0',
            quote='a_3 ≡ 0 (mod P) leaves only a_3 = 0', expect=_expect('candidates', ['0']),
        ),
        computed(
            'a3_table', quote='a_3 = 0 iff A ≡ 0, B ≢ 0 (mod 3), where a\'_3 = ±2*sqrt(2)',
            expect=lambda out: out['vanishing_classes'] == [[0, 1], [0, 2]]
            and out['ba_magnitudes'] == ['2*rt2', '2*rt2'],
        ),
        computed('table_eigenvalue', label='f3', q=3, quote='a_3(f3) = 0', expect=_expect('a_q', '0')),
        computed('table_eigenvalue', label='f4', q=3, quote='a_3(f4) = 0', expect=_expect('a_q', '0')),
        computed(
            'eliminate_f3_f4', p=p, quote='±2*sqrt(2) ≢ 0 above p rules out f3 and f4',
            expect=_expect('eliminated', True),
        ),
        computed(
            'eliminate_f5_f6', p=p, quote='no allowed a_3 is ≡ ∓2 above p, ruling out f5 and f6',
            expect=_expect('eliminated', True),
        ),
        computed(
            'cartan_type', cm_field=CMField.SQRT_MINUS_2.value, p=p,
            quote='f2 has CM by Q(sqrt(-2)); p ≡ 3 (mod 8) splits there',
            expect=_expect('cartan', CartanType.SPLIT.value),
        ),
        axiom(Axiom.SPLIT_CARTAN_IMPOSSIBLE),
    ]
    return VerdictReport(p=p, target=target, verdict=Verdict.ELIMINATED, steps=tuple(steps))


def theorem1_range(lo, hi):
    """Theorem 1 reports for every prime in [lo, hi]."""
    reports = [theorem1_verdict(p) for p in range(max(lo, 2), hi + 1) if is_prime(p)]
    logger.info(
        "theorem 1 over [%d, %d]: %d of %d primes eliminated",
        lo, hi, sum(r.verdict == Verdict.ELIMINATED for r in reports), len(reports),
    )
    return reports


def _first_case_chain(p):
    exemplar = plus_one_exemplar(p)
    return [
        axiom(Axiom.PRIMES_OF_C),
        axiom(Axiom.CUSP_FIELD_OF_DEFINITION),
        axiom(Axiom.LEVEL_RAISING),
        computed(
            'level_raising_dichotomy', p=p, quote='q ≡ ±1 (mod p) gives a_q^2 ≡ 4, 0',
            expect=lambda out: out == {'q_plus_one': 4 % p, 'q_minus_one': 0},
        ),
        computed(
            'legendre', a=-1, p=p, quote='q ≡ -1 would need beta^2 ≡ -1 (mod p)',
            expect=_expect('symbol', -1),
        ),
        computed('plus_one_exemplar', p=p, quote='a prime of the forced shape'),
        computed(
            'first_case_constraint', q=exemplar.n, p=p, quote='alpha^2 ≡ 1 (mod p) and p | beta',
            expect=_expect('branch', Branch.PLUS_ONE_SHAPE.value),
        ),
        computed(
            'product_formula_conclusion', primes=[exemplar.n], p=p,
            quote='every C^p = R^2 + S^2 has p | RS, hence p | AB', expect=_expect('holds', True),
        ),
    ]


def theorem2_verdict(p):
    _require_prime(p)
    target = Target.THEOREM2
    if p == 7:
        return VerdictReport(p=p, target=target, verdict=Verdict.NOT_COVERED, note='p = 7 is excluded')
    if p <= 13:
        return VerdictReport(
            p=p, target=target, verdict=Verdict.EXTERNAL_CLASSICAL,
            steps=(axiom(Axiom.CLASSICAL_SMALL_PRIMES),), note=f'p ≡ {p % 8} (mod 8)',
        )
    if p % 4 == 1:
        full = theorem1_verdict(p)
        return VerdictReport(
            p=p, target=target, verdict=Verdict.FIRST_CASE_PROVED, steps=full.steps,
            note='no solutions at all for p ≡ 1 (mod 4)',
        )

    steps = _galois_steps() + [
        computed(
            'cartan_type', cm_field=CMField.GAUSSIAN.value, p=p,
            quote='p inert in Q(i): the non-split case', expect=_expect('cartan', CartanType.NON_SPLIT.value),
        ),
    ] + _first_case_chain(p)
    return VerdictReport(p=p, target=target, verdict=Verdict.FIRST_CASE_PROVED, steps=tuple(steps))


def proposition_verdict(p):
    _require_prime(p)
    steps = [
        computed('weil_candidates', q=3, quote='a_3 ∈ {0, ±sqrt(2), ±2*sqrt(2)}'),
        computed('table_eigenvalue', label='f5', q=3, quote='a_3(f5) = -2', expect=_expect('a_q', '-2')),
        computed('table_eigenvalue', label='f6', q=3, quote='a_3(f6) = 2', expect=_expect('a_q', '2')),
        computed('f5_f6_norms', quote='norms of a ∓ 2', expect=_expect('norms', [-4, 2, 4])),
        computed('eliminate_f5_f6', p=p, quote='p divides none of the norms'),
    ]
    if steps[-1].outputs['eliminated']:
        return VerdictReport(p=p, target=Target.PROPOSITION, verdict=Verdict.ELIMINATED, steps=tuple(steps))
    return VerdictReport(
        p=p, target=Target.PROPOSITION, verdict=Verdict.NOT_COVERED, steps=tuple(steps),
        note=f'{p} divides a norm of a ∓ 2',
    )


def first_case_candidate(C, p):
    """
    Whether C can be the C of a First Case solution for p ≡ 3 (mod 4), p > 13.
    Refuted when some prime of C cannot occur; ForcesSecondCase when every
    prime has the forced shape, since then p | AB.
    """
    _require_prime(p)
    if p % 4 != 3 or p <= 13:
        raise DomainError(f"candidate analysis needs p ≡ 3 (mod 4) and p > 13, got {p}")
    if C <= 1:
        raise DomainError(f"C must be > 1, got {C}")

    target = Target.FIRST_CASE_CANDIDATE
    steps = [computed('factorize', n=C), computed('frey_form_level', C=C)]
    primes = [q for q, _ in factorize(C)]

    if gcd(6, C) != 1:
        steps += [axiom(Axiom.PRIMES_OF_C), computed('gcd_with_six', C=C)]
        return VerdictReport(p=p, target=target, verdict=Verdict.REFUTED, steps=tuple(steps), note='(6, C) != 1')
    bad = [q for q in primes if q % 4 == 3]
    if bad:
        steps.append(axiom(Axiom.PRIMES_OF_C))
        return VerdictReport(
            p=p, target=target, verdict=Verdict.REFUTED, steps=tuple(steps),
            note=f'{bad[0]} ≡ 3 (mod 4) divides C',
        )

    steps += [axiom(Axiom.CUSP_FIELD_OF_DEFINITION), axiom(Axiom.LEVEL_RAISING)]
    for q in primes:
        step = computed('first_case_constraint', q=q, p=p)
        steps.append(step)
        if step.outputs['branch'] != Branch.PLUS_ONE_SHAPE.value:
            return VerdictReport(
                p=p, target=target, verdict=Verdict.REFUTED, steps=tuple(steps),
                note=f"q = {q}: {step.outputs['branch']}",
            )

    with_multiplicity = [q for q, e in factorize(C) for _ in range(e)]
    steps.append(computed(
        'product_formula_conclusion', primes=with_multiplicity, p=p,
        quote='every C^p = R^2 + S^2 has p | RS', expect=_expect('holds', True),
    ))
    return VerdictReport(p=p, target=target, verdict=Verdict.FORCES_SECOND_CASE, steps=tuple(steps))


def analyze_q(q, p):
    """first_case_constraint plus the level-raising residue, for the CLI."""
    analysis = first_case_constraint(q, p)
    return analysis, level_raising_rhs(q, p)
