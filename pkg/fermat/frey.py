"""
The two Frey Q-curves over Q(i) attached to A^4 + B^4 = C^p:

    E_{A,B}: y^2 = x^3 + 2(1+i)A x^2 + (-B^2 + i A^2) x
    E_{B,A}: y^2 = x^3 + 2(1+i)B x^2 + ( A^2 + i B^2) x

and the Frobenius traces of their 2-dimensional representations at inert
and split primes of Q(i).
"""
import logging
from dataclasses import dataclass
from itertools import count
from math import gcd, isqrt

from django.db import models

from fermat.arith import GaussianInt, Rt2Int, gaussian_factor_split_prime, is_prime
from fermat.elliptic import MAX_FIELD_SIZE, WeierstrassCurve, reduction_type, trace_of_frobenius
from fermat.exceptions import (
    BadReduction,
    ConjugacyViolation,
    DomainError,
    InertPrime,
    NotPrimitive,
    RamifiedPrime,
    StructureViolation,
    VerificationError,
    WeilBoundViolation,
)
from fermat.finite_field import reduce_inert, reduce_split

logger = logging.getLogger(__name__)

# Conductors of the residual representations, imported rather than computed:
# 32 for E_{A,B} with A even, 256 for E_{B,A}.
CONDUCTOR_AB = 32
CONDUCTOR_BA = 256

COPRIME_CLASSES_MOD_3 = tuple((a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0))


class Variant(models.TextChoices):
    AB = 'AB', 'E_{A,B}'
    BA = 'BA', 'E_{B,A}'


@dataclass(frozen=True)
class FreyCurve:
    A: int
    B: int
    variant: Variant
    curve: WeierstrassCurve

    @property
    def C_term(self):
        """A^4 + B^4."""
        return self.A ** 4 + self.B ** 4

    def discriminant_norm(self):
        return self.curve.discriminant().norm()

    def __str__(self):
        return f"{Variant(self.variant).label} at (A, B) = ({self.A}, {self.B}): {self.curve}"


@dataclass(frozen=True)
class QcurveTrace:
    """Trace a_q at a prime q of Q; at inert q only its magnitude z*sqrt(2) is known."""

    value: Rt2Int
    sign_determined: bool
    q: int

    def __post_init__(self):
        if not self.value.within_weil_bound(self.q):
            raise WeilBoundViolation(f"|{self.value}| > 2 sqrt({self.q})")

    def magnitude(self):
        return Rt2Int(abs(self.value.rat), abs(self.value.irr))

    def __str__(self):
        text = str(self.value)
        return text if self.sign_determined or self.value == Rt2Int(0) else f"±{text}"


def build_frey(A, B, variant):
    """E_{A,B} or E_{B,A} for a primitive pair (A, B)."""
    if (A == 0 and B == 0) or gcd(A, B) != 1:
        raise NotPrimitive(f"(A, B) = ({A}, {B}) is not primitive")
    variant = Variant(variant)
    if variant == Variant.AB:
        a2 = GaussianInt(2 * A, 2 * A)
        a4 = GaussianInt(-B * B, A * A)
    else:
        a2 = GaussianInt(2 * B, 2 * B)
        a4 = GaussianInt(A * A, B * B)
    frey = FreyCurve(A=A, B=B, variant=variant, curve=WeierstrassCurve(a2, a4, GaussianInt(0)))

    expected = 2**12 * frey.C_term ** 3
    if frey.discriminant_norm() != expected:
        raise VerificationError(f"|N(disc)| of {frey} is {frey.discriminant_norm()}, expected {expected}")
    return frey


def _model(curve):
    return curve.curve if isinstance(curve, FreyCurve) else curve


def _require_good_odd_prime(curve, q):
    if q == 2:
        raise RamifiedPrime("2 ramifies in Q(i); reduction at 2 is not modelled")
    if not is_prime(q):
        raise DomainError(f"q must be prime, got {q}")
    if isinstance(curve, FreyCurve) and curve.C_term % q == 0:
        raise BadReduction(f"{q} divides A^4 + B^4 = {curve.C_term}")


def reduce_at_inert(curve, q):
    return _model(curve).map_coefficients(lambda c: reduce_inert(c, q))


def reduce_at_split(curve, pi, q):
    return _model(curve).map_coefficients(lambda c: reduce_split(c, pi, q))


def has_good_reduction(curve, q):
    """Good reduction at every prime of Z[i] above the odd prime q."""
    try:
        _require_good_odd_prime(curve, q)
    except BadReduction:
        return False
    if q % 4 == 3:
        return reduce_at_inert(curve, q).is_nonsingular()
    pi, pi_bar = gaussian_factor_split_prime(q)
    return all(reduce_at_split(curve, prime, q).is_nonsingular() for prime in (pi, pi_bar))


def reduction_at(curve, q):
    """[(prime of Z[i] above q, ReductionType)] for an odd prime q."""
    if q == 2:
        raise RamifiedPrime("reduction at 2 is not modelled")
    if q % 4 == 3:
        return [(GaussianInt(q), reduction_type(reduce_at_inert(curve, q)))]
    pi, pi_bar = gaussian_factor_split_prime(q)
    return [(prime, reduction_type(reduce_at_split(curve, prime, q))) for prime in (pi, pi_bar)]


def trace_inert(curve, q, cache=None, max_field_size=MAX_FIELD_SIZE):
    """
    |a_q| at an inert prime q ≡ 3 (mod 4).

    Frob_q squared is Frob_{q^2} and det Frob_q = q, so a_q^2 = a_{q^2} + 2q
    where a_{q^2} comes from counting points over Z[i]/(q) = F_{q^2}. The
    extra twist forces a_q = z*sqrt(2); the sign of z is not recoverable.
    """
    if q % 4 == 1:
        raise DomainError(f"{q} splits in Q(i); use trace_split")
    _require_good_odd_prime(curve, q)
    reduced = reduce_at_inert(curve, q)
    if not reduced.is_nonsingular():
        raise BadReduction(f"{_model(curve)} has bad reduction at {q}")
    a_q2 = trace_of_frobenius(reduced, cache=cache, max_field_size=max_field_size).trace
    square = a_q2 + 2 * q
    if square < 0 or square % 2:
        raise StructureViolation(f"a_{{q^2}} + 2q = {square} at q = {q} is not 2z^2")
    z = isqrt(square // 2)
    if 2 * z * z != square:
        raise StructureViolation(f"a_{{q^2}} + 2q = {square} at q = {q} is not 2z^2")
    logger.debug("a_%d^2 = %d + %d = 2*%d^2", q, a_q2, 2 * q, z)
    return QcurveTrace(value=Rt2Int(0, z), sign_determined=False, q=q)


def trace_split(curve, q, cache=None, max_field_size=MAX_FIELD_SIZE):
    """a_q at a split prime q ≡ 1 (mod 4): the common trace at pi and conj(pi)."""
    if q % 4 == 3:
        raise InertPrime(f"{q} is inert in Q(i); use trace_inert")
    _require_good_odd_prime(curve, q)
    traces = []
    for prime in gaussian_factor_split_prime(q):
        reduced = reduce_at_split(curve, prime, q)
        if not reduced.is_nonsingular():
            raise BadReduction(f"{_model(curve)} has bad reduction at {prime}")
        traces.append(trace_of_frobenius(reduced, cache=cache, max_field_size=max_field_size).trace)
    if traces[0] != traces[1]:
        raise ConjugacyViolation(f"traces {traces[0]} and {traces[1]} above {q} differ")
    return traces[0]


def weil_candidates(q):
    """Every z*sqrt(2) allowed by |a_q| <= 2 sqrt(q), i.e. 2z^2 <= 4q."""
    if q % 4 != 3 or not is_prime(q):
        raise DomainError(f"weil_candidates needs a prime q ≡ 3 (mod 4), got {q}")
    bound = isqrt(2 * q)
    return tuple(Rt2Int(0, z) for z in range(-bound, bound + 1))


def coprime_lift(a, b):
    """The first primitive (A, B) with A ≡ a, B ≡ b (mod 3)."""
    for total in count(0):
        for i in range(total + 1):
            A, B = a + 3 * i, b + 3 * (total - i)
            if gcd(A, B) == 1:
                return A, B


@dataclass(frozen=True)
class A3Row:
    residues: tuple
    lift: tuple
    ab: QcurveTrace
    ba: QcurveTrace


def a3_table(cache=None, max_field_size=MAX_FIELD_SIZE):
    """
    a_3 of E_{A,B} and a'_3 of E_{B,A} over the eight primitive classes of
    (A, B) mod 3. Asserts a_3 = 0 exactly when A ≡ 0, B ≢ 0 (mod 3), and
    |a'_3| = 2 sqrt(2) on those classes.
    """
    rows = []
    for a, b in COPRIME_CLASSES_MOD_3:
        A, B = coprime_lift(a, b)
        ab = trace_inert(build_frey(A, B, Variant.AB), 3, cache=cache, max_field_size=max_field_size)
        ba = trace_inert(build_frey(A, B, Variant.BA), 3, cache=cache, max_field_size=max_field_size)
        rows.append(A3Row(residues=(a, b), lift=(A, B), ab=ab, ba=ba))

        vanishes = ab.value == Rt2Int(0)
        if vanishes != (a == 0 and b != 0):
            raise VerificationError(f"a_3 = {ab} on class {(a, b)} breaks the classification")
        if vanishes and ba.magnitude() != Rt2Int(0, 2):
            raise VerificationError(f"a'_3 = {ba} on class {(a, b)}, expected ±2*rt2")
    logger.info("a_3 classification holds on all %d classes", len(rows))
    return rows
