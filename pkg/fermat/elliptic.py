"""
Weierstrass curves y^2 = x^3 + a2 x^2 + a4 x + a6, discriminants, and
exhaustive point counting over F_q and F_q[i].
"""
import hashlib
import logging
from dataclasses import dataclass

from django.db import models

from fermat.arith import GaussianInt
from fermat.exceptions import DomainError, SingularCurve, WeilBoundViolation
from fermat.finite_field import Fq2Elem, FqElem, quadratic_character

logger = logging.getLogger(__name__)

MAX_FIELD_SIZE = 10**6


class ReductionType(models.TextChoices):
    GOOD = 'good', 'Good'
    MULTIPLICATIVE = 'multiplicative', 'Multiplicative'
    ADDITIVE = 'additive', 'Additive'


def _is_zero(value):
    if isinstance(value, int):
        return value == 0
    return value.is_zero()


@dataclass(frozen=True, slots=True)
class WeierstrassCurve:
    """
    y^2 = x^3 + a2*x^2 + a4*x + a6 over whatever ring the coefficients live in
    (int, GaussianInt, FqElem or Fq2Elem).
    """

    a2: object
    a4: object
    a6: object = 0

    def b_invariants(self):
        b2 = 4 * self.a2
        b4 = 2 * self.a4
        b6 = 4 * self.a6
        b8 = 4 * self.a2 * self.a6 - self.a4 * self.a4
        return b2, b4, b6, b8

    def discriminant(self):
        """For a6 = 0 this is 16 a4^2 (a2^2 - 4 a4)."""
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def c4(self):
        b2, b4, _, _ = self.b_invariants()
        return b2 * b2 - 24 * b4

    def is_nonsingular(self):
        return not _is_zero(self.discriminant())

    def map_coefficients(self, fn):
        return WeierstrassCurve(fn(self.a2), fn(self.a4), fn(self.a6))

    def field(self):
        """('prime', q) or ('gaussian', q) for curves over F_q or F_q[i]."""
        coefficients = (self.a2, self.a4, self.a6)
        if all(isinstance(c, FqElem) for c in coefficients):
            return 'prime', self.a2.modulus
        if all(isinstance(c, Fq2Elem) for c in coefficients):
            return 'gaussian', self.a2.modulus
        raise DomainError(f"{self} is not a curve over a finite field")

    def field_size(self):
        kind, q = self.field()
        return q if kind == 'prime' else q * q

    def cache_key(self):
        kind, q = self.field()
        text = f"{kind}:{q}:{self.a2}:{self.a4}:{self.a6}"
        return hashlib.sha256(text.encode()).hexdigest()[:20]

    def __str__(self):
        return f"y^2 = x^3 + ({self.a2})x^2 + ({self.a4})x + ({self.a6})"


@dataclass(frozen=True, slots=True)
class FrobeniusTrace:
    field_size: int
    trace: int
    point_count: int

    def __post_init__(self):
        if self.trace != self.field_size + 1 - self.point_count:
            raise DomainError("trace must equal n + 1 - #E")


def reduction_type(curve):
    """Reduction type of a model already reduced into a residue field of odd characteristic."""
    if curve.is_nonsingular():
        return ReductionType.GOOD
    if _is_zero(curve.c4()):
        return ReductionType.ADDITIVE
    return ReductionType.MULTIPLICATIVE


def _count_prime_field(a2, a4, a6, q):
    chi = quadratic_character(q)
    total = 0
    for x in range(q):
        total += chi[(((x + a2) * x + a4) * x + a6) % q]
    return q + 1 + total


def _count_gaussian_field(a2, a4, a6, q):
    # chi_{q^2}(z) = chi_q(N(z)), so only the norm of f(x) is looked up.
    chi = quadratic_character(q)
    (r2, i2), (r4, i4), (r6, i6) = a2, a4, a6
    total = 0
    for u in range(q):
        for v in range(q):
            tr, ti = (u + r2) % q, (v + i2) % q
            tr, ti = (tr * u - ti * v + r4) % q, (tr * v + ti * u + i4) % q
            tr, ti = (tr * u - ti * v + r6) % q, (tr * v + ti * u + i6) % q
            total += chi[(tr * tr + ti * ti) % q]
    return q * q + 1 + total


def count_points(curve, cache=None, max_field_size=MAX_FIELD_SIZE):
    """
    Number of projective points of a nonsingular curve over F_q or F_q[i],
    the point at infinity included, by an exhaustive x-loop.
    """
    kind, q = curve.field()
    size = q if kind == 'prime' else q * q
    if size > max_field_size:
        raise DomainError(f"field of size {size} exceeds the exhaustive limit {max_field_size}")
    if not curve.is_nonsingular():
        raise SingularCurve(f"{curve} is singular over a field of size {size}")

    key = curve.cache_key()
    if cache is not None:
        cached = cache.get(key, size)
        if cached is not None:
            return cached

    if kind == 'prime':
        points = _count_prime_field(curve.a2.value, curve.a4.value, curve.a6.value, q)
    else:
        coefficients = [(c.a.value, c.b.value) for c in (curve.a2, curve.a4, curve.a6)]
        points = _count_gaussian_field(*coefficients, q)
    logger.debug("#E(F_%d) = %d for %s", size, points, curve)

    if cache is not None:
        cache.put(key, size, points)
    return points


def trace_of_frobenius(curve, cache=None, max_field_size=MAX_FIELD_SIZE):
    """n + 1 - #E(F_n), with the Weil bound |a| <= 2 sqrt(n) enforced."""
    size = curve.field_size()
    points = count_points(curve, cache=cache, max_field_size=max_field_size)
    trace = size + 1 - points
    if trace * trace > 4 * size:
        raise WeilBoundViolation(f"trace {trace} of {curve} breaks the Weil bound for n = {size}")
    return FrobeniusTrace(field_size=size, trace=trace, point_count=points)


def reduce_mod_prime(curve, q):
    """Reduce a model with integer coefficients into F_q."""
    def reduce(c):
        if isinstance(c, GaussianInt):
            raise DomainError("use the frey module to reduce curves over Z[i]")
        return FqElem(c, q)
    return curve.map_coefficients(reduce)
