"""
Residue fields of Z[i]: F_q at split primes and F_q[i] = F_{q^2} at inert
primes q ≡ 3 (mod 4).
"""
from dataclasses import dataclass
from functools import lru_cache

from fermat.arith import GaussianInt, is_prime
from fermat.exceptions import DivisionByZero, DomainError, InertPrime


@dataclass(frozen=True, slots=True)
class FqElem:
    """value mod q, always stored reduced into [0, q)."""

    value: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, 'value', self.value % self.modulus)

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.modulus != self.modulus:
                raise DomainError(f"mixing F_{self.modulus} and F_{other.modulus}")
            return other
        if isinstance(other, int):
            return FqElem(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FqElem(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return FqElem(-self.value, self.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FqElem(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FqElem(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.modulus}")
        return FqElem(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        return FqElem(pow(self.value, exponent, self.modulus), self.modulus)

    def __int__(self):
        return self.value

    def is_zero(self):
        return self.value == 0

    def is_square(self):
        """Euler's criterion."""
        return self.value == 0 or pow(self.value, (self.modulus - 1) // 2, self.modulus) == 1

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True, slots=True)
class Fq2Elem:
    """a + b*i in F_q[i] with i^2 = -1; a field of q^2 elements when q ≡ 3 (mod 4)."""

    a: FqElem
    b: FqElem

    def __post_init__(self):
        if self.a.modulus != self.b.modulus:
            raise DomainError("both coordinates must live in the same F_q")
        if self.a.modulus % 4 != 3:
            raise DomainError(f"F_q[i] is only a field for q ≡ 3 (mod 4), got q = {self.a.modulus}")

    @property
    def modulus(self):
        return self.a.modulus

    @classmethod
    def of(cls, a, b, q):
        return cls(FqElem(a, q), FqElem(b, q))

    def _coerce(self, other):
        if isinstance(other, Fq2Elem):
            if other.modulus != self.modulus:
                raise DomainError(f"mixing F_{self.modulus}^2 and F_{other.modulus}^2")
            return other
        if isinstance(other, (int, FqElem)):
            q = self.modulus
            return Fq2Elem(FqElem(int(other), q), FqElem(0, q))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Fq2Elem(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Fq2Elem(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Fq2Elem(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Fq2Elem(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def conj(self):
        return Fq2Elem(self.a, -self.b)

    def norm(self):
        """a^2 + b^2, the norm down to F_q."""
        return self.a * self.a + self.b * self.b

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero(f"0 has no inverse in F_{self.modulus}^2")
        n_inv = self.norm().inverse()
        return Fq2Elem(self.a * n_inv, -self.b * n_inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        q = self.modulus
        result, base = Fq2Elem.of(1, 0, q), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def frobenius(self):
        return self ** self.modulus

    def is_zero(self):
        return self.a.value == 0 and self.b.value == 0

    def in_base_field(self):
        return self.b.value == 0

    def is_square(self):
        """x^((q^2 - 1)/2) == 1, or x == 0."""
        if self.is_zero():
            return True
        q = self.modulus
        return self ** ((q * q - 1) // 2) == Fq2Elem.of(1, 0, q)

    def __str__(self):
        if self.b.value == 0:
            return str(self.a.value)
        if self.a.value == 0:
            return f"{self.b.value}i"
        return f"{self.a.value}+{self.b.value}i"


class PrimeField:
    """F_q for an odd prime q."""

    def __init__(self, q):
        if q <= 2 or not is_prime(q):
            raise DomainError(f"F_q needs an odd prime q, got {q}")
        self.q = q
        self.order = q

    def __call__(self, value):
        return FqElem(value, self.q)

    def elements(self):
        return (FqElem(v, self.q) for v in range(self.q))

    def __repr__(self):
        return f"PrimeField({self.q})"


class GaussianResidueField:
    """F_q[i] = Z[i]/(q) for a prime q ≡ 3 (mod 4)."""

    def __init__(self, q):
        if q <= 2 or not is_prime(q):
            raise DomainError(f"F_q[i] needs an odd prime q, got {q}")
        if q % 4 != 3:
            raise DomainError(f"{q} splits in Z[i]; Z[i]/({q}) is not a field")
        self.q = q
        self.order = q * q

    def __call__(self, a, b=0):
        return Fq2Elem.of(a, b, self.q)

    def elements(self):
        q = self.q
        return (Fq2Elem.of(a, b, q) for a in range(q) for b in range(q))

    def __repr__(self):
        return f"GaussianResidueField({self.q})"


def _as_gaussian(g):
    return g if isinstance(g, GaussianInt) else GaussianInt(g)


def reduce_inert(g, q):
    """Image of a Gaussian integer in Z[i]/(q) = F_q[i], coefficient-wise."""
    if q % 4 != 3:
        raise DomainError(f"{q} is not inert in Z[i]")
    g = _as_gaussian(g)
    return Fq2Elem.of(g.re, g.im, q)


def split_image_of_i(pi, q):
    """Where i goes in Z[i]/(pi) = F_q: pi = alpha + beta*i sends i to -alpha/beta."""
    if q % 4 == 3:
        raise InertPrime(f"{q} is inert in Z[i]")
    if pi.norm() != q:
        raise DomainError(f"{pi} does not lie above {q}")
    return -pi.re * pow(pi.im, -1, q) % q


def reduce_split(g, pi, q):
    """Image of a Gaussian integer in Z[i]/(pi) for a Gaussian prime pi of norm q."""
    g = _as_gaussian(g)
    return FqElem(g.re + g.im * split_image_of_i(pi, q), q)


@lru_cache(maxsize=512)
def quadratic_character(q):
    """chi[v] for v in [0, q): 0, +1 on nonzero squares, -1 otherwise."""
    chi = [-1] * q
    chi[0] = 0
    for y in range(1, (q + 1) // 2):
        chi[y * y % q] = 1
    return tuple(chi)
