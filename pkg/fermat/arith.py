"""
Exact integer, modular, Gaussian-integer and Z[sqrt(2)] arithmetic.

Everything else in the app is built on the helpers here. Values are plain
Python ints (gmpy2 results are converted back) so nothing overflows and
results hash and compare like ordinary integers.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from math import gcd, isqrt

import gmpy2

from fermat.exceptions import DomainError, InertPrime, RamifiedPrime

logger = logging.getLogger(__name__)

# Miller-Rabin with these bases is deterministic below 3.18e23 (covers 2^64).
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 318665857834031151167461
_TRIAL_BOUND = 1000
_RHO_BATCH = 128


def is_prime(n):
    """Deterministic primality below 3.18e23; Miller-Rabin plus gmpy2 above."""
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    if n < _WITNESSES[-1] ** 2:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    if n >= _DETERMINISTIC_LIMIT:
        return bool(gmpy2.is_prime(n, 50))
    return True


def primes_up_to(limit):
    """All primes p <= limit, by a bytearray sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, limit + 1, p)))
    return [p for p, flag in enumerate(sieve) if flag]


@lru_cache(maxsize=None)
def _trial_primes():
    return tuple(primes_up_to(_TRIAL_BOUND))


def require_odd_prime(p, name='p'):
    if p <= 2 or not is_prime(p):
        raise DomainError(f"{name} must be an odd prime, got {p}")


def legendre(a, p):
    """Legendre symbol (a|p) for an odd prime p, as -1, 0 or +1."""
    require_odd_prime(p)
    return int(gmpy2.legendre(a, p))


def _pollard_brent(n):
    """A nontrivial factor of the odd composite n (Brent's cycle variant)."""
    for c in count(1):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(_RHO_BATCH, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += _RHO_BATCH
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        logger.debug("pollard rho with c=%d failed on %d, retrying", c, n)


def factorize(n):
    """
    Prime factorization of n > 1 as a sorted tuple of (prime, exponent).

    Trial division by the primes below 1000, then Pollard rho on what is
    left. Every returned factor passes is_prime.
    """
    if n <= 1:
        raise DomainError(f"factorize needs n > 1, got {n}")
    original = n
    exponents = Counter()
    for p in _trial_primes():
        if p * p > n:
            break
        while n % p == 0:
            exponents[p] += 1
            n //= p
    pending = [n] if n > 1 else []
    while pending:
        m = pending.pop()
        if is_prime(m):
            exponents[m] += 1
            continue
        root, exact = gmpy2.iroot(m, 2)
        if exact:
            pending.extend((int(root), int(root)))
            continue
        d = _pollard_brent(m)
        pending.extend((d, m // d))
    factors = tuple(sorted(exponents.items()))
    logger.debug("factorize(%d) = %s", original, factors)
    return factors


def radical(n):
    """Product of the distinct primes dividing n; radical(1) = 1."""
    if n < 1:
        raise DomainError(f"radical needs n >= 1, got {n}")
    if n == 1:
        return 1
    result = 1
    for p, _ in factorize(n):
        result *= p
    return result


def is_perfect_kth_power(n, k):
    """The integer r with r**k == n, or None."""
    if n < 1 or k < 2:
        raise DomainError(f"is_perfect_kth_power needs n >= 1 and k >= 2, got ({n}, {k})")
    root = int(gmpy2.iroot(n, k)[0])
    return root if root ** k == n else None


def sqrt_minus_one(q):
    """A square root of -1 modulo a prime q ≡ 1 (mod 4)."""
    for c in count(2):
        if pow(c, (q - 1) // 2, q) == q - 1:
            return pow(c, (q - 1) // 4, q)


def cornacchia(q):
    """Positive (x, y) with x^2 + y^2 = q for a prime q ≡ 1 (mod 4), in no particular order."""
    r = sqrt_minus_one(q)
    if 2 * r < q:
        r = q - r
    a, b = q, r
    while b * b > q:
        a, b = b, a % b
    rest = q - b * b
    y = isqrt(rest)
    if y * y != rest:
        raise DomainError(f"Cornacchia failed for {q}; is it prime?")
    return b, y


@dataclass(frozen=True, slots=True)
class GaussianInt:
    """re + im*i in Z[i]."""

    re: int
    im: int = 0

    @staticmethod
    def coerce(value):
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return GaussianInt(value, 0)
        return NotImplemented

    def __add__(self, other):
        other = GaussianInt.coerce(other)
        if other is NotImplemented:
            return other
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        other = GaussianInt.coerce(other)
        if other is NotImplemented:
            return other
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = GaussianInt.coerce(other)
        if other is NotImplemented:
            return other
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise DomainError("negative powers are not defined in Z[i]")
        result, base = GaussianInt(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self):
        return GaussianInt(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = '+' if self.im > 0 else '-'
        return f"{self.re}{sign}{abs(self.im)}i"


@dataclass(frozen=True, slots=True)
class Rt2Int:
    """rat + irr*sqrt(2) in Z[sqrt(2)]."""

    rat: int
    irr: int = 0

    @staticmethod
    def coerce(value):
        if isinstance(value, Rt2Int):
            return value
        if isinstance(value, int):
            return Rt2Int(value, 0)
        return NotImplemented

    @classmethod
    def parse(cls, text):
        """Inverse of str(): '6', '-2*rt2', '3+2*rt2'."""
        text = text.strip().replace(' ', '')
        if text.endswith('*rt2'):
            body = text[:-len('*rt2')]
            split = max(body.rfind('+'), body.rfind('-'))
            if split > 0:
                return cls(int(body[:split]), int(body[split:]))
            return cls(0, int(body))
        try:
            return cls(int(text), 0)
        except ValueError:
            raise DomainError(f"not a Z[sqrt(2)] literal: {text!r}") from None

    def __add__(self, other):
        other = Rt2Int.coerce(other)
        if other is NotImplemented:
            return other
        return Rt2Int(self.rat + other.rat, self.irr + other.irr)

    __radd__ = __add__

    def __neg__(self):
        return Rt2Int(-self.rat, -self.irr)

    def __sub__(self, other):
        other = Rt2Int.coerce(other)
        if other is NotImplemented:
            return other
        return Rt2Int(self.rat - other.rat, self.irr - other.irr)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = Rt2Int.coerce(other)
        if other is NotImplemented:
            return other
        return Rt2Int(
            self.rat * other.rat + 2 * self.irr * other.irr,
            self.rat * other.irr + self.irr * other.rat,
        )

    __rmul__ = __mul__

    def conj(self):
        """The Galois conjugate sqrt(2) -> -sqrt(2)."""
        return Rt2Int(self.rat, -self.irr)

    def norm(self):
        return rt2_norm(self)

    def is_rational(self):
        return self.irr == 0

    def __float__(self):
        return self.rat + self.irr * 2 ** 0.5

    def within_weil_bound(self, q):
        """|value| <= 2*sqrt(q) under the real embedding sqrt(2) -> 1.414..."""
        if self.irr == 0:
            return self.rat * self.rat <= 4 * q
        if self.rat == 0:
            return 2 * self.irr * self.irr <= 4 * q
        return abs(float(self)) <= 2 * q ** 0.5

    def __str__(self):
        if self.irr == 0:
            return str(self.rat)
        if self.rat == 0:
            return f"{self.irr}*rt2"
        sign = '+' if self.irr > 0 else '-'
        return f"{self.rat}{sign}{abs(self.irr)}*rt2"


def rt2_norm(x):
    """Field norm rat^2 - 2*irr^2 of Q(sqrt(2))."""
    return x.rat * x.rat - 2 * x.irr * x.irr


def congruent_above_p(x, y, p):
    """
    True iff some prime of Z[sqrt(2)] above the odd prime p divides x - y.

    For odd p this is the same as p dividing the norm of x - y, so no ideal
    above p is ever built.
    """
    require_odd_prime(p)
    return rt2_norm(Rt2Int.coerce(x) - Rt2Int.coerce(y)) % p == 0


def gaussian_factor_split_prime(q):
    """
    (pi, conj(pi)) with pi * conj(pi) = q for a prime q ≡ 1 (mod 4).

    pi is canonical: odd positive real part, even positive imaginary part.
    """
    if q == 2:
        raise RamifiedPrime("2 ramifies in Z[i]: 2 = -i(1+i)^2")
    if not is_prime(q):
        raise DomainError(f"q must be prime, got {q}")
    if q % 4 == 3:
        raise InertPrime(f"{q} ≡ 3 (mod 4) stays prime in Z[i]")
    x, y = cornacchia(q)
    alpha, beta = (x, y) if x % 2 else (y, x)
    pi = GaussianInt(alpha, beta)
    return pi, pi.conj()
