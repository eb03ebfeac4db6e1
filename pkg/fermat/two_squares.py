"""
Sums of two squares: prime decompositions, the product formula and the full
set of representations of n as R^2 + S^2.
"""
import logging
from dataclasses import dataclass
from itertools import product
from math import isqrt

from fermat.arith import GaussianInt, cornacchia, factorize, gaussian_factor_split_prime, is_prime
from fermat.exceptions import DomainError, NoRepresentation, VerificationError

logger = logging.getLogger(__name__)

NAIVE_LIMIT = 10**6


@dataclass(frozen=True, slots=True)
class TwoSquaresRep:
    """alpha^2 + beta^2 = n. Signs and order are whatever the producer chose."""

    alpha: int
    beta: int
    n: int

    def __post_init__(self):
        if self.alpha * self.alpha + self.beta * self.beta != self.n:
            raise DomainError(f"{self.alpha}^2 + {self.beta}^2 != {self.n}")

    def canonical(self):
        """The same representation with 0 <= alpha <= beta."""
        low, high = sorted((abs(self.alpha), abs(self.beta)))
        return TwoSquaresRep(low, high, self.n)

    def as_gaussian(self):
        return GaussianInt(self.alpha, self.beta)

    def __str__(self):
        return f"{self.n} = {self.alpha}^2 + {self.beta}^2"


def decompose_prime(q):
    """
    The parity-normalized representation of a prime q ≡ 1 (mod 4):
    alpha odd > 0, beta even > 0. It is unique. For q = 2 returns (1, 1).
    """
    if q == 2:
        return TwoSquaresRep(1, 1, 2)
    if not is_prime(q):
        raise DomainError(f"decompose_prime needs a prime, got {q}")
    if q % 4 == 3:
        raise NoRepresentation(f"{q} ≡ 3 (mod 4) is not a sum of two squares")
    x, y = cornacchia(q)
    alpha, beta = (x, y) if x % 2 else (y, x)
    return TwoSquaresRep(alpha, beta, q)


def decompose_prime_naive(q):
    """Brute-force parity-normalized decomposition; the oracle for decompose_prime."""
    for alpha in range(1, isqrt(q) + 1, 2):
        rest = q - alpha * alpha
        beta = isqrt(rest)
        if beta > 0 and beta % 2 == 0 and beta * beta == rest:
            return TwoSquaresRep(alpha, beta, q)
    raise NoRepresentation(f"{q} has no representation with alpha odd, beta even")


def compose(r1, r2):
    """Product formula: (a1 a2 - b1 b2)^2 + (a1 b2 + a2 b1)^2 = n1 n2."""
    return TwoSquaresRep(
        r1.alpha * r2.alpha - r1.beta * r2.beta,
        r1.alpha * r2.beta + r2.alpha * r1.beta,
        r1.n * r2.n,
    )


def naive_representations(n):
    """All canonical (R, S), 0 <= R <= S, with R^2 + S^2 = n, by direct search."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    found = set()
    for r in range(isqrt(n // 2) + 1):
        rest = n - r * r
        s = isqrt(rest)
        if s * s == rest and r <= s:
            found.add(TwoSquaresRep(r, s, n))
    return frozenset(found)


def gaussian_representations(n):
    """
    All canonical representations of n, read off from the Gaussian integers
    of norm n: every split prime q^e contributes pi^a * conj(pi)^(e-a).
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n == 1:
        return frozenset({TwoSquaresRep(0, 1, 1)})

    fixed = GaussianInt(1)
    split = []
    for q, e in factorize(n):
        if q == 2:
            fixed = fixed * GaussianInt(1, 1) ** e
        elif q % 4 == 3:
            if e % 2:
                return frozenset()
            fixed = fixed * q ** (e // 2)
        else:
            split.append((gaussian_factor_split_prime(q)[0], e))
    return _expand(fixed, split, n)


def representations_of_product(split_primes):
    """
    Canonical representations of prod q^e from known Gaussian primes:
    split_primes is [(pi, e)] with N(pi) = q prime, no factorization needed.
    """
    n = 1
    for pi, e in split_primes:
        n *= pi.norm() ** e
    return _expand(GaussianInt(1), split_primes, n)


def _expand(fixed, split_primes, n):
    choices = []
    for pi, e in split_primes:
        pi_bar = pi.conj()
        pi_powers = [pi ** a for a in range(e + 1)]
        bar_powers = [pi_bar ** a for a in range(e + 1)]
        choices.append([pi_powers[a] * bar_powers[e - a] for a in range(e + 1)])

    found = set()
    for picks in product(*choices):
        z = fixed
        for g in picks:
            z = z * g
        found.add(TwoSquaresRep(z.re, z.im, n).canonical())
    return frozenset(found)


def all_representations(n, cross_check=False, naive_limit=NAIVE_LIMIT):
    """
    Every canonical representation of n as R^2 + S^2.

    Computed from the Gaussian factorization. With cross_check the naive
    search is run as well whenever n <= naive_limit and both must agree.
    """
    reps = gaussian_representations(n)
    if cross_check and n <= naive_limit:
        oracle = naive_representations(n)
        if oracle != reps:
            raise VerificationError(
                f"representations of {n} disagree: factorization {sorted(reps, key=_key)} "
                f"vs search {sorted(oracle, key=_key)}"
            )
    logger.debug("%d has %d canonical representations", n, len(reps))
    return reps


def _key(rep):
    return rep.alpha, rep.beta


def sorted_representations(reps):
    return sorted(reps, key=_key)
