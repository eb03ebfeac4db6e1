"""
Brute-force checks at desk scale: no primitive solutions of A^4 + B^4 = C^p
in a box, and the claims about C (coprime to 6, only primes ≡ 1 mod 4,
semistable Frey curves) on every primitive pair with A even.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from fermat.arith import factorize, is_perfect_kth_power, require_odd_prime
from fermat.elliptic import ReductionType
from fermat.exceptions import DomainError, VerificationError
from fermat.frey import Variant, build_frey, reduction_at

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Solution:
    A: int
    B: int
    C: int
    p: int

    def __post_init__(self):
        if self.A ** 4 + self.B ** 4 != self.C ** self.p:
            raise VerificationError(f"{self.A}^4 + {self.B}^4 != {self.C}^{self.p}")


@dataclass(frozen=True, order=True)
class SideClaimViolation:
    A: int
    B: int
    claim: str
    detail: str


@dataclass(frozen=True)
class SearchReport:
    bound: int
    primes_tested: tuple = ()
    solutions_found: tuple = ()
    side_claim_violations: tuple = ()
    pairs_checked: int = 0

    @property
    def clean(self):
        return not self.solutions_found and not self.side_claim_violations


def coprime_pairs(max_ab, stride=1, offset=0):
    """
    Primitive pairs 1 <= B < A <= max_ab, plus (1, 1), for the A with
    A ≡ offset (mod stride).
    """
    for A in range(1, max_ab + 1):
        if A % stride != offset:
            continue
        if A == 1:
            yield 1, 1
        for B in range(1, A):
            if gcd(A, B) == 1:
                yield A, B


def even_coprime_pairs(max_ab, stride=1, offset=0):
    """Primitive pairs with A even and 1 <= A, B <= max_ab, either order."""
    for A in range(2, max_ab + 1, 2):
        if (A // 2) % stride != offset:
            continue
        for B in range(1, max_ab + 1, 2):
            if gcd(A, B) == 1:
                yield A, B


def _search_partition(max_ab, primes, stride, offset):
    found, checked = [], 0
    for A, B in coprime_pairs(max_ab, stride, offset):
        checked += 1
        n = A ** 4 + B ** 4
        for p in primes:
            root = is_perfect_kth_power(n, p)
            if root is not None:
                found.append(Solution(A, B, root, p))
    return found, checked


def _side_claim_partition(max_ab, stride, offset, check_reduction):
    violations, checked = [], 0
    for A, B in even_coprime_pairs(max_ab, stride, offset):
        checked += 1
        violations.extend(side_claim_violations(A, B, check_reduction=check_reduction))
    return violations, checked


def side_claim_violations(A, B, check_reduction=True):
    """Every claim about C = A^4 + B^4 that fails for this pair."""
    C = A ** 4 + B ** 4
    found = []
    if gcd(6, C) != 1:
        found.append(SideClaimViolation(A, B, 'coprime_to_6', f"gcd(6, {C}) = {gcd(6, C)}"))
    factors = factorize(C)
    for q, _ in factors:
        if q % 4 != 1:
            found.append(SideClaimViolation(A, B, 'primes_1_mod_4', f"{q} | {C}"))
    if check_reduction:
        curves = [build_frey(A, B, variant) for variant in Variant]
        for q, _ in factors:
            if q == 2:
                continue
            for curve in curves:
                types = [kind for _, kind in reduction_at(curve, q)]
                if any(kind != ReductionType.MULTIPLICATIVE for kind in types):
                    found.append(SideClaimViolation(
                        A, B, 'semistable', f"{Variant(curve.variant).label} at {q}: {types}",
                    ))
    return found


def _run(worker, partitions, workers):
    if workers <= 1:
        return [worker(*args) for args in partitions]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, *zip(*partitions)))


def search_solutions(max_ab, primes, workers=1):
    """Record (A, B, r, p) whenever A^4 + B^4 = r^p over the primitive pairs up to max_ab."""
    if max_ab < 1:
        raise DomainError(f"max_ab must be >= 1, got {max_ab}")
    primes = tuple(sorted(set(primes)))
    for p in primes:
        require_odd_prime(p)
    workers = max(1, workers)
    logger.info("searching A, B <= %d for p in %s on %d worker(s)", max_ab, list(primes), workers)

    partitions = [(max_ab, primes, workers, k) for k in range(workers)]
    results = _run(_search_partition, partitions, workers)
    solutions = sorted(s for found, _ in results for s in found)
    checked = sum(n for _, n in results)
    if solutions:
        logger.warning("found %d solutions: %s", len(solutions), solutions)
    return SearchReport(bound=max_ab, primes_tested=primes, solutions_found=tuple(solutions), pairs_checked=checked)


def verify_side_claims(max_ab, workers=1, check_reduction=True):
    """Factor C = A^4 + B^4 for each primitive pair with A even and check every claim."""
    if max_ab < 2:
        raise DomainError(f"max_ab must be >= 2, got {max_ab}")
    workers = max(1, workers)
    logger.info("checking claims about C for A, B <= %d on %d worker(s)", max_ab, workers)

    partitions = [(max_ab, workers, k, check_reduction) for k in range(workers)]
    results = _run(_side_claim_partition, partitions, workers)
    violations = sorted(v for found, _ in results for v in found)
    checked = sum(n for _, n in results)
    if violations:
        logger.warning("%d side-claim violations", len(violations))
    return SearchReport(bound=max_ab, side_claim_violations=tuple(violations), pairs_checked=checked)
