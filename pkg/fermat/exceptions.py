"""
Error hierarchy for the verification library.

DomainError covers precondition violations: the caller asked for something
outside an operation's domain. VerificationError means a computed fact
contradicted an asserted invariant, which should never happen and fails the
run.
"""


class FermatCheckError(Exception):
    """Base class for every error raised by the fermat app."""


class DomainError(FermatCheckError, ValueError):
    """An operation was called outside its documented preconditions."""


class InertPrime(DomainError):
    """A split prime was required but q ≡ 3 (mod 4)."""


class RamifiedPrime(DomainError):
    """The prime 2 (ramified in Z[i]) or a ramified CM prime was supplied."""


class NoRepresentation(DomainError):
    """n is not a sum of two squares of the requested kind."""


class NotPrimitive(DomainError):
    """gcd(A, B) > 1 or A = B = 0."""


class BadReduction(DomainError):
    """The curve does not have good reduction at the requested prime."""


class SingularCurve(DomainError):
    """Point counting was asked for a curve with zero discriminant."""


class DivisionByZero(DomainError, ZeroDivisionError):
    """Inversion of zero in a finite field."""


class ModelUnavailable(DomainError):
    """No model curve is bound to the newform; only the table can answer."""


class VerificationError(FermatCheckError, AssertionError):
    """A computed value broke an invariant the mathematics guarantees."""


class StructureViolation(VerificationError):
    """a_{q^2} + 2q is not of the form 2z^2 at an inert prime."""


class ConjugacyViolation(VerificationError):
    """The two reductions above a split prime gave different traces."""


class LawViolation(VerificationError):
    """The two-squares eigenvalue law a_q = 2*alpha failed."""


class WeilBoundViolation(VerificationError):
    """A computed trace exceeds 2*sqrt(field size)."""


class TableMismatch(VerificationError):
    """A recomputed eigenvalue differs from the embedded table."""


class IdentificationError(VerificationError):
    """No unique model curve matches a newform's table row."""
