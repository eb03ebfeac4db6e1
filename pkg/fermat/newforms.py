"""
The six weight-2 newforms of levels 32 and 256, all with CM.

Their first seven eigenvalues live in ``fixtures/newforms.txt`` and are the
ground truth. Model curves are attached so eigenvalues can be recomputed at
any good prime: f1 is y^2 = x^3 - x, f2 is the Frey curve E_{B,A} at
(A, B) = (0, 1), and f3..f6 are identified once, on first use, among a short
list of CM candidates by matching the table.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from django.db import models

from fermat.arith import Rt2Int, is_prime, primes_up_to
from fermat.elliptic import MAX_FIELD_SIZE, WeierstrassCurve, reduce_mod_prime, trace_of_frobenius
from fermat.exceptions import DomainError, IdentificationError, LawViolation, ModelUnavailable, TableMismatch
from fermat.frey import Variant, build_frey, trace_inert, trace_split
from fermat.two_squares import decompose_prime

logger = logging.getLogger(__name__)

TABLE_PATH = Path(__file__).resolve().parent / 'fixtures' / 'newforms.txt'
TABLE_PRIMES = (2, 3, 5, 7, 11, 13, 17)
ISOGENY_CHECK_BOUND = 200


class CMField(models.TextChoices):
    GAUSSIAN = 'Q(i)', 'Q(i)'
    SQRT_MINUS_2 = 'Q(sqrt-2)', 'Q(sqrt(-2))'

    @property
    def discriminant(self):
        return -4 if self == CMField.GAUSSIAN else -8

    @classmethod
    def from_discriminant(cls, disc):
        try:
            return {-4: cls.GAUSSIAN, -8: cls.SQRT_MINUS_2}[disc]
        except KeyError:
            raise DomainError(f"no CM field with discriminant {disc} here") from None


class CoefficientField(models.TextChoices):
    RATIONAL = 'Q', 'Q'
    SQRT_2 = 'Q(sqrt2)', 'Q(sqrt(2))'


CANDIDATE_MODELS = {
    CMField.GAUSSIAN: tuple(WeierstrassCurve(0, d, 0) for d in (1, -1, 2, -2, 4, -4, 8, -8)),
    CMField.SQRT_MINUS_2: (WeierstrassCurve(4, 2, 0), WeierstrassCurve(-4, 2, 0)),
}


@dataclass(frozen=True)
class NewformRecord:
    label: str
    level: int
    coefficient_field: CoefficientField
    cm_field: CMField
    table: dict = field(hash=False)
    model: object = None

    def table_value(self, q):
        value = self.table[q]
        return value.rat if self.coefficient_field == CoefficientField.RATIONAL else value

    def is_inert_in_cm_field(self, q):
        """Good odd primes where CM forces a_q = 0."""
        if self.cm_field == CMField.GAUSSIAN:
            return q % 4 == 3
        return q % 8 in (5, 7)

    def __str__(self):
        return f"{self.label} (level {self.level}, CM by {self.cm_field.label})"


def parse_table(text):
    """{label: (level, cm discriminant, {p: Rt2Int})} from the embedded table text."""
    rows = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3 + len(TABLE_PRIMES):
            raise DomainError(f"newform table line {line_no} has {len(parts)} fields")
        label, level, disc, *values = parts
        rows[label] = (int(level), int(disc), dict(zip(TABLE_PRIMES, map(Rt2Int.parse, values))))
    return rows


def _record(label, level, disc, table, model=None):
    rational = all(value.is_rational() for value in table.values())
    return NewformRecord(
        label=label,
        level=level,
        coefficient_field=CoefficientField.RATIONAL if rational else CoefficientField.SQRT_2,
        cm_field=CMField.from_discriminant(disc),
        table=table,
        model=model,
    )


def _odd_traces(curve, primes, cache=None):
    return tuple(trace_of_frobenius(reduce_mod_prime(curve, q), cache=cache).trace for q in primes)


def identify_model(record, cache=None):
    """
    The candidate curve whose traces at 3..17 reproduce the table row.

    Isogenous candidates share every a_p, so several may match; they are
    accepted as one answer when their traces also agree at every odd prime up
    to ISOGENY_CHECK_BOUND, and the first in candidate order is bound.
    """
    odd = TABLE_PRIMES[1:]
    expected = tuple(record.table_value(q) for q in odd)
    matches = [
        curve for curve in CANDIDATE_MODELS[record.cm_field]
        if _odd_traces(curve, odd, cache) == expected
    ]
    if not matches:
        raise IdentificationError(f"no candidate model reproduces the table row of {record.label}")

    check = primes_up_to(ISOGENY_CHECK_BOUND)[1:]
    signature = _odd_traces(matches[0], check, cache)
    for other in matches[1:]:
        if _odd_traces(other, check, cache) != signature:
            raise IdentificationError(
                f"{record.label} matches non-isogenous candidates {matches[0]} and {other}"
            )
    logger.info("identified %s with %s (%d isogenous candidates)", record.label, matches[0], len(matches))
    return matches[0]


def load_records(strict=True, cache=None):
    """
    All six records with models bound. With strict=False an identification
    failure leaves that model unset and eigenvalue() falls back to the table.
    """
    records = {}
    for label, (level, disc, table) in parse_table(TABLE_PATH.read_text()).items():
        record = _record(label, level, disc, table)
        if label == 'f1':
            model = WeierstrassCurve(0, -1, 0)
        elif label == 'f2':
            model = build_frey(0, 1, Variant.BA)
        else:
            try:
                model = identify_model(record, cache=cache)
            except IdentificationError:
                if strict:
                    raise
                logger.warning("no model for %s; eigenvalues limited to the table", label)
                model = None
        records[label] = NewformRecord(
            label=record.label,
            level=record.level,
            coefficient_field=record.coefficient_field,
            cm_field=record.cm_field,
            table=record.table,
            model=model,
        )
    return records


@lru_cache(maxsize=None)
def newform_records():
    return load_records(strict=True)


def get_record(label):
    try:
        return newform_records()[label]
    except KeyError:
        raise DomainError(f"unknown newform {label!r}; expected one of f1..f6") from None


def _compute(record, q, cache=None, max_field_size=MAX_FIELD_SIZE):
    if record.label == 'f2':
        if q % 4 == 1:
            return Rt2Int(trace_split(record.model, q, cache=cache, max_field_size=max_field_size))
        return trace_inert(record.model, q, cache=cache, max_field_size=max_field_size).value
    curve = reduce_mod_prime(record.model, q)
    return trace_of_frobenius(curve, cache=cache, max_field_size=max_field_size).trace


def eigenvalue(label, q, cache=None, record=None, max_field_size=MAX_FIELD_SIZE):
    """
    a_q of the newform at a prime q.

    Zero when q^2 divides the level. For f2 at inert q only the magnitude
    z*sqrt(2) is determined and that is what is returned. Values at q <= 17
    are checked against the table. Point counts over fields larger than
    max_field_size raise DomainError.
    """
    record = record or get_record(label)
    if not is_prime(q):
        raise DomainError(f"q must be prime, got {q}")
    if record.level % (q * q) == 0:
        return 0 if record.coefficient_field == CoefficientField.RATIONAL else Rt2Int(0)

    if record.model is None:
        if q in record.table:
            return record.table_value(q)
        raise ModelUnavailable(f"{record.label} has no identified model and a_{q} is not tabulated")

    value = _compute(record, q, cache=cache, max_field_size=max_field_size)
    if q in record.table and not eigenvalue_magnitudes_match(record, q, value):
        raise TableMismatch(f"a_{q}({record.label}) computed as {value}, table says {record.table[q]}")
    return value


def eigenvalue_magnitudes_match(record, q, value):
    """Rational entries agree exactly; sqrt(2) entries agree with either conjugate up to sign."""
    if isinstance(record, str):
        record = get_record(record)
    expected = record.table[q]
    value = Rt2Int.coerce(value)
    if expected.is_rational():
        return value == expected
    return value in (expected, -expected, expected.conj(), -expected.conj())


def conjugate_table(label):
    """The table with sqrt(2) -> -sqrt(2) applied."""
    return {q: value.conj() for q, value in get_record(label).table.items()}


def verify_two_squares_law(q, cache=None, max_field_size=MAX_FIELD_SIZE):
    """
    a_q(f1) = 2*alpha with alpha^2 + beta^2 = q, for a prime q ≡ 1 (mod 4).
    Returns (a_q, alpha, beta) with beta the even member of q's decomposition.
    """
    if q % 4 != 1 or not is_prime(q):
        raise DomainError(f"the two-squares law needs a prime q ≡ 1 (mod 4), got {q}")
    a_q = eigenvalue('f1', q, cache=cache, max_field_size=max_field_size)
    if a_q % 2:
        raise LawViolation(f"a_{q}(f1) = {a_q} is odd")
    alpha = a_q // 2
    rep = decompose_prime(q)
    if alpha * alpha + rep.beta * rep.beta != q or abs(alpha) != rep.alpha:
        raise LawViolation(f"a_{q}(f1)/2 = {alpha} does not pair with {rep}")
    return a_q, alpha, rep.beta


@dataclass(frozen=True)
class TableRow:
    label: str
    level: int
    primes: tuple
    values: tuple
    verified: bool


def verify_table(max_prime=17, verify=True, cache=None, max_field_size=MAX_FIELD_SIZE):
    """
    One row per newform with a_p at every prime up to max_prime.

    With verify every value is recomputed from the model; a disagreement with
    the table raises TableMismatch. Tabulated primes show the table entry, so
    f2 keeps its signs, and primes past 17 show the computed value.
    """
    rows = []
    primes = primes_up_to(max_prime) if verify else [q for q in TABLE_PRIMES if q <= max_prime]
    for label, record in newform_records().items():
        values = []
        for q in primes:
            if verify:
                value = eigenvalue(label, q, cache=cache, record=record, max_field_size=max_field_size)
            if q in record.table:
                value = record.table_value(q)
            values.append(value)
        rows.append(TableRow(label=label, level=record.level, primes=tuple(primes), values=tuple(values), verified=verify))
    if verify:
        logger.info("recomputed %d newform rows up to p = %d", len(rows), max_prime)
    return rows
