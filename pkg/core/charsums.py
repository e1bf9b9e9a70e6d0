"""
Exact character sums S(d; q, A) and their Weil-type lower bounds

Characters of order d are never evaluated as complex numbers here. For x != 0 the
value chi_d(x) is fixed by dlog(x) mod d, so

    lambda(x) = (d - 1) - sum_{i=1}^{d-1} chi_d(x^i)

is d - 1 at zero, 0 on nonzero d-th powers and d elsewhere, and S is an exact integer.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from core.coverage import prime_powers_up_to
from core.exceptions import (
    AccumulatorOverflow,
    BadOrder,
    DuplicateRoots,
    FieldMismatch,
    PreconditionViolated,
)
from core.fields import DEFAULT_CAPACITY, Element, FieldSpec, FieldTable, build_field
from core.potents import ElementSet, potent_set
from core.workers import ordered_map

logger = logging.getLogger(__name__)

INT64_LIMIT = 2 ** 63


@dataclass(frozen=True)
class CharSumReport:
    """Exact S(d; q, A) next to its lower bound"""

    q: int
    d: int
    set_label: str | None
    set_size: int
    exact_value: int
    lower_bound: float
    slack: float
    bound_positive: bool

    @property
    def covered(self) -> bool:
        """S = 0 exactly when A + C_n covers F_q, n = 1 + (q-1)/d"""
        return self.exact_value == 0

    @property
    def n(self) -> int:
        return coverage_exponent(self.q, self.d)

    def to_dict(self):
        return {
            "q": self.q,
            "d": self.d,
            "n": self.n,
            "set_label": self.set_label,
            "set_size": self.set_size,
            "exact_S": self.exact_value,
            "lower_bound": self.lower_bound,
            "slack": self.slack,
            "bound_positive": self.bound_positive,
            "covered": self.covered,
        }


def check_order(q: int, d: int):
    if d < 2 or (q - 1) % d:
        raise BadOrder(d, q)


def coverage_exponent(q: int, d: int) -> int:
    """n with C_n = {0} plus the nonzero d-th powers"""
    check_order(q, d)
    return 1 + (q - 1) // d


def lambda_value(F: FieldTable, d: int, x: Element) -> int:
    check_order(F.q, d)
    if x == 0:
        return d - 1
    return 0 if F.dlog(x) % d == 0 else d


def lambda_array(F: FieldTable, d: int, xs) -> np.ndarray:
    """Vectorized lambda over an index array (order already checked)"""
    xs = np.asarray(xs, dtype=np.int64)
    values = np.where(F.dlog_table[xs] % d == 0, 0, d)
    values[xs == 0] = d - 1
    return values


def needs_wide_accumulator(q: int, d: int, set_size: int) -> bool:
    return q * d ** set_size >= INT64_LIMIT


def exact_S(F: FieldTable, d: int, A: ElementSet, wide: bool | None = None) -> int:
    """
    S(d; q, A) = sum over gamma outside A of prod_{alpha in A} lambda(gamma - alpha).

    ``wide=None`` picks 64-bit accumulation when q * d^|A| fits and arbitrary
    precision otherwise; ``wide=False`` raises AccumulatorOverflow instead.
    """
    check_order(F.q, d)
    if A.field.spec != F.spec:
        raise FieldMismatch(f"set {A.label!r} belongs to {A.field.spec}, not {F.spec}")
    if not len(A):
        raise PreconditionViolated("S(d; q, A) needs a nonempty set A")

    overflow = needs_wide_accumulator(F.q, d, len(A))
    if wide is False and overflow:
        raise AccumulatorOverflow(f"q * d^|A| = {F.q} * {d}^{len(A)} exceeds 64-bit accumulation")
    use_wide = overflow if wide is None else wide
    if use_wide:
        logger.debug(f"S({d}; {F.q}, {A.label}) accumulated with arbitrary precision")

    gammas = np.flatnonzero(~A.mask())
    products = np.ones(len(gammas), dtype=object if use_wide else np.int64)
    for alpha in A.members:
        products = products * lambda_array(F, d, F.add_arrays(gammas, F.neg(int(alpha))))
        # terms that reached zero stay zero
        keep = products != 0
        gammas, products = gammas[keep], products[keep]
        if not len(gammas):
            return 0
    return int(products.sum())


def weil_lower_bound(d: int, set_size: int, q: int) -> float:
    """(d-1)^s (q - (2^{s-1}(s-2)+1) sqrt(q) - 2^s s), in double precision"""
    s = set_size
    if d < 2 or s < 1 or q < 2:
        raise PreconditionViolated(f"need d >= 2, set_size >= 1, q >= 2 (got {d}, {s}, {q})")
    return (d - 1) ** s * (q - (2 ** (s - 1) * (s - 2) + 1) * math.sqrt(q) - 2 ** s * s)


def _bound_coefficients(s):
    return 2 ** (s - 1) * (s - 2) + 1, 2 ** s * s


def bound_is_positive(d: int, set_size: int, q: int) -> bool:
    """Exact sign test of the lower bound: (q - 2^s s)^2 > c^2 q with q > 2^s s"""
    if d < 2 or set_size < 1:
        raise PreconditionViolated(f"need d >= 2 and set_size >= 1 (got {d}, {set_size})")
    c, k = _bound_coefficients(set_size)
    return q > k and (q - k) ** 2 > c * c * q


def threshold_M(set_size: int) -> int:
    """(2^s s)^2: beyond it S(d; q, A) > 0 for every d"""
    if set_size < 1:
        raise PreconditionViolated(f"set_size must be >= 1, got {set_size}")
    return (2 ** set_size * set_size) ** 2


def sharp_threshold(set_size: int) -> int:
    """
    Smallest square r^2 with r^2 - c r - k > 0, c and k the bound coefficients.

    The lower bound is positive for every q > r^2; for set_size 5 this is 53^2 = 2809.
    """
    if set_size < 1:
        raise PreconditionViolated(f"set_size must be >= 1, got {set_size}")
    c, k = _bound_coefficients(set_size)

    def positive(r):
        return r * r - c * r - k > 0

    r = max(1, (c + math.isqrt(c * c + 4 * k)) // 2)
    while r > 1 and positive(r - 1):
        r -= 1
    while not positive(r):
        r += 1
    return r * r


def char_sum_modulus(F: FieldTable, d: int, roots) -> float:
    """
    |sum_gamma chi_d(prod (gamma - alpha_i))| for distinct roots alpha_i.

    Terms with f(gamma) = 0 contribute nothing. Residue counts are exact integers;
    only the final modulus is floating point.
    """
    check_order(F.q, d)
    roots = [int(r) for r in roots]
    if not roots:
        raise PreconditionViolated("need at least one root")
    if min(roots) < 0 or max(roots) >= F.q:
        raise PreconditionViolated(f"roots must lie in [0, {F.q - 1}]: {roots}")
    if len(set(roots)) != len(roots):
        raise DuplicateRoots(f"roots must be distinct: {roots}")

    gammas = F.elements()
    nonzero = np.ones(F.q, dtype=bool)
    residues = np.zeros(F.q, dtype=np.int64)
    for alpha in roots:
        shifted = F.add_arrays(gammas, F.neg(alpha))
        nonzero &= shifted != 0
        residues += F.dlog_table[shifted] % d
    counts = np.bincount(residues[nonzero] % d, minlength=d)
    omega = np.exp(2j * np.pi * np.arange(d) / d)
    return float(abs(counts @ omega))


def charsum_report(F: FieldTable, d: int, A: ElementSet) -> CharSumReport:
    exact = exact_S(F, d, A)
    bound = weil_lower_bound(d, len(A), F.q)
    return CharSumReport(
        q=F.q,
        d=d,
        set_label=A.label,
        set_size=len(A),
        exact_value=exact,
        lower_bound=bound,
        slack=exact - bound,
        bound_positive=bound_is_positive(d, len(A), F.q),
    )


@dataclass(frozen=True)
class SweepStep:
    """Character sum reports of one prime power"""

    spec: FieldSpec
    reports: tuple = ()

    @property
    def q(self):
        return self.spec.q


def _sweep_task(args):
    spec, m, orders, capacity = args
    F = build_field(spec, capacity)
    A = potent_set(F, m)
    reports = tuple(charsum_report(F, d, A) for d in orders if (F.q - 1) % d == 0)
    logger.debug(f"{spec}: {len(reports)} character sum(s) for C_{m}")
    return SweepStep(spec=spec, reports=reports)


def sweep(m: int, limit: int, orders=None, jobs: int = 1, capacity: int = DEFAULT_CAPACITY,
          after: int = 0) -> Iterator[SweepStep]:
    """
    S(d; q, C_m) for every prime power q <= limit with (m-1) | (q-1) and every
    order d in ``orders`` (default 2..m-1) dividing q - 1, ascending in q.
    """
    if m <= 2:
        raise PreconditionViolated(f"sweep needs m > 2, got {m}")
    orders = tuple(sorted(set(orders))) if orders else tuple(range(2, m))
    if orders[0] < 2:
        raise PreconditionViolated(f"character orders must be >= 2, got {orders}")
    tasks = (
        (spec, m, orders, capacity)
        for spec in prime_powers_up_to(limit)
        if spec.q > after and (spec.q - 1) % (m - 1) == 0
    )
    yield from ordered_map(_sweep_task, tasks, jobs)
