"""
Sumset coverage C_m + C_n = F_q and the exhaustive search over prime powers
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from sympy import divisors, primerange

from core.exceptions import FieldMismatch, InvalidExponent, PreconditionViolated
from core.fields import DEFAULT_CAPACITY, FieldSpec, FieldTable, build_field
from core.potents import ElementSet, element_set, potent_count, potent_set
from core.workers import ordered_map

logger = logging.getLogger(__name__)

DEFAULT_MISSING_CAP = 16
TRIPLE_SET_BOUND = 10


@dataclass(frozen=True)
class CoverageReport:
    """Outcome of a sumset coverage test"""

    q: int
    left_label: str | None
    right_label: str | None
    covered: bool
    missing: tuple = ()
    sum_size: int = 0

    def to_dict(self):
        return {
            "q": self.q,
            "left_label": self.left_label,
            "right_label": self.right_label,
            "covered": self.covered,
            "missing": list(self.missing),
            "sum_size": self.sum_size,
        }


@dataclass(frozen=True, order=True)
class SearchHit:
    """One (q, m, k) with C_m + C_k = F_q"""

    q: int
    p: int
    v: int
    m: int
    k: int


@dataclass(frozen=True, order=True)
class TripleHit:
    """One (q, k) with C_3 + C_4 + C_k = F_q"""

    q: int
    p: int
    v: int
    k: int
    set_size: int


@dataclass(frozen=True)
class ScanStep:
    """Everything found for one prime power; the unit of checkpointing"""

    spec: FieldSpec
    hits: tuple = ()
    set_size: int | None = None

    @property
    def q(self):
        return self.spec.q


def _same_field(F: FieldTable, *sets: ElementSet):
    for s in sets:
        if s.field.spec != F.spec:
            raise FieldMismatch(f"set {s.label!r} belongs to {s.field.spec}, not {F.spec}")


def _occupancy(F: FieldTable, A: ElementSet, B: ElementSet, stop_when_full: bool):
    # Each row a + B is a translate of B, so its entries are distinct.
    small, big = (A, B) if len(A) <= len(B) else (B, A)
    occupied = np.zeros(F.q, dtype=bool)
    filled = 0
    for a in small.members:
        row = F.add_arrays(a, big.members)
        fresh = row[~occupied[row]]
        occupied[fresh] = True
        filled += len(fresh)
        if stop_when_full and filled == F.q:
            break
    return occupied, filled


def sumset(F: FieldTable, A: ElementSet, B: ElementSet) -> ElementSet:
    """{a + b : a in A, b in B}"""
    _same_field(F, A, B)
    occupied, _ = _occupancy(F, A, B, stop_when_full=False)
    return element_set(F, np.flatnonzero(occupied), label=f"{A.label}+{B.label}")


def covers(F: FieldTable, A: ElementSet, B: ElementSet, missing_cap: int = DEFAULT_MISSING_CAP) -> CoverageReport:
    """Decide A + B = F_q, listing the smallest uncovered elements otherwise"""
    _same_field(F, A, B)
    if not len(A) or not len(B):
        raise PreconditionViolated("coverage needs two nonempty sets")
    occupied, filled = _occupancy(F, A, B, stop_when_full=True)
    covered = filled == F.q
    missing = () if covered else tuple(int(x) for x in np.flatnonzero(~occupied)[:missing_cap])
    return CoverageReport(
        q=F.q,
        left_label=A.label,
        right_label=B.label,
        covered=covered,
        missing=missing,
        sum_size=filled,
    )


def proper_divisor_exponents(q: int) -> list[int]:
    """k = d + 1 for every divisor d < q - 1 of q - 1, ascending"""
    return [d + 1 for d in divisors(q - 1) if d < q - 1]


def check_one(F: FieldTable, m: int, prefilter: bool = True) -> list[SearchHit]:
    """All k with C_m + C_k = F_q, k running over d + 1 for proper divisors d of q - 1"""
    if m <= 1:
        raise InvalidExponent(m)
    left = potent_set(F, m)
    hits = []
    for k in proper_divisor_exponents(F.q):
        # a sumset has at most |C_m| * |C_k| elements
        if prefilter and len(left) * potent_count(k, F.q) < F.q:
            continue
        if covers(F, left, potent_set(F, k)).covered:
            hits.append(SearchHit(q=F.q, p=F.p, v=F.v, m=m, k=k))
    return hits


def prime_powers_up_to(limit: int) -> Iterator[FieldSpec]:
    """Every p^v <= limit once, ascending by value"""
    if limit < 2:
        raise PreconditionViolated(f"limit must be >= 2, got {limit}")
    specs = []
    for p in primerange(2, limit + 1):
        v, value = 1, p
        while value <= limit:
            specs.append(FieldSpec(int(p), v))
            v += 1
            value *= p
    specs.sort(key=lambda s: s.q)
    yield from specs


def _pair_task(args):
    spec, m, capacity = args
    F = build_field(spec, capacity)
    hits = check_one(F, m)
    logger.debug(f"{spec}: {len(hits)} hit(s) for m={m}")
    return ScanStep(spec=spec, hits=tuple(hits))


def scan_pairs(m: int, limit: int, jobs: int = 1, capacity: int = DEFAULT_CAPACITY,
               after: int = 0) -> Iterator[ScanStep]:
    """Per-q search steps for check_all, ascending in q; q <= after is skipped"""
    if m <= 1:
        raise InvalidExponent(m)
    tasks = ((spec, m, capacity) for spec in prime_powers_up_to(limit) if spec.q > after)
    yield from ordered_map(_pair_task, tasks, jobs)


def check_all(m: int, limit: int, jobs: int = 1, capacity: int = DEFAULT_CAPACITY) -> Iterator[SearchHit]:
    """Every hit (q, m, k) with q <= limit, ordered by (q, k)"""
    for step in scan_pairs(m, limit, jobs, capacity):
        yield from step.hits


def exclusion_d_eq_m(F: FieldTable, m: int) -> CoverageReport:
    """The d = m case: C_m + C_n with n = 1 + (q-1)/m never covers (|sumset| <= q - 1)"""
    q = F.q
    if m <= 1:
        raise InvalidExponent(m)
    if (q - 1) % (m - 1) or (q - 1) % m:
        raise PreconditionViolated(f"need (m-1) | (q-1) and m | (q-1) for q={q}, m={m}")
    n = 1 + (q - 1) // m
    report = covers(F, potent_set(F, m), potent_set(F, n))
    if report.covered or report.sum_size > q - 1:
        raise AssertionError(f"counting bound violated for q={q}, m={m}: |sumset|={report.sum_size}")
    return report


def triple_set(F: FieldTable) -> ElementSet:
    """C_3 + C_4, which has at most 10 elements"""
    A = sumset(F, potent_set(F, 3), potent_set(F, 4))
    if len(A) > TRIPLE_SET_BOUND:
        raise AssertionError(f"|C_3+C_4| = {len(A)} > {TRIPLE_SET_BOUND} over {F.spec}")
    return A


def check_triple(F: FieldTable, prefilter: bool = True) -> ScanStep:
    A = triple_set(F)
    hits = []
    for k in proper_divisor_exponents(F.q):
        if prefilter and len(A) * potent_count(k, F.q) < F.q:
            continue
        if covers(F, A, potent_set(F, k)).covered:
            hits.append(TripleHit(q=F.q, p=F.p, v=F.v, k=k, set_size=len(A)))
    return ScanStep(spec=F.spec, hits=tuple(hits), set_size=len(A))


def _triple_task(args):
    spec, capacity = args
    return check_triple(build_field(spec, capacity))


def triple_search(limit: int, jobs: int = 1, capacity: int = DEFAULT_CAPACITY,
                  after: int = 0) -> Iterator[ScanStep]:
    """Per-q steps of the potent + 3-potent + 4-potent search, ascending in q"""
    tasks = ((spec, capacity) for spec in prime_powers_up_to(limit) if spec.q > after)
    yield from ordered_map(_triple_task, tasks, jobs)
