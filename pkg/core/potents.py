"""
n-potent sets C_n = {x : x^n = x} and exponent normalization
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from core.exceptions import InvalidExponent, PreconditionViolated
from core.fields import FieldTable


@dataclass(frozen=True, eq=False)
class ElementSet:
    """Sorted set of element indices of one field (C_n, C_m + C_k, an arbitrary A)"""

    field: FieldTable
    members: np.ndarray
    label: str | None = None

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return (int(x) for x in self.members)

    def __contains__(self, x):
        i = np.searchsorted(self.members, x)
        return i < len(self.members) and self.members[i] == x

    def as_list(self) -> list[int]:
        return [int(x) for x in self.members]

    def mask(self) -> np.ndarray:
        """Boolean occupancy vector of length q"""
        occupied = np.zeros(self.field.q, dtype=bool)
        occupied[self.members] = True
        return occupied


def element_set(field: FieldTable, members, label: str | None = None) -> ElementSet:
    """Build an ElementSet, sorting and deduplicating the given indices"""
    if not isinstance(members, np.ndarray):
        members = np.fromiter(members, dtype=np.int64)
    values = np.unique(members.astype(np.int64))
    if len(values) and (values[0] < 0 or values[-1] >= field.q):
        raise PreconditionViolated(f"set members must lie in [0, {field.q - 1}]")
    values.setflags(write=False)
    return ElementSet(field=field, members=values, label=label)


def normalize_exponent(n: int, q: int) -> int:
    """n0 = gcd(n-1, q-1) + 1, so that C_{n0} = C_n and (n0-1) | (q-1)"""
    if n <= 1:
        raise InvalidExponent(n)
    return gcd(n - 1, q - 1) + 1


def potent_count(n: int, q: int) -> int:
    """|C_n| over F_q"""
    return normalize_exponent(n, q)


def potent_set(field: FieldTable, n: int) -> ElementSet:
    """C_n via the dlog congruence dlog(x) * (n-1) = 0 mod q-1"""
    n0 = normalize_exponent(n, field.q)
    # n0 - 1 divides q - 1, so reducing the exponent keeps the products small
    hits = (field.dlog_table[1:] * (n0 - 1)) % (field.q - 1) == 0
    members = np.concatenate(([0], np.flatnonzero(hits) + 1))
    return element_set(field, members, label=f"C_{n}")


def potent_set_brute(field: FieldTable, n: int) -> ElementSet:
    """C_n straight from the definition x^n = x"""
    if n <= 1:
        raise InvalidExponent(n)
    return element_set(field, [x for x in range(field.q) if field.pow(x, n) == x], label=f"C_{n}")
