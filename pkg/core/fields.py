"""
Finite field construction - deterministic F_{p^v} with table-driven arithmetic

Elements are dense integer indices in [0, q-1]. The base-p digits of an index are the
coefficients of the representative polynomial (digit i = coefficient of x^i), so 0 is
the additive identity and 1 the multiplicative identity. Multiplication, powers and
discrete logarithms go through exp/dlog tables built once per field.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np
from sympy import factorint, isprime, primefactors, primitive_root
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_pow_mod, gf_rem

from core.exceptions import (
    BadOrder,
    CapacityExceeded,
    LogOfZero,
    NotPrimePower,
    PreconditionViolated,
)

logger = logging.getLogger(__name__)

DEFAULT_CAPACITY = 2 ** 22

# Dense index of a field element
Element = int


@dataclass(frozen=True)
class FieldSpec:
    """A prime power q = p^v"""

    p: int
    v: int

    def __post_init__(self):
        if self.v < 1:
            raise PreconditionViolated(f"exponent v must be >= 1, got {self.v}")
        if not isprime(self.p):
            raise NotPrimePower(self.p ** self.v)

    @property
    def q(self) -> int:
        return self.p ** self.v

    def __str__(self):
        return f"F_{self.q}" if self.v == 1 else f"F_{self.p}^{self.v}"


def parse_prime_power(q: int) -> FieldSpec:
    """Return the unique (p, v) with q = p^v"""
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise NotPrimePower(q)
    factors = factorint(int(q))
    if len(factors) != 1:
        raise NotPrimePower(q)
    ((p, v),) = factors.items()
    return FieldSpec(int(p), int(v))


# --- GF(p)[x] helpers (sympy galoistools uses descending coefficient lists) ---

def _index_to_poly(index, p):
    digits = []
    while index:
        digits.append(index % p)
        index //= p
    return digits[::-1]


def _poly_to_index(poly, p):
    index = 0
    for coeff in poly:
        index = index * p + int(coeff)
    return index


def smallest_irreducible(p: int, v: int) -> tuple[int, ...]:
    """
    Lexicographically smallest monic irreducible of degree v over F_p.

    Coefficient vectors are compared lowest degree first. Returns the ascending
    coefficient tuple (c_0, ..., c_{v-1}, 1).
    """
    for low in itertools.product(range(p), repeat=v):
        descending = [1] + list(reversed(low))
        if gf_irreducible_p(descending, p, ZZ):
            return tuple(low) + (1,)
    raise PreconditionViolated(f"no irreducible polynomial of degree {v} over F_{p}")  # unreachable


def _smallest_generator(p, v, modulus_desc):
    q = p ** v
    order = q - 1
    cofactors = [order // ell for ell in primefactors(order)]
    for candidate in range(2, q):
        poly = _index_to_poly(candidate, p)
        if all(gf_pow_mod(poly, e, modulus_desc, p, ZZ) != [1] for e in cofactors):
            return candidate
    raise PreconditionViolated(f"no generator found for F_{q}")  # unreachable


def _digit_dtype(p):
    """Narrowest signed type holding the sum of two base-p digits"""
    if 2 * (p - 1) <= np.iinfo(np.int8).max:
        return np.int8
    if 2 * (p - 1) <= np.iinfo(np.int16).max:
        return np.int16
    return np.int32


def _readonly(array):
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class FieldTable:
    """Fully materialized arithmetic tables for one finite field (immutable)"""

    spec: FieldSpec
    modulus: tuple
    generator: Element
    dlog_table: np.ndarray
    exp_table: np.ndarray
    digits: np.ndarray | None
    weights: np.ndarray | None

    @property
    def p(self) -> int:
        return self.spec.p

    @property
    def v(self) -> int:
        return self.spec.v

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def label(self) -> str:
        return str(self.spec)

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    # --- additive structure ---

    def add_arrays(self, x, y):
        """Elementwise (broadcasting) field addition of index arrays"""
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.v == 1:
            return (x + y) % self.p
        return ((self.digits[x] + self.digits[y]) % self.p) @ self.weights

    def neg_arrays(self, x):
        x = np.asarray(x, dtype=np.int64)
        if self.v == 1:
            return (-x) % self.p
        return ((-self.digits[x]) % self.p) @ self.weights

    def add(self, a: Element, b: Element) -> Element:
        if self.v == 1:
            return (a + b) % self.p
        return int(self.add_arrays(a, b))

    def neg(self, a: Element) -> Element:
        if self.v == 1:
            return (-a) % self.p
        return int(self.neg_arrays(a))

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    # --- multiplicative structure ---

    def mul(self, a: Element, b: Element) -> Element:
        if a == 0 or b == 0:
            return 0
        e = (int(self.dlog_table[a]) + int(self.dlog_table[b])) % (self.q - 1)
        return int(self.exp_table[e])

    def pow(self, a: Element, e: int) -> Element:
        if e < 0:
            raise PreconditionViolated(f"exponent must be nonnegative, got {e}")
        if e == 0:
            return 1
        if a == 0:
            return 0
        return int(self.exp_table[(int(self.dlog_table[a]) * e) % (self.q - 1)])

    def dlog(self, a: Element) -> int:
        """Exponent e in [0, q-2] with generator^e = a"""
        if a == 0:
            raise LogOfZero()
        return int(self.dlog_table[a])

    def inverse(self, a: Element) -> Element:
        if a == 0:
            raise LogOfZero()
        return int(self.exp_table[(-int(self.dlog_table[a])) % (self.q - 1)])

    def order(self, a: Element) -> int:
        """Multiplicative order of a nonzero element"""
        return (self.q - 1) // gcd(self.dlog(a), self.q - 1)

    def root_of_unity(self, r: int) -> Element:
        """Primitive r-th root of unity generator^((q-1)/r)"""
        if r < 1 or (self.q - 1) % r:
            raise BadOrder(r, self.q)
        return int(self.exp_table[(self.q - 1) // r])


def build_field(spec: FieldSpec, capacity: int = DEFAULT_CAPACITY) -> FieldTable:
    """Construct F_q deterministically and populate its tables"""
    p, v, q = spec.p, spec.v, spec.q
    if q > capacity:
        raise CapacityExceeded(q, capacity)

    exp_table = np.empty(q - 1, dtype=np.int64)
    if v == 1:
        modulus = (0, 1)
        generator = int(primitive_root(p))
        value = 1
        for e in range(q - 1):
            exp_table[e] = value
            value = value * generator % p
        digits = weights = None
    else:
        modulus = smallest_irreducible(p, v)
        modulus_desc = list(reversed(modulus))
        generator = _smallest_generator(p, v, modulus_desc)
        g_poly = _index_to_poly(generator, p)
        value = [1]
        for e in range(q - 1):
            exp_table[e] = _poly_to_index(value, p)
            value = gf_rem(gf_mul(value, g_poly, p, ZZ), modulus_desc, p, ZZ)
        indices = np.arange(q, dtype=np.int64)
        digits = np.stack([(indices // p ** i) % p for i in range(v)], axis=1).astype(_digit_dtype(p))
        weights = p ** np.arange(v, dtype=np.int64)

    dlog_table = np.full(q, -1, dtype=np.int64)
    dlog_table[exp_table] = np.arange(q - 1, dtype=np.int64)

    logger.debug(f"Built {spec}: modulus={modulus} generator={generator}")
    return FieldTable(
        spec=spec,
        modulus=modulus,
        generator=generator,
        dlog_table=_readonly(dlog_table),
        exp_table=_readonly(exp_table),
        digits=None if digits is None else _readonly(digits),
        weights=None if weights is None else _readonly(weights),
    )


# tables of the largest fields run to a few hundred MB each
@lru_cache(maxsize=8)
def field_for(q: int, capacity: int = DEFAULT_CAPACITY) -> FieldTable:
    """Parse q and return its (cached) field"""
    return build_field(parse_prime_power(q), capacity)
