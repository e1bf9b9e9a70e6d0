"""
Exceptions raised by the finite field and search layers

Errors with custom constructors define __reduce__ so they survive the trip back from
worker processes.
"""


class PotentSumsError(Exception):
    """Base class for every error raised by the core package"""


class NotPrimePower(PotentSumsError, ValueError):
    """The requested field order is not a prime power"""

    def __init__(self, q):
        super().__init__(f"{q} is not a prime power")
        self.q = q

    def __reduce__(self):
        return type(self), (self.q,)


class CapacityExceeded(PotentSumsError, ValueError):
    """The field order is above the configured table capacity"""

    def __init__(self, q, capacity):
        super().__init__(f"q={q} exceeds the field capacity limit {capacity}")
        self.q = q
        self.capacity = capacity

    def __reduce__(self):
        return type(self), (self.q, self.capacity)


class LogOfZero(PotentSumsError, ValueError):
    """Discrete logarithm (or inverse, order) requested for the zero element"""

    def __init__(self):
        super().__init__("discrete logarithm of zero is undefined")

    def __reduce__(self):
        return type(self), ()


class InvalidExponent(PotentSumsError, ValueError):
    """Potent exponents must be integers greater than one"""

    def __init__(self, n):
        super().__init__(f"potent exponent must be > 1, got {n}")
        self.n = n

    def __reduce__(self):
        return type(self), (self.n,)


class FieldMismatch(PotentSumsError, ValueError):
    """Two element sets live in different fields"""


class PreconditionViolated(PotentSumsError, ValueError):
    """Divisibility or size preconditions of an operation do not hold"""


class BadOrder(PotentSumsError, ValueError):
    """Character order does not divide q - 1 (or is below 2)"""

    def __init__(self, d, q):
        super().__init__(f"character order d={d} must be >= 2 and divide q-1={q - 1}")
        self.d = d
        self.q = q

    def __reduce__(self):
        return type(self), (self.d, self.q)


class AccumulatorOverflow(PotentSumsError, OverflowError):
    """q * d**|A| does not fit in a 64-bit accumulator"""


class DuplicateRoots(PotentSumsError, ValueError):
    """Character sum polynomial roots must be distinct"""


class CheckpointMismatch(PotentSumsError):
    """Existing checkpoint belongs to a different command or parameter set"""
