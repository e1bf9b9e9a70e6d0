"""
Shared test helpers
"""
import os
import unittest

from core.coverage import prime_powers_up_to
from core.fields import build_field

RUN_SLOW_TESTS = os.getenv('RUN_SLOW_TESTS', '').lower() in ('1', 'true', 'yes')

slow = unittest.skipUnless(RUN_SLOW_TESTS, "set RUN_SLOW_TESTS=1 to run full-limit checks")


def fields_up_to(limit, where=None):
    """Every field of order <= limit, optionally filtered on q"""
    for spec in prime_powers_up_to(limit):
        if where is None or where(spec.q):
            yield build_field(spec)


# (q, k) with C_5 + C_k = F_q
M5_PAIRS = [
    (3, 2), (5, 2), (5, 3), (7, 4), (9, 3), (9, 5), (13, 5), (13, 7), (17, 9), (25, 9),
    (25, 13), (29, 15), (41, 21), (49, 25), (53, 27), (73, 37), (81, 41), (125, 63),
]
M3_PAIRS = [(3, 2), (5, 3), (7, 4), (9, 5)]
