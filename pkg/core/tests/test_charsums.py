"""
Tests for exact character sums, lower bounds and thresholds
"""
import math
import random

import numpy as np
from django.test import SimpleTestCase
from sympy import divisors

from core.charsums import (
    bound_is_positive,
    char_sum_modulus,
    charsum_report,
    coverage_exponent,
    exact_S,
    lambda_array,
    lambda_value,
    sharp_threshold,
    sweep,
    threshold_M,
    weil_lower_bound,
)
from core.coverage import covers, prime_powers_up_to
from core.exceptions import AccumulatorOverflow, BadOrder, DuplicateRoots, FieldMismatch, PreconditionViolated
from core.fields import field_for
from core.potents import element_set, potent_set
from core.tests.utils import M5_PAIRS, fields_up_to, slow


def direct_S(F, d, A):
    members = A.as_list()
    total = 0
    for gamma in range(F.q):
        if gamma in members:
            continue
        product = 1
        for alpha in members:
            product *= lambda_value(F, d, F.sub(gamma, alpha))
        total += product
    return total


class LambdaTests(SimpleTestCase):

    def test_values(self):
        F = field_for(5)
        self.assertEqual(lambda_value(F, 2, 0), 1)
        self.assertEqual(lambda_value(F, 2, 4), 0)
        self.assertEqual(lambda_value(F, 2, 2), 2)
        self.assertEqual(lambda_value(F, 4, 0), 3)

    def test_bad_order(self):
        with self.assertRaises(BadOrder):
            lambda_value(field_for(5), 3, 1)
        with self.assertRaises(BadOrder):
            lambda_value(field_for(5), 1, 1)

    def test_value_distribution(self):
        for q, d in [(13, 2), (13, 3), (13, 4), (13, 6), (49, 8), (64, 7), (81, 5)]:
            F = field_for(q)
            values = lambda_array(F, d, F.elements())
            self.assertEqual(int(np.sum(values == 0)), (q - 1) // d)
            self.assertEqual(int(np.sum(values == d - 1)), 1)
            self.assertTrue(set(values.tolist()) <= {0, d - 1, d})
            self.assertEqual([lambda_value(F, d, x) for x in range(q)], values.tolist())

    def test_coverage_exponent(self):
        self.assertEqual(coverage_exponent(13, 2), 7)
        self.assertEqual(coverage_exponent(125, 2), 63)


class ExactSTests(SimpleTestCase):

    def test_trivial_range(self):
        F = field_for(5)
        self.assertEqual(exact_S(F, 4, potent_set(F, 5)), 0)

    def test_covered_pair_sums_to_zero(self):
        F = field_for(13)
        self.assertEqual(exact_S(F, 2, potent_set(F, 5)), 0)

    def test_non_pairs_positive(self):
        for q in (37, 61, 101, 109, 137, 149, 157, 173, 181, 197):
            F = field_for(q)
            self.assertGreater(exact_S(F, 2, potent_set(F, 5)), 0, q)

    def test_zero_on_pairs(self):
        for q, n in M5_PAIRS:
            if q % 4 != 1:
                continue
            d = (q - 1) // (n - 1)
            if d < 2:
                continue
            F = field_for(q)
            self.assertEqual(exact_S(F, d, potent_set(F, 5)), 0, (q, n))

    def test_matches_direct_sum(self):
        rng = random.Random(5)
        for q, d in [(13, 3), (29, 4), (49, 3), (31, 5), (27, 2)]:
            F = field_for(q)
            A = element_set(F, rng.sample(range(q), 4), label="A")
            self.assertEqual(exact_S(F, d, A), direct_S(F, d, A))

    def test_oracle_equivalence(self):
        for F in fields_up_to(500):
            q = F.q
            for e in divisors(q - 1):
                m = e + 1
                A = potent_set(F, m)
                for d in divisors(q - 1):
                    if d < 2:
                        continue
                    B = potent_set(F, coverage_exponent(q, d))
                    self.assertEqual(exact_S(F, d, A) == 0, covers(F, A, B).covered, (q, m, d))

    def test_wide_accumulation(self):
        F = field_for(101)
        A = element_set(F, range(0, 40, 2), label="A")
        self.assertEqual(exact_S(F, 10, A), exact_S(F, 10, A, wide=True))
        self.assertEqual(exact_S(F, 10, A), direct_S(F, 10, A))
        with self.assertRaises(AccumulatorOverflow):
            exact_S(F, 10, A, wide=False)

    def test_errors(self):
        F = field_for(13)
        with self.assertRaises(BadOrder):
            exact_S(F, 5, potent_set(F, 5))
        with self.assertRaises(FieldMismatch):
            exact_S(F, 2, potent_set(field_for(17), 5))
        with self.assertRaises(PreconditionViolated):
            exact_S(F, 2, element_set(F, []))


class BoundTests(SimpleTestCase):

    def test_thresholds(self):
        self.assertEqual(threshold_M(5), 25600)
        self.assertEqual(threshold_M(10), 104857600)
        self.assertEqual(threshold_M(1), 4)
        self.assertEqual(sharp_threshold(5), 2809)

    def test_weil_lower_bound(self):
        self.assertAlmostEqual(weil_lower_bound(2, 5, 2809), 52, delta=1e-9)
        q = 10007
        base = q - 49 * math.sqrt(q) - 160
        self.assertAlmostEqual(weil_lower_bound(3, 5, q), 2 ** 5 * base, places=6)
        self.assertAlmostEqual(weil_lower_bound(4, 5, q), 3 ** 5 * base, places=5)

    def test_positivity_is_exact(self):
        self.assertTrue(bound_is_positive(2, 5, 2809))
        self.assertFalse(bound_is_positive(2, 5, 2808))
        self.assertFalse(bound_is_positive(2, 5, 100))
        for q in range(2, 4000):
            self.assertEqual(bound_is_positive(2, 5, q), weil_lower_bound(2, 5, q) > 1e-9, q)

    def test_sharp_threshold_is_smallest_square(self):
        for s in range(1, 12):
            r = math.isqrt(sharp_threshold(s))
            c, k = 2 ** (s - 1) * (s - 2) + 1, 2 ** s * s
            self.assertGreater(r * r - c * r - k, 0)
            self.assertLessEqual((r - 1) ** 2 - c * (r - 1) - k, 0)
            self.assertLessEqual(sharp_threshold(s), threshold_M(s))

    def test_preconditions(self):
        with self.assertRaises(PreconditionViolated):
            threshold_M(0)
        with self.assertRaises(PreconditionViolated):
            weil_lower_bound(1, 5, 13)

    def test_bound_holds(self):
        for F in fields_up_to(600, where=lambda q: q % 4 == 1):
            A = potent_set(F, 5)
            for d in (2, 3, 4):
                if (F.q - 1) % d == 0:
                    report = charsum_report(F, d, A)
                    self.assertGreaterEqual(report.exact_value, report.lower_bound, (F.q, d))

    @slow
    def test_bound_holds_full(self):
        for F in fields_up_to(3000, where=lambda q: q % 4 == 1):
            A = potent_set(F, 5)
            for d in (2, 3, 4):
                if (F.q - 1) % d == 0:
                    self.assertGreaterEqual(exact_S(F, d, A), weil_lower_bound(d, 5, F.q), (F.q, d))

    @slow
    def test_no_coverage_above_sharp_threshold(self):
        for step in sweep(5, 10000, orders=(2, 3, 4), jobs=4):
            if step.q <= 2809:
                continue
            for report in step.reports:
                self.assertGreater(report.exact_value, 0, (step.q, report.d))
                self.assertTrue(report.bound_positive)


class CharSumModulusTests(SimpleTestCase):

    def test_single_root(self):
        F = field_for(13)
        # the Legendre sum over a full line is zero; dropping the root term leaves it zero
        self.assertAlmostEqual(char_sum_modulus(F, 2, [3]), 0.0, places=9)

    def test_two_roots(self):
        for q in (13, 29, 49, 101):
            F = field_for(q)
            self.assertLessEqual(char_sum_modulus(F, 2, [0, 1]), math.sqrt(q) + 1 + 1e-6)

    def test_c5_in_f29(self):
        F = field_for(29)
        self.assertLessEqual(char_sum_modulus(F, 2, potent_set(F, 5).as_list()), 4 * math.sqrt(29) + 5)

    def test_sampled_weil_bound(self):
        rng = random.Random(2024)
        candidates = [(s.q, d) for s in prime_powers_up_to(2000) for d in (2, 3) if (s.q - 1) % d == 0 and s.q > 5]
        for _ in range(200):
            q, d = rng.choice(candidates)
            F = field_for(q)
            t = rng.randint(1, 5)
            roots = rng.sample(range(q), t)
            self.assertLessEqual(char_sum_modulus(F, d, roots), (t - 1) * math.sqrt(q) + t + 1e-6, (q, d, roots))

    def test_errors(self):
        F = field_for(13)
        with self.assertRaises(DuplicateRoots):
            char_sum_modulus(F, 2, [1, 1])
        with self.assertRaises(BadOrder):
            char_sum_modulus(F, 5, [1])

    def test_roots_out_of_range(self):
        # 13 is 0 again in F_13, so these would be a repeated root
        with self.assertRaises(PreconditionViolated):
            char_sum_modulus(field_for(13), 2, [0, 13])
        with self.assertRaises(PreconditionViolated):
            char_sum_modulus(field_for(9), 2, [1, 9])
        with self.assertRaises(PreconditionViolated):
            char_sum_modulus(field_for(9), 2, [-1, 2])


class SweepTests(SimpleTestCase):

    def test_reports(self):
        steps = list(sweep(5, 60))
        self.assertEqual([s.q for s in steps], [5, 9, 13, 17, 25, 29, 37, 41, 49, 53])
        f13 = next(s for s in steps if s.q == 13)
        self.assertEqual([r.d for r in f13.reports], [2, 3, 4])
        self.assertEqual(f13.reports[0].exact_value, 0)
        self.assertTrue(f13.reports[0].covered)
        self.assertEqual(f13.reports[0].n, 7)

    def test_needs_m_above_two(self):
        with self.assertRaises(PreconditionViolated):
            list(sweep(2, 60))

    def test_report_dict(self):
        F = field_for(37)
        data = charsum_report(F, 2, potent_set(F, 5)).to_dict()
        self.assertEqual(data['n'], 19)
        self.assertFalse(data['covered'])
        self.assertGreater(data['exact_S'], 0)
