"""
Analysis Service - Single-shot coverage, character sum and threshold computations
"""
import logging

from django.conf import settings

from core.charsums import charsum_report, sharp_threshold, threshold_M
from core.coverage import covers
from core.exceptions import InvalidExponent, PotentSumsError
from core.fields import field_for
from core.potents import element_set, normalize_exponent, potent_set

logger = logging.getLogger(__name__)


class AnalysisService:
    """Service for coverage tests, exact character sums and bound thresholds"""

    def __init__(self, capacity=None, missing_cap=None):
        self.capacity = capacity or settings.FIELD_CAPACITY_LIMIT
        self.missing_cap = missing_cap or settings.MISSING_WITNESS_CAP

    def cover(self, q, m, k):
        """Coverage report of C_m + C_k over F_q, exponents normalized first"""
        try:
            F = field_for(q, self.capacity)
            m0 = normalize_exponent(m, q)
            k0 = normalize_exponent(k, q)
            report = covers(F, potent_set(F, m0), potent_set(F, k0), missing_cap=self.missing_cap)
            logger.debug(f"cover q={q} m={m}->{m0} k={k}->{k0}: covered={report.covered}")
            return {
                'spec': F.spec,
                'm': m0,
                'k': k0,
                'report': report,
            }, None
        except PotentSumsError as e:
            return None, e

    def charsum(self, q, d, m=None, members=None):
        """Exact S(d; q, A) for A = C_m or an explicit member list"""
        try:
            F = field_for(q, self.capacity)
            if members is not None:
                A = element_set(F, members, label='custom A')
            elif m is not None:
                A = potent_set(F, m)
            else:
                raise InvalidExponent(m)
            report = charsum_report(F, d, A)
            logger.debug(f"S({d}; {q}, {A.label}) = {report.exact_value}")
            return report, None
        except PotentSumsError as e:
            return None, e

    def bound(self, set_size):
        """Generic threshold (2^s s)^2 and the square threshold of the same bound"""
        try:
            return {
                'set_size': set_size,
                'threshold_M': threshold_M(set_size),
                'sharp_threshold': sharp_threshold(set_size),
            }, None
        except PotentSumsError as e:
            return None, e
