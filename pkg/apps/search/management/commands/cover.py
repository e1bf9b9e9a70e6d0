"""
cover - test C_m + C_k = F_q for one field
"""
from django.core.management.base import BaseCommand

from apps.search.cli import EXIT_NEGATIVE, format_coverage, require, service_error
from core.services.analysis_service import AnalysisService


class Command(BaseCommand):
    help = "Coverage report for C_m + C_k over F_q (exit 0 covered, 1 not covered)"

    def add_arguments(self, parser):
        parser.add_argument('--q', type=int, required=True, help='Field order (prime power)')
        parser.add_argument('--m', type=int, required=True)
        parser.add_argument('--k', type=int, required=True)

    def handle(self, *args, **options):
        q, m, k = options['q'], options['m'], options['k']
        require(m > 1 and k > 1, f"--m and --k must be > 1, got {m}, {k}")

        result, error = AnalysisService().cover(q, m, k)
        if error:
            raise service_error(error)

        self.stdout.write(format_coverage(result))
        if not result['report'].covered:
            raise SystemExit(EXIT_NEGATIVE)
