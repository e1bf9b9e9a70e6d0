"""
bound - field order beyond which S(d; q, A) > 0 for every |A| = set_size
"""
from django.core.management.base import BaseCommand

from apps.search.cli import require, service_error
from core.services.analysis_service import AnalysisService


class Command(BaseCommand):
    help = "Threshold M = (2^s s)^2 for sets of size s"

    def add_arguments(self, parser):
        parser.add_argument('--set-size', type=int, required=True, dest='set_size')

    def handle(self, *args, **options):
        set_size = options['set_size']
        require(set_size >= 1, f"--set-size must be >= 1, got {set_size}")

        result, error = AnalysisService().bound(set_size)
        if error:
            raise service_error(error)

        self.stdout.write(str(result['threshold_M']))
        if result['sharp_threshold'] < result['threshold_M']:
            self.stdout.write(
                f"note: the same lower bound is already positive beyond q = {result['sharp_threshold']}"
            )
