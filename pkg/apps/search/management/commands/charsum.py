"""
charsum - exact S(d; q, A) with its lower bound
"""
from django.core.management.base import BaseCommand

from apps.search.cli import format_charsum, require, service_error, usage_error
from core.services.analysis_service import AnalysisService


def parse_members(text):
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise usage_error(f"--set expects comma-separated element indices, got {text!r}")


class Command(BaseCommand):
    help = "Exact character sum S(d; q, C_m) (or an explicit set A) and the Weil-type lower bound"

    def add_arguments(self, parser):
        parser.add_argument('--q', type=int, required=True, help='Field order (prime power)')
        parser.add_argument('--d', type=int, required=True, help='Character order, d | q-1')
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument('--m', type=int, help='Use A = C_m')
        group.add_argument('--set', dest='members', help='Use an explicit set A, e.g. 0,1,5')

    def handle(self, *args, **options):
        q, d, m = options['q'], options['d'], options['m']
        members = parse_members(options['members']) if options['members'] else None
        require(m is None or m > 1, f"--m must be > 1, got {m}")
        require(members is None or members, "--set must name at least one element")

        report, error = AnalysisService().charsum(q, d, m=m, members=members)
        if error:
            raise service_error(error)

        self.stdout.write(format_charsum(report))
