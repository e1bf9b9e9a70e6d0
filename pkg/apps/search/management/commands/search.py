"""
search - every prime power q <= limit with C_m + C_k = F_q for some k
"""
from django.core.management.base import BaseCommand

from apps.search.cli import (
    add_persistence_arguments,
    check_jobs,
    format_hit_table,
    format_run_footer,
    require,
    service_error,
)
from core.services.search_service import SearchService


class Command(BaseCommand):
    help = "Exhaustive search for (q, k) with every element of F_q an m-potent plus a k-potent"

    def add_arguments(self, parser):
        parser.add_argument('--m', type=int, required=True, help='Left potent exponent (> 1)')
        parser.add_argument('--limit', type=int, required=True, help='Largest field order to test')
        add_persistence_arguments(parser)

    def handle(self, *args, **options):
        m, limit, jobs = options['m'], options['limit'], options['jobs']
        require(m > 1, f"--m must be > 1, got {m}")
        require(limit >= 2, f"--limit must be >= 2, got {limit}")
        check_jobs(jobs)

        run, error = SearchService().run_pair_search(
            m, limit, jobs=jobs, out_path=options['out'], resume=options['resume']
        )
        if error:
            raise service_error(error)

        self.stdout.write(format_hit_table(run.records, f"C_{m} + C_k = F_q for q <= {limit}"))
        self.stdout.write(format_run_footer(run))
