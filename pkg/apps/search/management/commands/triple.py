"""
triple - prime powers q <= limit where every element is a potent plus a 3-potent plus a 4-potent
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
from core.coverage import TRIPLE_SET_BOUND
from core.services.search_service import SearchService


class Command(BaseCommand):
    help = "Search for (q, k) with C_3 + C_4 + C_k = F_q"

    def add_arguments(self, parser):
        parser.add_argument('--limit', type=int, required=True, help='Largest field order to test')
        add_persistence_arguments(parser)

    def handle(self, *args, **options):
        limit, jobs = options['limit'], options['jobs']
        require(limit >= 2, f"--limit must be >= 2, got {limit}")
        check_jobs(jobs)

        run, error = SearchService().run_triple_search(
            limit, jobs=jobs, out_path=options['out'], resume=options['resume']
        )
        if error:
            raise service_error(error)

        self.stdout.write(format_hit_table(run.records, f"C_3 + C_4 + C_k = F_q for q <= {limit}"))
        if run.max_set_size is not None:
            self.stdout.write(
                f"max |C_3 + C_4| over the scanned fields: {run.max_set_size} (<= {TRIPLE_SET_BOUND})"
            )
        self.stdout.write(format_run_footer(run))
