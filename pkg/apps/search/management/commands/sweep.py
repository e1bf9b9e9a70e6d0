"""
sweep - exact S(d; q, C_m) against its lower bound for every applicable (q, d)
"""
from django.core.management.base import BaseCommand

from apps.search.cli import (
    add_persistence_arguments,
    check_jobs,
    format_run_footer,
    require,
    service_error,
)
from core.charsums import sharp_threshold
from core.records import ResultKind
from core.services.search_service import SearchService


class Command(BaseCommand):
    help = "Validate the character sum lower bounds and close the gap above the square threshold"

    def add_arguments(self, parser):
        parser.add_argument('--m', type=int, required=True, help='Potent exponent of the left set (> 2)')
        parser.add_argument('--limit', type=int, required=True, help='Largest field order to test')
        parser.add_argument('--orders', type=int, nargs='+', default=None,
                            help='Character orders d (default 2..m-1)')
        add_persistence_arguments(parser)

    def handle(self, *args, **options):
        m, limit, jobs, orders = options['m'], options['limit'], options['jobs'], options['orders']
        require(m > 2, f"--m must be > 2, got {m}")
        require(limit >= 2, f"--limit must be >= 2, got {limit}")
        require(not orders or min(orders) >= 2, f"--orders must be >= 2, got {orders}")
        check_jobs(jobs)

        run, error = SearchService().run_sweep(
            m, limit, orders=orders, jobs=jobs, out_path=options['out'], resume=options['resume']
        )
        if error:
            raise service_error(error)

        violations = [r for r in run.records if r.extra['slack'] < 0]
        zeros = [r for r in run.records if r.covered]
        certified = [r for r in run.records if r.kind == ResultKind.BOUND]
        self.stdout.write(f"{len(run.records)} character sum(s) of C_{m} for q <= {limit}")
        self.stdout.write("S = 0 (coverage): " + (", ".join(f"({r.q},{r.k})" for r in zeros) or "none"))
        self.stdout.write(f"bound positive (no coverage possible): {len(certified)}, "
                          f"threshold for |A|={m}: {sharp_threshold(m)}")
        self.stdout.write(f"bound violations: {len(violations)}")
        self.stdout.write(format_run_footer(run))
