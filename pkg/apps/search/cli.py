"""
Shared helpers for the search management commands - exit codes and text output
"""
from collections import Counter

from django.core.management.base import CommandError

from core.exceptions import CheckpointMismatch
from core.records import ResultKind

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_STATE_MISMATCH = 3


def usage_error(message):
    return CommandError(message, returncode=EXIT_USAGE)


def require(condition, message):
    """Raise a usage error (exit 2) unless condition holds"""
    if not condition:
        raise usage_error(message)


def service_error(error):
    """Map a service error onto the exit-code contract"""
    if isinstance(error, CheckpointMismatch):
        return CommandError(str(error), returncode=EXIT_STATE_MISMATCH)
    return usage_error(str(error))


def add_persistence_arguments(parser):
    parser.add_argument('--jobs', type=int, default=None, help='Worker processes (default SEARCH_JOBS)')
    parser.add_argument('--out', default=None, help='JSON-lines result file')
    parser.add_argument('--resume', action='store_true', help='Continue from the checkpoint next to --out')


def check_jobs(jobs):
    require(jobs is None or jobs >= 1, f"--jobs must be >= 1, got {jobs}")


def format_hit_table(records, title):
    """Human-readable (q, k) summary table"""
    lines = [title, f"{'q':>8} {'p':>6} {'v':>3} {'m':>3} {'k':>8}"]
    for record in records:
        lines.append(f"{record.q:>8} {record.p:>6} {record.v:>3} {record.m:>3} {record.k:>8}")
    if not records:
        lines.append("  (no hits)")
    pairs = ", ".join(f"({record.q},{record.k})" for record in records)
    lines.append(f"pairs: {pairs}" if pairs else "pairs: none")
    return "\n".join(lines)


def format_run_footer(run):
    counts = Counter(record.kind for record in run.records)
    lines = [f"{len(run.records)} record(s) in {run.out_path}"]
    for kind in sorted(counts, key=lambda k: k.value):
        lines.append(f"  {ResultKind.get_display_name(kind)}: {counts[kind]}")
    lines.append(f"summary: {run.summary_path}")
    if run.resumed_from:
        lines.append(f"resumed after q={run.resumed_from}")
    return "\n".join(lines)


def format_coverage(result):
    report = result['report']
    spec = result['spec']
    lines = [
        f"field: {spec} (q={report.q})",
        f"sets: {report.left_label} + {report.right_label} (normalized m={result['m']}, k={result['k']})",
        f"sumset size: {report.sum_size}/{report.q}",
        f"covered: {'yes' if report.covered else 'no'}",
    ]
    if report.missing:
        lines.append("missing: " + ", ".join(str(x) for x in report.missing))
    return "\n".join(lines)


def format_charsum(report):
    return "\n".join([
        f"S({report.d}; {report.q}, {report.set_label}) with |A|={report.set_size}, n={report.n}",
        f"exact_S: {report.exact_value}",
        f"lower_bound: {report.lower_bound:.6f}",
        f"slack: {report.slack:.6f}",
        f"bound positive: {'yes' if report.bound_positive else 'no'}",
        f"coverage (S = 0): {'yes' if report.covered else 'no'}",
    ])
