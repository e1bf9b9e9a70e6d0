"""
Search Service - Persistent, resumable and parallel searches over prime powers
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path

from django.conf import settings

from core.charsums import sweep
from core.coverage import scan_pairs, triple_search
from core.exceptions import CheckpointMismatch, PotentSumsError
from core.records import (
    Checkpoint,
    ResultKind,
    ResultRecord,
    fingerprint,
    read_records,
    truncate_records,
    write_summary_csv,
)

logger = logging.getLogger(__name__)


@dataclass
class SearchRun:
    """Outcome of one persistent search invocation"""
    command: str
    out_path: Path
    checkpoint_path: Path
    summary_path: Path
    records: list = field(default_factory=list)
    resumed_from: int = 0
    last_completed_q: int = 0
    max_set_size: int | None = None


def pair_records(step):
    return [
        ResultRecord(q=hit.q, p=hit.p, v=hit.v, m=hit.m, k=hit.k, covered=True,
                     kind=ResultKind.PAIR_SEARCH)
        for hit in step.hits
    ]


def triple_records(step):
    return [
        ResultRecord(q=hit.q, p=hit.p, v=hit.v, m=3, k=hit.k, covered=True,
                     kind=ResultKind.TRIPLE_SEARCH,
                     extra={'summands': [3, 4], 'set_size': hit.set_size})
        for hit in step.hits
    ]


def sweep_records(m):
    def convert(step):
        records = []
        for report in step.reports:
            kind = ResultKind.BOUND if report.bound_positive else ResultKind.CHARSUM
            records.append(ResultRecord(
                q=step.spec.q, p=step.spec.p, v=step.spec.v, m=m, k=report.n,
                covered=report.covered, kind=kind,
                extra={
                    'd': report.d,
                    'exact_S': report.exact_value,
                    'lower_bound': report.lower_bound,
                    'slack': report.slack,
                },
            ))
        return records
    return convert


class SearchService:
    """Service for long-running searches with checkpoints"""

    def __init__(self, capacity=None, results_folder=None, jobs=None):
        self.capacity = capacity or settings.FIELD_CAPACITY_LIMIT
        self.results_folder = Path(results_folder or settings.RESULTS_FOLDER)
        self.jobs = jobs or settings.SEARCH_JOBS

    def default_output(self, command, limit, m=None):
        """Default result file inside RESULTS_FOLDER"""
        name = f"{command}_m{m}_limit{limit}.jsonl" if m is not None else f"{command}_limit{limit}.jsonl"
        return self.results_folder / name

    def run_pair_search(self, m, limit, jobs=None, out_path=None, resume=False):
        """check_all(m, limit) persisted as JSON lines"""
        jobs = jobs or self.jobs
        return self._run(
            command='search',
            params={'m': m, 'limit': limit, 'capacity': self.capacity},
            steps=lambda after: scan_pairs(m, limit, jobs=jobs, capacity=self.capacity, after=after),
            to_records=pair_records,
            out_path=out_path or self.default_output('search', limit, m),
            resume=resume,
        )

    def run_triple_search(self, limit, jobs=None, out_path=None, resume=False):
        """triple_search(limit) persisted as JSON lines"""
        jobs = jobs or self.jobs
        return self._run(
            command='triple',
            params={'limit': limit, 'capacity': self.capacity},
            steps=lambda after: triple_search(limit, jobs=jobs, capacity=self.capacity, after=after),
            to_records=triple_records,
            out_path=out_path or self.default_output('triple', limit),
            resume=resume,
        )

    def run_sweep(self, m, limit, orders=None, jobs=None, out_path=None, resume=False):
        """Exact S(d; q, C_m) against the lower bound for every applicable (q, d)"""
        jobs = jobs or self.jobs
        orders = sorted(set(orders)) if orders else list(range(2, m))
        return self._run(
            command='sweep',
            params={'m': m, 'limit': limit, 'orders': orders, 'capacity': self.capacity},
            steps=lambda after: sweep(m, limit, orders=orders, jobs=jobs, capacity=self.capacity, after=after),
            to_records=sweep_records(m),
            out_path=out_path or self.default_output('sweep', limit, m),
            resume=resume,
        )

    def _run(self, command, params, steps, to_records, out_path, resume):
        """Drive a step stream, appending records and checkpointing after every q"""
        try:
            out_path = Path(out_path)
            out_path.parent.mkdir(parents=True, exist_ok=True)
            run = SearchRun(
                command=command,
                out_path=out_path,
                checkpoint_path=out_path.with_name(out_path.name + '.ckpt'),
                summary_path=out_path.with_suffix('.csv'),
            )
            checkpoint = self._open_checkpoint(command, params, run, resume)

            max_set_size = None
            with open(out_path, 'a', encoding='utf-8') as out:
                for step in steps(checkpoint.last_completed_q):
                    records = to_records(step)
                    for record in records:
                        out.write(record.to_json_line() + '\n')
                        logger.info(f"[{command}] q={record.q} k={record.k} covered={record.covered}")
                    out.flush()

                    set_size = getattr(step, 'set_size', None)
                    if set_size is not None:
                        max_set_size = max(max_set_size or 0, set_size)

                    checkpoint.last_completed_q = step.q
                    checkpoint.emitted_hit_count += len(records)
                    checkpoint.save(run.checkpoint_path)
                    logger.debug(f"[{command}] checkpoint at q={step.q}")

            run.records = read_records(out_path)
            run.last_completed_q = checkpoint.last_completed_q
            run.max_set_size = max_set_size
            write_summary_csv(run.summary_path, run.records)
            return run, None
        except PotentSumsError as e:
            logger.warning(f"[{command}] {e}")
            return None, e

    def _open_checkpoint(self, command, params, run, resume):
        expected = fingerprint(command, params)
        if resume:
            checkpoint = Checkpoint.load(run.checkpoint_path)
            if checkpoint is not None:
                if checkpoint.fingerprint != expected:
                    raise CheckpointMismatch(
                        f"checkpoint {run.checkpoint_path} was written by a different command or parameters"
                    )
                kept = truncate_records(run.out_path, checkpoint.emitted_hit_count)
                if kept < checkpoint.emitted_hit_count:
                    raise CheckpointMismatch(
                        f"{run.out_path} holds {kept} record(s) but checkpoint {run.checkpoint_path} "
                        f"expects {checkpoint.emitted_hit_count}"
                    )
                run.resumed_from = checkpoint.last_completed_q
                logger.info(f"[{command}] resuming after q={checkpoint.last_completed_q}")
                return checkpoint

        # Fresh run: start from empty files
        run.out_path.write_text('', encoding='utf-8')
        checkpoint = Checkpoint(fingerprint=expected)
        checkpoint.save(run.checkpoint_path)
        return checkpoint
