"""
Result records and checkpoints - JSON-lines persistence for long searches
"""
import csv
import hashlib
import json
import logging
import os
from dataclasses import asdict, dataclass
from enum import Enum
from pathlib import Path

logger = logging.getLogger(__name__)

SUMMARY_HEADER = ["q", "p", "v", "m", "k"]


class ResultKind(Enum):
    """Kinds of records written to result files"""
    PAIR_SEARCH = "pair-search"
    TRIPLE_SEARCH = "triple-search"
    CHARSUM = "charsum"
    BOUND = "bound"

    @classmethod
    def get_display_name(cls, kind):
        """Get display name for a record kind"""
        names = {
            cls.PAIR_SEARCH: "Potent pair search",
            cls.TRIPLE_SEARCH: "Potent + 3-potent + 4-potent search",
            cls.CHARSUM: "Exact character sum",
            cls.BOUND: "Character sum with positive lower bound",
        }
        return names.get(kind, kind.value.replace('-', ' ').title())


@dataclass(frozen=True)
class ResultRecord:
    """One line of a result file"""
    q: int
    p: int
    v: int
    m: int
    k: int
    covered: bool
    kind: ResultKind
    extra: dict | None = None

    def to_dict(self):
        data = asdict(self)
        data['kind'] = self.kind.value
        return data

    def to_json_line(self):
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_json_line(cls, line):
        data = json.loads(line)
        return cls(
            q=int(data['q']),
            p=int(data['p']),
            v=int(data['v']),
            m=int(data['m']),
            k=int(data['k']),
            covered=bool(data['covered']),
            kind=ResultKind(data['kind']),
            extra=data.get('extra'),
        )


def fingerprint(command, params):
    """Stable hash of a command name and its parameters"""
    payload = json.dumps({'command': command, 'params': params}, sort_keys=True)
    return hashlib.sha256(payload.encode('utf-8')).hexdigest()


@dataclass
class Checkpoint:
    """Progress marker of a persistent search"""
    fingerprint: str
    last_completed_q: int = 0
    emitted_hit_count: int = 0

    def save(self, path):
        """Write atomically so an interrupted run never leaves a torn checkpoint"""
        path = Path(path)
        tmp_path = path.with_name(path.name + '.tmp')
        with open(tmp_path, 'w', encoding='utf-8') as f:
            json.dump(asdict(self), f)
        os.replace(tmp_path, path)

    @classmethod
    def load(cls, path):
        path = Path(path)
        if not path.exists():
            return None
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        return cls(
            fingerprint=data['fingerprint'],
            last_completed_q=int(data.get('last_completed_q', 0)),
            emitted_hit_count=int(data.get('emitted_hit_count', 0)),
        )


def read_records(path):
    """Parse every record of a JSON-lines result file"""
    with open(path, 'r', encoding='utf-8') as f:
        return [ResultRecord.from_json_line(line) for line in f if line.strip()]


def truncate_records(path, keep):
    """Cut a result file back to its first ``keep`` lines; returns the lines left (0 if missing)"""
    path = Path(path)
    if not path.exists():
        return 0
    with open(path, 'r', encoding='utf-8') as f:
        lines = f.readlines()
    if len(lines) > keep:
        logger.warning(f"Dropping {len(lines) - keep} record(s) written after the last checkpoint")
        with open(path, 'w', encoding='utf-8') as f:
            f.writelines(lines[:keep])
    return min(len(lines), keep)


def write_summary_csv(path, records):
    """Summary table with header q,p,v,m,k"""
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(SUMMARY_HEADER)
        for record in records:
            writer.writerow([record.q, record.p, record.v, record.m, record.k])
