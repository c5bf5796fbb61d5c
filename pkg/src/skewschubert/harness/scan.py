"""
Resumable positivity scans of ∂_{w/v} S_u.

Records are JSON lines keyed by (n, w, v, u).  A scan appends to its output
file; with ``resume`` the keys already present are skipped.  Work is split
into static slices handed to worker processes, and only the parent process
writes.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from ..perm import Perm, all_perms, bruhat_lower, lower_covers
from ..poly import Poly
from ..skewop import conjecture1_check

__all__ = ["ScanRecord", "ScanError", "max_rank", "scan_tasks", "read_records", "run_scan"]

MODES = ("edges", "full")
CHUNK = 64
Key = tuple[int, tuple[int, ...], tuple[int, ...], tuple[int, ...]]


class ScanError(Exception):
    """Bad scan arguments or an unreadable resume file."""


@dataclass(frozen=True)
class ScanRecord:
    n: int
    w: Perm
    v: Perm
    u: Perm
    positive: bool
    witness: Poly | None
    elapsed_ms: int

    def __post_init__(self):
        if self.positive != (self.witness is None):
            raise ValueError("witness must be present exactly when the result is negative")

    @property
    def key(self) -> Key:
        return (self.n, self.w.images, self.v.images, self.u.images)

    def to_json(self) -> dict:
        return {
            "n": self.n, "w": list(self.w.images), "v": list(self.v.images), "u": list(self.u.images),
            "positive": self.positive,
            "witness": None if self.witness is None else self.witness.to_json(),
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_json(cls, d: dict) -> ScanRecord:
        wit = d.get("witness")
        return cls(int(d["n"]), Perm(d["w"]), Perm(d["v"]), Perm(d["u"]), bool(d["positive"]),
                   None if wit is None else Poly.from_json(wit), int(d["elapsed_ms"]))


def max_rank() -> int:
    return int(os.environ.get("SCHUBERT_MAX_N", "6"))


def scan_tasks(n: int, mode: str) -> list[tuple[Perm, Perm, Perm]]:
    """(w, v, u) triples in a fixed order: v < w a cover (edges) or any v <= w (full)."""
    if mode not in MODES:
        raise ScanError(f"unknown scan mode {mode!r}")
    perms = all_perms(n)
    tasks = []
    for w in perms:
        if mode == "edges":
            lows = sorted(v for v, _ in lower_covers(w))
        else:
            lows = sorted(bruhat_lower(w))
        for v in lows:
            tasks.extend((w, v, u) for u in perms)
    return tasks


def _check(n: int, w: Perm, v: Perm, u: Perm) -> ScanRecord:
    start = time.perf_counter()
    verdict = conjecture1_check(w, v, u)
    ms = int((time.perf_counter() - start) * 1000)
    return ScanRecord(n, w, v, u, verdict.positive, verdict.witness, ms)


def _run_chunk(args: tuple[int, list[tuple[Perm, Perm, Perm]]]) -> list[ScanRecord]:
    n, chunk = args
    return [_check(n, w, v, u) for w, v, u in chunk]


def read_records(path: Path) -> tuple[list[ScanRecord], int]:
    """
    Load the records in `path`.

    A truncated final line (no trailing newline, not valid JSON) is an
    interrupted write: it is dropped and its byte offset returned so the
    caller can cut the file there.  Any other bad line raises ScanError.
    """
    data = path.read_bytes()
    records = []
    pos = 0
    keep = len(data)
    for raw in data.splitlines(keepends=True):
        end = pos + len(raw)
        line = raw.strip()
        if line:
            try:
                records.append(ScanRecord.from_json(json.loads(line)))
            except (ValueError, KeyError, TypeError) as exc:
                if end == len(data) and not raw.endswith(b"\n"):
                    keep = pos
                    break
                raise ScanError(f"{path}: corrupt record at byte {pos}: {exc}") from exc
        pos = end
    return records, keep


def _chunks(tasks: list, size: int) -> Iterator[list]:
    for i in range(0, len(tasks), size):
        yield tasks[i:i + size]


def run_scan(n: int, mode: str, out: str | Path, resume: bool = False, jobs: int = 1,
             max_records: int | None = None) -> dict:
    """
    Check every task not already in `out` and append its record.

    `max_records` stops after that many new records (a controlled
    interruption).  Returns counts over the whole file.
    """
    if n > max_rank():
        raise ScanError(f"rank {n} exceeds SCHUBERT_MAX_N={max_rank()}")
    if n < 1:
        raise ScanError("rank must be positive")
    out = Path(out)
    tasks = scan_tasks(n, mode)
    existing: list[ScanRecord] = []
    if resume and out.exists():
        existing, keep = read_records(out)
        if keep < out.stat().st_size:
            with open(out, "r+b") as fh:
                fh.truncate(keep)
        if any(r.n != n for r in existing):
            raise ScanError(f"{out}: records of another rank")
    done = {r.key for r in existing}
    todo = [t for t in tasks if (n, t[0].images, t[1].images, t[2].images) not in done]
    if max_records is not None:
        todo = todo[:max_records]

    new: list[ScanRecord] = []
    try:
        fh = open(out, "a" if resume else "w", encoding="utf-8")
    except OSError as exc:
        raise ScanError(f"cannot write {out}: {exc}") from exc
    with fh:
        if jobs > 1 and len(todo) > CHUNK:
            # static slices, results consumed in submission order by this single writer
            size = max(CHUNK, -(-len(todo) // (jobs * 4)))
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                batches = pool.map(_run_chunk, [(n, c) for c in _chunks(todo, size)])
                for batch in batches:
                    _write(fh, batch)
                    new.extend(batch)
        else:
            for chunk in _chunks(todo, CHUNK):
                batch = _run_chunk((n, chunk))
                _write(fh, batch)
                new.extend(batch)

    records = existing + new
    negatives = [r for r in records if not r.positive]
    return {
        "n": n, "mode": mode, "out": str(out),
        "tasks": len(tasks), "new": len(new), "skipped": len(existing),
        "complete": len({r.key for r in records}) == len(tasks),
        "positive": len(records) - len(negatives), "negative": len(negatives),
        "negatives": [r.to_json() for r in negatives],
    }


def _write(fh, batch: list[ScanRecord]) -> None:
    for r in batch:
        fh.write(json.dumps(r.to_json(), separators=(",", ":")) + "\n")
    fh.flush()
