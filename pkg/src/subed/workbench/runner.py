"""Batch experiments: one gap decision per trial, written as JSON lines.

A batch file is JSON, either a single group object or a list of groups::

    {"trials": 50, "seed": 1000, "n": 100000, "k": 8, "B": 4,
     "kind": "planted_edits", "alphabet": 4, "profile": "desk",
     "budget_reads": null, "audit": false}

Trial t of a group uses seed ``seed + t`` for both the instance and the
solver, so reruns reproduce verdicts and read counts exactly.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

import numpy as np

from ..config import default_profile
from ..gap import decide_gap, gap_cap
from .generators import GeneratorSpec, audit, generate

RECORD_FIELDS = (
    "n", "k", "K", "B", "profile", "seed", "verdict", "delta_root", "reads", "elapsed_ms", "rule_histogram",
)

RECORD_SCHEMA = {
    "type": "object",
    "required": list(RECORD_FIELDS),
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "k": {"type": "integer", "minimum": 1},
        "K": {"type": "integer", "minimum": 1},
        "B": {"type": "integer", "minimum": 2},
        "profile": {"enum": ["paper", "desk"]},
        "seed": {"type": "integer"},
        "verdict": {"enum": ["close", "far"]},
        "delta_root": {"type": "number"},
        "reads": {"type": "integer", "minimum": 0},
        "elapsed_ms": {"type": "number", "minimum": 0},
        "rule_histogram": {"type": "object", "additionalProperties": {"type": "integer"}},
        "kind": {"type": "string"},
        "budget_exceeded": {"type": "boolean"},
        "audit_ok": {"type": ["boolean", "null"]},
    },
}

HEADER = {"format": "subed-report", "version": 1, "fields": list(RECORD_FIELDS)}


@dataclass(frozen=True)
class Trial:
    index: int
    seed: int
    n: int
    k: int
    B: int
    kind: str
    alphabet: int
    profile: str
    budget_reads: float | None
    audit: bool
    edits: int | None
    period: int | None


class TrialError(RuntimeError):
    def __init__(self, index: int, cause: Exception):
        super().__init__(f"trial {index}: {cause}")
        self.index = index


def expand(batch: dict | list) -> list[Trial]:
    groups = batch if isinstance(batch, list) else [batch]
    out: list[Trial] = []
    for g in groups:
        base = int(g.get("seed", 0))
        for t in range(int(g.get("trials", 1))):
            out.append(Trial(
                index=len(out), seed=base + t, n=int(g["n"]), k=int(g["k"]), B=int(g.get("B", 4)),
                kind=g.get("kind", "planted_edits"), alphabet=int(g.get("alphabet", 4)),
                profile=g.get("profile") or default_profile(), budget_reads=g.get("budget_reads"),
                audit=bool(g.get("audit", False)), edits=g.get("edits"), period=g.get("period"),
            ))
    return out


def run_trial(tr: Trial) -> dict:
    spec = GeneratorSpec(
        kind=tr.kind, n=tr.n, alphabet=tr.alphabet, seed=tr.seed, period=tr.period,
        edits=tr.edits if tr.edits is not None else tr.k,
    )
    X, Y = generate(spec)
    rep = decide_gap(X, Y, tr.k, tr.B, tr.profile, rng=np.random.default_rng([tr.seed, 1]),
                     seed=tr.seed, budget_reads=tr.budget_reads)
    rec = {f: getattr(rep, f) for f in RECORD_FIELDS}
    rec["kind"] = tr.kind
    rec["budget_exceeded"] = rep.budget_exceeded
    # audit mode checks every trial; otherwise a seeded 5% sample
    check = tr.audit or np.random.default_rng([tr.seed, 2]).random() < 0.05
    rec["audit_ok"] = audit(spec, (X, Y), gap_cap(tr.n, tr.k, tr.B, tr.profile)) if check else None
    return rec


def run_experiment(batch: dict | list, jobs: int = 1) -> Iterator[dict]:
    trials = expand(batch)
    if jobs <= 1:
        for tr in trials:
            try:
                yield run_trial(tr)
            except Exception as e:
                raise TrialError(tr.index, e) from e
        return
    with ProcessPoolExecutor(jobs) as pool:
        futures = [pool.submit(run_trial, tr) for tr in trials]
        for tr, fut in zip(trials, futures):
            try:
                yield fut.result()
            except Exception as e:
                raise TrialError(tr.index, e) from e


def write_jsonl(records: Iterable[dict], fh: IO[str]) -> int:
    fh.write(json.dumps(HEADER) + "\n")
    count = 0
    for rec in records:
        fh.write(json.dumps(rec, sort_keys=True) + "\n")
        fh.flush()
        count += 1
    return count


def read_jsonl(fh: IO[str]) -> list[dict]:
    lines = [json.loads(line) for line in fh if line.strip()]
    if lines and lines[0].get("format") == HEADER["format"]:
        lines = lines[1:]
    return lines


def write_csv(records: Iterable[dict], fh: IO[str]) -> None:
    w = csv.writer(fh)
    w.writerow(RECORD_FIELDS)
    for rec in records:
        w.writerow([json.dumps(rec[f], sort_keys=True) if f == "rule_histogram" else rec[f] for f in RECORD_FIELDS])
