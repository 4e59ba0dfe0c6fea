"""Command line entry point: ``subed <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from ..config import PROFILES, default_profile
from ..exact import capped_edit_distance, ed_many_shifts_2approx, exact_edit_distance
from ..gap import decide_gap
from ..tree import PartitionTree, tree_distance_exact
from . import selftest
from .generators import KINDS, PAIR_KINDS, GeneratorSpec, generate
from .runner import read_jsonl, run_experiment, write_csv, write_jsonl


def _load(path: str) -> bytes:
    return Path(path).read_bytes()


def cmd_gen(a: argparse.Namespace) -> int:
    spec = GeneratorSpec(
        kind=a.kind, n=a.n, alphabet=a.alphabet, period=a.period, primitive=not a.non_primitive,
        blocks=a.blocks, edits=a.edits, seed=a.seed,
    )
    out = generate(spec)
    if a.kind in PAIR_KINDS:
        X, Y = out
        Path(a.out).write_bytes(X)
        Path(a.out_y or a.out + ".y").write_bytes(Y)
    else:
        Path(a.out).write_bytes(out)
    return 0


def cmd_exact(a: argparse.Namespace) -> int:
    X, Y = _load(a.x), _load(a.y)
    print(capped_edit_distance(X, Y, a.cap) if a.cap is not None else exact_edit_distance(X, Y))
    return 0


def cmd_shifts(a: argparse.Namespace) -> int:
    prof = ed_many_shifts_2approx(_load(a.x), _load(a.y), a.k)
    print(json.dumps({"K": prof.K, "shifts": list(prof.shifts()), "values": prof.tolist()}))
    return 0


def cmd_tree_dist(a: argparse.Namespace) -> int:
    X, Y = _load(a.x), _load(a.y)
    if len(X) != len(Y):
        print("tree-dist needs equal-length strings", file=sys.stderr)
        return 2
    root = PartitionTree(len(X), a.branching, a.leaf_cap or len(X)).root
    print(tree_distance_exact(X, Y, root, a.cap))
    return 0


def cmd_gap(a: argparse.Namespace) -> int:
    rep = decide_gap(
        _load(a.x), _load(a.y), a.k, a.branching, a.profile,
        rng=np.random.default_rng(a.seed), seed=a.seed, budget_reads=a.budget_reads,
    )
    print(json.dumps(rep.to_dict(), sort_keys=True))
    return 0


def cmd_bench(a: argparse.Namespace) -> int:
    batch = json.loads(Path(a.spec).read_text())
    with open(a.out, "w") as fh:
        write_jsonl(run_experiment(batch, jobs=a.jobs), fh)
    if a.csv:
        with open(a.out) as fh, open(a.csv, "w", newline="") as out:
            write_csv(read_jsonl(fh), out)
    return 0


def cmd_selftest(a: argparse.Namespace) -> int:
    return 0 if selftest.run(a.seed) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="subed", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a generated instance")
    g.add_argument("--kind", choices=KINDS, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True, help="output file (X for pair kinds)")
    g.add_argument("--out-y", help="Y output for pair kinds (default: OUT.y)")
    g.add_argument("--alphabet", type=int, default=4)
    g.add_argument("--period", type=int)
    g.add_argument("--non-primitive", action="store_true")
    g.add_argument("--blocks", type=int)
    g.add_argument("--edits", type=int)
    g.set_defaults(fn=cmd_gen)

    e = sub.add_parser("exact", help="exact (or capped) edit distance")
    e.add_argument("--x", required=True)
    e.add_argument("--y", required=True)
    e.add_argument("--cap", type=int)
    e.set_defaults(fn=cmd_exact)

    s = sub.add_parser("shifts", help="2-approximate capped distance for all shifts")
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True, help="must be |X| + 2k long")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(fn=cmd_shifts)

    t = sub.add_parser("tree-dist", help="exact capped tree distance (small n)")
    t.add_argument("--x", required=True)
    t.add_argument("--y", required=True)
    t.add_argument("--branching", type=int, required=True)
    t.add_argument("--cap", type=int, required=True)
    t.add_argument("--leaf-cap", type=int)
    t.set_defaults(fn=cmd_tree_dist)

    d = sub.add_parser("gap", help="decide ED <= k versus ED >= K")
    d.add_argument("--x", required=True)
    d.add_argument("--y", required=True)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--branching", type=int, default=4)
    d.add_argument("--profile", choices=PROFILES, default=None)
    d.add_argument("--budget-reads", type=float)
    d.add_argument("--seed", type=int, default=0)
    d.set_defaults(fn=cmd_gap)

    b = sub.add_parser("bench", help="run a batch file and write JSON lines")
    b.add_argument("--spec", required=True)
    b.add_argument("--out", required=True)
    b.add_argument("--csv")
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(fn=cmd_bench)

    st = sub.add_parser("selftest", help="run the built-in invariant checks")
    st.add_argument("--seed", type=int, default=0)
    st.set_defaults(fn=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "profile", "unset") is None:
        args.profile = default_profile()
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
