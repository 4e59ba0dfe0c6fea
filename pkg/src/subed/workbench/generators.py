"""Seeded instance generators."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Literal

import numpy as np

from ..exact import capped_edit_distance
from ..strings import is_primitive

Kind = Literal["random", "periodic", "block_periodic", "planted_edits", "far_pair"]
KINDS = ("random", "periodic", "block_periodic", "planted_edits", "far_pair")
PAIR_KINDS = ("planted_edits", "far_pair")


@dataclass(frozen=True)
class GeneratorSpec:
    kind: Kind
    n: int
    alphabet: int = 4
    period: int | None = None
    primitive: bool = True
    blocks: int | None = None
    edits: int | None = None
    seed: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


def symbols(alphabet: int) -> np.ndarray:
    if not 1 <= alphabet <= 256:
        raise ValueError("alphabet size must be in 1..256")
    if alphabet <= 26:
        return np.arange(97, 97 + alphabet, dtype=np.uint8)
    return np.arange(alphabet, dtype=np.uint8)


def random_string(n: int, alphabet: int, rng: np.random.Generator) -> bytes:
    return symbols(alphabet)[rng.integers(0, alphabet, size=n)].tobytes()


def random_primitive(p: int, alphabet: int, rng: np.random.Generator, tries: int = 1000) -> bytes:
    if p >= 2 and alphabet < 2:
        raise ValueError(f"no primitive word of length {p} over a unary alphabet")
    for _ in range(tries):
        P = random_string(p, alphabet, rng)
        if is_primitive(P):
            return P
    raise ValueError("could not sample a primitive period")


def periodic_string(n: int, P: bytes) -> bytes:
    return (P * (n // len(P) + 1))[:n]


def plant_edits(X: bytes, k: int, rng: np.random.Generator, alphabet: int) -> bytes:
    """Apply k single-character edits; insertions and deletions come in equal numbers."""
    syms = symbols(alphabet)
    pairs = int(rng.integers(0, k // 2 + 1)) if k >= 2 else 0
    ops = ["sub"] * (k - 2 * pairs) + ["ins"] * pairs + ["del"] * pairs
    rng.shuffle(ops)
    Y = bytearray(X)
    for op in ops:
        if op == "ins":
            Y.insert(int(rng.integers(0, len(Y) + 1)), int(syms[rng.integers(alphabet)]))
        elif op == "del" and Y:
            del Y[int(rng.integers(0, len(Y)))]
        elif op == "sub" and Y and alphabet > 1:
            i = int(rng.integers(0, len(Y)))
            choices = syms[syms != Y[i]]
            Y[i] = int(choices[rng.integers(len(choices))])
    return bytes(Y)


def generate(spec: GeneratorSpec) -> bytes | tuple[bytes, bytes]:
    rng = np.random.default_rng(spec.seed)
    n, a = spec.n, spec.alphabet
    if n < 0:
        raise ValueError("n must be non-negative")
    if spec.kind == "random":
        return random_string(n, a, rng)
    if spec.kind == "periodic":
        p = spec.period or 3
        P = random_primitive(p, a, rng) if spec.primitive else random_string(p, a, rng)
        return periodic_string(n, P)
    if spec.kind == "block_periodic":
        L = spec.blocks or 4
        p = spec.period or 3
        cuts = np.sort(rng.choice(np.arange(1, n), size=min(L - 1, max(n - 1, 0)), replace=False)) if n > 1 else []
        bounds = [0, *map(int, cuts), n]
        out = b"".join(
            periodic_string(bounds[i + 1] - bounds[i], random_primitive(int(rng.integers(1, p + 1)), a, rng))
            for i in range(len(bounds) - 1)
        )
        return out
    if spec.kind == "planted_edits":
        k = spec.edits if spec.edits is not None else 4
        if spec.period:
            X = periodic_string(n, random_primitive(spec.period, a, rng))
        else:
            X = random_string(n, a, rng)
        return X, plant_edits(X, k, rng, a)
    if spec.kind == "far_pair":
        return random_string(n, a, rng), random_string(n, a, rng)
    raise ValueError(f"unknown generator kind {spec.kind!r}")


def audit(spec: GeneratorSpec, out, K: int | None = None) -> bool:
    """Re-check the generator's ground-truth claim with an exact oracle."""
    if spec.kind == "planted_edits":
        X, Y = out
        k = spec.edits if spec.edits is not None else 4
        return capped_edit_distance(X, Y, k + 1) <= k
    if spec.kind == "far_pair":
        if K is None:
            return True
        X, Y = out
        return capped_edit_distance(X, Y, K) >= K
    if spec.kind == "periodic" and spec.primitive:
        from ..strings import smallest_period

        return len(out) < 2 * (spec.period or 3) or len(smallest_period(out)) == (spec.period or 3)
    return True
