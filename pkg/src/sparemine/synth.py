"""Seeded synthetic basket data with geometrically skewed item popularity."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass

from .txdb import TransactionDB


@dataclass(frozen=True)
class SyntheticSpec:
    n_transactions: int
    n_items: int
    seed: int = 42
    decay: float = 0.8        # item i is drawn with weight decay**i
    length_p: float = 0.35    # per-step stop probability of the length geometric
    max_length: int | None = None

    def __post_init__(self):
        if self.n_items < 1:
            raise ValueError("n_items must be >= 1")
        if self.n_transactions < 0:
            raise ValueError("n_transactions must be >= 0")
        if not 0 < self.decay < 1:
            raise ValueError(f"decay must be in (0, 1), got {self.decay}")
        if not 0 < self.length_p <= 1:
            raise ValueError(f"length_p must be in (0, 1], got {self.length_p}")

    @classmethod
    def parse(cls, text: str, **overrides) -> "SyntheticSpec":
        """``"n_tx,n_items[,seed]"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) not in (2, 3):
            raise ValueError(f"expected n_tx,n_items[,seed], got {text!r}")
        vals = [int(p) for p in parts]
        kwargs = dict(n_transactions=vals[0], n_items=vals[1])
        if len(vals) == 3:
            kwargs["seed"] = vals[2]
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kwargs)

    def as_dict(self):
        return asdict(self)


def item_name(i: int, n_items: int) -> str:
    return f"i{i:0{len(str(n_items - 1))}d}"


def gen_synthetic(spec: SyntheticSpec) -> TransactionDB:
    rng = random.Random(spec.seed)
    cap = min(spec.max_length or spec.n_items, spec.n_items)
    weights = [spec.decay ** i for i in range(spec.n_items)]
    names = [item_name(i, spec.n_items) for i in range(spec.n_items)]
    rows = []
    for _ in range(spec.n_transactions):
        length = 1
        while length < cap and rng.random() > spec.length_p:
            length += 1
        pool = list(range(spec.n_items))
        w = list(weights)
        picked = []
        for _ in range(length):
            j = rng.choices(range(len(pool)), weights=w)[0]
            picked.append(pool.pop(j))
            w.pop(j)
        rows.append([names[i] for i in sorted(picked)])
    return TransactionDB.from_transactions(rows)
