"""Transaction databases: loading, support counting and support-rank ordering."""

from __future__ import annotations

import csv
import io
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

_SPLIT = re.compile(r"[,\s]+")


@dataclass(frozen=True)
class TransactionDB:
    """Transactions as frozensets of dense item ids, plus the id<->name dictionary.

    ``names[i]`` is the label of item ``i``; ids follow first appearance in the source.
    """

    transactions: Sequence[frozenset[int]]
    names: tuple[str, ...]
    index: Mapping[str, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.index:
            object.__setattr__(self, "index", {n: i for i, n in enumerate(self.names)})

    @property
    def n_transactions(self) -> int:
        return len(self.transactions)

    @property
    def n_items(self) -> int:
        return len(self.names)

    @classmethod
    def from_transactions(cls, rows: Iterable[Iterable[str]]) -> "TransactionDB":
        index: dict[str, int] = {}
        txs = []
        for row in rows:
            ids = []
            for name in row:
                if name not in index:
                    index[name] = len(index)
                ids.append(index[name])
            txs.append(frozenset(ids))
        return cls(tuple(txs), tuple(index), index)

    def name_of(self, item: int) -> str:
        return self.names[item]

    def ids(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index[n] for n in names)

    def labels(self, items: Iterable[int]) -> list[str]:
        return [self.names[i] for i in items]


class BasketDecodeError(ValueError):
    def __init__(self, offset: int, reason: str):
        super().__init__(f"invalid UTF-8 at byte offset {offset}: {reason}")
        self.offset = offset


def _decode(data: bytes | str) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise BasketDecodeError(exc.start, exc.reason) from None


def _read(source) -> str:
    if isinstance(source, (bytes, str)):
        return _decode(source)
    return _decode(source.read())


def _basket_lines(text: str):
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield [tok for tok in _SPLIT.split(stripped) if tok]


def load_basket(source) -> TransactionDB:
    """Load a basket file: one transaction per line, items split on commas/whitespace.

    ``source`` may be bytes, str, or a readable text/binary stream. Blank lines and
    ``#`` comments are skipped; repeated items within a line collapse.
    """
    return TransactionDB.from_transactions(_basket_lines(_read(source)))


def load_csv(source, has_tid: bool = False) -> TransactionDB:
    text = _read(source)
    rows = []
    for rec in csv.reader(io.StringIO(text)):
        cells = [c.strip() for c in rec]
        if not cells or cells[0].startswith("#"):
            continue
        if has_tid:
            cells = cells[1:]
        rows.append([c for c in cells if c])
    return TransactionDB.from_transactions(rows)


def dump_basket(db: TransactionDB) -> str:
    """Serialize back to basket text. Items on each line are written in id order,
    so reloading reproduces the same dictionary and transactions."""
    out = []
    for tx in db.transactions:
        out.append(",".join(db.names[i] for i in sorted(tx)))
    return "\n".join(out) + ("\n" if out else "")


@dataclass(frozen=True)
class SupportThreshold:
    """Minimum support as an absolute count (int) or a fraction in (0, 1]."""

    raw: int | Fraction

    def __post_init__(self):
        raw = self.raw
        if isinstance(raw, bool):
            raise ValueError("minimum support must be a number")
        if isinstance(raw, int):
            if raw < 0:
                raise ValueError(f"absolute minimum support must be >= 0, got {raw}")
        else:
            raw = Fraction(raw)
            if not 0 < raw <= 1:
                raise ValueError(f"fractional minimum support must be in (0, 1], got {raw}")
            object.__setattr__(self, "raw", raw)

    @classmethod
    def parse(cls, text: str) -> "SupportThreshold":
        """``"4"`` is an absolute count, ``"15%"`` a percentage."""
        text = text.strip()
        try:
            if text.endswith("%"):
                return cls(Fraction(text[:-1]) / 100)
            return cls(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid minimum support {text!r}: {exc}") from None

    def resolve(self, n_transactions: int) -> int:
        if isinstance(self.raw, int):
            count = self.raw
        else:
            count = math.ceil(self.raw * n_transactions)
        return max(count, 1)

    def __str__(self):
        if isinstance(self.raw, int):
            return str(self.raw)
        pct = self.raw * 100
        return f"{pct.numerator}%" if pct.denominator == 1 else f"{float(pct)}%"


def as_threshold(minsup) -> SupportThreshold:
    if isinstance(minsup, SupportThreshold):
        return minsup
    if isinstance(minsup, str):
        return SupportThreshold.parse(minsup)
    if isinstance(minsup, float):
        return SupportThreshold(Fraction(str(minsup)))
    return SupportThreshold(minsup)


def item_supports(db: TransactionDB) -> dict[int, int]:
    counts: Counter[int] = Counter()
    for tx in db.transactions:
        counts.update(tx)
    return dict(counts)


@dataclass(frozen=True)
class RankTable:
    """Surviving items in descending global support; ties by ascending name."""

    order: tuple[int, ...]
    rank_of: Mapping[int, int]
    supports: Mapping[int, int]

    def __len__(self):
        return len(self.order)

    def __contains__(self, item):
        return item in self.rank_of

    @property
    def top(self) -> int | None:
        return self.order[0] if self.order else None


def prune_and_rank(db: TransactionDB, minsup, supports: Mapping[int, int] | None = None) -> RankTable:
    threshold = as_threshold(minsup).resolve(db.n_transactions)
    if supports is None:
        supports = item_supports(db)
    kept = [i for i, c in supports.items() if c >= threshold]
    kept.sort(key=lambda i: (-supports[i], db.names[i]))
    return RankTable(
        order=tuple(kept),
        rank_of={item: r for r, item in enumerate(kept)},
        supports={i: supports[i] for i in kept},
    )


def sort_transaction(tx: Iterable[int], ranks: RankTable) -> list[int]:
    rank_of = ranks.rank_of
    return sorted((i for i in tx if i in rank_of), key=rank_of.__getitem__)
