"""Support, confidence and rule derivation from mined itemset frequencies."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .txdb import TransactionDB


class UndefinedMeasure(ValueError):
    pass


def _count(db: TransactionDB, items: frozenset[int]) -> int:
    return sum(1 for tx in db.transactions if items <= tx)


def support(db: TransactionDB, a: Iterable[int], b: Iterable[int]) -> Fraction:
    if db.n_transactions == 0:
        raise UndefinedMeasure("support is undefined on an empty database")
    return Fraction(_count(db, frozenset(a) | frozenset(b)), db.n_transactions)


def confidence(db: TransactionDB, a: Iterable[int], b: Iterable[int]) -> Fraction:
    a = frozenset(a)
    base = _count(db, a)
    if base == 0:
        raise UndefinedMeasure("confidence is undefined: no transaction contains the antecedent")
    return Fraction(_count(db, a | frozenset(b)), base)


def as_confidence(value) -> Fraction:
    conf = Fraction(str(value)) if isinstance(value, float) else Fraction(value)
    if not 0 <= conf <= 1:
        raise ValueError(f"minimum confidence must be in [0, 1], got {value}")
    return conf


@dataclass(frozen=True)
class AssociationRule:
    antecedent: tuple[int, ...]
    consequent: tuple[int, ...]
    support: Fraction
    confidence: Fraction
    selected: bool = True


@dataclass
class RuleReport:
    considered: list[AssociationRule] = field(default_factory=list)
    splits_skipped: int = 0

    @property
    def selected(self) -> list[AssociationRule]:
        return [r for r in self.considered if r.selected]


def evaluate_rules(mining, min_conf, n_transactions: int) -> RuleReport:
    """Score every split of every mined itemset of size >= 2.

    Frequencies come from ``mining`` only; splits whose antecedent was not
    mined are counted in ``splits_skipped``.
    """
    min_conf = as_confidence(min_conf)
    freq = mining.frequencies()
    report = RuleReport()
    for mined in mining.itemsets:
        items = mined.items
        k = len(items)
        if k < 2:
            continue
        for mask in range(1, (1 << k) - 1):
            ante = tuple(items[j] for j in range(k) if mask >> j & 1)
            cons = tuple(items[j] for j in range(k) if not mask >> j & 1)
            ante_freq = freq.get(frozenset(ante))
            if not ante_freq:
                report.splits_skipped += 1
                continue
            conf = Fraction(mined.frequency, ante_freq)
            sup = Fraction(mined.frequency, n_transactions) if n_transactions else Fraction(0)
            report.considered.append(AssociationRule(ante, cons, sup, conf, conf >= min_conf))
    return report


def derive_rules(mining, min_conf, n_transactions: int) -> list[AssociationRule]:
    return evaluate_rules(mining, min_conf, n_transactions).selected
