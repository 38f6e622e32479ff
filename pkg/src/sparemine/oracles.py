"""Exact mining baselines and the MFI validation report.

``brute_force_mine`` enumerates every subset of the surviving items and is only
meant for tiny inputs. ``apriori_mine`` is levelwise with prefix joins and
subset pruning. ``fpgrowth_mine`` is textbook FP-growth: a multi-node prefix
tree with node-links and recursive conditional trees.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .txdb import RankTable, TransactionDB, as_threshold, prune_and_rank, sort_transaction


@dataclass(frozen=True)
class ExactItemset:
    items: tuple[int, ...]
    support_count: int


def exact_support(db: TransactionDB, items) -> int:
    items = frozenset(items)
    return sum(1 for tx in db.transactions if items <= tx)


def canonical_order(itemsets, ranks: RankTable):
    """Sort by (lowest-ranked member, bitmask of the other ranks): the MFI batch order."""
    rank_of = ranks.rank_of
    return sorted(itemsets, key=lambda s: sum(1 << rank_of[i] for i in s.items))


def _result(found: dict[frozenset[int], int], ranks: RankTable) -> list[ExactItemset]:
    rank_of = ranks.rank_of
    out = [ExactItemset(tuple(sorted(s, key=rank_of.__getitem__)), c) for s, c in found.items()]
    return canonical_order(out, ranks)


def brute_force_mine(db: TransactionDB, minsup) -> list[ExactItemset]:
    threshold = as_threshold(minsup).resolve(db.n_transactions)
    ranks = prune_and_rank(db, threshold)
    found = {}
    for k in range(1, len(ranks) + 1):
        for combo in combinations(ranks.order, k):
            count = exact_support(db, combo)
            if count >= threshold:
                found[frozenset(combo)] = count
    return _result(found, ranks)


def apriori_mine(db: TransactionDB, minsup) -> list[ExactItemset]:
    threshold = as_threshold(minsup).resolve(db.n_transactions)
    ranks = prune_and_rank(db, threshold)
    rank_of = ranks.rank_of
    txs = [frozenset(i for i in tx if i in rank_of) for tx in db.transactions]
    found: dict[frozenset[int], int] = {frozenset([i]): ranks.supports[i] for i in ranks.order}

    level = sorted((i,) for i in ranks.order)
    while level:
        frequent = set(level)
        candidates = []
        # join itemsets sharing all but the last element, then prune
        for a_idx, a in enumerate(level):
            for b in level[a_idx + 1:]:
                if a[:-1] != b[:-1]:
                    break
                cand = a + (b[-1],)
                if all(sub in frequent for sub in combinations(cand, len(cand) - 1)):
                    candidates.append(cand)
        counts = dict.fromkeys(candidates, 0)
        cand_sets = [(c, frozenset(c)) for c in candidates]
        for tx in txs:
            if len(tx) < len(level[0]) + 1:
                continue
            for c, cs in cand_sets:
                if cs <= tx:
                    counts[c] += 1
        level = sorted(c for c, n in counts.items() if n >= threshold)
        for c in level:
            found[frozenset(c)] = counts[c]
    return _result(found, ranks)


class _FPNode:
    __slots__ = ("item", "count", "parent", "children", "link")

    def __init__(self, item, parent):
        self.item = item
        self.count = 0
        self.parent = parent
        self.children = {}
        self.link = None


class _FPTree:
    def __init__(self, order_key):
        self.root = _FPNode(None, None)
        self.heads: dict[int, _FPNode] = {}
        self.tails: dict[int, _FPNode] = {}
        self.counts: dict[int, int] = defaultdict(int)
        self.order_key = order_key

    def add(self, path, count):
        node = self.root
        for item in path:
            child = node.children.get(item)
            if child is None:
                child = _FPNode(item, node)
                node.children[item] = child
                if item in self.tails:
                    self.tails[item].link = child
                else:
                    self.heads[item] = child
                self.tails[item] = child
            child.count += count
            self.counts[item] += count
            node = child

    def prefix_paths(self, item):
        node = self.heads.get(item)
        while node is not None:
            path = []
            parent = node.parent
            while parent.item is not None:
                path.append(parent.item)
                parent = parent.parent
            path.reverse()
            yield path, node.count
            node = node.link


@dataclass
class FPGrowthStats:
    conditional_trees: int = 0


def _conditional_tree(tree: _FPTree, item, threshold, stats: FPGrowthStats) -> _FPTree:
    base = list(tree.prefix_paths(item))
    counts: dict[int, int] = defaultdict(int)
    for path, n in base:
        for i in path:
            counts[i] += n
    keep = {i for i, n in counts.items() if n >= threshold}
    cond = _FPTree(tree.order_key)
    for path, n in base:
        filtered = [i for i in path if i in keep]
        if filtered:
            cond.add(filtered, n)
    stats.conditional_trees += 1
    return cond


def _grow(tree: _FPTree, suffix: tuple, threshold, found, stats):
    # bottom-up over the header: least frequent item first
    for item in sorted(tree.counts, key=tree.order_key, reverse=True):
        count = tree.counts[item]
        if count < threshold:
            continue
        pattern = suffix + (item,)
        found[frozenset(pattern)] = count
        cond = _conditional_tree(tree, item, threshold, stats)
        if cond.counts:
            _grow(cond, pattern, threshold, found, stats)


def fpgrowth_mine(db: TransactionDB, minsup, stats: FPGrowthStats | None = None) -> list[ExactItemset]:
    stats = stats if stats is not None else FPGrowthStats()
    threshold = as_threshold(minsup).resolve(db.n_transactions)
    ranks = prune_and_rank(db, threshold)
    tree = _FPTree(ranks.rank_of.__getitem__)
    for tx in db.transactions:
        path = sort_transaction(tx, ranks)
        if path:
            tree.add(path, 1)
    found: dict[frozenset[int], int] = {}
    _grow(tree, (), threshold, found, stats)
    return _result(found, ranks)


@dataclass
class ValidationReport:
    itemset_precision: float
    itemset_recall: float
    frequency_deltas: list[tuple[tuple[int, ...], int, int]] = field(default_factory=list)
    missing: list[ExactItemset] = field(default_factory=list)
    spurious: list[tuple[tuple[int, ...], int]] = field(default_factory=list)

    @property
    def exact_match(self) -> bool:
        return not self.missing and not self.spurious


def validate(mining, exact) -> ValidationReport:
    """Compare MFI output (a ``MiningResult``) against an exact itemset collection."""
    mined = {frozenset(m.items): m for m in mining.itemsets}
    truth = {frozenset(e.items): e for e in exact}
    common = mined.keys() & truth.keys()
    precision = len(common) / len(mined) if mined else 1.0
    recall = len(common) / len(truth) if truth else 1.0
    deltas = [
        (m.items, m.frequency, truth[frozenset(m.items)].support_count)
        for m in mining.itemsets
        if frozenset(m.items) in common and m.frequency != truth[frozenset(m.items)].support_count
    ]
    missing = [e for e in exact if frozenset(e.items) not in mined]
    spurious = [(m.items, m.frequency) for m in mining.itemsets if frozenset(m.items) not in truth]
    return ValidationReport(precision, recall, deltas, missing, spurious)
