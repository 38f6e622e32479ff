"""MFI mining: frequent itemsets read straight off the header table and parent chains.

No conditional trees, no candidate generation and no recursive tree walk. Each
active header entry (the anchor) yields one batch of itemsets sharing a single
frequency:

* tree count equal to minsup: anchor joined with every subset of the header
  items ranked above it;
* tree count above minsup: anchor joined with every subset of its ancestors,
  at the tree count;
* tree count below minsup: same subsets, at tree count plus spare count.

Batches whose frequency falls below minsup are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .condensed_tree import BuildResult, ancestor_items, spare_count


@dataclass
class MiningStats:
    node_visits: int = 0
    conditional_trees: int = 0
    batches_dropped: int = 0


@dataclass(frozen=True)
class MinedItemset:
    items: tuple[int, ...]
    frequency: int
    anchor: int


@dataclass
class MiningResult:
    itemsets: list[MinedItemset]
    minsup_resolved: int
    batches: dict[int, list[MinedItemset]] = field(default_factory=dict)
    stats: MiningStats = field(default_factory=MiningStats)

    def frequencies(self) -> dict[frozenset[int], int]:
        return {frozenset(m.items): m.frequency for m in self.itemsets}

    def __len__(self):
        return len(self.itemsets)


def _subsets(anchor: int, pool: list[int], rank_of) -> list[tuple[int, ...]]:
    # bit j of the mask selects pool[j]
    out = []
    for mask in range(1 << len(pool)):
        chosen = [pool[j] for j in range(len(pool)) if mask >> j & 1]
        chosen.append(anchor)
        out.append(tuple(sorted(chosen, key=rank_of.__getitem__)))
    return out


def higher_ranked_subsets(state: BuildResult, anchor: int) -> list[tuple[int, ...]]:
    entries = state.header.entries
    for i, entry in enumerate(entries):
        if entry.item == anchor:
            above = [e.item for e in entries[:i]]
            return _subsets(anchor, above, state.ranks.rank_of)
    raise KeyError(f"item {anchor} has no active header entry")


def path_subsets(state: BuildResult, anchor: int, stats: MiningStats | None = None) -> list[tuple[int, ...]]:
    path = ancestor_items(state, anchor, stats)
    return _subsets(anchor, path, state.ranks.rank_of)


def anchor_batch(state: BuildResult, anchor: int, stats: MiningStats | None = None):
    """Return ``(frequency, itemsets)`` for one anchor before the minsup filter."""
    s = state.minsup_resolved
    f = state.header.entry(anchor).tree_count
    if f == s:
        return f, higher_ranked_subsets(state, anchor)
    ff = f if f > s else f + spare_count(state, anchor)
    return ff, path_subsets(state, anchor, stats)


def mine(state: BuildResult, stats: MiningStats | None = None) -> MiningResult:
    stats = stats if stats is not None else MiningStats()
    result = MiningResult([], state.minsup_resolved, stats=stats)
    for entry in state.header.entries:
        ff, sets = anchor_batch(state, entry.item, stats)
        if ff < state.minsup_resolved:
            stats.batches_dropped += 1
            continue
        batch = [MinedItemset(items, ff, entry.item) for items in sets]
        result.batches[entry.item] = batch
        result.itemsets.extend(batch)
    return result
