"""The improvised FP-tree: one node per item, a modified header table and a spare table.

Transactions are inserted once, in support-rank order. Occurrences that cannot
extend the current path (wrong leading item, or an item whose single node lives
elsewhere in the tree) are diverted to the spare table together with every item
that follows them in the transaction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .txdb import RankTable, TransactionDB, as_threshold, item_supports, prune_and_rank, sort_transaction


class Node:
    __slots__ = ("item", "parent", "children")

    def __init__(self, item, parent=None):
        self.item = item
        self.parent = parent
        self.children: dict[int, Node] = {}

    @property
    def is_root(self):
        return self.item is None

    def __repr__(self):
        return f"Node({'NULL' if self.item is None else self.item})"


@dataclass
class HeaderEntry:
    item: int
    tree_count: int = 0
    node: Node | None = None

    @property
    def active(self):
        return self.node is not None


class HeaderTable:
    """Entries pre-allocated in rank order; an entry activates when its node is created."""

    def __init__(self, ranks: RankTable):
        self._entries = [HeaderEntry(item) for item in ranks.order]
        self._by_item = {e.item: e for e in self._entries}

    def entry(self, item: int) -> HeaderEntry:
        return self._by_item[item]

    def has_node(self, item: int) -> bool:
        entry = self._by_item.get(item)
        return entry is not None and entry.node is not None

    @property
    def entries(self) -> list[HeaderEntry]:
        """Active entries only, in descending global support."""
        return [e for e in self._entries if e.node is not None]

    def index_of(self, item: int) -> int:
        for i, e in enumerate(self.entries):
            if e.item == item:
                return i
        raise KeyError(item)

    def counts(self) -> dict[int, int]:
        return {e.item: e.tree_count for e in self.entries}


@dataclass
class BuildResult:
    root: Node
    header: HeaderTable
    spare: dict[int, int]
    ranks: RankTable
    minsup_resolved: int
    n_transactions: int = 0
    nodes: dict[int, Node] = field(default_factory=dict)

    @property
    def top(self):
        return self.ranks.top

    def tree_count(self, item: int) -> int:
        entry = self.header._by_item.get(item)
        return entry.tree_count if entry else 0

    def edges(self) -> list[tuple[int | None, int]]:
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            for child in self._ordered_children(node):
                out.append((node.item, child.item))
            stack.extend(reversed(self._ordered_children(node)))
        return out

    def _ordered_children(self, node: Node) -> list[Node]:
        rank_of = self.ranks.rank_of
        return sorted(node.children.values(), key=lambda n: rank_of[n.item])


def empty_state(ranks: RankTable, minsup_resolved: int) -> BuildResult:
    return BuildResult(Node(None), HeaderTable(ranks), {}, ranks, minsup_resolved)


def _divert(state: BuildResult, items) -> None:
    spare = state.spare
    for item in items:
        spare[item] = spare.get(item, 0) + 1


def insert_transaction(state: BuildResult, sorted_items) -> None:
    """Insert one rank-sorted, pruned transaction into ``state`` in place."""
    if not sorted_items:
        return
    first = sorted_items[0]
    if first != state.top:
        _divert(state, sorted_items)
        return

    header = state.header
    cursor = state.root
    for pos, item in enumerate(sorted_items):
        child = cursor.children.get(item)
        if child is not None:
            header.entry(item).tree_count += 1
            cursor = child
        elif not header.has_node(item):
            child = Node(item, cursor)
            cursor.children[item] = child
            state.nodes[item] = child
            entry = header.entry(item)
            entry.node = child
            entry.tree_count = 1
            cursor = child
        else:
            # node exists on another branch: the rest of the transaction is spare
            _divert(state, sorted_items[pos:])
            return


def build(db: TransactionDB, minsup, ranks: RankTable | None = None) -> BuildResult:
    """Build tree, header table and spare table in a single pass over ``db``.

    One extra scan computes global supports unless ``ranks`` is supplied.
    """
    resolved = as_threshold(minsup).resolve(db.n_transactions)
    if ranks is None:
        ranks = prune_and_rank(db, resolved, item_supports(db))
    state = empty_state(ranks, resolved)
    n = 0
    for tx in db.transactions:
        n += 1
        insert_transaction(state, sort_transaction(tx, ranks))
    state.n_transactions = n
    return state


def spare_count(state: BuildResult, item: int) -> int:
    return state.spare.get(item, 0)


def ancestor_items(state: BuildResult, item: int, stats=None) -> list[int]:
    """Items on the parent chain above ``item``'s node, nearest first, up to the top item."""
    node = state.nodes.get(item)
    if node is None:
        raise KeyError(f"item {item} has no node in the tree")
    out = []
    node = node.parent
    while node is not None and not node.is_root:
        if stats is not None:
            stats.node_visits += 1
        out.append(node.item)
        node = node.parent
    return out


def dump_tree(state: BuildResult, names=None) -> str:
    """Deterministic text rendering: pre-order ``item:count`` lines indented two
    spaces per depth, then ``SPARE item:count`` lines in rank order."""
    label = (lambda i: names[i]) if names is not None else str
    lines = ["NULL"]

    def walk(node, depth):
        for child in state._ordered_children(node):
            lines.append(f"{'  ' * depth}{label(child.item)}:{state.tree_count(child.item)}")
            walk(child, depth + 1)

    walk(state.root, 1)
    for item in state.ranks.order:
        if item in state.spare:
            lines.append(f"SPARE {label(item)}:{state.spare[item]}")
    return "\n".join(lines) + "\n"
