"""Frequent itemset mining with a one-node-per-item FP-tree, a modified header
table and a spare table, plus exact baselines for validation."""

from .condensed_tree import BuildResult, ancestor_items, build, dump_tree, insert_transaction, spare_count
from .mfi import MinedItemset, MiningResult, higher_ranked_subsets, mine, path_subsets
from .oracles import ExactItemset, ValidationReport, apriori_mine, brute_force_mine, exact_support, fpgrowth_mine, validate
from .rules import AssociationRule, confidence, derive_rules, evaluate_rules, support
from .synth import SyntheticSpec, gen_synthetic
from .txdb import (
    RankTable,
    SupportThreshold,
    TransactionDB,
    dump_basket,
    item_supports,
    load_basket,
    load_csv,
    prune_and_rank,
    sort_transaction,
)

__version__ = "0.1.0"
