"""``sparemine`` command-line front end.

Exit codes: 0 ok, 1 strict validation failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import run_bench
from .condensed_tree import build
from .mfi import mine
from .oracles import apriori_mine, fpgrowth_mine, validate
from .rules import as_confidence, evaluate_rules
from .synth import SyntheticSpec, gen_synthetic
from .txdb import BasketDecodeError, SupportThreshold, dump_basket, load_basket, load_csv


class UsageError(Exception):
    pass


def _minsup(text):
    if text is None:
        raise UsageError("--minsup is required")
    try:
        threshold = SupportThreshold.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if threshold.raw == 0:
        raise UsageError(f"minimum support must be positive, got {text!r}")
    return threshold


def _load(args):
    if args.input and args.spec:
        raise UsageError("give either --input or --spec, not both")
    if args.spec:
        try:
            spec = SyntheticSpec.parse(args.spec, seed=args.seed, decay=args.decay)
        except (ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from None
        return gen_synthetic(spec), {"synthetic": spec.as_dict()}
    if not args.input:
        raise UsageError("--input or --spec is required")
    path = Path(args.input)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        if args.csv or path.suffix.lower() == ".csv":
            db = load_csv(data, has_tid=args.tid)
        else:
            db = load_basket(data)
    except BasketDecodeError as exc:
        raise UsageError(f"{path}: {exc}") from None
    return db, {"path": str(path)}


def _names(db, items):
    return [db.names[i] for i in items]


def _fmt_float(x):
    return float(round(float(x), 6))


def _emit_itemsets(db, pairs, fmt, out):
    if fmt == "tsv":
        for items, freq in pairs:
            out.write(f"{','.join(_names(db, items))}\t{freq}\n")
    else:
        data = [{"items": _names(db, items), "frequency": freq} for items, freq in pairs]
        out.write(json.dumps(data, indent=2) + "\n")


def cmd_mine(args, out):
    db, _ = _load(args)
    minsup = _minsup(args.minsup)
    if args.algo == "improvised":
        pairs = [(m.items, m.frequency) for m in mine(build(db, minsup)).itemsets]
    else:
        miner = apriori_mine if args.algo == "apriori" else fpgrowth_mine
        pairs = [(e.items, e.support_count) for e in miner(db, minsup)]
    _emit_itemsets(db, pairs, args.format, out)
    return 0


def cmd_rules(args, out):
    db, _ = _load(args)
    minsup = _minsup(args.minsup)
    try:
        min_conf = as_confidence(args.minconf)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = evaluate_rules(mine(build(db, minsup)), min_conf, db.n_transactions)
    summary = {
        "rules_considered": len(report.considered),
        "rules_selected": len(report.selected),
        "splits_skipped": report.splits_skipped,
    }
    if args.format == "tsv":
        for r in report.considered:
            out.write("\t".join([
                ",".join(_names(db, r.antecedent)),
                ",".join(_names(db, r.consequent)),
                f"{_fmt_float(r.support)}",
                f"{_fmt_float(r.confidence)}",
                "selected" if r.selected else "rejected",
            ]) + "\n")
        out.write("".join(f"# {k}={v}\n" for k, v in summary.items()))
    else:
        rules = [
            {
                "antecedent": _names(db, r.antecedent),
                "consequent": _names(db, r.consequent),
                "support": _fmt_float(r.support),
                "confidence": _fmt_float(r.confidence),
                "selected": r.selected,
            }
            for r in report.considered
        ]
        out.write(json.dumps({"rules": rules, "summary": summary}, indent=2) + "\n")
    return 0


def cmd_validate(args, out):
    db, _ = _load(args)
    minsup = _minsup(args.minsup)
    report = validate(mine(build(db, minsup)), apriori_mine(db, minsup))
    data = {
        "itemset_precision": report.itemset_precision,
        "itemset_recall": report.itemset_recall,
        "frequency_deltas": [
            {"items": _names(db, items), "mfi_frequency": f, "exact_support": e}
            for items, f, e in report.frequency_deltas
        ],
        "missing": [{"items": _names(db, e.items), "exact_support": e.support_count} for e in report.missing],
        "spurious": [{"items": _names(db, items), "mfi_frequency": f} for items, f in report.spurious],
    }
    out.write(json.dumps(data, indent=2) + "\n")
    if args.strict and not report.exact_match:
        return 1
    return 0


def cmd_bench(args, out):
    db, source = _load(args)
    minsup = _minsup(args.minsup)
    if args.repeat < 1:
        raise UsageError("--repeat must be >= 1")
    report = run_bench(db, minsup, repeat=args.repeat, source=source)
    out.write(json.dumps(report.as_dict(timings=not args.no_timings), indent=2) + "\n")
    return 0


def cmd_gen(args, out):
    if not args.spec:
        raise UsageError("gen requires --spec n_tx,n_items[,seed]")
    db, _ = _load(args)
    out.write(dump_basket(db))
    return 0


def cmd_tree(args, out):
    from .condensed_tree import dump_tree

    db, _ = _load(args)
    out.write(dump_tree(build(db, _minsup(args.minsup)), db.names))
    return 0


COMMANDS = {
    "mine": cmd_mine,
    "rules": cmd_rules,
    "validate": cmd_validate,
    "bench": cmd_bench,
    "gen": cmd_gen,
    "tree": cmd_tree,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def make_parser():
    p = _Parser(prog="sparemine", description="Frequent itemset mining with the improvised FP-tree.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--input", help="basket or CSV file")
    p.add_argument("--spec", help="synthetic dataset n_tx,n_items[,seed] instead of --input")
    p.add_argument("--seed", type=int, help="seed for --spec (overrides the third field)")
    p.add_argument("--decay", type=float, help="popularity decay for --spec, in (0, 1)")
    p.add_argument("--csv", action="store_true", help="parse input as CSV regardless of extension")
    p.add_argument("--tid", action="store_true", help="first CSV column is a transaction id")
    p.add_argument("--minsup", help="absolute count N or percentage P%%")
    p.add_argument("--minconf", default="0.6", help="minimum confidence in [0, 1] (default 0.6)")
    p.add_argument("--algo", choices=["improvised", "fpgrowth", "apriori"], default="improvised")
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p.add_argument("--repeat", type=int, default=10)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--no-timings", action="store_true", help="omit timing fields from bench output")
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = make_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"sparemine: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
