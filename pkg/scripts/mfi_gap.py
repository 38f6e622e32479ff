"""How far MFI output drifts from exact mining as minimum support varies."""

import argparse

from sparemine.condensed_tree import build
from sparemine.mfi import mine
from sparemine.oracles import apriori_mine, validate
from sparemine.synth import SyntheticSpec, gen_synthetic


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--spec", default="5665,12,42")
    p.add_argument("--minsups", nargs="+", default=["5%", "10%", "15%", "20%", "30%"])
    args = p.parse_args()

    db = gen_synthetic(SyntheticSpec.parse(args.spec))
    print(f"{'minsup':>7} {'mined':>6} {'exact':>6} {'precision':>9} {'recall':>7} {'deltas':>7}")
    for minsup in args.minsups:
        mined = mine(build(db, minsup))
        exact = apriori_mine(db, minsup)
        r = validate(mined, exact)
        print(f"{minsup:>7} {len(mined):>6} {len(exact):>6} {r.itemset_precision:>9.3f} "
              f"{r.itemset_recall:>7.3f} {len(r.frequency_deltas):>7}")


if __name__ == "__main__":
    main()
