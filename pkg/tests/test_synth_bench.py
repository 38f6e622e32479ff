import itertools
import math

import pytest

from sparemine import dump_basket, item_supports
from sparemine.bench import run_bench
from sparemine.synth import SyntheticSpec, gen_synthetic


def test_empty_spec():
    assert gen_synthetic(SyntheticSpec(0, 5, 1)).n_transactions == 0


def test_seeded_determinism():
    a = dump_basket(gen_synthetic(SyntheticSpec(5665, 12, 42)))
    b = dump_basket(gen_synthetic(SyntheticSpec(5665, 12, 42)))
    assert a == b
    assert a != dump_basket(gen_synthetic(SyntheticSpec(5665, 12, 43)))


def test_popularity_skew():
    db = gen_synthetic(SyntheticSpec(1000, 12, 7))
    sup = item_supports(db)
    by_index = [sup.get(db.index.get(f"i{i:02d}"), 0) for i in range(12)]
    assert by_index[0] == max(by_index)
    for hi, lo in zip(by_index, by_index[1:]):
        # adjacent inversions only within binomial noise
        assert lo <= hi + 3 * math.sqrt(hi)


@pytest.mark.parametrize("kwargs", [dict(decay=1.0), dict(decay=0.0), dict(n_items=0), dict(n_transactions=-1)])
def test_spec_validation(kwargs):
    base = dict(n_transactions=10, n_items=3)
    base.update(kwargs)
    with pytest.raises(ValueError):
        SyntheticSpec(**base)


def test_spec_parse():
    assert SyntheticSpec.parse("5665,12,42") == SyntheticSpec(5665, 12, 42)
    assert SyntheticSpec.parse("10,3", seed=9).seed == 9
    with pytest.raises(ValueError):
        SyntheticSpec.parse("10")


def test_bench_with_fake_clock(table2):
    ticks = itertools.count(0, 0.002)
    report = run_bench(table2, 4, repeat=3, clock=lambda: next(ticks))
    for algo in report.algorithms:
        assert algo.runs == 3
        assert algo.durations_ms == pytest.approx([2.0, 2.0, 2.0])
        assert algo.mean_ms == pytest.approx(2.0)
        assert algo.itemset_count == 9
    names = [a.name for a in report.algorithms]
    assert names == ["improvised", "fpgrowth"]
    assert report.algorithms[0].conditional_trees == [0, 0, 0]
    assert min(report.algorithms[1].conditional_trees) >= 1


def test_bench_single_run(table2):
    report = run_bench(table2, 4, repeat=1)
    for algo in report.algorithms:
        assert algo.mean_ms == algo.durations_ms[0]


def test_bench_rejects_zero_repeat(table2):
    with pytest.raises(ValueError):
        run_bench(table2, 4, repeat=0)
