import io
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import TABLE2, ids
from _strategies import databases
from sparemine.txdb import (
    BasketDecodeError,
    SupportThreshold,
    TransactionDB,
    dump_basket,
    item_supports,
    load_basket,
    load_csv,
    prune_and_rank,
    sort_transaction,
)


def by_name(db, counts):
    return {db.names[i]: c for i, c in counts.items()}


def test_load_table2(table2):
    assert table2.n_transactions == 9
    assert table2.n_items == 5
    assert table2.names == ("A", "B", "C", "D", "E")


def test_load_empty():
    db = load_basket("")
    assert db.n_transactions == 0 and db.n_items == 0


def test_load_dedup_and_separators():
    db = load_basket("A A B\n# comment\n\n  C ,D\tE  \n")
    assert db.transactions[0] == ids(db, "A", "B")
    assert db.transactions[1] == ids(db, "C", "D", "E")
    assert db.n_transactions == 2


def test_load_from_streams():
    text = "\n".join(TABLE2)
    assert load_basket(io.StringIO(text)) == load_basket(io.BytesIO(text.encode()))


def test_decode_error_names_offset():
    with pytest.raises(BasketDecodeError) as exc:
        load_basket(b"A,B\n\xffC\n")
    assert exc.value.offset == 4
    assert "offset 4" in str(exc.value)


def test_load_csv_with_tid():
    db = load_csv("T1,A,B\nT2,B,,C\n", has_tid=True)
    assert db.names == ("A", "B", "C")
    assert db.transactions[1] == ids(db, "B", "C")
    plain = load_csv("A,B\n")
    assert plain.names == ("A", "B")


def test_item_supports_table3(table2):
    assert by_name(table2, item_supports(table2)) == {"A": 7, "B": 6, "C": 6, "D": 5, "E": 1}


def test_item_supports_trivial():
    assert item_supports(load_basket("")) == {}
    db = load_basket("A")
    assert by_name(db, item_supports(db)) == {"A": 1}


def test_prune_and_rank(table2):
    ranks = prune_and_rank(table2, 4)
    assert [table2.names[i] for i in ranks.order] == ["A", "B", "C", "D"]
    # B and C tie at 6, name order decides
    ranks = prune_and_rank(table2, 1)
    assert [table2.names[i] for i in ranks.order] == ["A", "B", "C", "D", "E"]
    assert len(prune_and_rank(table2, 10)) == 0


def test_sort_transaction(table2):
    ranks = prune_and_rank(table2, 4)
    A, B, C, D, E = range(5)
    assert sort_transaction({B, E}, ranks) == [B]
    assert sort_transaction({D, C, A}, ranks) == [A, C, D]
    assert sort_transaction(set(), ranks) == []


@pytest.mark.parametrize(
    "text, n, expected",
    [("4", 9, 4), ("15%", 5665, 850), ("100%", 9, 9), ("50%", 9, 5), ("1%", 3, 1), ("0", 9, 1)],
)
def test_threshold_resolution(text, n, expected):
    assert SupportThreshold.parse(text).resolve(n) == expected


def test_threshold_fraction_is_exact():
    # 0.15 as a float would be 0.1499999..., the parsed percentage is exact
    assert SupportThreshold.parse("15%").raw == Fraction(3, 20)
    assert SupportThreshold(Fraction(1, 3)).resolve(9) == 3


@pytest.mark.parametrize("bad", ["0%", "-3", "abc", "150%", ""])
def test_threshold_rejects(bad):
    with pytest.raises(ValueError):
        SupportThreshold.parse(bad)


@given(databases())
def test_supports_cover_nonempty_transactions(db):
    non_empty = sum(1 for tx in db.transactions if tx)
    assert sum(item_supports(db).values()) >= non_empty


@given(databases())
def test_rank_table_ordered_and_deterministic(db):
    ranks = prune_and_rank(db, 2)
    sup = ranks.supports
    assert all(sup[a] >= sup[b] for a, b in zip(ranks.order, ranks.order[1:]))
    assert all(c >= 2 for c in sup.values())
    assert prune_and_rank(db, 2).order == ranks.order


@given(databases())
def test_sort_idempotent(db):
    ranks = prune_and_rank(db, 1)
    for tx in db.transactions:
        once = sort_transaction(tx, ranks)
        assert sort_transaction(once, ranks) == once


@given(databases())
def test_basket_round_trip(db):
    loaded = load_basket(dump_basket(db))
    again = load_basket(dump_basket(loaded))
    assert again == loaded
    # the only loss through basket text is empty transactions
    assert loaded.n_transactions == sum(1 for tx in db.transactions if tx)


def test_dictionary_is_bijection(table2):
    assert len(set(table2.names)) == table2.n_items
    assert all(table2.index[n] == i for i, n in enumerate(table2.names))
    assert isinstance(table2, TransactionDB)
