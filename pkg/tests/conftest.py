from pathlib import Path

import pytest

from sparemine import TransactionDB, load_basket

DATA = Path(__file__).parent / "data"

TABLE1 = ["A,B,D", "A,C,D,E", "B,D", "A", "A,B,C,D"]
TABLE2 = ["A,B,C", "A,D", "B,E", "A,C", "A,C,D", "A,B,C,D", "A,B,C", "B,D", "A,B,C,D"]

_acceptance_lines = []


def record_acceptance(number, title, passed):
    _acceptance_lines.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title}")


@pytest.fixture
def acceptance():
    return record_acceptance


@pytest.fixture
def table1() -> TransactionDB:
    return load_basket("\n".join(TABLE1))


@pytest.fixture
def table2() -> TransactionDB:
    return load_basket("\n".join(TABLE2))


@pytest.fixture
def table2_path() -> Path:
    return DATA / "table2.basket"


def ids(db, *names):
    return frozenset(db.index[n] for n in names)


def named(db, items):
    return "".join(sorted(db.names[i] for i in items))


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
