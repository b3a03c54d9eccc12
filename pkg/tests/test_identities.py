import json

import pytest

from riordan import IdentityReport, Witness, catalog, run
from riordan import identities

import oracles

EXPECTED_CATALOG = [
    "pascal-rowsum",
    "stirling-bell",
    "stirling-inverse",
    "stirling1-altsum",
    "stirling2-colrec",
    "stirling2-rowrec",
    "stirling2-rowrec2",
    "ballot-formula",
    "catalan-rowsum",
    "catalan-convolution",
    "cat2-factor",
    "cat2-entry",
    "cheb-coeffs",
    "periodic-2",
    "periodic-3",
    "nat-4n",
    "fib-5n",
    "fib-even-inverse",
    "fib-odd",
    "inv-pascal",
    "cat2-inverse-factor",
    "cheb-action",
]


def test_catalog_contents():
    names = catalog()
    assert names == EXPECTED_CATALOG
    assert "fib-5n" in names and "nat-4n" in names
    assert len(names) >= 15


@pytest.mark.parametrize("name", EXPECTED_CATALOG)
def test_each_identity_passes(name):
    report = run(name, 6)
    assert report.ok, report.failures()
    assert report.status == "pass"
    assert report.witnesses
    assert all(w.ok for w in report.witnesses)
    assert report.name == name


def test_trivial_row():
    report = run("pascal-rowsum", 0)
    assert report.ok
    assert report.witnesses[-1].lhs == "1"


def test_known_witness_values():
    assert run("nat-4n", 2).witnesses[-1].rhs == "16"
    assert run("pascal-rowsum", 5).witnesses[-1].rhs == "32"
    fib = run("fib-5n", 4)
    assert fib.witnesses[-1].rhs == str(5**4)


def test_run_guards():
    with pytest.raises(ValueError):
        run("nope", 4)
    with pytest.raises(ValueError):
        run("fib-5n", 6, order=5)
    assert run("fib-5n", 6, order=7).ok


def test_report_json_schema():
    report = run("pascal-rowsum", 2)
    data = json.loads(report.to_json())
    assert set(data) == {"name", "n_max", "status", "witnesses"}
    assert data["status"] == "pass"
    assert all(set(w) == {"input", "lhs", "rhs"} for w in data["witnesses"])


def test_witness_and_report_semantics():
    good = Witness("n = 1", "2", "2")
    bad = Witness("n = 2", "4", "5")
    assert good.ok and not bad.ok
    report = IdentityReport("demo", 2, "fail", (good, bad))
    assert not report.ok
    assert report.failures() == (bad,)


# ----------------------------------------------- auxiliary sequence oracles


def test_fibonacci_route_against_fast_doubling():
    for n in range(25):
        assert identities._fibonacci(n) == oracles.fibonacci(n)


def test_catalan_route_against_path_counting():
    for n in range(15):
        assert identities._catalan(n) == oracles.catalan_number(n)


# -------------------------------------------------------------- mutation


def test_corrupted_sequence_is_caught(monkeypatch):
    monkeypatch.setattr(identities, "_fibonacci", lambda m: oracles.fibonacci(m) + (m == 6))
    report = run("fib-5n", 4)
    assert not report.ok
    assert report.status == "fail"
    failures = report.failures()
    assert failures
    assert failures[0].lhs != failures[0].rhs


def test_corrupted_catalan_is_caught(monkeypatch):
    monkeypatch.setattr(identities, "_catalan", lambda m: oracles.catalan_number(m) + (m == 3))
    report = run("catalan-convolution", 5)
    assert not report.ok
