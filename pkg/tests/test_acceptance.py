"""The acceptance criteria, one test each.  The PASS/FAIL lines are repeated at the end of the run."""
import time

import pytest

from hopflab import acceptance
from hopflab import families as fam
from hopflab.core import BiForm

from conftest import ACCEPTANCE_LINES

KEYS = [k for k, _, _ in acceptance.CRITERIA]


@pytest.mark.parametrize("key", KEYS)
def test_criterion(key):
    r = acceptance.run_criterion(key)
    line = f"{key} {'PASS' if r['passed'] else 'FAIL'}  {r['detail']}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert r["passed"], r["detail"]


def test_criteria_listed():
    assert KEYS == [f"A{i}" for i in range(1, 12)]


def test_quick_suite_is_fast():
    t0 = time.perf_counter()
    rep = acceptance.run_suite("quick")
    assert time.perf_counter() - t0 < 60
    assert rep["passed"]
    assert {r["criterion"] for r in rep["results"]} == set(acceptance.QUICK)


def test_full_suite_includes_oracle_criteria():
    rep = acceptance.run_suite("full", only=("A3", "A7"))
    assert [r["criterion"] for r in rep["results"]] == ["A3", "A7"]
    assert rep["passed"]


def test_sign_error_is_caught(monkeypatch):
    good = fam.sweedler_sigma

    def flipped(t, H=None):
        s = good(t, H)
        m = [list(r) for r in s.m]
        m[3][3] = -m[3][3]
        return BiForm(s.hopf, m)

    monkeypatch.setattr(fam, "sweedler_sigma", flipped)
    r = acceptance.run_criterion("A1")
    print(f"A1 with a sign error: {'PASS' if r['passed'] else 'FAIL'}  {r['detail']}")
    assert not r["passed"]
