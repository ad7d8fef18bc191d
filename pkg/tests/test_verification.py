import pytest

from subshiftlab import (
    Counterexample,
    DomainError,
    ProfileSource,
    formula_profile,
    left_special_formula,
    verify_range,
)


def test_verify_small_range():
    report = verify_range(64)
    assert report.passed
    assert report.counterexample is None
    assert report.mismatches == 0
    assert report.summary_line() == "VERIFY pass L_max=64"
    assert report.oracle.source is ProfileSource.ORACLE
    assert report.oracle.values == formula_profile(64).values


def test_verify_full_range():
    """
    Closed forms agree with the oracle for every length up to 4096.
    """
    report = verify_range(4096)
    assert report.passed, report.info()
    assert report.summary_line() == "VERIFY pass L_max=4096"


def test_verify_reports_first_counterexample(monkeypatch):
    monkeypatch.setattr(
        "subshiftlab.closedform.verification.complexity_formula",
        lambda L: 1000 if L >= 5 else {1: 4, 2: 6, 3: 8, 4: 10}[L],
    )
    report = verify_range(8)
    assert not report.passed
    assert report.counterexample == Counterexample(5, "complexity", "1000", "13")
    assert report.mismatches == 4
    assert report.summary_line() == "VERIFY fail L_max=8"
    assert report.counterexample.describe() == (
        "mismatch at L=5 (complexity): formula=1000 oracle=13"
    )
    assert "First counterexample" in report.info()


def test_verify_right_special_mismatch(monkeypatch):
    monkeypatch.setattr(
        "subshiftlab.closedform.verification.right_special_formula", left_special_formula
    )
    report = verify_range(6)
    assert not report.passed
    assert report.counterexample is not None
    assert report.counterexample.length == 2
    assert report.counterexample.check == "right-special words"
    assert "xa:xyz" in report.counterexample.observed


def test_verify_invalid_range():
    with pytest.raises(DomainError):
        verify_range(0)
