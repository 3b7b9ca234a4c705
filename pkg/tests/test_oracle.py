from decimal import Decimal, getcontext

import pytest
from hypothesis import given, strategies as st

from gapseq.errors import EmptyWord
from gapseq.gaps import EPSILON, SignedWord
from gapseq.oracle import (
    all_factors,
    all_pass,
    cutting_prefix,
    empirical_gaps,
    first_occurrences,
    floor_multiple_theta,
    scan_positions,
    verify_all,
)
from gapseq.words import fixed_point_prefix, size_cap

from conftest import naive_positions

W = SignedWord.word
INV = SignedWord.inverse


@pytest.mark.parametrize("w, d, N, expected", [
    ("aa", 2, 10, [1, 4, 7, 8]),
    ("b", 3, 17, [4, 8, 12, 17]),
    ("ba", 2, 5, [3]),
])
def test_scan_positions(w, d, N, expected):
    assert scan_positions(w, d, N) == expected


@given(st.integers(2, 4), st.text(alphabet="ab", min_size=1, max_size=6), st.integers(6, 300))
def test_scan_matches_naive(d, w, N):
    assert scan_positions(w, d, N) == naive_positions(w, fixed_point_prefix(d, N))


@pytest.mark.parametrize("w, d, N, expected", [
    ("aa", 2, 10, [W("b"), W("b"), INV("a")]),
    # positions 1, 2, 4, 5 give three gaps
    ("a", 2, 6, [EPSILON, W("b"), EPSILON]),
    ("aabaa", 2, 19, [INV("aa"), INV("a"), INV("aa"), INV("a")]),
])
def test_empirical_gaps(w, d, N, expected):
    rep = empirical_gaps(w, d, N)
    assert rep.gaps == expected
    assert len(rep.gaps) == len(rep.positions) - 1
    assert rep.prefix_len == N


def test_empirical_labels_follow_first_gap():
    rep = empirical_gaps("aa", 2, 40)
    assert rep.labels.startswith("AAB")
    assert set(rep.labels) == {"A", "B"}
    assert rep.first_switch == 3


def test_scan_rejects_empty():
    with pytest.raises(EmptyWord):
        scan_positions("", 2, 10)
    with pytest.raises(EmptyWord):
        empirical_gaps("", 2, 10)


def test_first_occurrences_grows_until_cap():
    assert first_occurrences("aabaa", 2, 5) == [1, 4, 8, 11, 15]
    with size_cap(2000):
        with pytest.raises(OverflowError):
            first_occurrences("aaabaaabaaabaaa", 2, 10)  # not a factor


@pytest.mark.parametrize("d, n, expected", [
    (2, 7, "aabaaba"),
    (3, 4, "aaab"),
    (2, 0, ""),
])
def test_cutting_prefix(d, n, expected):
    assert cutting_prefix(d, n) == expected


@given(st.integers(2, 9), st.integers(0, 10**6))
def test_exact_floor_matches_high_precision(d, k):
    getcontext().prec = 60
    theta = ((Decimal(d * d + 4)).sqrt() - d) / 2
    assert floor_multiple_theta(d, k) == int(k * theta)


@given(st.integers(2, 7), st.integers(0, 3000))
def test_cutting_matches_fixed_point(d, n):
    assert cutting_prefix(d, n) == fixed_point_prefix(d, n)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_factor_complexity(d):
    facs = all_factors(d, 25)
    for n in range(1, 26):
        assert sum(1 for w in facs if len(w) == n) == n + 1


@pytest.mark.parametrize("grid", [(2, 4, 20, 100), (3, 3, 15, 50), (2, 0, 1, 1)])
def test_verify_all_passes(grid):
    report = verify_all(*grid)
    assert all_pass(report), [r for r in report if not r["pass"]]
    assert all(r["cases"] > 0 for r in report if r["check"] != "self_overlap_of_blocks")
    assert {r["check"] for r in report} >= {
        "cutting_sequence_equals_fixed_point", "kernel_positions_and_gaps",
        "factor_decomposition_gaps_positions", "palindromes_by_kernel"}


def test_verify_report_records_failures(monkeypatch):
    from gapseq import gaps

    monkeypatch.setattr(gaps, "gap_zero", lambda w, d: "x")
    report = verify_all(2, 1, 3, 3)
    bad = [r for r in report if not r["pass"]]
    assert bad and all("counterexample" in r for r in bad)
    assert not all_pass(report)
