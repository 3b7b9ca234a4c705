"""Acceptance criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary prints one
PASS/FAIL line per criterion with its wall time.
"""

import time

import pytest

from gapseq.classify import Relation, palindrome_check_star, palindromes_with_kernel, relation_at
from gapseq.gaps import EPSILON, SignedWord, factor_gaps, gap_sequence_labels, gap_zero, kernel_gaps, signed_product
from gapseq.kernel import (
    KernelIndex,
    envelope_margins,
    envelope_word,
    is_factor,
    kernel_of,
    kernel_word,
    kernel_word_recursive,
    star_decompose,
)
from gapseq.oracle import (
    cutting_prefix,
    empirical_gaps_count,
    factors_of,
    first_occurrences,
    palindromic_factors,
    prefix,
)
from gapseq.positions import envelope_position, kernel_position, position_difference_check
from gapseq.words import f_len, fdm, find_occurrences, fixed_point_prefix, size_cap

W = SignedWord.word
INV = SignedWord.inverse

OCCURRENCES = 101  # 100 gaps, so labels for p <= 100


@pytest.fixture(scope="module")
def factor_runs():
    """Every factor of length <= 30 in a 3000-letter prefix, d in {2, 3}, with its scan."""
    start = time.perf_counter()
    runs = []
    for d in (2, 3):
        for w in factors_of(prefix(d, 3000), 30):
            runs.append((w, d, empirical_gaps_count(w, d, OCCURRENCES)))
    SCAN_SECONDS.append(time.perf_counter() - start)
    return runs


SCAN_SECONDS = []


@pytest.mark.acceptance(1, "worked example K_{3,2,0}")
def test_criterion_1_worked_example(stopwatch):
    k = KernelIndex(3, 2, 0)
    prof = kernel_gaps(k)
    assert kernel_word(k) == "aaaa"
    assert gap_zero("aaaa", 3) == "aaabaaabaaab"
    assert prof.gap_a == W("baaabaaab")
    assert prof.gap_b == W("baaabaaabaaab")
    assert prof.switch == 3
    assert gap_sequence_labels(3, 0, 19) == "AABAABAABAAABAABAAB"
    assert stopwatch() < 1


@pytest.mark.acceptance(2, "gaps of a and aa in F_{2,oo}")
def test_criterion_2_small_factors(stopwatch):
    prof = factor_gaps("a", 2)
    assert (prof.gap_a, prof.gap_b) == (EPSILON, W("b"))
    prof = factor_gaps("aa", 2)
    assert (prof.gap_a, prof.gap_b, prof.switch) == (W("b"), INV("a"), 3)
    assert stopwatch() < 1


@pytest.mark.acceptance(3, "fixed point equals cutting sequence")
def test_criterion_3_cutting_sequence(stopwatch):
    for d in (2, 3, 4, 5):
        assert cutting_prefix(d, 10_000) == fixed_point_prefix(d, 10_000)
    assert stopwatch() < 5


@pytest.mark.acceptance(4, "exactly two distinct gaps")
def test_criterion_4_two_gaps(factor_runs, stopwatch):
    assert len(factor_runs) == 2 * sum(n + 1 for n in range(1, 31))
    for w, d, rep in factor_runs:
        prof = factor_gaps(w, d)
        assert len(rep.gaps) == OCCURRENCES - 1
        assert set(rep.gaps[:99]) == {prof.gap_a, prof.gap_b}, (w, d)
    assert SCAN_SECONDS[0] + stopwatch() < 60


@pytest.mark.acceptance(5, "gap sequence and switch index")
def test_criterion_5_gap_sequence(factor_runs):
    for w, d, rep in factor_runs:
        i = star_decompose(w, d).i
        prof = factor_gaps(w, d)
        got = "".join("A" if g == prof.gap_a else "B" for g in rep.gaps)
        assert got == gap_sequence_labels(d, i, 100), (w, d)
        assert rep.first_switch == prof.switch
        assert prof.switch == (d + 1 if i == d - 1 else d - i)


@pytest.mark.acceptance(6, "closed-form positions")
def test_criterion_6_positions(stopwatch):
    # K_{4,5,3} needs about 1.2M letters of prefix for 200 occurrences
    with size_cap(1 << 22):
        for d in (2, 3, 4):
            for m in range(6):
                for i in range(d):
                    k = KernelIndex(d, m, i)
                    occ_k = first_occurrences(kernel_word(k), d, 200)
                    occ_e = first_occurrences(envelope_word(k), d, 200)
                    for p in range(1, 201):
                        assert kernel_position(k, p) == occ_k[p - 1], (k, p)
                        assert envelope_position(k, p) == occ_e[p - 1], (k, p)
                        assert position_difference_check(k, p) == f_len(d, m) - 1
    assert stopwatch() < 30


@pytest.mark.acceptance(7, "structural identities")
def test_criterion_7_structure(stopwatch):
    for d in range(2, 6):
        for m in range(7):
            if m >= 1:
                F, G = fdm(d, m), fdm(d, m - 1)
                f, g = len(F), len(G)
                assert find_occurrences(F, F + F) == [1, f + 1]
                assert len(find_occurrences(F, F + G + F)) == (2 if m == 1 else 3)
                assert find_occurrences(F[:-1], F + F) == [1, f + 1]
                assert find_occurrences(F[:-1], F + G + F) == [1, f + 1, f + g + 1]
            mu1, mu2 = envelope_margins(d, m)
            for i in range(d):
                k = KernelIndex(d, m, i)
                K, E = kernel_word(k), envelope_word(k)
                assert kernel_word_recursive(k) == K
                assert E == mu1 + K + mu2
                assert K == K[::-1] and E == E[::-1]
                prof = kernel_gaps(k)
                if i <= d - 2:
                    assert signed_product(K, prof.gap_a, K) == W(kernel_word(KernelIndex(d, m, i + 1)))
                    assert prof.gap_b == W(kernel_word(KernelIndex(d, m + 1, 0)))
                else:
                    assert prof.gap_a == W(kernel_word(KernelIndex(d, m + 1, 0)))
                    assert signed_product(K, prof.gap_b, K) == W(kernel_word(KernelIndex(d, m + 2, 0)))
    assert stopwatch() < 10


@pytest.mark.acceptance(8, "uniqueness of kernel decomposition")
def test_criterion_8_uniqueness(factor_runs):
    for w, d, _ in factor_runs:
        k, _ = kernel_of(w, d)
        assert len(find_occurrences(kernel_word(k), w)) == 1, (w, d)
        star = star_decompose(w, d)
        assert star.word() == w
        assert w in envelope_word(k)


@pytest.mark.acceptance(9, "palindrome characterization")
def test_criterion_9_palindromes(factor_runs, stopwatch):
    for w, d, _ in factor_runs:
        assert palindrome_check_star(w, d) == (w == w[::-1])
    for d in (2, 3):
        kernels = [KernelIndex(d, m, i) for m in range(4) for i in range(d)]
        listed = {k: palindromes_with_kernel(k) for k in kernels}
        longest = max(len(p) for ps in listed.values() for p in ps)
        found = {}
        for w in palindromic_factors(d, longest):
            found.setdefault(kernel_of(w, d)[0], set()).add(w)
        for k in kernels:
            assert set(listed[k]) == found[k], k
    assert stopwatch() < 20


@pytest.mark.acceptance(10, "relation classification")
def test_criterion_10_relations(factor_runs, stopwatch):
    sign_to_relation = {0: Relation.ADJACENT, 1: Relation.SEPARATED, -1: Relation.OVERLAPPED}
    for w, d, rep in factor_runs:
        for p, g in enumerate(rep.gaps, start=1):
            assert relation_at(w, d, p) == sign_to_relation[g.sign], (w, d, p)
    assert is_factor("aaaa", 2) is False
    assert is_factor("aaabb", 2) is False
    assert stopwatch() < 10
