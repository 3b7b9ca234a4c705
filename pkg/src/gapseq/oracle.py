"""
Brute-force ground truth.

Nothing here uses the closed forms: occurrences are found by scanning a
generated prefix, gaps are cut directly out of that prefix, and
:func:`cutting_prefix` builds F_{d,oo} from the line y = theta x with exact
integer arithmetic, without the substitution.

:func:`verify_all` runs every library result against these scans over a
parameter grid and reports failures as data.
"""

from dataclasses import dataclass, field
from math import isqrt
from typing import Dict, List, Optional

from .gaps import EPSILON, SignedWord
from .words import check_d, check_size, check_word, find_occurrences, get_cap, image_prefix


def prefix(d: int, n: int) -> str:
    return image_prefix(d, None, n)


def scan_positions(w: str, d: int, N: int) -> List[int]:
    check_word(w)
    if N < len(w):
        raise ValueError(f"prefix length {N} shorter than the word")
    return find_occurrences(w, prefix(d, N))


def first_occurrences(w: str, d: int, count: int, start: int = 1024) -> List[int]:
    """The first ``count`` positions of ``w``, doubling the scanned prefix as needed.

    Raises OverflowError when the size cap is hit first.
    """
    check_word(w)
    n = max(start, len(w))
    while True:
        pos = find_occurrences(w, prefix(d, n))
        if len(pos) >= count:
            return pos[:count]
        if n >= get_cap():
            raise OverflowError(f"fewer than {count} occurrences of {w!r} within the size cap")
        n = min(2 * n, get_cap())


def gap_between(text: str, n: int, p: int, q: int) -> SignedWord:
    """Gap between occurrences of a length-``n`` word at 1-based ``p`` < ``q``."""
    end = p + n - 1
    if q == end + 1:
        return EPSILON
    if q > end + 1:
        return SignedWord.word(text[end:q - 1])
    return SignedWord.inverse(text[q - 1:end])


@dataclass
class ScanReport:
    factor: str
    prefix_len: int
    positions: List[int]
    gaps: List[SignedWord] = field(default_factory=list)
    labels: str = ""

    @property
    def distinct_gaps(self) -> List[SignedWord]:
        seen = []
        for g in self.gaps:
            if g not in seen:
                seen.append(g)
        return seen

    @property
    def first_switch(self) -> Optional[int]:
        idx = self.labels.find("B")
        return None if idx == -1 else idx + 1


def _report(w, text, positions):
    gaps = [gap_between(text, len(w), p, q) for p, q in zip(positions, positions[1:])]
    labels = []
    other = None
    for g in gaps:
        if g == gaps[0]:
            labels.append("A")
        elif other is None or g == other:
            other = g
            labels.append("B")
        else:
            labels.append("?")
    return ScanReport(w, len(text), positions, gaps, "".join(labels))


def empirical_gaps(w: str, d: int, N: int) -> ScanReport:
    """Gaps read straight off consecutive occurrences in the first ``N`` letters.

    Labels: ``A`` for gaps equal to the first one, ``B`` for the first
    differing value, ``?`` for any third value.
    """
    text = prefix(d, N)
    return _report(w, text, scan_positions(w, d, N))


def empirical_gaps_count(w: str, d: int, count: int) -> ScanReport:
    """Like :func:`empirical_gaps` over the first ``count`` occurrences."""
    positions = first_occurrences(w, d, count)
    n = positions[-1] + len(w) - 1 if positions else len(w)
    return _report(w, prefix(d, n), positions)


def floor_multiple_theta(d: int, k: int) -> int:
    """floor(k * theta) for theta = (sqrt(d^2+4) - d) / 2, exactly."""
    # k*sqrt(D) is irrational for k > 0, so it lies strictly between s and s+1
    s = isqrt(k * k * (d * d + 4))
    return (s - k * d) // 2


def cutting_prefix(d: int, n: int) -> str:
    """First ``n`` letters of the cutting sequence of y = theta x, theta = [0; d, d, ...].

    Between the vertical lines x = k and x = k+1 the ray crosses at most one
    horizontal line; that crossing (b) comes before the vertical one (a).
    """
    check_d(d)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    check_size(n, "prefix")
    out = []
    prev = 0
    k = 0
    while len(out) < n:
        cur = floor_multiple_theta(d, k + 1)
        if cur > prev:
            out.append("b")
        out.append("a")
        prev = cur
        k += 1
    return "".join(out[:n])


def all_factors(d: int, max_len: int) -> List[str]:
    """Every factor of F_{d,oo} of length 1..max_len, shortest first.

    The scanned prefix grows until it holds max_len + 1 distinct factors of
    length max_len, the full count for a Sturmian word; every shorter factor
    is then a prefix of one of them.
    """
    if max_len < 1:
        return []
    n = max(64, 4 * max_len)
    while True:
        text = prefix(d, n)
        longest = {text[s:s + max_len] for s in range(n - max_len + 1)}
        if len(longest) == max_len + 1:
            break
        n *= 2
    return factors_of(text, max_len)


def factors_of(text: str, max_len: int) -> List[str]:
    out = []
    for ell in range(1, max_len + 1):
        out.extend(sorted({text[s:s + ell] for s in range(len(text) - ell + 1)}))
    return out


def palindromic_factors(d: int, max_len: int) -> List[str]:
    return [w for w in all_factors(d, max_len) if w == w[::-1]]


# -- verification grid ----------------------------------------------------


class _Check:
    def __init__(self, name: str, params: Dict):
        self.name = name
        self.params = params
        self.cases = 0
        self.counterexample = None

    def expect(self, ok: bool, **detail):
        self.cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = {k: _jsonable(v) for k, v in detail.items()}

    def result(self):
        out = {"check": self.name, "params": self.params, "pass": self.counterexample is None, "cases": self.cases}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _jsonable(v):
    if isinstance(v, SignedWord):
        return v.to_json()
    if hasattr(v, "as_dict"):
        return v.as_dict()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def verify_all(d: int, m_max: int, len_max: int, p_max: int) -> List[Dict]:
    """Cross-check the library against brute force on a parameter grid.

    Returns one record per check: ``{"check", "params", "pass", "cases",
    "counterexample"?}``.  Exceptions inside a check count as failures.
    """
    from . import classify, gaps, kernel, positions, words

    check_d(d)
    if min(m_max, len_max, p_max) < 0:
        raise ValueError("bounds must be non-negative")
    grid = {"d": d, "m_max": m_max, "len_max": len_max, "p_max": p_max}
    checks = []

    def run(name, body):
        c = _Check(name, grid)
        try:
            body(c)
        except Exception as exc:  # failures are data
            c.expect(False, error=f"{type(exc).__name__}: {exc}")
        checks.append(c.result())

    kernels = [kernel.KernelIndex(d, m, i) for m in range(m_max + 1) for i in range(d)]
    factors = all_factors(d, len_max)

    def cutting(c):
        n = max(64, min(10_000, 40 * (len_max + 1)))
        c.expect(cutting_prefix(d, n) == words.fixed_point_prefix(d, n), n=n)

    def concatenation(c):
        for m in range(m_max + 1):
            lhs = words.fdm(d, m + 1)
            c.expect(lhs == words.fdm(d, m) * d + words.fdm(d, m - 1), m=m)
            c.expect(len(lhs) == words.f_len(d, m + 1), m=m)
            c.expect(words.fdm(d, m)[-1] == words.delta(m), m=m)

    def self_overlap(c):
        for m in range(1, m_max + 1):
            f, g = words.f_len(d, m), words.f_len(d, m - 1)
            F, G = words.fdm(d, m), words.fdm(d, m - 1)
            for needle in (F, F[:-1]):
                c.expect(find_occurrences(needle, F + F) == [1, f + 1], m=m, needle=needle)
                # at m = 1 the full block a^d b cannot start at f + 1
                want = [1, f + g + 1] if (m == 1 and needle == F) else [1, f + 1, f + g + 1]
                c.expect(find_occurrences(needle, F + G + F) == want, m=m, needle=needle)

    def kernel_shape(c):
        for k in kernels:
            K = kernel.kernel_word(k)
            E = kernel.envelope_word(k)
            mu1, mu2 = kernel.envelope_margins(d, k.m)
            c.expect(K == K[::-1], kernel=k, what="kernel palindrome")
            c.expect(E == E[::-1], kernel=k, what="envelope palindrome")
            c.expect(E == mu1 + K + mu2, kernel=k, what="margins")
            c.expect(kernel.kernel_word_recursive(k) == K, kernel=k, what="recursion")

    def kernel_gap_products(c):
        for k in kernels:
            K = kernel.kernel_word(k)
            prof = gaps.kernel_gaps(k)
            if k.i <= d - 2:
                want = kernel.kernel_word(kernel.KernelIndex(d, k.m, k.i + 1))
                got = gaps.signed_product(K, prof.gap_a, K)
            else:
                want = kernel.kernel_word(kernel.KernelIndex(d, k.m + 2, 0))
                got = gaps.signed_product(K, prof.gap_b, K)
            c.expect(got == SignedWord.word(want), kernel=k)

    def kernel_scans(c):
        for k in kernels:
            K = kernel.kernel_word(k)
            occ = first_occurrences(K, d, p_max + 1)
            for p in range(1, p_max + 1):
                c.expect(positions.kernel_position(k, p) == occ[p - 1], kernel=k, p=p, scanned=occ[p - 1])
            rep = empirical_gaps_count(K, d, p_max + 1)
            prof = gaps.kernel_gaps(k)
            _gap_agreement(c, rep, prof, d, k.i, subject=k)
            c.expect(gaps.gap_zero(K, d) == prefix(d, occ[0] - 1), kernel=k, what="G_0")

    def envelope_scans(c):
        for k in kernels:
            E = kernel.envelope_word(k)
            occ = first_occurrences(E, d, p_max + 1)
            f = words.f_len(d, k.m)
            for p in range(1, p_max + 1):
                c.expect(positions.envelope_position(k, p) == occ[p - 1], kernel=k, p=p, scanned=occ[p - 1])
                c.expect(positions.position_difference_check(k, p) == f - 1, kernel=k, p=p)
            rep = empirical_gaps_count(E, d, p_max + 1)
            _gap_agreement(c, rep, gaps.envelope_gaps(k), d, k.i, subject=k)

    def factor_scans(c):
        for w in factors:
            k, _ = kernel.kernel_of(w, d)
            star = kernel.star_decompose(w, d)
            K = kernel.kernel_word(k)
            c.expect(len(find_occurrences(K, w)) == 1, word=w, what="kernel once")
            c.expect(star.word() == w, word=w, what="round trip")
            c.expect(w in kernel.envelope_word(k), word=w, what="inside envelope")
            c.expect(kernel.is_factor(w, d), word=w, what="membership")
            c.expect(classify.palindrome_check_star(w, d) == (w == w[::-1]), word=w, what="palindrome")
            rep = empirical_gaps_count(w, d, p_max + 1)
            prof = gaps.factor_gaps(w, d)
            _gap_agreement(c, rep, prof, d, k.i, subject=w)
            for p in range(1, p_max + 1):
                c.expect(positions.factor_position(w, d, p) == rep.positions[p - 1], word=w, p=p)
            c.expect(gaps.gap_zero(w, d) == prefix(d, rep.positions[0] - 1), word=w, what="G_0")
            for p, g in enumerate(rep.gaps, start=1):
                want = {0: "adjacent", 1: "separated", -1: "overlapped"}[g.sign]
                c.expect(classify.relation_at(w, d, p).value == want, word=w, p=p, what="relation")
            tag = classify.classify_type(w, d)
            c.expect(tag.signs == (prof.gap_a.sign, prof.gap_b.sign), word=w, what="type signs")
            c.expect(tag.order_zero or tag.beta is not None, word=w, what="type assigned")

    def palindromes(c):
        for k in kernels:
            listed = classify.palindromes_with_kernel(k)
            c.expect(all(p == p[::-1] and kernel.is_factor(p, d) and kernel.kernel_of(p, d)[0] == k for p in listed), kernel=k)
            c.expect(len(listed) == words.f_len(d, k.m), kernel=k)
        # exhaustive cross-check on short palindromes
        found = {}
        for w in palindromic_factors(d, len_max):
            found.setdefault(kernel.kernel_of(w, d)[0], set()).add(w)
        for k, ws in found.items():
            listed = {p for p in classify.palindromes_with_kernel(k) if len(p) <= len_max}
            c.expect(ws == listed, kernel=k)

    run("cutting_sequence_equals_fixed_point", cutting)
    run("fixed_point_block_identities", concatenation)
    run("self_overlap_of_blocks", self_overlap)
    run("kernel_envelope_shape", kernel_shape)
    run("kernel_gap_products", kernel_gap_products)
    run("kernel_positions_and_gaps", kernel_scans)
    run("envelope_positions_and_gaps", envelope_scans)
    run("factor_decomposition_gaps_positions", factor_scans)
    run("palindromes_by_kernel", palindromes)
    return checks


def _gap_agreement(c, rep, prof, d, i, subject):
    from .gaps import gap_sequence_labels

    distinct = rep.distinct_gaps
    if len(rep.gaps) >= prof.switch:
        c.expect(set(distinct) == {prof.gap_a, prof.gap_b}, subject=subject, what="two gaps", seen=distinct)
    else:
        c.expect(set(distinct) <= {prof.gap_a, prof.gap_b}, subject=subject, what="gap subset", seen=distinct)
    want = gap_sequence_labels(d, i, len(rep.gaps))
    got = "".join("A" if g == prof.gap_a else "B" if g == prof.gap_b else "?" for g in rep.gaps)
    c.expect(got == want, subject=subject, what="labels", got=got, want=want)
    if rep.first_switch is not None:
        c.expect(rep.first_switch == prof.switch, subject=subject, what="switch index")


def all_pass(report: List[Dict]) -> bool:
    return all(r["pass"] for r in report)

