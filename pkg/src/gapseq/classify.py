"""
Factor types T_{alpha,beta}, relations between consecutive occurrences,
and palindromes.

A factor's type is read off the signs of its two gaps; the sign patterns
available depend on whether the kernel type i is 0, strictly between 0 and
d-1, or d-1.  Factors whose kernel has order m = 0 (the words a^{i+1}) get
the separate tag ``T_order0``.
"""

import enum
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from .gaps import factor_gaps, gap_sequence_labels
from .kernel import KernelIndex, envelope_len, kernel_word, star_decompose
from .words import check_size, delta, f_len, fdm, slice_

# (sign G_A, sign G_B) -> beta
_FIRST = {(1, 1): 1, (0, 1): 2, (-1, 1): 3, (-1, 0): 4, (-1, -1): 5}
_MIDDLE = {(-1, 1): 1, (-1, 0): 2, (-1, -1): 3}
_LAST = {(1, -1): 1, (0, -1): 2, (-1, -1): 3}


def type_patterns(d: int, i: int):
    """Sign pattern table for kernels of type ``i``."""
    if i == d - 1:
        return _LAST
    return _FIRST if i == 0 else _MIDDLE


@dataclass(frozen=True)
class TypeTag:
    alpha: int
    beta: Optional[int]
    signs: Tuple[int, int]
    order_zero: bool = False
    #: for order-zero factors, the T variant whose sign pattern they share
    sign_match: Optional[str] = None

    @property
    def name(self) -> str:
        if self.order_zero:
            return "T_order0"
        return f"T_{{{self.alpha},{self.beta}}}"

    def __str__(self):
        return self.name

    def to_json(self):
        out = {"tag": self.name, "alpha": self.alpha, "signs": list(self.signs)}
        if self.order_zero:
            out["sign_match"] = self.sign_match
        else:
            out["beta"] = self.beta
        return out


class Relation(str, enum.Enum):
    ADJACENT = "adjacent"
    SEPARATED = "separated"
    OVERLAPPED = "overlapped"


_RELATION_OF_SIGN = {0: Relation.ADJACENT, 1: Relation.SEPARATED, -1: Relation.OVERLAPPED}
_SET_OF_SIGN = {0: "P2", 1: "S2", -1: "O2"}


def classify_type(w: str, d: int) -> TypeTag:
    star = star_decompose(w, d)
    prof = factor_gaps(w, d)
    signs = (prof.gap_a.sign, prof.gap_b.sign)
    beta = type_patterns(d, star.i).get(signs)
    if star.m == 0:
        match = None if beta is None else f"T_{{{star.i},{beta}}}"
        return TypeTag(star.i, None, signs, order_zero=True, sign_match=match)
    if beta is None:
        raise AssertionError(f"{w!r}: gap signs {signs} fit no type for i={star.i}")
    return TypeTag(star.i, beta, signs)


def relation_at(w: str, d: int, p: int) -> Relation:
    """How the p-th and (p+1)-th occurrences of ``w`` sit relative to each other."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    star = star_decompose(w, d)
    label = gap_sequence_labels(d, star.i, p)[-1]
    return _RELATION_OF_SIGN[factor_gaps(w, d).gap(label).sign]


def relation_sets(w: str, d: int) -> FrozenSet[str]:
    # both labels recur infinitely often, so each gap's sign is realized
    prof = factor_gaps(w, d)
    return frozenset(_SET_OF_SIGN[g.sign] for g in (prof.gap_a, prof.gap_b))


def palindrome_check_star(w: str, d: int) -> bool:
    star = star_decompose(w, d)
    return star.x + star.y == f_len(d, star.m)


def palindromes_with_kernel(k: KernelIndex) -> List[str]:
    """All palindromic factors whose kernel is ``k``, longest first."""
    d, m = k.d, k.m
    f = f_len(d, m)
    check_size(envelope_len(d, m, k.i), "palindrome")
    left_src = fdm(d, m)
    right_src = delta(m + 1) + left_src
    core = kernel_word(k)
    return [slice_(left_src, x, f - 1) + core + slice_(right_src, 1, f - x) for x in range(1, f + 1)]
