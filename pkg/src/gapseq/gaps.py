"""
Gap words between consecutive occurrences of a factor.

A gap is empty (the occurrences touch), a positive word (they are
separated by it), or the formal inverse of the overlap.  Every factor has
exactly two distinct gaps G_A = G_1 and G_B; the p-th gap is G_A or G_B
according to the p-th letter of sigma_{d-i-1}(F_{d,oo}) (or of F_{d,oo}
itself when i = d-1), where i is the type of the factor's kernel.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .errors import DomainError, IrreducibleProduct
from .kernel import (
    KernelIndex,
    envelope_word,
    kernel_word,
    star_decompose,
)
from .words import check_d, fdm, image_prefix, slice_

POSITIVE, EMPTY, INVERSE = 1, 0, -1


@dataclass(frozen=True)
class SignedWord:
    sign: int
    letters: str = ""

    def __post_init__(self):
        if self.sign not in (POSITIVE, EMPTY, INVERSE):
            raise ValueError(f"bad sign {self.sign!r}")
        if (self.sign == EMPTY) != (self.letters == ""):
            raise ValueError("letters must be empty exactly when sign is 0")

    @classmethod
    def word(cls, letters: str) -> "SignedWord":
        return cls(POSITIVE if letters else EMPTY, letters)

    @classmethod
    def inverse(cls, letters: str) -> "SignedWord":
        return cls(INVERSE if letters else EMPTY, letters)

    def __len__(self):
        return len(self.letters)

    @property
    def signed_length(self) -> int:
        return self.sign * len(self.letters)

    def __str__(self):
        if self.sign == EMPTY:
            return "ε"
        if self.sign == POSITIVE:
            return self.letters
        return f"({self.letters})^-1"

    def to_json(self):
        return {"sign": self.sign, "letters": self.letters}

    @classmethod
    def from_json(cls, obj) -> "SignedWord":
        return cls(int(obj["sign"]), obj["letters"])


EPSILON = SignedWord(EMPTY)

Signed = Union[SignedWord, str]


def _tokens(part: Signed):
    if isinstance(part, str):
        return [(c, 1) for c in part]
    if part.sign == INVERSE:
        return [(c, -1) for c in reversed(part.letters)]
    return [(c, 1) for c in part.letters]


def signed_product(*parts: Signed) -> SignedWord:
    """Freely reduce a product of words and inverse words.

    The result has to be a plain word, the empty word, or a plain inverse
    word; anything mixed raises IrreducibleProduct.
    """
    stack = []
    for part in parts:
        for tok in _tokens(part):
            if stack and stack[-1][0] == tok[0] and stack[-1][1] == -tok[1]:
                stack.pop()
            else:
                stack.append(tok)
    if not stack:
        return EPSILON
    exps = {e for _, e in stack}
    if exps == {1}:
        return SignedWord(POSITIVE, "".join(c for c, _ in stack))
    if exps == {-1}:
        return SignedWord(INVERSE, "".join(c for c, _ in reversed(stack)))
    shown = "".join(c if e == 1 else c.upper() for c, e in stack)
    raise IrreducibleProduct(f"mixed reduced product {shown!r} (upper case = inverse letter)")


def signed_reduce(prefix_inverse: str, core: SignedWord, suffix_inverse: str) -> SignedWord:
    """prefix_inverse^{-1} . core . suffix_inverse^{-1}, freely reduced."""
    return signed_product(SignedWord.inverse(prefix_inverse), core, SignedWord.inverse(suffix_inverse))


@dataclass(frozen=True)
class GapProfile:
    """The two gaps, the first index where the gap changes, and the label
    sequence: sigma_j(F_{d,oo}) with j = ``image_index``, or F_{d,oo} if None."""

    gap_a: SignedWord
    gap_b: SignedWord
    switch: int
    image_index: Optional[int]

    @property
    def seq_kind(self) -> str:
        return "fixed_point" if self.image_index is None else "image"

    def gap(self, label: str) -> SignedWord:
        return self.gap_a if label == "A" else self.gap_b

    def to_json(self):
        seq = {"kind": self.seq_kind}
        if self.image_index is not None:
            seq["index"] = self.image_index
        return {
            "G_A": self.gap_a.to_json(),
            "G_B": self.gap_b.to_json(),
            "B": self.switch,
            "sequence": seq,
        }


def label_image_index(d: int, i: int) -> Optional[int]:
    check_d(d)
    if not 0 <= i <= d - 1:
        raise DomainError(f"kernel type i must lie in [0, {d - 1}], got {i}")
    return None if i == d - 1 else d - i - 1


def switch_index(d: int, i: int) -> int:
    return d + 1 if i == d - 1 else d - i


def _profile(d, i, gap_a, gap_b):
    return GapProfile(gap_a, gap_b, switch_index(d, i), label_image_index(d, i))


def kernel_gaps(k: KernelIndex) -> GapProfile:
    d, m, i = k.d, k.m, k.i
    K = lambda mm, ii: kernel_word(KernelIndex(d, mm, ii))  # noqa: E731
    if i == d - 1:
        return _profile(d, i, SignedWord.word(K(m + 1, 0)), SignedWord.inverse(K(m, d - 2)))
    if i == 0:
        gap_a = EPSILON if m == 0 else SignedWord.word(K(m - 1, d - 1))
    else:
        gap_a = SignedWord.inverse(K(m, i - 1))
    return _profile(d, i, gap_a, SignedWord.word(K(m + 1, 0)))


def envelope_gaps(k: KernelIndex) -> GapProfile:
    d, m, i = k.d, k.m, k.i
    E = lambda mm, ii: SignedWord.inverse(envelope_word(KernelIndex(d, mm, ii)))  # noqa: E731
    if i == d - 1:
        gap_a = SignedWord.word("b") if m == 0 else E(m - 1, d - 2)
        return _profile(d, i, gap_a, E(m, d - 2))
    if i == 0:
        gap_a = EPSILON if m == 0 else E(m - 1, d - 1)
    else:
        gap_a = E(m, i - 1)
    gap_b = SignedWord.word("b") if m == 0 else E(m - 1, d - 2)
    return _profile(d, i, gap_a, gap_b)


@lru_cache(maxsize=8192)
def factor_gaps(w: str, d: int) -> GapProfile:
    """Gaps of an arbitrary factor, by trimming its margins off the kernel's gaps."""
    star = star_decompose(w, d)
    mu1, _, mu2 = star.pieces()
    base = kernel_gaps(star.kernel)
    return GapProfile(
        signed_reduce(mu2, base.gap_a, mu1),
        signed_reduce(mu2, base.gap_b, mu1),
        base.switch,
        base.image_index,
    )


def gap_zero(w: str, d: int) -> str:
    """The prefix of F_{d,oo} in front of the first occurrence of ``w``."""
    star = star_decompose(w, d)
    return slice_(fdm(d, star.m), 1, star.x - 1)


_LABELS = str.maketrans("ab", "AB")


def gap_sequence_labels(d: int, i: int, count: int) -> str:
    if count < 0:
        raise DomainError(f"count must be >= 0, got {count}")
    return image_prefix(d, label_image_index(d, i), count).translate(_LABELS)
