"""
Kernel words K_{d,m,i}, envelope words E_{d,m,i}, and the kernel of a factor.

    K_{d,m,i} = delta_m F_{d,m}^i F_{d,m-1} delta_{m-1}^{-1}
    E_{d,m,i} = F_{d,m}^{i+1} F_{d,m-1} F_{d,m} delta_m^{-1} delta_{m-1}^{-1}

Kernel indices are totally ordered by (m, i).  The kernel of a word is the
largest kernel word occurring in it, and every factor w of F_{d,oo} splits
uniquely as

    w = F_{d,m}[x, f_{d,m}-1] . K_{d,m,i} . (delta_{m+1} F_{d,m})[1, y]

with 1 <= x <= f_{d,m} and 0 <= y <= f_{d,m}-1 (the "star" coordinates).
"""

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Tuple

from .errors import DomainError, NotAFactor
from .words import (
    cancel_suffix,
    check_d,
    check_size,
    check_word,
    delta,
    f_len,
    fdm,
    slice_,
)


@total_ordering
@dataclass(frozen=True)
class KernelIndex:
    d: int
    m: int
    i: int

    def __post_init__(self):
        check_d(self.d)
        if self.m < 0:
            raise DomainError(f"kernel order m must be >= 0, got {self.m}")
        if not 0 <= self.i <= self.d - 1:
            raise DomainError(f"kernel type i must lie in [0, {self.d - 1}], got {self.i}")

    def _same_d(self, other):
        if not isinstance(other, KernelIndex):
            return NotImplemented
        if other.d != self.d:
            raise DomainError(f"cannot compare kernels with d={self.d} and d={other.d}")
        return True

    def __lt__(self, other):
        ok = self._same_d(other)
        if ok is NotImplemented:
            return ok
        return (self.m, self.i) < (other.m, other.i)

    def __str__(self):
        return f"K_{{{self.d},{self.m},{self.i}}}"

    def as_dict(self):
        return {"d": self.d, "m": self.m, "i": self.i}


def kernel_cmp(k1: KernelIndex, k2: KernelIndex) -> int:
    """-1, 0 or 1 as ``k1`` is below, equal to or above ``k2``."""
    if k1 < k2:
        return -1
    return 0 if k1 == k2 else 1


def kernel_len(d: int, m: int, i: int) -> int:
    return i * f_len(d, m) + f_len(d, m - 1)


@lru_cache(maxsize=1024)
def _kernel_word(d, m, i):
    return delta(m) + fdm(d, m) * i + cancel_suffix(fdm(d, m - 1), delta(m - 1))


def kernel_word(k: KernelIndex) -> str:
    check_size(kernel_len(k.d, k.m, k.i), str(k))
    return _kernel_word(k.d, k.m, k.i)


def envelope_len(d: int, m: int, i: int) -> int:
    return (i + 2) * f_len(d, m) + f_len(d, m - 1) - 2


def envelope_word(k: KernelIndex) -> str:
    d, m, i = k.d, k.m, k.i
    check_size(max(envelope_len(d, m, i), 1), f"E_{{{d},{m},{i}}}")
    body = fdm(d, m) * (i + 1) + fdm(d, m - 1) + fdm(d, m)
    return cancel_suffix(cancel_suffix(body, delta(m)), delta(m - 1))


def envelope_margins(d: int, m: int) -> Tuple[str, str]:
    """The constant words mu_1, mu_2 with E_{d,m,i} = mu_1 K_{d,m,i} mu_2."""
    nxt = kernel_word(KernelIndex(d, m + 1, 0))
    return nxt[1:], nxt[:-1]


def kernel_word_recursive(k: KernelIndex) -> str:
    """Build K_{d,m,i} from smaller kernels only, never from F_{d,m}.

    K_{d,m,0} = K_{d,m-2,d-1} K_{d,m-2,d-2}^{-1} K_{d,m-2,d-1}   (m >= 2)
    K_{d,m,i} = [K_{d,m,0} K_{d,m-1,d-1}]^i K_{d,m,0}            (m >= 1)
    with bases K_{d,0,i} = a^{i+1} and K_{d,1,0} = b.
    """
    check_size(kernel_len(k.d, k.m, k.i), str(k))
    return _kernel_rec(k.d, k.m, k.i)


@lru_cache(maxsize=1024)
def _kernel_rec(d, m, i):
    if m == 0:
        return "a" * (i + 1)
    if i > 0:
        head = _kernel_rec(d, m, 0)
        return (head + _kernel_rec(d, m - 1, d - 1)) * i + head
    if m == 1:
        return "b"
    outer = _kernel_rec(d, m - 2, d - 1)
    return cancel_suffix(outer, _kernel_rec(d, m - 2, d - 2)) + outer


def iter_kernels(d: int, max_len: int):
    """Kernel indices in increasing order, as long as some kernel of that
    order can still be at most ``max_len`` letters (|K_{d,m,i}| >= f_{d,m-1})."""
    check_d(d)
    m = 0
    while f_len(d, m - 1) <= max_len:
        for i in range(d):
            yield KernelIndex(d, m, i)
        m += 1


def kernel_of(w: str, d: int) -> Tuple[KernelIndex, int]:
    """The largest kernel word occurring in ``w`` and its first 1-based position.

    Kernel lengths are not monotone in the order, so every candidate up to the
    length bound is tested.
    """
    check_word(w)
    n = len(w)
    best = None
    for k in iter_kernels(d, n):
        if kernel_len(d, k.m, k.i) > n:
            continue
        pos = w.find(_kernel_word(d, k.m, k.i))
        if pos != -1:
            best = (k, pos + 1)
    # 'a' or 'b' is always present, so best is set
    return best


@dataclass(frozen=True)
class StarCoords:
    d: int
    m: int
    i: int
    x: int
    y: int

    @property
    def kernel(self) -> KernelIndex:
        return KernelIndex(self.d, self.m, self.i)

    def pieces(self) -> Tuple[str, str, str]:
        f = f_len(self.d, self.m)
        left = slice_(fdm(self.d, self.m), self.x, f - 1)
        right = slice_(delta(self.m + 1) + fdm(self.d, self.m), 1, self.y)
        return left, kernel_word(self.kernel), right

    def word(self) -> str:
        return "".join(self.pieces())

    def as_dict(self):
        return {"d": self.d, "m": self.m, "i": self.i, "x": self.x, "y": self.y}


@lru_cache(maxsize=8192)
def star_decompose(w: str, d: int) -> StarCoords:
    """Star coordinates of a factor ``w`` of F_{d,oo}.

    Raises NotAFactor if the kernel repeats inside ``w`` or the margins
    around it are not those of the envelope word.
    """
    check_d(d)
    k, pos = kernel_of(w, d)
    kw = _kernel_word(d, k.m, k.i)
    if w.find(kw, pos) != -1:
        raise NotAFactor(f"{w!r}: kernel {k} occurs more than once")
    left, right = w[:pos - 1], w[pos - 1 + len(kw):]
    mu1, mu2 = envelope_margins(d, k.m)
    if not mu1.endswith(left) or not mu2.startswith(right):
        raise NotAFactor(f"{w!r}: margins around {k} do not fit its envelope word")
    return StarCoords(d, k.m, k.i, f_len(d, k.m) - len(left), len(right))


def is_factor(w: str, d: int) -> bool:
    """Decide w < F_{d,oo}: w must lie inside the envelope word of its kernel."""
    check_d(d)
    k, pos = kernel_of(w, d)
    if w.find(_kernel_word(d, k.m, k.i), pos) != -1:
        return False
    return w in envelope_word(k)
