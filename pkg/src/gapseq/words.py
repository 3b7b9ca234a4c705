"""
Finite words over {a, b}, the substitutions sigma_j and the fixed point F_{d,oo}.

Words are plain ``str`` objects over the letters ``a`` and ``b``.  Positions
are 1-based throughout, so ``w[i, j]`` in the usual notation is
``slice_(w, i, j)`` here.

sigma_j maps a -> a^j b and b -> a.  F_{d,m} = sigma_d^m(a) with the
convention F_{d,-1} = b, so that F_{d,m+1} = F_{d,m}^d F_{d,m-1} for m >= 0.
"""

from contextlib import contextmanager
from functools import lru_cache
from itertools import islice
from typing import Iterator, List, Optional

from .errors import DomainError, EmptyWord, InvalidAlphabet

ALPHABET = "ab"

#: Largest materialized word, in letters.  See :func:`size_cap`.
DEFAULT_CAP = 1 << 20
INT64_MAX = (1 << 63) - 1

_cap = DEFAULT_CAP


def get_cap() -> int:
    return _cap


def set_cap(n: int) -> None:
    global _cap
    if n < 1:
        raise ValueError("size cap must be positive")
    _cap = n


@contextmanager
def size_cap(n: int):
    """Temporarily change the word-size cap."""
    old = _cap
    set_cap(n)
    try:
        yield
    finally:
        set_cap(old)


def check_int(value: int, what: str = "value") -> int:
    """Raise OverflowError if ``value`` does not fit a signed 64-bit integer."""
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise OverflowError(f"{what} exceeds 64-bit range")
    return value


def check_size(n: int, what: str = "word") -> int:
    if n > _cap:
        raise OverflowError(f"{what} of length {n} exceeds size cap {_cap}")
    return n


def check_d(d: int) -> int:
    if not isinstance(d, int) or d < 2:
        raise DomainError(f"d must be an integer >= 2, got {d!r}")
    return d


def check_word(w: str, allow_empty: bool = False) -> str:
    if not isinstance(w, str):
        raise InvalidAlphabet(f"word must be a string, got {type(w).__name__}")
    if not w and not allow_empty:
        raise EmptyWord("word must be nonempty")
    if w.strip(ALPHABET):
        bad = sorted(set(w) - set(ALPHABET))
        raise InvalidAlphabet(f"letters outside {{a,b}}: {''.join(bad)!r}")
    return w


def slice_(w: str, i: int, j: int) -> str:
    """Letters i..j of ``w`` (1-based, inclusive); ``slice_(w, i, i-1)`` is empty."""
    if j == i - 1:
        return ""
    if i < 1 or j > len(w) or j < i:
        raise IndexError(f"[{i},{j}] out of range for word of length {len(w)}")
    return w[i - 1:j]


def mirror(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def letter_count(w: str, letter: str) -> int:
    return w.count(letter)


def delta(m: int) -> str:
    """Last letter of F_{d,m}: a for even m, b for odd m (so delta(-1) = b)."""
    if m < -1:
        raise DomainError(f"m must be >= -1, got {m}")
    return "a" if m % 2 == 0 else "b"


def sub_apply(j: int, w: str) -> str:
    if j < 0:
        raise DomainError(f"substitution index must be >= 0, got {j}")
    return w.translate({ord("a"): "a" * j + "b", ord("b"): "a"})


@lru_cache(maxsize=None)
def _f_len(d: int, m: int) -> int:
    prev, cur = 1, 1  # f_{-1}, f_0
    if m == -1:
        return prev
    for _ in range(m):
        prev, cur = cur, d * cur + prev
    return cur


def f_len(d: int, m: int) -> int:
    """|F_{d,m}|, from f_{-1} = f_0 = 1 and f_m = d f_{m-1} + f_{m-2}."""
    check_d(d)
    if m < -1:
        raise DomainError(f"m must be >= -1, got {m}")
    return check_int(_f_len(d, m), f"f_{{{d},{m}}}")


@lru_cache(maxsize=256)
def _fdm(d: int, m: int) -> str:
    if m == -1:
        return "b"
    if m == 0:
        return "a"
    return _fdm(d, m - 1) * d + _fdm(d, m - 2)


def fdm(d: int, m: int) -> str:
    """F_{d,m} = sigma_d^m(a), with F_{d,-1} = b."""
    check_size(f_len(d, m), f"F_{{{d},{m}}}")
    return _fdm(d, m)


def fixed_point_prefix(d: int, n: int) -> str:
    """First ``n`` letters of F_{d,oo}."""
    check_d(d)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    check_size(n, "prefix")
    m = 0
    while _f_len(d, m) < n:
        m += 1
    return _fdm(d, m)[:n]


def iter_fixed_point(d: int) -> Iterator[str]:
    """Stream the letters of F_{d,oo} with O(log n) memory.

    Uses F = sigma_d(F): the stream re-reads itself one level down.
    """
    check_d(d)
    image_a = "a" * d + "b"
    yield "a"
    inner = iter_fixed_point(d)
    next(inner)
    yield from image_a[1:]
    for c in inner:
        yield from image_a if c == "a" else "a"


def iter_image(d: int, j: Optional[int]) -> Iterator[str]:
    """Stream sigma_j(F_{d,oo}), or F_{d,oo} itself when ``j`` is None."""
    if j is None:
        yield from iter_fixed_point(d)
        return
    if j < 0:
        raise DomainError(f"substitution index must be >= 0, got {j}")
    image_a = "a" * j + "b"
    for c in iter_fixed_point(d):
        yield from image_a if c == "a" else "a"


_image_cache = {}


def image_prefix(d: int, j: Optional[int], n: int) -> str:
    """First ``n`` letters of sigma_j(F_{d,oo}) (F_{d,oo} itself for j=None)."""
    check_d(d)
    check_size(n, "prefix")
    have = _image_cache.get((d, j), "")
    if len(have) < n:
        target = min(max(n, 2 * len(have), 1024), max(n, _cap))
        if j is None:
            have = fixed_point_prefix(d, target)
        else:
            # every letter maps to at least one letter
            have = sub_apply(j, fixed_point_prefix(d, target))[:target]
        _image_cache[(d, j)] = have
    return have[:n]


def find_occurrences(needle: str, haystack: str) -> List[int]:
    """All 1-based positions of ``needle`` in ``haystack``, overlaps included."""
    if not needle:
        raise EmptyWord("needle must be nonempty")
    out = []
    k = haystack.find(needle)
    while k != -1:
        out.append(k + 1)
        k = haystack.find(needle, k + 1)
    return out


def cancel_suffix(w: str, letters: str) -> str:
    """``w`` right-multiplied by the inverse of ``letters``; they must end ``w``."""
    if not w.endswith(letters):
        raise ValueError(f"{letters!r} is not a suffix of {w!r}")
    return w[:len(w) - len(letters)]


def cancel_prefix(letters: str, w: str) -> str:
    if not w.startswith(letters):
        raise ValueError(f"{letters!r} is not a prefix of {w!r}")
    return w[len(letters):]
