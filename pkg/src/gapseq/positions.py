"""
Closed-form occurrence positions L(w, p) in F_{d,oo} (1-based).

For a kernel K = K_{d,m,i} and q = p - 1 >= 1,

    i = 0:          L(K, q+1) = (q+1) f_m + |S[1,q]|_b * f_{m-1}
    1 <= i <= d-2:  L(K, q+1) = (q+1) f_m + |S[1,q]|_b * (i f_m + f_{m-1})
    i = d-1:        L(K, q+1) = (q+1) f_m + |F[1,q]|_a * ((d-1) f_m + f_{m-1})

with S = sigma_{d-i-1}(F_{d,oo}) and L(K, 1) = f_m.  The envelope word sits
f_m - 1 letters earlier, and an arbitrary factor sits f_m - x letters
before its kernel occurrence.
"""

from itertools import islice
from typing import Optional

from .errors import DomainError
from .gaps import label_image_index
from .kernel import KernelIndex, star_decompose
from .words import check_d, check_int, f_len, get_cap, image_prefix, iter_image


def prefix_letter_count(d: int, image_index: Optional[int], p: int, letter: str) -> int:
    """|S[1,p]|_letter for S = sigma_j(F_{d,oo}), or S = F_{d,oo} if ``image_index`` is None."""
    check_d(d)
    if p < 0:
        raise DomainError(f"p must be >= 0, got {p}")
    if p <= get_cap():
        return image_prefix(d, image_index, p).count(letter)
    # past the materialization cap: stream
    return sum(1 for c in islice(iter_image(d, image_index), p) if c == letter)


def _check_p(p):
    if p < 1:
        raise DomainError(f"occurrence index p must be >= 1, got {p}")


def _kernel_offset(k: KernelIndex, q: int) -> int:
    """L(K, q+1) - (q+1) f_m: the letters contributed by the B-type gaps."""
    d, m, i = k.d, k.m, k.i
    if q == 0:
        return 0
    j = label_image_index(d, i)
    if j is None:
        return prefix_letter_count(d, None, q, "a") * ((d - 1) * f_len(d, m) + f_len(d, m - 1))
    count_b = prefix_letter_count(d, j, q, "b")
    if i == 0:
        return count_b * f_len(d, m - 1)
    return count_b * (i * f_len(d, m) + f_len(d, m - 1))


def kernel_position(k: KernelIndex, p: int) -> int:
    _check_p(p)
    return check_int(p * f_len(k.d, k.m) + _kernel_offset(k, p - 1), "position")


def envelope_position(k: KernelIndex, p: int) -> int:
    _check_p(p)
    return check_int((p - 1) * f_len(k.d, k.m) + _kernel_offset(k, p - 1) + 1, "position")


def factor_position(w: str, d: int, p: int) -> int:
    _check_p(p)
    star = star_decompose(w, d)
    return kernel_position(star.kernel, p) - (f_len(d, star.m) - star.x)


def position_difference_check(k: KernelIndex, p: int) -> int:
    """L(K, p) - L(E, p); always f_{d,m} - 1."""
    return kernel_position(k, p) - envelope_position(k, p)


def kernel_position_order_zero(k: KernelIndex, p: int) -> int:
    """The m = 0, i = 0 form f_m + q + |sigma_{d-1}(F)[1,q]|_b, q = p - 1.

    Only meaningful for k = K_{d,0,0}; kept to check it against the
    general i = 0 form.
    """
    _check_p(p)
    if k.m != 0 or k.i != 0:
        raise DomainError("order-zero form applies to K_{d,0,0} only")
    q = p - 1
    return f_len(k.d, 0) + q + prefix_letter_count(k.d, k.d - 1, q, "b")
