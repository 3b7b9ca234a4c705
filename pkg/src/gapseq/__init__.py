"""Factors, gaps and occurrence positions in the cutting sequences F_{d,oo}.

F_{d,oo} is the cutting sequence of slope [0; d, d, d, ...] for d >= 2, the
fixed point of a -> a^d b, b -> a.
"""

from .classify import (
    Relation,
    TypeTag,
    classify_type,
    palindrome_check_star,
    palindromes_with_kernel,
    relation_at,
    relation_sets,
)
from .errors import DomainError, EmptyWord, InvalidAlphabet, IrreducibleProduct, NotAFactor
from .gaps import (
    EPSILON,
    GapProfile,
    SignedWord,
    envelope_gaps,
    factor_gaps,
    gap_sequence_labels,
    gap_zero,
    kernel_gaps,
    signed_product,
    signed_reduce,
)
from .kernel import (
    KernelIndex,
    StarCoords,
    envelope_margins,
    envelope_word,
    is_factor,
    kernel_cmp,
    kernel_of,
    kernel_word,
    kernel_word_recursive,
    star_decompose,
)
from .positions import (
    envelope_position,
    factor_position,
    kernel_position,
    position_difference_check,
    prefix_letter_count,
)
from .words import (
    delta,
    f_len,
    fdm,
    find_occurrences,
    fixed_point_prefix,
    letter_count,
    mirror,
    size_cap,
    sub_apply,
)

__version__ = "0.1.0"
