"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """Input is outside the mathematical domain (d < 2, bad index, ...)."""

    kind = "domain_error"


class EmptyWord(DomainError):
    kind = "empty_word"


class InvalidAlphabet(DomainError):
    kind = "invalid_alphabet"


class NotAFactor(DomainError):
    kind = "not_a_factor"


class IrreducibleProduct(ArithmeticError):
    """A signed product did not collapse to a pure positive/empty/inverse word."""

    kind = "irreducible_product"
