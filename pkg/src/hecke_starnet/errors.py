"""Exception types shared across the package."""


class HeckeStarnetError(Exception):
    """Base class."""


class InputError(HeckeStarnetError, ValueError):
    """Malformed or out-of-range user input."""


class SizeMismatch(HeckeStarnetError, ValueError):
    """Operands live in different S_n."""


class PatternNotAvoided(HeckeStarnetError, ValueError):
    """The permutation contains 3412 or 4231, so C_w is not the Bruhat-ideal sum."""


class ZeroG(HeckeStarnetError, ValueError):
    """A factorization scalar g(q) was zero."""


class FactorizationInvalid(HeckeStarnetError, ValueError):
    """g(q) C_w does not equal the claimed product of reversal elements."""


class NotIntersecting(HeckeStarnetError, ValueError):
    """Two paths were expected to meet at a star center but do not."""


class NotInTI(HeckeStarnetError, ValueError):
    """A tableau is not column-closed and left column-strict with the stated columns."""


class InvariantViolation(HeckeStarnetError, AssertionError):
    """An internal combinatorial invariant failed (e.g. an unexpected tie)."""


class InexactDivision(HeckeStarnetError, ArithmeticError):
    """An exact quotient was requested but does not exist."""
