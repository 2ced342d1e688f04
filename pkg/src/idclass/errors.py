"""Exception types raised by the library."""


class IdealClassError(ValueError):
    """Base class for every error raised by idclass."""


class NotNumerical(IdealClassError):
    """Generators with gcd != 1 do not define a numerical semigroup."""


class NotMember(IdealClassError):
    pass


class EmptyForN(IdealClassError):
    """Invariant undefined for the trivial semigroup N."""


class BadResidues(IdealClassError):
    pass


class ParentMismatch(IdealClassError):
    pass


class NoGaps(IdealClassError):
    pass


class TableMissing(IdealClassError):
    pass


class IdentityHasNone(IdealClassError):
    """The identity S has only the empty factorization."""
