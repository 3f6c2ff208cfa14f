"""Exception hierarchy shared by all modules."""


class LFactorError(Exception):
    """Base class for domain errors raised by :mod:`lconverse`."""


class EmptyMultisetError(LFactorError, ValueError):
    pass


class FieldMismatchError(LFactorError, ValueError):
    """Summands or operands live over different base fields."""


class NonCanonicalError(LFactorError, ValueError):
    pass


class NonDivisibleError(LFactorError, ArithmeticError):
    """The divisor's Gamma atoms are not contained in the dividend's."""


class NearPoleError(LFactorError, ArithmeticError):
    """Numeric evaluation requested too close to a Gamma pole."""


class ScopeError(LFactorError, ValueError):
    """Input outside the range an operation is defined for."""


class InconsistentOracleError(LFactorError):
    """Oracle answers match no parameter within the declared bounds."""


class SchemaError(ValueError):
    """Malformed JSON payload."""
