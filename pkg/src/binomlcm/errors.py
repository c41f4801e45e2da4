"""Exception types raised by the library."""


class ZeroOperandError(ValueError):
    """An lcm operand was zero (or negative); lcm is only taken over positives."""


class OutOfRangeError(ValueError):
    """An integer argument fell outside the operation's domain (e.g. k > n)."""


class NotPrimeError(ValueError):
    """A number that must be prime failed the primality check."""


class ZeroValueError(ValueError):
    """An operation that needs a positive integer received zero."""


class UnknownCheckError(ValueError):
    """A verification sweep named a check that does not exist."""


class InternalInvariantError(RuntimeError):
    """A relation the library guarantees was violated; signals an implementation bug."""
