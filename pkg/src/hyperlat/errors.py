"""Exception hierarchy.

Every error raised on purpose by the library derives from ``HyperlatError``;
the CLI maps ``MalformedError`` to exit code 4 and everything else to 2.
"""


class HyperlatError(ValueError):
    pass


class ShapeError(HyperlatError):
    pass


class DomainError(HyperlatError):
    pass


class NotUnimodularError(HyperlatError):
    pass


class DegenerateFormError(HyperlatError):
    pass


class NotHyperbolicError(HyperlatError):
    pass


class BadReferenceError(HyperlatError):
    pass


class NotIsometryError(HyperlatError):
    pass


class NotInOPrimeError(HyperlatError):
    """The matrix swaps the two components of the positive cone."""


class LatticeMismatchError(HyperlatError):
    pass


class NotPolarizedError(HyperlatError):
    pass


class MalformedError(HyperlatError):
    """An internal consistency check failed.

    The mathematics guarantees the checked pattern for valid inputs, so this
    points at a bug rather than at bad user data.
    """
