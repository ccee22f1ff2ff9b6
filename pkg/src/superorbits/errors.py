"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SuperOrbitsError(Exception):
    """Base class for all library errors."""


class InvalidSpec(SuperOrbitsError, ValueError):
    """Algebra parameters violate the family's constraints."""


class JacobiFailure(SuperOrbitsError):
    """A constructed algebra failed a structural self-check."""


class NotInEvenPart(SuperOrbitsError, ValueError):
    """A matrix does not lie in the span of the even basis."""


class NotNilpotent(SuperOrbitsError, ValueError):
    pass


class InvalidLabel(SuperOrbitsError, ValueError):
    """An orbit label does not fit the family or its parameters."""


class UnsupportedFamily(SuperOrbitsError):
    """The requested computation has no realization for this family."""


class InvariantMismatch(SuperOrbitsError, AssertionError):
    """A closed-form value disagreed with its exact cross-check."""


class NotBorelCompatible(SuperOrbitsError, ValueError):
    pass


class NotDominant(SuperOrbitsError, ValueError):
    pass


class NonDominantLeader(SuperOrbitsError):
    """Leading weight of a residual character was not block-dominant."""


class NegativeResidual(SuperOrbitsError):
    """Character subtraction produced a negative multiplicity."""
