"""Exception types raised by loaders, verifiers and the module machinery."""

from __future__ import annotations


class FuscatError(Exception):
    """Base class for all package errors."""


class MalformedTable(FuscatError):
    """A coefficient table has the wrong shape, dtype or index range."""


class ShapeMismatch(FuscatError):
    """Morphism composition or comparison with incompatible words/objects."""


class IndexOutOfRange(FuscatError):
    """A label, copy or multiplicity index outside its declared range."""


class NondegeneracyFailure(FuscatError):
    """A pairing or S-matrix that is numerically singular."""


class NotSpecial(FuscatError):
    """An algebra whose specialness scalars vanish (beta_A * beta_1 == 0)."""


class NotInvertible(FuscatError):
    """A label required to be invertible (d == 1) is not."""


class NonIntegralTrace(FuscatError):
    """A projector trace that should be a nonnegative integer is not.

    Carries the offending value in ``args[1]`` when raised by hom-dimension
    computations.
    """


class SplitFailure(FuscatError):
    """Idempotent splitting or commutant diagonalization failed to converge."""


class ParseError(FuscatError):
    """A category or algebra file that cannot be parsed."""
