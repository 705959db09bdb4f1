"""Exception hierarchy shared by all liedouble modules."""

from __future__ import annotations


class LiedoubleError(Exception):
    """Base class for every error raised by this package."""


class UnassignedParameter(LiedoubleError):
    """A polynomial was evaluated without a value for one of its parameters."""


class PolyParseError(LiedoubleError):
    """A polynomial string does not conform to the textual grammar."""


class NotDivisible(LiedoubleError):
    """Exact polynomial division was requested but the remainder is nonzero."""


class IndexOutOfRange(LiedoubleError):
    """A basis index lies outside [0, dim)."""


class SymmetricEntry(LiedoubleError):
    """A structure-constant entry (i, i, k) with nonzero coefficient was supplied."""


class DimensionMismatch(LiedoubleError):
    """Tensor or vector dimensions are inconsistent with the algebra."""


class SingularMatrix(LiedoubleError):
    """A basis-change matrix has no exact inverse."""


class ShapeError(LiedoubleError):
    """A tensor has the wrong shape or violates a required (anti)symmetry."""


class NotACobracket(LiedoubleError):
    """The candidate cocommutator does not make the double a Lie algebra."""


class NotInFirstFactor(LiedoubleError):
    """A subspace expected inside the primal factor has dual components."""


class BasisNotComplete(LiedoubleError):
    """Subalgebra basis plus complement do not span the whole algebra."""


class WrongDimension(LiedoubleError):
    """A subspace does not have the dimension required by the operation."""


class BadPartition(LiedoubleError):
    """Index sets do not partition the basis."""


class NotClosed(LiedoubleError):
    """A subspace is not closed under the Lie bracket."""


class WrongChart(LiedoubleError):
    """A chart point or label does not belong to the requested chart."""


class OutOfChart(LiedoubleError):
    """A matrix lies outside the image of the coordinate chart."""


class UnknownBracket(LiedoubleError):
    """No closed-form bracket is registered under the requested name."""


class UnknownKey(LiedoubleError):
    """The catalog has no entry with the requested key."""


class ParseError(LiedoubleError):
    """An input file or CLI argument could not be parsed."""
