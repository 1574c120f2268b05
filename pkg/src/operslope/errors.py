"""Exception types shared across the library."""


class OperslopeError(Exception):
    """Base class for all library errors."""


class PrecisionExhausted(OperslopeError):
    """A coefficient beyond the certified precision window was requested."""


class NonUnit(OperslopeError):
    """Inversion of a series whose leading coefficient vanishes."""


class RamificationMismatch(OperslopeError):
    """Arithmetic between series living over different local parameters."""


class ZeroSeries(OperslopeError):
    """Valuation requested for a series with no known nonzero coefficient."""


class MismatchedAlgebra(OperslopeError):
    """Operation mixing elements of different Lie algebras."""


class NotNilpotent(OperslopeError):
    """A unipotent gauge factor was built on a non-nilpotent carrier."""


class NotReduced(OperslopeError):
    """Slope extraction attempted on a connection that is not reduced."""


class CyclicVectorFailure(OperslopeError):
    """The cyclic-vector elimination degenerated (defensive; should not occur)."""


class BoundViolation(OperslopeError):
    """An operator mode that must annihilate the vacuum acted nonzero."""


class SchemaError(OperslopeError):
    """A JSON document does not match the expected schema."""
