"""Exception types shared across the package."""


class WgfParseError(ValueError):
    """Raised when graph-file text does not conform to the WGF format."""


class NotWheelerError(ValueError):
    """Raised when an operation requires a valid vertex order but the input
    numbering violates one of the ordering axioms."""


class FirstInOrderError(LookupError):
    """Raised when asking for the order-predecessor of the vertex that is
    first in the vertex order; no such predecessor exists."""


class IndexInvariantError(RuntimeError):
    """Raised when an internal consistency guarantee of a built index does
    not hold. Always indicates a construction bug or a corrupt index file,
    never a property of the query."""
