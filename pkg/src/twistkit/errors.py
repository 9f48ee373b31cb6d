"""Exception types shared across the package."""


class TwistKitError(Exception):
    """Base class for every error raised by twistkit."""


class ParseError(TwistKitError):
    """Raised on malformed forest/word text; carries the offset and the expected tokens."""

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(detail)


class InvalidLeafIndex(TwistKitError):
    """A twist step addresses a leaf index outside the current tree."""


class CapExceeded(TwistKitError):
    """Requested enumeration size exceeds the configured cap."""


class UnboundedRegion(TwistKitError):
    """The candidate-class polyhedron is unbounded and no search box was given."""

    def __init__(self, ray):
        self.ray = tuple(ray)
        super().__init__(f"feasible region is unbounded along ray {self.ray}")


class VariableMismatch(TwistKitError):
    """Operands live in incompatible Laurent rings."""


class NonUnitImage(TwistKitError):
    """A ring homomorphism sends a group-ring generator to a non-unit."""


class UnsupportedRing(TwistKitError):
    """The requested operation needs a different coefficient ring."""


class NonGenericHom(TwistKitError):
    """A regularity homomorphism does not have the required monomial shape."""


class DimensionMismatch(TwistKitError):
    """Vector or germ dimensions do not agree."""


class InconclusiveCertificate(TwistKitError):
    """A certification run did not reach the requested verdict."""
