"""Exception types shared across the package."""


class SurfbraidError(Exception):
    """Base class for all package-specific errors."""


class InvalidGeneratorError(SurfbraidError, ValueError):
    """A word uses a generator that does not exist on the given surface."""


class ParseError(SurfbraidError, ValueError):
    """Malformed word, monomial, element or expression text."""


class DimensionMismatchError(SurfbraidError, ValueError):
    """Operands live on different strand counts or truncations."""


class TruncationOverflowError(SurfbraidError, ValueError):
    """A computation produced terms outside the requested truncation."""


class ParameterError(SurfbraidError, ValueError):
    """A numeric parameter is out of its documented range."""


class ResourceLimitError(SurfbraidError, RuntimeError):
    """A configured node / row / word budget was exhausted."""


class UnsupportedDegreeError(SurfbraidError, ValueError):
    """The operation is only defined in low chord degree."""


class HypothesisError(SurfbraidError, ValueError):
    """The surface does not satisfy the hypothesis of the requested check."""
