"""
Exception hierarchy shared across the package.

All exceptions derive from :class:`SquareTiledError` so callers can catch
everything this library raises with a single clause; validation-style
errors additionally derive from ``ValueError``.
"""


class SquareTiledError(Exception):
    """Base class for all errors raised by this package."""


class NotTransitive(SquareTiledError, ValueError):
    """The two permutations generate an intransitive group (disconnected surface)."""


class SumMismatch(SquareTiledError, ValueError):
    """Saddle lengths on a cylinder boundary do not sum to its circumference."""


class NegativeLength(SquareTiledError, ValueError):
    """A saddle connection length is negative, or zero outside degenerate mode."""


class Incommensurable(SquareTiledError, ValueError):
    """Cylinder moduli have an irrational ratio; no integer exponents exist."""


class ShapeMismatch(SquareTiledError, ValueError):
    """A weighted dual graph does not have the required reference shape."""


class ZeroNodeValue(SquareTiledError, ValueError):
    """A differential evaluation at a node was zero where nonzero is required."""


class UnsupportedLength(SquareTiledError, ValueError):
    """A dual-graph path longer than two edges was requested from the
    leading-order calculus, which only tracks one- and two-edge paths."""


class LengthMismatch(SquareTiledError, ValueError):
    """Two interfaces that should have equal total length do not."""


class CaseMismatch(SquareTiledError, ValueError):
    """The input's cylinder diagram does not match the requested case."""


class NotAStabilizer(SquareTiledError, ValueError):
    """The given word does not stabilize the origami up to relabeling."""


class HypothesisFailed(SquareTiledError, ValueError):
    """A hypothesis of the elliptic-component criterion fails.

    The message names the failing hypothesis.
    """


class GenusMismatch(SquareTiledError, ValueError):
    """The operation requires a surface of a specific genus."""
