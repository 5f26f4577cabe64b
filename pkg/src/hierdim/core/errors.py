"""Exceptions raised by the hierdim toolkit.

Every error derives from :class:`HierDimError`. The base class is a plain
``Exception`` so that errors raised inside pydantic validators reach the
caller unchanged rather than being wrapped in ``pydantic.ValidationError``.
"""


class HierDimError(Exception):
    """Base class for all toolkit errors."""


class DuplicateEdge(HierDimError):
    """An edge was listed twice."""


class Loop(HierDimError):
    """An edge joins a vertex to itself."""


class Disconnected(HierDimError):
    """The finite-weight part of a graph is not connected."""


class NonPositiveWeight(HierDimError):
    """An edge weight is zero, negative or not a number."""


class UnknownVertex(HierDimError):
    """A vertex id is outside ``0..n-1``."""


class EmptySubset(HierDimError):
    """A vertex subset that must be nonempty is empty."""


class PreconditionViolated(HierDimError):
    """Inputs to a generator construction do not satisfy its hypotheses."""


class BadParameter(HierDimError):
    """A numeric or named parameter is out of its admissible range."""


class InstanceTooLarge(HierDimError):
    """An exact search was requested on an instance above the size guard."""


class DuplicateLocation(HierDimError):
    """Two customers share an ambient location."""


class DisconnectedResult(HierDimError):
    """The finite-weight customer graph is disconnected."""


class SelfCheckFailed(HierDimError):
    """A gallery graph failed its structural self-check."""


class NoGeneratorExists(HierDimError):
    """No landmark set separates the required pairs, not even V(G)."""
