"""Exception hierarchy.

Every domain error derives from :class:`GallaiError`, so the CLI can map
the whole family onto exit status 1.
"""


class GallaiError(ValueError):
    """Base class for domain errors raised by this package."""


class InvalidVertex(GallaiError):
    pass


class SelfLoop(GallaiError):
    pass


class UnknownEdge(GallaiError):
    pass


class NotAdjacent(GallaiError):
    pass


class EmptyGraph(GallaiError):
    pass


class InvalidParameter(GallaiError):
    pass


class NoEdges(GallaiError):
    pass


class GallaiEdgeless(GallaiError):
    """The Gallai graph has no edges, so its edge ideal is undefined."""


class EmptyFace(GallaiError):
    pass


class EmptyComplex(GallaiError):
    pass


class TooLarge(GallaiError):
    """An exhaustive enumeration would exceed its documented budget."""


class UnitIdeal(GallaiError):
    pass


class InvalidVariable(GallaiError):
    pass


class FormatError(GallaiError):
    """Malformed edge-list or ideal document."""
