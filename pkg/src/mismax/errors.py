"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class OrderTooLarge(GraphError):
    """Requested graph order exceeds what the operation supports."""


class BadEndpoint(GraphError):
    """A vertex index is outside the graph's vertex range."""


class LoopRejected(GraphError):
    """An edge (v, v) was supplied; loops are not representable."""


class NotCompleteComponents(GraphError):
    """Star join requires every component of the operand to be complete."""


class MalformedGraph6(GraphError):
    """graph6 text has a bad length or an out-of-range byte."""


class BadParameters(GraphError):
    """Family or formula parameters are outside their stated range."""


class CountOverflow(GraphError):
    """A maximal-independent-set count exceeded 64 bits."""


class NoBlocks(GraphError):
    """The graph is edgeless, so it has no blocks."""


class NotTwoConnected(GraphError):
    """Ear decomposition needs a 2-connected subgraph on >= 3 vertices."""
