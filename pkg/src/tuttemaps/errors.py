"""Exception hierarchy shared by every module of the package."""


class TutteMapsError(Exception):
    """Base class for all user-facing errors raised by this package."""


class MapError(TutteMapsError):
    """An invalid combinatorial map description."""


class DuplicateToken(MapError):
    pass


class AlphaFixedPoint(MapError):
    pass


class AlphaNotInvolution(MapError):
    pass


class NotTransitive(MapError):
    pass


class UnknownRoot(MapError):
    pass


class MapParseError(MapError):
    """Syntax error in a map file; carries 1-based line and column."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = f"line {line}, column {col}: " if line is not None else ""
        super().__init__(where + message)


class NotASpanningTree(TutteMapsError):
    pass


class NotAForest(TutteMapsError):
    pass


class EdgeInTree(TutteMapsError):
    pass


class EdgeNotInTree(TutteMapsError):
    pass


class NotDirected(TutteMapsError):
    """The edge set is neither a directed cycle nor a directed cocycle."""


class SameOrientationOnEdge(TutteMapsError):
    pass


class OutdegreeMismatch(TutteMapsError):
    pass


class SumMismatch(TutteMapsError):
    pass


class NotAnOutdegreeSequence(TutteMapsError):
    pass


class NotRecurrent(TutteMapsError):
    pass


class NotV0Connected(TutteMapsError):
    pass


class VertexStable(TutteMapsError):
    pass


class CapExceeded(TutteMapsError):
    pass


class LiteralError(TutteMapsError):
    """Malformed subgraph, orientation or configuration literal."""


class InternalError(RuntimeError):
    """A procedure that is guaranteed to succeed did not; indicates a bug."""
