"""Exception hierarchy shared by all onelap modules."""


class OnelapError(Exception):
    """Base class for every error raised by the package."""


class GraphError(OnelapError):
    pass


class IsolatedVertex(GraphError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} has no incident edge")
        self.vertex = vertex


class DuplicateEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.edge = (u, v)


class SelfLoop(GraphError):
    def __init__(self, vertex):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class VertexOutOfRange(GraphError):
    def __init__(self, vertex, n):
        super().__init__(f"vertex {vertex} outside [0, {n})")
        self.vertex = vertex
        self.n = n


class TooSmall(OnelapError):
    pass


class TooLarge(OnelapError):
    def __init__(self, n, max_n):
        super().__init__(f"graph has {n} vertices, limit is {max_n}")
        self.n = n
        self.max_n = max_n


class ParseError(OnelapError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class LengthMismatch(OnelapError):
    def __init__(self, got, expected):
        super().__init__(f"vector has length {got}, graph has {expected} vertices")


class ZeroVector(OnelapError):
    pass


class NotOnX(OnelapError):
    """Raised when a vector does not have unit weighted norm."""


class AllZeroPattern(OnelapError):
    pass


class NonpositiveLevel(OnelapError):
    pass


class Disconnected(OnelapError):
    pass


class ConstantVector(OnelapError):
    pass


class HypothesisViolated(OnelapError):
    def __init__(self, which):
        super().__init__(which)
        self.which = which


class ConvergenceFailure(OnelapError):
    pass
