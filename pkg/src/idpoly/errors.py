class IdPolyError(Exception):
    """Base class for errors raised by idpoly."""


class GraphError(IdPolyError, ValueError):
    """Invalid graph, vertex, edge or operation argument."""


class GraphParseError(IdPolyError, ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        where = f"line {line}" if line else "input"
        super().__init__(f"{where}: {message}")


class SizeBoundError(IdPolyError, ValueError):
    """Graph is larger than the configured bound of an exponential algorithm."""


class LoopedGraphError(IdPolyError, ValueError):
    """Algorithm requires a simple graph but the input carries loops."""
