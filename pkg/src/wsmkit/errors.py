"""Exception hierarchy shared by all wsmkit modules."""

from __future__ import annotations


class WsmkitError(Exception):
    """Base class for every error raised by wsmkit."""


class GraphParseError(WsmkitError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeCapExceeded(WsmkitError):
    """An exact (exponential) computation was asked to run above its cap."""


class PreconditionViolation(WsmkitError):
    """The ~_k machinery was invoked on a graph of too small rank-width."""


class StructureError(WsmkitError):
    """A decomposition or labeled tree is malformed for the given graph."""


class DisconnectedGraphError(WsmkitError):
    pass


class NotASplitGraph(WsmkitError):
    def __init__(self, witness: dict[int, int] | None, obstruction: str | None = None):
        self.witness = witness
        self.obstruction = obstruction
        super().__init__(f"graph is not a split graph (contains {obstruction}: {witness})")
