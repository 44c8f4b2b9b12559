"""Exception types raised across the package."""

from __future__ import annotations


class RomdomError(Exception):
    """Base class for every error raised by romdom."""


class InvalidVertex(RomdomError, ValueError):
    pass


class LoopRejected(RomdomError, ValueError):
    pass


class InvalidFamilyParams(RomdomError, ValueError):
    pass


class WouldBeEmpty(RomdomError, ValueError):
    pass


class DimensionMismatch(RomdomError, ValueError):
    pass


class Undefined(RomdomError, ValueError):
    """The invariant is not defined on this graph (e.g. it has an isolated vertex)."""


class HypothesisFailed(RomdomError, ValueError):
    """A construction's precondition does not hold for the given factors."""


class InvalidWitness(RomdomError, ValueError):
    pass


class ParseError(RomdomError, ValueError):
    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = []
        if offset is not None:
            where.append(f"byte {offset}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


class BudgetExceeded(RomdomError, RuntimeError):
    """Search budget ran out before optimality was proven.

    ``best_bound`` is the best feasible objective value found so far (or None).
    """

    def __init__(self, message: str, *, best_bound: int | None = None, nodes: int = 0):
        super().__init__(message)
        self.best_bound = best_bound
        self.nodes = nodes
