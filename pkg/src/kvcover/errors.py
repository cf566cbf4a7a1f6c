"""Exception hierarchy shared by every solver and the CLI."""


class KVCError(Exception):
    """Base class for all errors raised by kvcover."""


class InvalidVertex(KVCError, ValueError):
    pass


class InvalidWeight(KVCError, ValueError):
    pass


class InvalidK(KVCError, ValueError):
    pass


class InvalidEpsilon(KVCError, ValueError):
    pass


class InvalidDelta(KVCError, ValueError):
    pass


class InvalidColoring(KVCError, ValueError):
    pass


class InvalidParams(KVCError, ValueError):
    pass


class NotUnweighted(KVCError, ValueError):
    """The unweighted kernel got a graph with non-unit weights or self-loops."""


class LiftError(KVCError, ValueError):
    pass


class SolverContractError(KVCError, RuntimeError):
    """A pluggable 2SAT-CC solver returned an assignment of the wrong cardinality."""


class OracleTooLarge(KVCError, ValueError):
    pass


class ParseError(KVCError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Infeasible(KVCError):
    """No colorful k-set exists under the given coloring."""
