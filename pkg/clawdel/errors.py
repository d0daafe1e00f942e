from __future__ import annotations

from typing import Optional


class ClawdelError(Exception):
    """Root of every error raised by the package."""


class ParseError(ClawdelError, ValueError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class GraphError(ClawdelError, ValueError):
    pass


class InfeasibleSolutionError(ClawdelError, ValueError):
    pass


class NonCanonicalSolutionError(ClawdelError, ValueError):
    pass


class GenerationError(ClawdelError, ValueError):
    pass


class OracleTooLargeError(ClawdelError, RuntimeError):
    def __init__(self, guard: str, limit: int) -> None:
        super().__init__(f"instance too large for oracle: {guard} exceeds {limit}")
        self.guard = guard
        self.limit = limit


class ShadowMismatchError(ClawdelError, RuntimeError):
    """A deletion set feasible on the bipartite shadow leaves a claw in the split graph."""

    def __init__(self, solution, witness: Optional[object]) -> None:
        ids = " ".join(str(v) for v in sorted(solution))
        super().__init__(f"shadow solution [{ids}] leaves split claw {witness}")
        self.solution = tuple(sorted(solution))
        self.witness = witness
