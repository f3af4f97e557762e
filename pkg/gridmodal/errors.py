"""
Exception hierarchy for GridModal.

Every error raised on purpose by the library derives from GridModalError so
that the command-line layer can report it with a single handler.
"""

from typing import Iterable, List, Optional


class GridModalError(Exception):
    """Base class for all GridModal errors."""


class ReductionError(GridModalError):
    """Kron reduction hit a pivot that is numerically zero."""


class InfeasibleOperatingPointError(GridModalError):
    """The equilibrium solver did not converge for the requested dispatch."""

    def __init__(self, message: str, iterations: int = 0, residual: float = float("nan")):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class AssemblyError(GridModalError):
    """A state-space model could not be assembled consistently."""


class EigenSolverError(GridModalError):
    """The eigenvalue decomposition failed or violated its residual bound."""

    def __init__(
        self, message: str, residual: Optional[float] = None, bound: Optional[float] = None
    ):
        super().__init__(message)
        self.residual = residual
        self.bound = bound


class ChannelError(GridModalError):
    """An input or output channel name does not exist in a model."""


class ScenarioError(GridModalError):
    """
    A scenario document failed to parse or validate.

    Attributes:
        errors: Every problem found, each prefixed with its key path or source position
    """

    def __init__(self, errors: Iterable[str]):
        self.errors: List[str] = list(errors)
        super().__init__("; ".join(self.errors) if self.errors else "invalid scenario")
