"""Exception types shared by every engine module."""

from __future__ import annotations

from dataclasses import dataclass


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(EngineError):
    """A table is ragged, non-square, or has out-of-range entries."""


@dataclass(frozen=True)
class Violation:
    """One broken axiom together with the elements that break it."""

    law: str
    witness: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.law} fails at {self.witness}"


class AxiomViolations(EngineError):
    """Raised by table validation; carries every violation found."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


class IncompatiblePartition(EngineError):
    """A partition is not compatible with the parent's operations."""


class NotComposable(EngineError):
    """Consecutive maps in a sequence do not share endpoints."""


class HypothesisUnmet(EngineError):
    """A check was invoked on an instance outside its hypothesis."""


class CrosscheckFailure(EngineError):
    """Two independent routes to the same fact disagree (engine bug)."""


class InvalidParameters(EngineError):
    """Constructor parameters outside the documented range."""


class NotDistributive(EngineError):
    """A lattice failed distributivity; carries a witness triple."""

    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        super().__init__(f"distributivity fails at {witness}")


class DegenerateStructure(EngineError):
    """A derived construction collapsed below the 0 != 1 threshold."""


class LimitExceeded(EngineError):
    """A configured search bound was hit before the answer was known."""
