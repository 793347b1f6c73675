from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from ..digraph import Digraph
from ..idf import Labeling, first_undominated, weight

ProgressCallback = Callable[[dict], None]


class Method(enum.Enum):
    BRUTE_FORCE = "BruteForce"
    PROFILE_DP = "ProfileDP"
    BRANCH_AND_BOUND = "BranchAndBound"
    CLOSED_FORM = "ClosedForm"


class CapExceededError(ValueError):
    """The instance is larger than a solver is configured to handle.

    ``flag`` names the CLI option that raises the cap.
    """

    def __init__(self, message: str, flag: str):
        self.flag = flag
        super().__init__(f"{message} (raise with {flag})")


class SolverRefusal(CapExceededError):
    """Every method the dispatcher tried refused the instance."""

    def __init__(self, chain: list[tuple[str, CapExceededError]]):
        self.chain = chain
        tried = "; ".join(f"{name}: {err}" for name, err in chain)
        flag = chain[-1][1].flag if chain else ""
        self.flag = flag
        ValueError.__init__(self, f"no solver accepted the instance ({tried})")


@dataclass
class SolveResult:
    gamma: int
    witness: Labeling
    method: Method
    stats: dict[str, Any] = field(default_factory=dict)

    def check(self, d: Digraph) -> "SolveResult":
        """Assert the witness is an IDF of weight gamma; returns self."""
        w = weight(self.witness)
        if w != self.gamma:
            raise AssertionError(f"{self.method.value} witness weight {w} != gamma {self.gamma}")
        bad = first_undominated(d, self.witness)
        if bad is not None:
            raise AssertionError(f"{self.method.value} witness leaves vertex {bad} undominated")
        return self


def notify(progress: Optional[ProgressCallback], **event: Any) -> None:
    if progress is not None:
        progress(event)
