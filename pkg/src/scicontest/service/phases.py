"""Contest lifecycle state machine.

Phases only ever move forward: SETUP, OPEN, CLOSED, FROZEN, JURY,
COMPLETE. The clock advances the first three at the configured window
boundaries; the side-effectful transitions (freeze, shortlist, winners) are
admin-triggered. Every transition is recorded with actor and timestamp.
"""

from __future__ import annotations

from enum import Enum

from ..errors import ContestError


class Phase(str, Enum):
    SETUP = "SETUP"
    OPEN = "OPEN"
    CLOSED = "CLOSED"
    FROZEN = "FROZEN"
    JURY = "JURY"
    COMPLETE = "COMPLETE"

    @property
    def index(self) -> int:
        return PHASE_ORDER.index(self)

    def __ge__(self, other: "Phase") -> bool:  # type: ignore[override]
        return self.index >= other.index

    def __gt__(self, other: "Phase") -> bool:  # type: ignore[override]
        return self.index > other.index

    def __le__(self, other: "Phase") -> bool:  # type: ignore[override]
        return self.index <= other.index

    def __lt__(self, other: "Phase") -> bool:  # type: ignore[override]
        return self.index < other.index


PHASE_ORDER = [
    Phase.SETUP,
    Phase.OPEN,
    Phase.CLOSED,
    Phase.FROZEN,
    Phase.JURY,
    Phase.COMPLETE,
]


def successor(phase: Phase) -> Phase | None:
    index = phase.index
    return PHASE_ORDER[index + 1] if index + 1 < len(PHASE_ORDER) else None


def check_transition(current: Phase, target: Phase) -> None:
    """Only the immediate successor is reachable."""
    if target != successor(current):
        raise ContestError(
            "INVALID_TRANSITION",
            f"cannot move from {current.value} to {target.value}",
            details={"current": current.value, "target": target.value},
        )
