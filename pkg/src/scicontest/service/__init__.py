"""Deployable service: phases, HTTP surface, orchestration, exports."""

from ..store import DocumentStore
from .orchestrator import ContestService
from .phases import Phase
from .settings import ServiceSettings

__all__ = ["ContestService", "DocumentStore", "Phase", "ServiceSettings"]
