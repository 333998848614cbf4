"""Metrics ingestion: polling, sample history, freeze snapshot, simulator."""

from .poller import (
    MetricCounts,
    MetricsProvider,
    PollOutcome,
    PollTracker,
    StubProvider,
    poll_cycle,
)
from .samples import (
    NO_DATA,
    MetricsSample,
    MetricsSnapshot,
    freeze_snapshot,
    sample_from_doc,
    sample_to_doc,
    snapshot_from_doc,
    snapshot_to_doc,
)
from .simulated import SimulatedProvider, parse_fixture_rows, simulated_provider

__all__ = [
    "MetricCounts",
    "MetricsProvider",
    "MetricsSample",
    "MetricsSnapshot",
    "NO_DATA",
    "PollOutcome",
    "PollTracker",
    "SimulatedProvider",
    "StubProvider",
    "freeze_snapshot",
    "parse_fixture_rows",
    "poll_cycle",
    "sample_from_doc",
    "sample_to_doc",
    "simulated_provider",
    "snapshot_from_doc",
    "snapshot_to_doc",
]
