"""Operator settings carried in the config file beyond the contest rules.

The contest config document holds the domain fields; everything the
deployable service additionally needs (credentials, channels, paths,
cadences) rides along as extra top-level keys and lands here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

from ..domain.config import ContestConfig
from ..syndication.posts import Channel


@dataclass
class ServiceSettings:
    platform_base_url: str = "http://localhost:8000"
    leaderboard_visibility: str = "post_freeze"  # post_freeze | live
    admin_key: str | None = None
    jurors: dict[str, str] = field(default_factory=dict)  # juror_id -> key
    channels: tuple[Channel, ...] = (Channel("microblog", 280),)
    template_dir: str | None = None
    metrics_fixture: str | None = None  # path; enables the simulated provider
    tick_seconds: int = 3600  # simulated-provider virtual time unit
    poll_interval_s: int = 3600
    failure_flag_threshold: int = 5
    backoff_base_s: int = 60
    backoff_cap_s: int = 3600
    kdf_iterations: int = 100_000
    session_ttl_s: int = 12 * 3600
    topic_catalog: str | None = None  # path; defaults to the shipped catalog

    @classmethod
    def from_extras(cls, extras: Mapping[str, Any]) -> "ServiceSettings":
        settings = cls()
        simple = {
            "platform_base_url",
            "leaderboard_visibility",
            "admin_key",
            "template_dir",
            "metrics_fixture",
            "topic_catalog",
        }
        numeric = {
            "tick_seconds",
            "poll_interval_s",
            "failure_flag_threshold",
            "backoff_base_s",
            "backoff_cap_s",
            "kdf_iterations",
            "session_ttl_s",
        }
        for key, value in extras.items():
            if key in simple:
                setattr(settings, key, value)
            elif key in numeric:
                setattr(settings, key, int(value))
            elif key == "jurors":
                settings.jurors = {j["juror_id"]: j["key"] for j in value}
            elif key == "channels":
                settings.channels = tuple(
                    Channel(c["id"], int(c.get("text_limit", 280))) for c in value
                )
        return settings

    @classmethod
    def from_config(cls, config: ContestConfig) -> "ServiceSettings":
        return cls.from_extras(config.extras)
