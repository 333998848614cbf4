"""scicontest: a self-hosted platform for social-media-rated STEM contests.

Library layers (bottom to top): domain, submissions, metrics, rating,
syndication, service (HTTP + CLI), report (figures).
"""

__version__ = "0.1.0"

from .errors import ConfigError, ContestError

__all__ = ["ConfigError", "ContestError", "__version__"]
