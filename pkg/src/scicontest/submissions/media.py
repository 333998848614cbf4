"""External media links.

Entries live on the supported hosting platforms; we store the link plus the
platform-native resource id extracted from it. Parsing is deterministic and
idempotent: re-parsing a link's normalized URL yields the same MediaLink.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from urllib.parse import parse_qs, urlparse

from ..errors import ContestError


class Platform(str, Enum):
    YOUTUBE = "YOUTUBE"
    SLIDESHARE = "SLIDESHARE"


YOUTUBE_HOSTS = {"youtube.com", "www.youtube.com", "m.youtube.com", "www.youtube-nocookie.com"}
YOUTUBE_SHORT_HOSTS = {"youtu.be"}
SLIDESHARE_HOSTS = {
    "slideshare.net",
    "www.slideshare.net",
    "m.slideshare.net",
    "de.slideshare.net",
    "es.slideshare.net",
    "fr.slideshare.net",
    "pt.slideshare.net",
}


@dataclass(frozen=True)
class MediaLink:
    raw_url: str
    platform: Platform
    external_id: str

    @property
    def normalized_url(self) -> str:
        if self.platform is Platform.YOUTUBE:
            return f"https://www.youtube.com/watch?v={self.external_id}"
        path = urlparse(self.raw_url).path.strip("/")
        return f"https://www.slideshare.net/{path}"

    @property
    def embed_url(self) -> str:
        """Standard platform embed URL, used by media previews."""
        if self.platform is Platform.YOUTUBE:
            return f"https://www.youtube.com/embed/{self.external_id}"
        return f"https://www.slideshare.net/slideshow/embed_code/{self.external_id}"


def _youtube_id(parsed) -> str | None:
    host = (parsed.hostname or "").lower()
    path = parsed.path.strip("/")
    if host in YOUTUBE_SHORT_HOSTS:
        return path.split("/", 1)[0] or None
    if parsed.path == "/watch":
        values = parse_qs(parsed.query).get("v", [])
        return values[0] if values and values[0] else None
    parts = path.split("/")
    if len(parts) == 2 and parts[0] in {"embed", "shorts", "v", "live"}:
        return parts[1] or None
    return None


def validate_media_link(raw_url: str) -> MediaLink:
    """Extract the platform and its native resource id from a URL."""
    if not raw_url or not raw_url.strip():
        raise ContestError("MALFORMED_URL", "empty media link")
    url = raw_url.strip()
    parsed = urlparse(url)
    if parsed.scheme not in {"http", "https"} or not parsed.hostname:
        raise ContestError("MALFORMED_URL", f"not an http(s) URL: {url!r}")

    host = parsed.hostname.lower()
    if host in YOUTUBE_HOSTS or host in YOUTUBE_SHORT_HOSTS:
        video_id = _youtube_id(parsed)
        if not video_id:
            raise ContestError("MALFORMED_URL", f"no video id in {url!r}")
        return MediaLink(url, Platform.YOUTUBE, video_id)
    if host in SLIDESHARE_HOSTS:
        path = parsed.path.strip("/")
        if not path:
            raise ContestError("MALFORMED_URL", f"no deck slug in {url!r}")
        return MediaLink(url, Platform.SLIDESHARE, path.rsplit("/", 1)[-1])
    raise ContestError(
        "UNSUPPORTED_PLATFORM",
        f"media must be hosted on a supported platform, got host {host!r}",
    )
