"""Media link parsing: platform detection, id extraction, idempotence."""

import pytest

from scicontest.errors import ContestError
from scicontest.submissions.media import Platform, validate_media_link


@pytest.mark.parametrize(
    "url,expected_id",
    [
        ("https://www.youtube.com/watch?v=dQw4w9WgXcQ", "dQw4w9WgXcQ"),
        ("http://youtube.com/watch?v=abc123", "abc123"),
        ("https://m.youtube.com/watch?v=abc123&t=10s", "abc123"),
        ("https://youtu.be/dQw4w9WgXcQ", "dQw4w9WgXcQ"),
        ("https://www.youtube.com/embed/xyz789", "xyz789"),
        ("https://www.youtube.com/shorts/shortid1", "shortid1"),
    ],
)
def test_youtube_forms(url, expected_id):
    link = validate_media_link(url)
    assert link.platform is Platform.YOUTUBE
    assert link.external_id == expected_id


@pytest.mark.parametrize(
    "url,expected_id",
    [
        ("https://www.slideshare.net/jane/solar-cells-42", "solar-cells-42"),
        ("http://slideshare.net/lab/why-robots", "why-robots"),
        ("https://de.slideshare.net/someone/deck-1", "deck-1"),
    ],
)
def test_slideshare_forms(url, expected_id):
    link = validate_media_link(url)
    assert link.platform is Platform.SLIDESHARE
    assert link.external_id == expected_id


@pytest.mark.parametrize(
    "url",
    [
        "https://vimeo.com/123456",
        "https://example.com/watch?v=abc",
        "https://twitter.com/status/1",
    ],
)
def test_other_hosts_rejected(url):
    with pytest.raises(ContestError) as err:
        validate_media_link(url)
    assert err.value.code == "UNSUPPORTED_PLATFORM"


@pytest.mark.parametrize(
    "url",
    [
        "",
        "   ",
        "not a url",
        "ftp://youtube.com/watch?v=abc",
        "https://www.youtube.com/watch",
        "https://www.youtube.com/watch?v=",
        "https://youtu.be/",
        "https://www.slideshare.net/",
    ],
)
def test_malformed_rejected(url):
    with pytest.raises(ContestError) as err:
        validate_media_link(url)
    assert err.value.code == "MALFORMED_URL"


@pytest.mark.parametrize(
    "url",
    [
        "https://youtu.be/dQw4w9WgXcQ",
        "https://m.youtube.com/watch?v=abc123&t=10s",
        "https://www.slideshare.net/jane/solar-cells-42",
    ],
)
def test_normalized_url_parse_is_idempotent(url):
    first = validate_media_link(url)
    second = validate_media_link(first.normalized_url)
    assert second.platform is first.platform
    assert second.external_id == first.external_id
    assert second.normalized_url == first.normalized_url
    # And a fixed point: parsing the normalized URL reproduces it exactly.
    assert second.raw_url == first.normalized_url
