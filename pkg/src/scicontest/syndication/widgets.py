"""Personalized embeddable widgets.

A widget is a self-contained static markup snippet a participant can paste
into their own pages: entry title, topic, and a deep link back to the
entry's public page. No script content, ever; regeneration is
byte-identical.
"""

from __future__ import annotations

import html
from dataclasses import dataclass

from ..errors import ContestError
from ..submissions.model import Submission, SubmissionState

WIDGET_TEMPLATE = (
    '<div class="contest-widget" style="border:1px solid #ccc;padding:12px;'
    'font-family:sans-serif;max-width:320px">'
    '<p class="contest-widget-title" style="font-weight:bold;margin:0">{title}</p>'
    '<p class="contest-widget-topic" style="margin:4px 0;color:#555">{topic}</p>'
    '<a class="contest-widget-link" href="{deep_link}">View this contest entry</a>'
    "</div>"
)


@dataclass(frozen=True)
class Widget:
    submission_id: str
    embed_markup: str
    deep_link: str


def generate_widget(
    submission: Submission, platform_base_url: str, topic_title: str = ""
) -> Widget:
    if submission.state is not SubmissionState.SUBMITTED:
        raise ContestError("NOT_SUBMITTED", "widgets exist only for finalized entries")
    deep_link = f"{platform_base_url.rstrip('/')}/submissions/{submission.submission_id}"
    markup = WIDGET_TEMPLATE.format(
        title=html.escape(submission.title),
        topic=html.escape(topic_title),
        deep_link=html.escape(deep_link, quote=True),
    )
    return Widget(submission.submission_id, markup, deep_link)
