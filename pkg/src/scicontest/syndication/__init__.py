"""Social syndication: event-driven posts, widgets, and the delivery outbox."""

from .events import ContestEvent, EventKind, event_from_doc, event_to_doc
from .outbox import (
    DeliveryAdapter,
    DrainReport,
    FileSinkAdapter,
    MemorySinkAdapter,
    Outbox,
)
from .posts import (
    Channel,
    OutboxPost,
    PostState,
    TemplateSet,
    post_from_doc,
    post_to_doc,
    render_event_post,
)
from .widgets import Widget, generate_widget

__all__ = [
    "Channel",
    "ContestEvent",
    "DeliveryAdapter",
    "DrainReport",
    "EventKind",
    "FileSinkAdapter",
    "MemorySinkAdapter",
    "Outbox",
    "OutboxPost",
    "PostState",
    "TemplateSet",
    "Widget",
    "event_from_doc",
    "event_to_doc",
    "generate_widget",
    "post_from_doc",
    "post_to_doc",
    "render_event_post",
]
