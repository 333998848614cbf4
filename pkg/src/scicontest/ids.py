"""Opaque id generation.

Services take an IdFactory so the simulator can derive ids from content
(byte-identical exports across runs and input permutations) while the live
service uses random ids.
"""

from __future__ import annotations

import hashlib
import secrets
from typing import Callable

IdFactory = Callable[..., str]
# call as id_factory(kind, *natural_key_parts) -> opaque id


def random_ids() -> IdFactory:
    def make(kind: str, *parts: str) -> str:
        return secrets.token_hex(8)

    return make


def content_ids(namespace: str = "sim") -> IdFactory:
    """Ids derived from natural keys; same inputs give the same id."""

    def make(kind: str, *parts: str) -> str:
        digest = hashlib.sha256(
            "\x1f".join((namespace, kind) + tuple(parts)).encode("utf-8")
        ).hexdigest()
        return digest[:12]

    return make
