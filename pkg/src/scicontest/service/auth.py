"""Session tokens for participants, jurors, and the admin.

Tokens are 256-bit random strings persisted with role, subject, and expiry;
expired or unknown tokens are rejected. Nothing about a token is derivable
from the account.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass
from datetime import timedelta

from ..errors import ContestError
from ..timeutil import Clock, parse_rfc3339, rfc3339
from ..store import DocumentStore

SESSIONS = "sessions"

ROLE_PARTICIPANT = "participant"
ROLE_JUROR = "juror"
ROLE_ADMIN = "admin"


@dataclass(frozen=True)
class Session:
    token: str
    role: str
    subject_id: str  # account_id, juror_id, or "admin"
    expires_at: str  # RFC 3339


class SessionRegistry:
    def __init__(self, store: DocumentStore, clock: Clock, ttl_s: int = 12 * 3600):
        self.store = store
        self.clock = clock
        self.ttl_s = ttl_s

    def issue(self, role: str, subject_id: str) -> Session:
        session = Session(
            token=secrets.token_urlsafe(32),
            role=role,
            subject_id=subject_id,
            expires_at=rfc3339(self.clock.now() + timedelta(seconds=self.ttl_s)),
        )
        self.store.put(
            SESSIONS,
            session.token,
            {
                "role": session.role,
                "subject_id": session.subject_id,
                "expires_at": session.expires_at,
            },
        )
        return session

    def resolve(self, token: str | None) -> Session:
        if not token:
            raise ContestError("UNAUTHENTICATED", "missing bearer token")
        doc = self.store.get(SESSIONS, token)
        if doc is None:
            raise ContestError("UNAUTHENTICATED", "unknown session token")
        if parse_rfc3339(doc["expires_at"]) < self.clock.now():
            raise ContestError("UNAUTHENTICATED", "session expired")
        return Session(token, doc["role"], doc["subject_id"], doc["expires_at"])

    def require(self, token: str | None, role: str) -> Session:
        session = self.resolve(token)
        if session.role != role:
            raise ContestError("FORBIDDEN", f"this endpoint requires the {role} role")
        return session
