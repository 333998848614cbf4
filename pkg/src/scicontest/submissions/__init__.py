"""Accounts, profiles, media links, and the submission lifecycle."""

from .media import MediaLink, Platform, validate_media_link
from .model import (
    Account,
    ParticipationMode,
    Profile,
    Submission,
    SubmissionState,
    submission_from_doc,
    submission_to_doc,
)
from .service import SubmissionService, hash_password, verify_password

__all__ = [
    "Account",
    "MediaLink",
    "ParticipationMode",
    "Platform",
    "Profile",
    "Submission",
    "SubmissionService",
    "SubmissionState",
    "hash_password",
    "submission_from_doc",
    "submission_to_doc",
    "validate_media_link",
    "verify_password",
]
