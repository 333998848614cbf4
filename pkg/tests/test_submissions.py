"""Submission lifecycle: registration through finalize and withdrawal."""

from __future__ import annotations

from datetime import timedelta

import pytest

from scicontest.domain import assign_category, default_topic_catalog
from scicontest.errors import ContestError
from scicontest.store import DocumentStore
from scicontest.submissions import SubmissionService, SubmissionState, verify_password
from scicontest.timeutil import ManualClock

from conftest import CLOSE, FREEZE, OPEN, birth_date_for_age

YT = "https://www.youtube.com/watch?v="


@pytest.fixture
def service(config):
    clock = ManualClock(OPEN + timedelta(days=10))
    return SubmissionService(
        DocumentStore(),
        config,
        default_topic_catalog(),
        clock,
        kdf_iterations=1000,
    )


def register(service, email="ada@example.org", age=12, country="AT"):
    account_id = service.register_account("Ada", "L", email, "corr3ct-horse")
    service.complete_profile(
        account_id, birth_date_for_age(age, CLOSE.date()), country
    )
    return account_id


def draft(service, account_id, url_suffix="vid00000001", media="video", topic="AG1_01"):
    return service.create_submission(
        account_id, "Solar oven", "We built a solar oven.", topic, media, YT + url_suffix
    )


class TestAccounts:
    def test_register_normalizes_email(self, service):
        account_id = service.register_account("Ada", "L", "Ada@Example.ORG", "corr3ct-horse")
        assert service.get_account(account_id).email == "ada@example.org"

    def test_email_taken(self, service):
        service.register_account("Ada", "L", "ada@example.org", "corr3ct-horse")
        with pytest.raises(ContestError) as err:
            service.register_account("Eva", "M", "ADA@example.org", "corr3ct-horse")
        assert err.value.code == "EMAIL_TAKEN"

    def test_weak_password(self, service):
        with pytest.raises(ContestError) as err:
            service.register_account("Ada", "L", "ada@example.org", "short1")
        assert err.value.code == "WEAK_PASSWORD"

    def test_invalid_email(self, service):
        with pytest.raises(ContestError) as err:
            service.register_account("Ada", "L", "not-an-email", "corr3ct-horse")
        assert err.value.code == "INVALID_EMAIL"

    def test_digest_is_salted_and_verifiable(self, service):
        account_id = service.register_account("Ada", "L", "ada@example.org", "corr3ct-horse")
        digest = service.get_account(account_id).credential_digest
        assert "corr3ct-horse" not in digest
        assert verify_password("corr3ct-horse", digest)
        assert not verify_password("wrong-password", digest)

    def test_authenticate(self, service):
        service.register_account("Ada", "L", "ada@example.org", "corr3ct-horse")
        assert service.authenticate("ada@example.org", "corr3ct-horse") is not None
        assert service.authenticate("ada@example.org", "nope-nope-nope") is None
        assert service.authenticate("ghost@example.org", "corr3ct-horse") is None


class TestProfiles:
    def test_eligible_profile(self, service):
        account_id = service.register_account("Ada", "L", "ada@example.org", "corr3ct-horse")
        result = service.complete_profile(account_id, birth_date_for_age(13, CLOSE.date()), "AT")
        assert result.eligible and result.age_group == "AG1"

    def test_group_without_members_rejected(self, service):
        account_id = service.register_account("Ada", "L", "ada@example.org", "corr3ct-horse")
        with pytest.raises(ContestError) as err:
            service.complete_profile(
                account_id,
                birth_date_for_age(13, CLOSE.date()),
                "AT",
                participation_mode="group",
            )
        assert err.value.code == "INVALID_GROUP_MEMBERS"

    def test_ineligible_country_stored_and_flagged(self, service):
        account_id = service.register_account("Ada", "L", "ada@example.org", "corr3ct-horse")
        result = service.complete_profile(account_id, birth_date_for_age(13, CLOSE.date()), "CH")
        assert not result.eligible
        assert "COUNTRY_NOT_ELIGIBLE" in result.reasons
        assert service.get_profile(account_id).country_of_residence == "CH"

    def test_bad_country_code(self, service):
        account_id = service.register_account("Ada", "L", "ada@example.org", "corr3ct-horse")
        with pytest.raises(ContestError) as err:
            service.complete_profile(account_id, birth_date_for_age(13, CLOSE.date()), "AUT")
        assert err.value.code == "INVALID_COUNTRY_CODE"

    def test_unknown_account(self, service):
        with pytest.raises(ContestError) as err:
            service.complete_profile("ghost", birth_date_for_age(13, CLOSE.date()), "AT")
        assert err.value.code == "ACCOUNT_NOT_FOUND"


class TestDrafts:
    def test_create_draft(self, service):
        account_id = register(service)
        submission_id = draft(service, account_id)
        submission = service.get_submission(submission_id)
        assert submission.state is SubmissionState.DRAFT
        assert submission.category_id is None

    def test_unknown_topic(self, service):
        account_id = register(service)
        with pytest.raises(ContestError) as err:
            draft(service, account_id, topic="AG9_99")
        assert err.value.code == "UNKNOWN_TOPIC"

    def test_unknown_media_type(self, service):
        account_id = register(service)
        with pytest.raises(ContestError) as err:
            draft(service, account_id, media="hologram")
        assert err.value.code == "UNKNOWN_MEDIA_TYPE"

    def test_unsupported_url(self, service):
        account_id = register(service)
        with pytest.raises(ContestError) as err:
            service.create_submission(
                account_id, "t", "d", "AG1_01", "video", "https://vimeo.com/1"
            )
        assert err.value.code == "UNSUPPORTED_PLATFORM"

    def test_draft_editable(self, service):
        account_id = register(service)
        submission_id = draft(service, account_id)
        updated = service.update_draft(account_id, submission_id, title="Better title")
        assert updated.title == "Better title"


class TestFinalize:
    def test_happy_path_derives_category(self, service, config):
        account_id = register(service, age=13)
        submission_id = draft(service, account_id, media="video")
        finalized = service.finalize_submission(
            account_id, submission_id, hashtag_attested=True
        )
        assert finalized.state is SubmissionState.SUBMITTED
        assert finalized.category_id == assign_category("AG1", "video", config)
        assert finalized.country == "AT"
        assert finalized.submitted_at == service.clock.now()

    def test_category_round_trip(self, service, config):
        # Stored category always equals a recomputation from profile + media.
        from scicontest.domain import derive_age_group

        account_id = register(service, age=16)
        submission_id = draft(service, account_id, media="poster", topic="AG2_01")
        finalized = service.finalize_submission(account_id, submission_id, hashtag_attested=True)
        profile = service.get_profile(account_id)
        group = derive_age_group(profile.birth_date, config.age_reference.date(), config)
        assert finalized.category_id == assign_category(group.id, "poster", config)

    def test_window_closed(self, service):
        account_id = register(service)
        submission_id = draft(service, account_id)
        service.clock.set(CLOSE + timedelta(hours=1))
        with pytest.raises(ContestError) as err:
            service.finalize_submission(account_id, submission_id, hashtag_attested=True)
        assert err.value.code == "WINDOW_CLOSED"

    def test_second_finalize_rejected(self, service):
        account_id = register(service)
        first = draft(service, account_id, url_suffix="vid00000001")
        second = draft(service, account_id, url_suffix="vid00000002")
        service.finalize_submission(account_id, first, hashtag_attested=True)
        with pytest.raises(ContestError) as err:
            service.finalize_submission(account_id, second, hashtag_attested=True)
        assert err.value.code == "ALREADY_SUBMITTED"

    def test_attestation_required(self, service):
        account_id = register(service)
        submission_id = draft(service, account_id)
        with pytest.raises(ContestError) as err:
            service.finalize_submission(account_id, submission_id)
        assert err.value.code == "ATTESTATION_REQUIRED"

    def test_ineligible_profile_blocks(self, service):
        account_id = register(service, country="CH")
        submission_id = draft(service, account_id)
        with pytest.raises(ContestError) as err:
            service.finalize_submission(account_id, submission_id, hashtag_attested=True)
        assert err.value.code == "NOT_ELIGIBLE"

    def test_submitted_at_inside_window(self, service):
        account_id = register(service)
        submission_id = draft(service, account_id)
        finalized = service.finalize_submission(account_id, submission_id, hashtag_attested=True)
        assert OPEN <= finalized.submitted_at <= CLOSE

    def test_withdraw_then_resubmit_other_draft(self, service):
        account_id = register(service)
        first = draft(service, account_id, url_suffix="vid00000001")
        second = draft(service, account_id, url_suffix="vid00000002")
        service.finalize_submission(account_id, first, hashtag_attested=True)
        service.withdraw_submission(account_id, first)
        finalized = service.finalize_submission(account_id, second, hashtag_attested=True)
        assert finalized.state is SubmissionState.SUBMITTED


class TestWithdraw:
    def test_withdraw_before_freeze(self, service):
        account_id = register(service)
        submission_id = draft(service, account_id)
        service.finalize_submission(account_id, submission_id, hashtag_attested=True)
        withdrawn = service.withdraw_submission(account_id, submission_id)
        assert withdrawn.state is SubmissionState.WITHDRAWN
        assert service.live_submissions() == []

    def test_withdraw_after_freeze(self, service):
        account_id = register(service)
        submission_id = draft(service, account_id)
        service.finalize_submission(account_id, submission_id, hashtag_attested=True)
        service.clock.set(FREEZE)
        with pytest.raises(ContestError) as err:
            service.withdraw_submission(account_id, submission_id)
        assert err.value.code == "FROZEN"

    def test_foreign_submission_hidden(self, service):
        owner = register(service, email="owner@example.org")
        other = register(service, email="other@example.org")
        submission_id = draft(service, owner)
        with pytest.raises(ContestError) as err:
            service.withdraw_submission(other, submission_id)
        assert err.value.code == "NOT_FOUND"
