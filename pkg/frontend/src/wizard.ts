/**
 * Submission wizard state machine.
 *
 * Seven steps from registration to a finalized entry. A step only advances
 * when its (server-side) validation passed; service error codes are routed
 * back to the step that owns the offending field and shown verbatim. The
 * REVIEW step freezes the exact payloads the service will receive, so what
 * the participant reviews is byte-for-byte what gets sent.
 */

import { ApiError, ContestApi, type SubmissionPayload } from "./api.js";
import type { ContestMeta, SubmissionView, TopicSheet } from "./types.js";

export const WIZARD_STEPS = [
  "REGISTER",
  "PROFILE",
  "DESCRIBE",
  "TOPIC",
  "FORMAT",
  "LINK",
  "REVIEW",
  "DONE",
] as const;

export type WizardStep = (typeof WIZARD_STEPS)[number];

/** Which step owns the field a service error code refers to. */
const ERROR_STEP: Record<string, WizardStep> = {
  INVALID_EMAIL: "REGISTER",
  WEAK_PASSWORD: "REGISTER",
  EMAIL_TAKEN: "REGISTER",
  UNAUTHENTICATED: "REGISTER",
  INVALID_COUNTRY_CODE: "PROFILE",
  INVALID_DATE: "PROFILE",
  INVALID_GROUP_MEMBERS: "PROFILE",
  COUNTRY_NOT_ELIGIBLE: "PROFILE",
  AGE_OUT_OF_RANGE: "PROFILE",
  WINDOW_CLOSED: "PROFILE",
  UNKNOWN_TOPIC: "TOPIC",
  UNKNOWN_MEDIA_TYPE: "FORMAT",
  UNSUPPORTED_PLATFORM: "LINK",
  MALFORMED_URL: "LINK",
};

export interface StepError {
  code: string;
  message: string;
}

export interface ReviewPayload {
  submission: SubmissionPayload;
  hashtag_attested: boolean;
}

export interface WizardState {
  step: WizardStep;
  errors: Partial<Record<WizardStep, StepError>>;
  register: { first_name: string; last_name: string; email: string };
  profile: {
    birth_date: string;
    country_of_residence: string;
    participation_mode: string;
    group_member_names: string[];
  };
  describe: { title: string; description: string };
  topicId: string | null;
  mediaTypeId: string | null;
  mediaUrl: string;
  eligibility: { eligible: boolean; age_group: string | null; reasons: string[] } | null;
  review: ReviewPayload | null;
  result: SubmissionView | null;
}

function initialState(): WizardState {
  return {
    step: "REGISTER",
    errors: {},
    register: { first_name: "", last_name: "", email: "" },
    profile: {
      birth_date: "",
      country_of_residence: "",
      participation_mode: "individual",
      group_member_names: [],
    },
    describe: { title: "", description: "" },
    topicId: null,
    mediaTypeId: null,
    mediaUrl: "",
    eligibility: null,
    review: null,
    result: null,
  };
}

export class SubmissionWizard {
  private stateValue: WizardState = initialState();
  private listeners: Array<(state: WizardState) => void> = [];
  meta: ContestMeta | null = null;
  topics: TopicSheet[] = [];

  constructor(private readonly api: ContestApi) {}

  state(): WizardState {
    return this.stateValue;
  }

  subscribe(listener: (state: WizardState) => void): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private update(patch: Partial<WizardState>): void {
    this.stateValue = { ...this.stateValue, ...patch };
    for (const listener of this.listeners) listener(this.stateValue);
  }

  /** Load the rules the wizard validates against (never hard-coded). */
  async load(): Promise<void> {
    this.meta = await this.api.contest();
    this.topics = await this.api.topics();
    this.update({});
  }

  private fail(error: unknown, fallbackStep: WizardStep): never {
    if (error instanceof ApiError) {
      const step = ERROR_STEP[error.code] ?? fallbackStep;
      this.update({
        step,
        errors: { ...this.stateValue.errors, [step]: { code: error.code, message: error.message } },
      });
    }
    throw error;
  }

  private clearError(step: WizardStep): void {
    const errors = { ...this.stateValue.errors };
    delete errors[step];
    this.update({ errors });
  }

  // -- steps ----------------------------------------------------------------

  async submitRegister(first: string, last: string, email: string, password: string): Promise<void> {
    this.clearError("REGISTER");
    try {
      await this.api.register(first, last, email, password);
      const session = await this.api.loginParticipant(email, password);
      this.api.setToken(session.token);
    } catch (error) {
      this.fail(error, "REGISTER");
    }
    this.update({
      register: { first_name: first, last_name: last, email },
      step: "PROFILE",
    });
  }

  async submitProfile(
    birthDate: string,
    country: string,
    participationMode = "individual",
    groupMemberNames: string[] = [],
  ): Promise<void> {
    this.clearError("PROFILE");
    let eligibility;
    try {
      eligibility = await this.api.putProfile({
        birth_date: birthDate,
        country_of_residence: country,
        participation_mode: participationMode,
        group_member_names: groupMemberNames,
      });
    } catch (error) {
      this.fail(error, "PROFILE");
    }
    const profile = {
      birth_date: birthDate,
      country_of_residence: country,
      participation_mode: participationMode,
      group_member_names: groupMemberNames,
    };
    if (!eligibility.eligible) {
      // Stored but flagged server-side; the wizard blocks here.
      const code = eligibility.reasons[0] ?? "NOT_ELIGIBLE";
      this.update({
        profile,
        eligibility,
        errors: {
          ...this.stateValue.errors,
          PROFILE: { code, message: `not eligible: ${eligibility.reasons.join(", ")}` },
        },
      });
      return;
    }
    this.update({ profile, eligibility, step: "DESCRIBE" });
  }

  submitDescribe(title: string, description: string): void {
    this.clearError("DESCRIBE");
    if (!title.trim()) {
      this.update({
        errors: {
          ...this.stateValue.errors,
          DESCRIBE: { code: "TITLE_REQUIRED", message: "give the project a title" },
        },
      });
      return;
    }
    this.update({ describe: { title, description }, step: "TOPIC" });
  }

  submitTopic(topicId: string): void {
    this.clearError("TOPIC");
    if (!this.topics.some((t) => t.id === topicId)) {
      this.update({
        errors: {
          ...this.stateValue.errors,
          TOPIC: { code: "UNKNOWN_TOPIC", message: `no topic sheet ${topicId}` },
        },
      });
      return;
    }
    this.update({ topicId, step: "FORMAT" });
  }

  submitFormat(mediaTypeId: string): void {
    this.clearError("FORMAT");
    if (!this.meta?.media_types.some((m) => m.id === mediaTypeId)) {
      this.update({
        errors: {
          ...this.stateValue.errors,
          FORMAT: { code: "UNKNOWN_MEDIA_TYPE", message: `no media type ${mediaTypeId}` },
        },
      });
      return;
    }
    this.update({ mediaTypeId, step: "LINK" });
  }

  /**
   * Validate the media link by creating the draft server-side, then freeze
   * the review payload. Service errors route back to their owning step.
   */
  async submitLink(mediaUrl: string): Promise<void> {
    this.clearError("LINK");
    const state = this.stateValue;
    const submission: SubmissionPayload = {
      title: state.describe.title,
      description: state.describe.description,
      topic_id: state.topicId ?? "",
      media_type_id: state.mediaTypeId ?? "",
      media_url: mediaUrl,
    };
    try {
      const draft = await this.api.createSubmission(submission);
      this.update({
        mediaUrl,
        result: draft,
        review: { submission, hashtag_attested: true },
        step: "REVIEW",
      });
    } catch (error) {
      this.fail(error, "LINK");
    }
  }

  /** Finalize exactly what REVIEW displayed. */
  async confirm(): Promise<SubmissionView> {
    const review = this.stateValue.review;
    const draft = this.stateValue.result;
    if (!review || !draft) throw new Error("nothing to confirm; REVIEW not reached");
    this.clearError("REVIEW");
    try {
      const finalized = await this.api.finalize(draft.submission_id, review.hashtag_attested);
      this.update({ result: finalized, step: "DONE" });
      return finalized;
    } catch (error) {
      this.fail(error, "REVIEW");
    }
  }

  back(): void {
    const index = WIZARD_STEPS.indexOf(this.stateValue.step);
    if (index > 0 && this.stateValue.step !== "DONE") {
      this.update({ step: WIZARD_STEPS[index - 1] });
    }
  }
}
