/**
 * Typed client for the contest service endpoints.
 *
 * Every error response carries the service's {code, message, details}
 * envelope; ApiError surfaces the code verbatim so views can react to it.
 */

import type {
  ContestMeta,
  EligibilityView,
  ErrorEnvelope,
  JuryScoreView,
  LeaderboardRow,
  SessionView,
  ShortlistEntry,
  StatsView,
  SubmissionView,
  TopicSheet,
  WinnerCard,
} from "./types.js";

export class ApiError extends Error {
  readonly code: string;
  readonly details: unknown;
  readonly status: number;

  constructor(status: number, envelope: ErrorEnvelope) {
    super(envelope.message);
    this.code = envelope.code;
    this.details = envelope.details;
    this.status = status;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface ProfilePayload {
  birth_date: string;
  country_of_residence: string;
  participation_mode?: string;
  group_member_names?: string[];
}

export interface SubmissionPayload {
  title: string;
  description: string;
  topic_id: string;
  media_type_id: string;
  media_url: string;
}

export class ContestApi {
  private token: string | null = null;

  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  setToken(token: string | null): void {
    this.token = token;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) headers["content-type"] = "application/json";
    if (this.token) headers["authorization"] = `Bearer ${this.token}`;
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let envelope: ErrorEnvelope;
      try {
        envelope = (await response.json()) as ErrorEnvelope;
      } catch {
        envelope = { code: "HTTP_" + response.status, message: response.statusText };
      }
      throw new ApiError(response.status, envelope);
    }
    return (await response.json()) as T;
  }

  // -- public --------------------------------------------------------------

  ready(): Promise<{ phase: string; now: string }> {
    return this.request("GET", "/ready");
  }

  contest(): Promise<ContestMeta> {
    return this.request("GET", "/contest");
  }

  topics(): Promise<TopicSheet[]> {
    return this.request("GET", "/topics");
  }

  stats(): Promise<StatsView> {
    return this.request("GET", "/stats");
  }

  leaderboard(by: "category" | "country"): Promise<{ by: string; groups: Record<string, LeaderboardRow[]> }> {
    return this.request("GET", `/leaderboard?by=${by}`);
  }

  winners(): Promise<{ winners: WinnerCard[]; audience_award: string | null }> {
    return this.request("GET", "/winners");
  }

  publicSubmission(id: string): Promise<SubmissionView> {
    return this.request("GET", `/submissions/${id}`);
  }

  // -- participant -----------------------------------------------------------

  register(first: string, last: string, email: string, password: string): Promise<{ account_id: string }> {
    return this.request("POST", "/accounts", {
      first_name: first,
      last_name: last,
      email,
      password,
    });
  }

  loginParticipant(email: string, password: string): Promise<SessionView> {
    return this.request("POST", "/sessions", { email, password });
  }

  loginJuror(jurorId: string, key: string): Promise<SessionView> {
    return this.request("POST", "/sessions", { juror_id: jurorId, key });
  }

  putProfile(payload: ProfilePayload): Promise<EligibilityView> {
    return this.request("PUT", "/profile", payload);
  }

  createSubmission(payload: SubmissionPayload): Promise<SubmissionView> {
    return this.request("POST", "/submissions", payload);
  }

  finalize(submissionId: string, hashtagAttested: boolean): Promise<SubmissionView> {
    return this.request("POST", `/submissions/${submissionId}/finalize`, {
      hashtag_attested: hashtagAttested,
    });
  }

  // -- jury -------------------------------------------------------------------

  shortlist(): Promise<{ entries: ShortlistEntry[]; warnings: string[] }> {
    return this.request("GET", "/jury/shortlist");
  }

  putScores(submissionId: string, scores: Record<string, number>): Promise<JuryScoreView> {
    return this.request("PUT", `/jury/scores/${submissionId}`, { scores });
  }

  myScores(): Promise<JuryScoreView[]> {
    return this.request("GET", "/jury/scores");
  }
}
