/**
 * Server contract types.
 *
 * Everything the client knows about contest rules (media types, criteria,
 * scale bounds, topics) comes from these responses at runtime; no contest
 * constant is duplicated here.
 */

export interface ErrorEnvelope {
  code: string;
  message: string;
  details?: unknown;
}

export interface ContestMeta {
  phase: string;
  submission_open: string;
  submission_close: string;
  metrics_freeze: string;
  eligible_countries: string[];
  age_groups: { id: string; min_age: number; max_age: number }[];
  media_types: { id: string; display_name: string }[];
  jury_scale_max: number;
  jury_criteria: Record<string, string[]>;
  required_hashtag: string;
  target_min_countries: number;
  leaderboard_visible: boolean;
}

export interface TopicSheet {
  id: string;
  title: string;
  age_group_scope: string;
  locales: string[];
  keywords: string[];
  body: string;
}

export interface EligibilityView {
  eligible: boolean;
  age_group: string | null;
  reasons: string[];
}

export interface SubmissionView {
  submission_id: string;
  title: string;
  description: string;
  topic_id: string;
  topic_title: string;
  media_type_id: string;
  media_url: string;
  embed_url: string;
  platform: string;
  state: string;
  category_id: string | null;
  country: string | null;
  submitted_at: string | null;
  hashtag_attested: boolean;
}

export interface StatsView {
  by_country: Record<string, number>;
  by_category: Record<string, number>;
  total_participants: number;
  distinct_countries: number;
  target_min_countries: number;
  below_country_target: boolean;
}

export interface LeaderboardRow {
  rank: number;
  submission_id: string;
  title: string;
  category_id: string;
  country: string;
  score: string;
  views: number;
  likes: number;
  shares: number;
}

export interface ShortlistEntry extends SubmissionView {
  provenance: { kind: string; key: string }[];
  age_group: string;
  criteria: string[];
}

export interface WinnerCard {
  category_id: string;
  submission_id: string;
  title: string;
  country: string;
  jury_aggregate: string;
  audience_award: boolean;
}

export interface SessionView {
  token: string;
  role: string;
  subject_id: string;
  expires_at: string;
}

export interface JuryScoreView {
  submission_id: string;
  scores: Record<string, number>;
  recorded_at: string;
}
