/**
 * Jury console state: shortlist rows, score entry, offline save queue.
 *
 * Criterion lists come from the server's scoring matrix per entry; nothing
 * is hard-coded, so an AG1 row gets four inputs and an AG2 row five without
 * the client knowing either number. Saves that fail on the network are
 * queued per (submission) and retried; the server replaces earlier
 * score-sets for the same juror+submission, so retries are idempotent.
 */

import { ApiError, ContestApi } from "./api.js";
import type { ContestMeta, JuryScoreView, ShortlistEntry } from "./types.js";

export interface PendingSave {
  submissionId: string;
  scores: Record<string, number>;
}

export interface JuryConsoleState {
  entries: ShortlistEntry[];
  saved: Map<string, Record<string, number>>; // submission_id -> last accepted scores
  queue: PendingSave[];
  warnings: string[];
  lastError: string | null;
}

export class JuryConsole {
  private state: JuryConsoleState = {
    entries: [],
    saved: new Map(),
    queue: [],
    warnings: [],
    lastError: null,
  };
  meta: ContestMeta | null = null;

  constructor(private readonly api: ContestApi) {}

  snapshot(): JuryConsoleState {
    return this.state;
  }

  async load(): Promise<void> {
    this.meta = await this.api.contest();
    const shortlist = await this.api.shortlist();
    const mine = await this.api.myScores();
    this.state.entries = shortlist.entries;
    this.state.warnings = shortlist.warnings;
    this.state.saved = new Map(mine.map((s: JuryScoreView) => [s.submission_id, s.scores]));
  }

  /** Scored / total progress for the indicator. */
  progress(): { scored: number; total: number } {
    return { scored: this.state.saved.size, total: this.state.entries.length };
  }

  /**
   * Client-side validation mirror of the server matrix: exactly the row's
   * criteria, integers within the server scale. Out-of-range input never
   * leaves the client.
   */
  validate(entry: ShortlistEntry, scores: Record<string, number>): string | null {
    const max = this.meta?.jury_scale_max ?? 0;
    const expected = [...entry.criteria].sort();
    const got = Object.keys(scores).sort();
    if (expected.join(",") !== got.join(",")) return "CRITERIA_MISMATCH";
    for (const value of Object.values(scores)) {
      if (!Number.isInteger(value) || value < 0 || value > max) return "SCORE_OUT_OF_RANGE";
    }
    return null;
  }

  /** Save now; on network failure queue for retry. */
  async save(entry: ShortlistEntry, scores: Record<string, number>): Promise<boolean> {
    const invalid = this.validate(entry, scores);
    if (invalid) {
      this.state.lastError = invalid;
      return false;
    }
    this.state.lastError = null;
    try {
      const accepted = await this.api.putScores(entry.submission_id, scores);
      this.state.saved.set(entry.submission_id, accepted.scores);
      return true;
    } catch (error) {
      if (error instanceof ApiError) {
        // Server rejected the content; no point in retrying unchanged.
        this.state.lastError = error.code;
        return false;
      }
      // Network trouble: keep the scores queued, newest write wins.
      this.state.queue = this.state.queue.filter(
        (p) => p.submissionId !== entry.submission_id,
      );
      this.state.queue.push({ submissionId: entry.submission_id, scores });
      this.state.lastError = "OFFLINE_QUEUED";
      return false;
    }
  }

  /** Retry queued saves; returns how many flushed. */
  async flushQueue(): Promise<number> {
    const pending = [...this.state.queue];
    let flushed = 0;
    for (const item of pending) {
      try {
        const accepted = await this.api.putScores(item.submissionId, item.scores);
        this.state.saved.set(item.submissionId, accepted.scores);
        this.state.queue = this.state.queue.filter((p) => p !== item);
        flushed += 1;
      } catch (error) {
        if (error instanceof ApiError) {
          // Content error: drop from the queue and surface it.
          this.state.queue = this.state.queue.filter((p) => p !== item);
          this.state.lastError = error.code;
        }
        // Still offline: keep it queued.
      }
    }
    return flushed;
  }
}
