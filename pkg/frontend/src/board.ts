/**
 * Contest board state: live stats, topic browser, leaderboard and winners
 * once the server says they are visible.
 */

import { ApiError, ContestApi } from "./api.js";
import type {
  ContestMeta,
  LeaderboardRow,
  StatsView,
  TopicSheet,
  WinnerCard,
} from "./types.js";

export interface BoardState {
  meta: ContestMeta | null;
  stats: StatsView | null;
  topics: TopicSheet[];
  leaderboard: Record<string, LeaderboardRow[]> | null;
  winners: WinnerCard[] | null;
  degraded: boolean; // service unreachable: render read-only banner
}

export class ContestBoard {
  private state: BoardState = {
    meta: null,
    stats: null,
    topics: [],
    leaderboard: null,
    winners: null,
    degraded: false,
  };

  constructor(private readonly api: ContestApi) {}

  snapshot(): BoardState {
    return this.state;
  }

  async refresh(): Promise<BoardState> {
    try {
      this.state.meta = await this.api.contest();
      this.state.stats = await this.api.stats();
      this.state.topics = await this.api.topics();
      this.state.degraded = false;
    } catch (error) {
      if (error instanceof ApiError) throw error;
      this.state.degraded = true; // network down, keep last known data
      return this.state;
    }

    // Leaderboard and winners only when the server exposes them.
    this.state.leaderboard = null;
    this.state.winners = null;
    if (this.state.meta.leaderboard_visible) {
      try {
        this.state.leaderboard = (await this.api.leaderboard("category")).groups;
      } catch (error) {
        if (!(error instanceof ApiError)) throw error;
      }
    }
    if (this.state.meta.phase === "COMPLETE") {
      this.state.winners = (await this.api.winners()).winners;
    }
    return this.state;
  }
}
