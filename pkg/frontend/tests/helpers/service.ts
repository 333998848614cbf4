/**
 * Spawns the real contest service for end-to-end tests.
 *
 * Writes a config whose submission window spans "now", starts
 * `scicontest serve` on the requested port, and waits for /ready.
 */

import { spawn, type ChildProcess } from "node:child_process";
import { mkdtemp, writeFile } from "node:fs/promises";
import { tmpdir } from "node:os";
import { join } from "node:path";

export const ADMIN_KEY = "e2e-admin-key";
export const JUROR_ID = "jury-01";
export const JUROR_KEY = "e2e-jury-key";

export interface LiveService {
  baseUrl: string;
  stop(): Promise<void>;
}

function rfc3339(ms: number): string {
  return new Date(ms).toISOString().replace(/\.\d{3}Z$/, "Z");
}

const DAY = 86_400_000;

function testConfig(port: number): unknown {
  const now = Date.now();
  return {
    submission_open: rfc3339(now - DAY),
    submission_close: rfc3339(now + 30 * DAY),
    metrics_freeze: rfc3339(now + 37 * DAY),
    eligible_countries: ["AT", "BE", "CZ", "DE", "ES", "FR", "HU", "IT", "SE", "SI"],
    age_groups: [
      { id: "AG1", min_age: 10, max_age: 14 },
      { id: "AG2", min_age: 15, max_age: 20 },
    ],
    media_types: [
      { id: "poster", display_name: "Poster" },
      { id: "presentation", display_name: "Presentation" },
      { id: "video", display_name: "Video" },
      { id: "infographic", display_name: "Infographic" },
      { id: "podcast", display_name: "Podcast" },
      { id: "webapp", display_name: "Web App" },
    ],
    score_weights: { w_views: 1, w_likes: 3, w_shares: 5 },
    target_min_countries: 15,
    admin_key: ADMIN_KEY,
    jurors: [{ juror_id: JUROR_ID, key: JUROR_KEY }],
    kdf_iterations: 500,
    poll_interval_s: 0,
    platform_base_url: `http://127.0.0.1:${port}`,
  };
}

export async function startService(port: number): Promise<LiveService> {
  const dir = await mkdtemp(join(tmpdir(), "contest-e2e-"));
  const configPath = join(dir, "contest.json");
  await writeFile(configPath, JSON.stringify(testConfig(port), null, 2));

  const child: ChildProcess = spawn(
    "scicontest",
    [
      "serve",
      "--config", configPath,
      "--store", join(dir, "contest.db"),
      "--listen", `127.0.0.1:${port}`,
    ],
    { stdio: ["ignore", "pipe", "pipe"] },
  );
  let output = "";
  child.stdout?.on("data", (chunk) => (output += chunk));
  child.stderr?.on("data", (chunk) => (output += chunk));

  const baseUrl = `http://127.0.0.1:${port}`;
  const deadline = Date.now() + 45_000;
  for (;;) {
    if (child.exitCode !== null) {
      throw new Error(`service exited early (${child.exitCode}):\n${output}`);
    }
    try {
      const response = await fetch(`${baseUrl}/ready`);
      if (response.ok) break;
    } catch {
      // not listening yet
    }
    if (Date.now() > deadline) {
      child.kill();
      throw new Error(`service did not become ready:\n${output}`);
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }

  return {
    baseUrl,
    stop: () =>
      new Promise<void>((resolve) => {
        child.once("exit", () => resolve());
        child.kill("SIGTERM");
        setTimeout(() => {
          if (child.exitCode === null) child.kill("SIGKILL");
        }, 3_000).unref();
      }),
  };
}

/** Birth date giving `age` completed years 30 days from now (the default
 * reference date of the test config is submission_close). */
export function birthDateForAge(age: number): string {
  const reference = new Date(Date.now() + 30 * DAY);
  const birth = new Date(
    Date.UTC(reference.getUTCFullYear() - age, reference.getUTCMonth(), 1),
  );
  return birth.toISOString().slice(0, 10);
}
