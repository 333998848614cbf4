/**
 * Entry point: hash routing between the contest board (default), the
 * submission wizard, and the jury console. The only configuration is the
 * service base URL.
 */

import { ContestApi } from "./api.js";
import { ContestBoard } from "./board.js";
import { JuryConsole } from "./jury.js";
import { SubmissionWizard } from "./wizard.js";
import { renderBoard } from "./ui/boardView.js";
import { renderJuryConsole } from "./ui/juryView.js";
import { renderWizard } from "./ui/wizardView.js";

const BASE_URL =
  document.querySelector<HTMLMetaElement>('meta[name="contest-api"]')?.content ??
  "http://localhost:8000";

const api = new ContestApi(BASE_URL);

async function route(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) return;

  switch (window.location.hash) {
    case "#wizard": {
      const wizard = new SubmissionWizard(api);
      await wizard.load();
      renderWizard(wizard, root);
      break;
    }
    case "#jury": {
      const jurorId = window.prompt("Juror id") ?? "";
      const key = window.prompt("Juror key") ?? "";
      const session = await api.loginJuror(jurorId, key);
      api.setToken(session.token);
      const console_ = new JuryConsole(api);
      await console_.load();
      renderJuryConsole(console_, root);
      // retry queued offline saves periodically
      window.setInterval(() => void console_.flushQueue(), 10_000);
      break;
    }
    default: {
      const board = new ContestBoard(api);
      const refresh = async () => renderBoard(await board.refresh(), root);
      await refresh();
      window.setInterval(() => void refresh(), 15_000);
    }
  }
}

window.addEventListener("hashchange", () => void route());
void route();
