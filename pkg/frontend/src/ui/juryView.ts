/**
 * Jury console rendering.
 *
 * One row per shortlisted entry: media preview, per-criterion number
 * inputs generated from the server's criteria list for that entry's age
 * group, and a save button that stays disabled while any input is out of
 * range.
 */

import type { JuryConsole } from "../jury.js";
import type { ShortlistEntry } from "../types.js";

function mediaPreview(entry: ShortlistEntry): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "media-preview";
  const frame = document.createElement("iframe");
  frame.src = entry.embed_url;
  frame.title = entry.title;
  frame.loading = "lazy";
  wrap.appendChild(frame);
  const link = document.createElement("a");
  link.href = entry.media_url;
  link.textContent = "open on platform";
  wrap.appendChild(link);
  return wrap;
}

export function renderJuryRow(
  console_: JuryConsole,
  entry: ShortlistEntry,
  onSaved: () => void,
): HTMLElement {
  const max = console_.meta?.jury_scale_max ?? 10;
  const row = document.createElement("section");
  row.className = "jury-row";
  row.dataset.submissionId = entry.submission_id;
  row.dataset.ageGroup = entry.age_group;

  const heading = document.createElement("h3");
  heading.textContent = `${entry.title} (${entry.category_id}, ${entry.country})`;
  row.appendChild(heading);
  row.appendChild(mediaPreview(entry));

  const form = document.createElement("form");
  const inputs = new Map<string, HTMLInputElement>();
  const saved = console_.snapshot().saved.get(entry.submission_id);
  for (const criterion of entry.criteria) {
    const label = document.createElement("label");
    label.textContent = criterion.replaceAll("_", " ");
    const input = document.createElement("input");
    input.type = "number";
    input.name = criterion;
    input.min = "0";
    input.max = String(max);
    input.step = "1";
    input.required = true;
    if (saved && criterion in saved) input.value = String(saved[criterion]);
    label.appendChild(input);
    form.appendChild(label);
    inputs.set(criterion, input);
  }

  const save = document.createElement("button");
  save.type = "submit";
  save.textContent = "Save scores";
  form.appendChild(save);

  const status = document.createElement("span");
  status.className = "save-state";
  status.textContent = saved ? "saved" : "unscored";
  form.appendChild(status);

  const currentScores = (): Record<string, number> => {
    const scores: Record<string, number> = {};
    for (const [criterion, input] of inputs) scores[criterion] = input.valueAsNumber;
    return scores;
  };

  const refreshValidity = () => {
    save.disabled = console_.validate(entry, currentScores()) !== null;
  };
  form.addEventListener("input", refreshValidity);
  refreshValidity();

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void console_.save(entry, currentScores()).then((ok) => {
      status.textContent = ok ? "saved" : console_.snapshot().lastError ?? "failed";
      onSaved();
    });
  });
  row.appendChild(form);
  return row;
}

export function renderJuryConsole(console_: JuryConsole, root: HTMLElement): void {
  root.replaceChildren();
  const progress = document.createElement("p");
  progress.className = "jury-progress";
  const refreshProgress = () => {
    const { scored, total } = console_.progress();
    progress.textContent = `${scored} of ${total} entries scored`;
  };
  refreshProgress();
  root.appendChild(progress);
  for (const warning of console_.snapshot().warnings) {
    const notice = document.createElement("p");
    notice.className = "warning";
    notice.textContent = warning;
    root.appendChild(notice);
  }
  for (const entry of console_.snapshot().entries) {
    root.appendChild(renderJuryRow(console_, entry, refreshProgress));
  }
}
