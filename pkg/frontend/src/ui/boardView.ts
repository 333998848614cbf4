/**
 * Contest board rendering: counts per country/category, topic browser,
 * and (post-freeze) the leaderboard and winner cards.
 */

import type { BoardState } from "../board.js";

function countList(title: string, counts: Record<string, number>): HTMLElement {
  const section = document.createElement("section");
  const heading = document.createElement("h3");
  heading.textContent = title;
  section.appendChild(heading);
  const list = document.createElement("ul");
  for (const [key, count] of Object.entries(counts)) {
    const item = document.createElement("li");
    item.textContent = `${key}: ${count}`;
    list.appendChild(item);
  }
  section.appendChild(list);
  return section;
}

export function renderBoard(state: BoardState, root: HTMLElement): void {
  root.replaceChildren();

  if (state.degraded) {
    const banner = document.createElement("p");
    banner.className = "degraded-banner";
    banner.textContent = "Service unreachable — showing read-only data.";
    root.appendChild(banner);
  }
  if (!state.stats) return;

  const phase = document.createElement("p");
  phase.className = "phase";
  phase.textContent = `Phase: ${state.meta?.phase ?? "?"} — ${
    state.stats.total_participants
  } participants from ${state.stats.distinct_countries} countries`;
  root.appendChild(phase);

  root.appendChild(countList("Submissions by country", state.stats.by_country));
  root.appendChild(countList("Submissions by category", state.stats.by_category));

  const topicBrowser = document.createElement("section");
  topicBrowser.className = "topics";
  const topicHeading = document.createElement("h3");
  topicHeading.textContent = `Topic sheets (${state.topics.length})`;
  topicBrowser.appendChild(topicHeading);
  const topicList = document.createElement("ul");
  for (const topic of state.topics) {
    const item = document.createElement("li");
    item.textContent = `${topic.id} — ${topic.title} [${topic.age_group_scope}]`;
    topicList.appendChild(item);
  }
  topicBrowser.appendChild(topicList);
  root.appendChild(topicBrowser);

  if (state.leaderboard) {
    const board = document.createElement("section");
    board.className = "leaderboard";
    const heading = document.createElement("h3");
    heading.textContent = "Leaderboard";
    board.appendChild(heading);
    for (const [group, rows] of Object.entries(state.leaderboard)) {
      const groupHeading = document.createElement("h4");
      groupHeading.textContent = group;
      board.appendChild(groupHeading);
      const table = document.createElement("ol");
      for (const row of rows) {
        const item = document.createElement("li");
        item.textContent = `${row.title} (${row.country}) — score ${row.score}`;
        table.appendChild(item);
      }
      board.appendChild(table);
    }
    root.appendChild(board);
  }

  if (state.winners) {
    const winners = document.createElement("section");
    winners.className = "winners";
    const heading = document.createElement("h3");
    heading.textContent = "Winners";
    winners.appendChild(heading);
    for (const card of state.winners) {
      const div = document.createElement("article");
      div.className = "winner-card";
      div.dataset.categoryId = card.category_id;
      div.textContent = `${card.category_id}: ${card.title} (${card.country}) — jury ${card.jury_aggregate}`;
      if (card.audience_award) div.textContent += " + audience award";
      winners.appendChild(div);
    }
    root.appendChild(winners);
  }
}
