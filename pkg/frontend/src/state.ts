/** Pure UI state logic: click interpretation and what-if badges.
 *
 * No rule knowledge lives here. A click can only produce a move that the
 * server already listed as legal; everything else selects, reselects, or
 * clears. The badge table is likewise a pure projection of the server's
 * annotated move list.
 */

import type { AnnotatedMove, MoveDoc, SessionState, ValueDoc } from "./api.js";

export interface UiState {
  selected: number | null;
}

export type ClickOutcome =
  | { kind: "move"; move: MoveDoc }
  | { kind: "select"; node: number }
  | { kind: "clear" }
  | { kind: "none" };

export function initialUiState(): UiState {
  return { selected: null };
}

function cells(state: SessionState): string {
  return state.notation.split(":")[0];
}

export function isHumansTurn(state: SessionState): boolean {
  return state.status === "ongoing" && state.mover === state.human;
}

/** Interpret a click on a node given the server state and legal moves. */
export function interpretClick(
  ui: UiState,
  node: number,
  state: SessionState,
  legal: AnnotatedMove[],
): ClickOutcome {
  if (!isHumansTurn(state)) return { kind: "none" };
  const board = cells(state);

  if (state.phase === "placement") {
    const match = legal.find((m) => m.move.type === "place" && m.move.to === node);
    return match ? { kind: "move", move: match.move } : { kind: "none" };
  }

  if (board[node] === state.human) {
    // reselecting the selected stone clears the selection
    if (ui.selected === node) return { kind: "clear" };
    return { kind: "select", node };
  }
  if (ui.selected !== null) {
    const match = legal.find(
      (m) => m.move.type === "slide" && m.move.from === ui.selected && m.move.to === node,
    );
    if (match) return { kind: "move", move: match.move };
    return { kind: "clear" };
  }
  return { kind: "none" };
}

export function applyOutcome(ui: UiState, outcome: ClickOutcome): UiState {
  switch (outcome.kind) {
    case "select":
      return { selected: outcome.node };
    case "clear":
    case "move":
      return { selected: null };
    case "none":
      return ui;
  }
}

/** Destinations the selected stone may slide to (empty when no selection). */
export function enabledDestinations(ui: UiState, legal: AnnotatedMove[]): Set<number> {
  if (ui.selected === null) return new Set();
  return new Set(
    legal
      .filter((m) => m.move.type === "slide" && m.move.from === ui.selected)
      .map((m) => m.move.to),
  );
}

const KIND_RANK: Record<string, number> = { LOSS: 0, DRAW: 1, WIN: 2 };

/** Lower ranks first: moves handing the opponent a loss are best for us. */
export function moverRank(value: ValueDoc): number {
  const base = KIND_RANK[value.kind] * 1000;
  if (value.kind === "LOSS") return base + (value.depth ?? 0);
  if (value.kind === "WIN") return base - (value.depth ?? 0);
  return base;
}

export function bestValue(values: ValueDoc[]): ValueDoc | null {
  if (values.length === 0) return null;
  return values.reduce((a, b) => (moverRank(b) < moverRank(a) ? b : a));
}

export interface Badge {
  node: number;
  value: ValueDoc;
}

/** What-if badges for the current selection state.
 *
 * Placement: one badge per legal destination. Sliding without a
 * selection: one badge per movable stone, showing its best outcome.
 * Sliding with a selection: one badge per destination of that stone.
 */
export function badges(
  ui: UiState,
  state: SessionState,
  legal: AnnotatedMove[],
): Badge[] {
  if (state.phase === "placement") {
    return legal
      .filter((m) => m.move.type === "place")
      .map((m) => ({ node: m.move.to, value: m.value }));
  }
  if (ui.selected === null) {
    const byStone = new Map<number, ValueDoc[]>();
    for (const m of legal) {
      if (m.move.type !== "slide" || m.move.from === null) continue;
      const list = byStone.get(m.move.from) ?? [];
      list.push(m.value);
      byStone.set(m.move.from, list);
    }
    return [...byStone.entries()].map(([node, values]) => ({
      node,
      value: bestValue(values)!,
    }));
  }
  return legal
    .filter((m) => m.move.type === "slide" && m.move.from === ui.selected)
    .map((m) => ({ node: m.move.to, value: m.value }));
}

export function badgeLabel(value: ValueDoc): string {
  const letter = value.kind === "DRAW" ? "D" : value.kind === "WIN" ? "W" : "L";
  return value.depth === null ? letter : `${letter}${value.depth}`;
}

export function statusLine(state: SessionState): string {
  switch (state.status) {
    case "ongoing":
      return state.mover === state.human
        ? `your move (${state.human}, ${state.phase})`
        : "engine is thinking";
    case "drawn-by-repetition":
      return "draw by repetition";
    case "won-by-x":
    case "won-by-o": {
      const victor = state.status.endsWith("x") ? "x" : "o";
      return victor === state.human ? "you won" : "engine wins";
    }
  }
}
