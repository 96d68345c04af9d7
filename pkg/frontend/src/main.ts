/** Application wiring: one session per tab, server state is the only
 * truth, and every click round-trips before anything re-renders. */

import { ApiError, GameClient } from "./api.js";
import type { AnnotatedMove, Player, SessionState } from "./api.js";
import { boardLayout } from "./geometry.js";
import {
  applyOutcome,
  badges,
  initialUiState,
  interpretClick,
  isHumansTurn,
  statusLine,
} from "./state.js";
import { renderBoard } from "./render.js";

const client = new GameClient("");

let session: SessionState | null = null;
let legal: AnnotatedMove[] = [];
let ui = initialUiState();
let showBadges = true;
let busy = false;

const svg = document.getElementById("board") as unknown as SVGSVGElement;
const banner = document.getElementById("banner")!;
const message = document.getElementById("message")!;
const newGameButton = document.getElementById("new-game") as HTMLButtonElement;
const resetButton = document.getElementById("reset") as HTMLButtonElement;
const badgeToggle = document.getElementById("badges") as HTMLInputElement;
const sidePicker = document.getElementById("side") as HTMLSelectElement;
const sidesPicker = document.getElementById("sides") as HTMLSelectElement;
const stonesPicker = document.getElementById("stones") as HTMLSelectElement;

function setMessage(text: string): void {
  message.textContent = text;
}

async function refresh(state: SessionState): Promise<void> {
  session = state;
  legal = state.status === "ongoing" ? await client.listMoves(state.id) : [];
  draw();
}

function draw(): void {
  if (!session) return;
  banner.textContent = statusLine(session);
  banner.dataset.status = session.status;
  renderBoard(svg, {
    layout: boardLayout(session.s),
    state: session,
    badges: badges(ui, session, legal),
    showBadges,
    selected: ui.selected,
    enabled: new Set(
      legal
        .filter((m) => m.move.type === "slide" && m.move.from === ui.selected)
        .map((m) => m.move.to),
    ),
    onNodeClick: (node) => void handleClick(node),
  });
}

async function handleClick(node: number): Promise<void> {
  if (!session || busy || !isHumansTurn(session)) return;
  const outcome = interpretClick(ui, node, session, legal);
  ui = applyOutcome(ui, outcome);
  if (outcome.kind !== "move") {
    draw();
    return;
  }
  busy = true;
  try {
    const result = await client.playMove(session.id, outcome.move);
    setMessage("");
    await refresh(result.state);
  } catch (error) {
    // Rejected by the server: surface the reason and converge on its state.
    setMessage(error instanceof ApiError ? error.message : String(error));
    await refresh(await client.getState(session.id));
  } finally {
    busy = false;
  }
}

async function newGame(): Promise<void> {
  busy = true;
  try {
    const k = Number(stonesPicker.value);
    const s = Number(sidesPicker.value);
    const side = sidePicker.value as Player;
    ui = initialUiState();
    setMessage("");
    await refresh(await client.createSession(k, s, side));
  } catch (error) {
    setMessage(error instanceof ApiError ? error.message : String(error));
  } finally {
    busy = false;
  }
}

async function resetGame(): Promise<void> {
  if (!session) return;
  busy = true;
  try {
    ui = initialUiState();
    setMessage("");
    await refresh(await client.reset(session.id));
  } finally {
    busy = false;
  }
}

newGameButton.addEventListener("click", () => void newGame());
resetButton.addEventListener("click", () => void resetGame());
badgeToggle.addEventListener("change", () => {
  showBadges = badgeToggle.checked;
  draw();
});

void newGame();
