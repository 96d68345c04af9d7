/** Typed client for the picaria game service. All rule decisions come from
 * the server; this module only moves JSON around. */

export type Player = "x" | "o";
export type ValueKind = "WIN" | "LOSS" | "DRAW";
export type SessionStatus =
  | "ongoing"
  | "won-by-x"
  | "won-by-o"
  | "drawn-by-repetition";

export interface MoveDoc {
  type: "place" | "slide";
  from: number | null;
  to: number;
  from_grid?: [number, number] | null;
  to_grid?: [number, number] | null;
}

export interface ValueDoc {
  kind: ValueKind;
  depth: number | null;
}

export interface AnnotatedMove {
  move: MoveDoc;
  value: ValueDoc;
}

export interface PlyDoc {
  player: Player;
  move: MoveDoc;
  notation_after: string;
}

export interface SessionState {
  id: string;
  k: number;
  s: number;
  human: Player;
  engine: Player;
  notation: string;
  phase: "placement" | "sliding";
  mover: Player;
  status: SessionStatus;
  winner: Player | null;
  history: PlyDoc[];
  grid: [number, number][] | null;
}

export interface PlayResult {
  plies: PlyDoc[];
  state: SessionState;
}

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = await response.json();
      if (typeof body.detail === "string") detail = body.detail;
    } catch {
      // keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

function post(body: unknown): RequestInit {
  return {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  };
}

export class GameClient {
  constructor(readonly baseUrl: string = "") {}

  createSession(k: number, s: number, human: Player): Promise<SessionState> {
    return request(`${this.baseUrl}/sessions`, post({ k, s, human }));
  }

  getState(id: string): Promise<SessionState> {
    return request(`${this.baseUrl}/sessions/${id}`);
  }

  async listMoves(id: string): Promise<AnnotatedMove[]> {
    const doc = await request<{ moves: AnnotatedMove[] }>(
      `${this.baseUrl}/sessions/${id}/moves`,
    );
    return doc.moves;
  }

  playMove(id: string, move: MoveDoc): Promise<PlayResult> {
    const body = {
      move:
        move.type === "place"
          ? { type: move.type, to: move.to }
          : { type: move.type, from: move.from, to: move.to },
    };
    return request(`${this.baseUrl}/sessions/${id}/moves`, post(body));
  }

  reset(id: string): Promise<SessionState> {
    return request(`${this.baseUrl}/sessions/${id}/reset`, post({}));
  }

  health(): Promise<{ status: string }> {
    return request(`${this.baseUrl}/health`);
  }
}
