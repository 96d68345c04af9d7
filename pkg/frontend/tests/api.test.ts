import { afterEach, describe, expect, it, vi } from "vitest";
import { ApiError, GameClient } from "../src/api.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

afterEach(() => {
  vi.restoreAllMocks();
});

describe("GameClient", () => {
  it("creates sessions with the exact body fields", async () => {
    const fetchMock = vi
      .spyOn(globalThis, "fetch")
      .mockResolvedValue(jsonResponse({ id: "abc", notation: ".........:x" }));
    const client = new GameClient("http://server");
    await client.createSession(3, 4, "x");
    const [url, init] = fetchMock.mock.calls[0];
    expect(url).toBe("http://server/sessions");
    expect(JSON.parse((init as RequestInit).body as string)).toEqual({
      k: 3,
      s: 4,
      human: "x",
    });
  });

  it("sends placements without a from field and slides with one", async () => {
    const fetchMock = vi
      .spyOn(globalThis, "fetch")
      .mockImplementation(async () => jsonResponse({ plies: [], state: {} }));
    const client = new GameClient();
    await client.playMove("s1", { type: "place", from: null, to: 4 });
    await client.playMove("s1", { type: "slide", from: 5, to: 1 });
    const first = JSON.parse(
      (fetchMock.mock.calls[0][1] as RequestInit).body as string,
    );
    const second = JSON.parse(
      (fetchMock.mock.calls[1][1] as RequestInit).body as string,
    );
    expect(first).toEqual({ move: { type: "place", to: 4 } });
    expect(second).toEqual({ move: { type: "slide", from: 5, to: 1 } });
  });

  it("unwraps the moves list", async () => {
    vi.spyOn(globalThis, "fetch").mockResolvedValue(
      jsonResponse({ moves: [{ move: { type: "place", from: null, to: 0 } }] }),
    );
    const moves = await new GameClient().listMoves("s1");
    expect(moves).toHaveLength(1);
    expect(moves[0].move.to).toBe(0);
  });

  it("raises ApiError with the server's reason on rejection", async () => {
    vi.spyOn(globalThis, "fetch").mockResolvedValue(
      jsonResponse({ detail: "illegal move: place 4" }, 400),
    );
    const client = new GameClient();
    const error = await client
      .playMove("s1", { type: "place", from: null, to: 4 })
      .catch((e: unknown) => e);
    expect(error).toBeInstanceOf(ApiError);
    expect((error as ApiError).status).toBe(400);
    expect((error as ApiError).message).toBe("illegal move: place 4");
  });

  it("falls back to the status text when the body is not json", async () => {
    vi.spyOn(globalThis, "fetch").mockResolvedValue(
      new Response("boom", { status: 500, statusText: "Internal Server Error" }),
    );
    const error = await new GameClient().getState("s1").catch((e: unknown) => e);
    expect(error).toBeInstanceOf(ApiError);
    expect((error as ApiError).message).toBe("Internal Server Error");
  });
});
