import { describe, expect, it } from "vitest";

import type { DesignerApi } from "../src/api.js";
import { DesignerStore } from "../src/store.js";
import type { Move } from "../src/types.js";
import { FakeApi } from "./fakeapi.js";

function makeStore(): { api: FakeApi; store: DesignerStore } {
  const api = new FakeApi();
  const store = new DesignerStore(api as unknown as DesignerApi);
  return { api, store };
}

const EAST: Move = { kind: "direction", direction: 0, head: [1, 0] };
const TURN2: Move = {
  kind: "turn",
  turn: 2,
  close: false,
  piece_type: 2,
  sign: 1,
  head: [1, 1],
};

describe("DesignerStore", () => {
  it("start pulls snapshot, palette, badge, and render", async () => {
    const { api, store } = makeStore();
    api.moves = [EAST];
    api.svg = "<svg data-x></svg>";
    await store.start();
    const state = store.getState();
    expect(state.snapshot?.id).toBe("s1");
    expect(state.legalMoves).toEqual([EAST]);
    expect(state.closure).toEqual({ closable: false, min_pieces: null });
    expect(state.renderSvg).toBe("<svg data-x></svg>");
    expect(state.busy).toBe(false);
  });

  it("apply sends exactly one POST and refreshes confirmed state", async () => {
    const { api, store } = makeStore();
    api.moves = [EAST];
    await store.start();
    api.log = [];
    await store.apply(EAST);
    const posts = api.log.filter((l) => l.startsWith("applyMove"));
    expect(posts).toEqual(['applyMove {"direction":0}']);
    expect(api.log.filter((l) => l === "legalMoves")).toHaveLength(1);
  });

  it("refuses to send a move absent from the last /moves response", async () => {
    const { api, store } = makeStore();
    api.moves = [EAST];
    await store.start();
    api.log = [];
    await store.apply(TURN2);
    expect(api.log.filter((l) => l.startsWith("applyMove"))).toHaveLength(0);
    expect(store.getState().toasts).toContain("move is no longer legal");
  });

  it("rolls back the optimistic ghost on 409 and keeps confirmed state", async () => {
    const { api, store } = makeStore();
    api.moves = [EAST];
    await store.start();
    const before = store.getState().snapshot;
    api.failNext = 409;
    const seenPending: Array<Move | null> = [];
    store.subscribe((s) => seenPending.push(s.pending));
    await store.apply(EAST);
    const state = store.getState();
    expect(seenPending).toContain(EAST);
    expect(state.pending).toBeNull();
    expect(state.snapshot).toBe(before);
    expect(state.toasts).toEqual(["409: scripted failure"]);
  });

  it("serializes mutations: one in flight, later clicks queue", async () => {
    const { api, store } = makeStore();
    api.moves = [EAST, TURN2];
    await store.start();
    api.log = [];
    api.holdMutations();
    const first = store.apply(EAST);
    const second = store.apply(TURN2);
    await Promise.resolve();
    expect(api.log.filter((l) => l.startsWith("applyMove"))).toHaveLength(1);
    api.releaseMutations();
    await first;
    await second;
    expect(api.log.filter((l) => l.startsWith("applyMove"))).toHaveLength(2);
  });

  it("undo failure surfaces as a toast, state untouched", async () => {
    const { api, store } = makeStore();
    await store.start();
    const before = store.getState().snapshot;
    api.failNext = 409;
    await store.undo();
    expect(store.getState().snapshot).toBe(before);
    expect(store.getState().toasts).toEqual(["409: scripted failure"]);
  });

  it("export of an open session yields a toast and null", async () => {
    const { api, store } = makeStore();
    await store.start();
    const record = await store.exportRecord();
    expect(record).toBeNull();
    expect(store.getState().toasts).toEqual(["409: session is still open"]);
  });

  it("export of a closed session returns the record", async () => {
    const { api, store } = makeStore();
    await store.start();
    api.exported = {
      n: 4,
      end_choice: 6,
      second_dir: 0,
      raw_turns: [2, 2, 2, 2],
      centers: [
        [0, 0],
        [1, 0],
        [1, 1],
        [0, 1],
      ],
    };
    const record = await store.exportRecord();
    expect(record?.n).toBe(4);
    expect(store.getState().toasts).toEqual([]);
  });

  it("palette always equals the latest /moves response", async () => {
    const { api, store } = makeStore();
    api.moves = [EAST];
    await store.start();
    api.moves = [TURN2];
    await store.apply(EAST);
    expect(store.getState().legalMoves).toEqual([TURN2]);
  });
});
