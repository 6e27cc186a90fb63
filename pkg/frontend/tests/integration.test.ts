// @vitest-environment happy-dom
//
// End-to-end designer flow against the real service: build the
// four-piece loop in four clicks, check the closure badge, undo, and
// verify the exported record with the batch validator.
import { execFileSync, spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { DesignerApi } from "../src/api.js";
import { mountDesigner } from "../src/board.js";
import { DesignerStore } from "../src/store.js";
import { BOXED_CAPS } from "../src/app.js";

const PORT = 8791;
const BASE = `http://127.0.0.1:${PORT}`;
// vitest runs with cwd at frontend/; the Python package lives one up
const REPO_ROOT = join(process.cwd(), "..");

let service: ChildProcess;

async function waitForService(): Promise<void> {
  for (let attempt = 0; attempt < 120; attempt += 1) {
    try {
      const response = await fetch(`${BASE}/docs`);
      if (response.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 500));
  }
  throw new Error("designer service did not start");
}

beforeAll(async () => {
  service = spawn(
    "python3",
    ["-m", "uvicorn", "railgrid.service:app", "--port", String(PORT)],
    { cwd: REPO_ROOT, stdio: "ignore" },
  );
  await waitForService();
}, 90_000);

afterAll(() => {
  service.kill();
});

function paletteButton(root: HTMLElement, label: string): HTMLElement {
  for (const button of Array.from(root.querySelectorAll("button[data-move]"))) {
    if (button.textContent === label) {
      return button as HTMLElement;
    }
  }
  throw new Error(`no clickable palette slot labelled ${label}`);
}

async function click(
  root: HTMLElement,
  store: DesignerStore,
  label: string,
): Promise<void> {
  paletteButton(root, label).click();
  await store.idle();
}

function badgeState(root: HTMLElement): string {
  const badge = root.querySelector(".closure-badge") as HTMLElement;
  return badge.dataset["state"] as string;
}

describe("designer flow against the live service", () => {
  it("builds the four-piece loop in four clicks, undoes, and exports", async () => {
    const api = new DesignerApi(BASE, (url, init) => fetch(url, init));
    const store = new DesignerStore(api);
    const root = document.createElement("div");
    document.body.appendChild(root);
    mountDesigner(root, store);
    await store.start(BOXED_CAPS);

    expect(badgeState(root)).toBe("open");
    expect(root.querySelectorAll("button[data-move]")).toHaveLength(8);

    await click(root, store, "E");
    await click(root, store, "+2");
    await click(root, store, "+2");
    expect(badgeState(root)).toBe("closable");
    expect(root.querySelector(".closure-badge")?.textContent).toBe(
      "closable in 1",
    );

    await click(root, store, "+2 close");
    expect(badgeState(root)).toBe("closed");
    expect(store.getState().legalMoves).toEqual([]);
    // scene comes from the service's closed-circuit render
    expect(store.getState().renderSvg).toContain("<svg");

    // the loop spends all four quarter arcs and nothing else
    const remaining = store.getState().snapshot?.remaining ?? {};
    expect(remaining["1"]).toBe(4);
    expect(remaining["2"]).toBe(0);

    // undo reopens the session
    (root.querySelector('[data-action="undo"]') as HTMLElement).click();
    await store.idle();
    expect(badgeState(root)).not.toBe("closed");
    expect(store.getState().snapshot?.status).toBe("open");

    // re-close and export
    await click(root, store, "+2 close");
    (root.querySelector('[data-action="export"]') as HTMLElement).click();
    await store.idle();
    await new Promise((resolve) => setTimeout(resolve, 50));
    const pane = root.querySelector(".export-pane") as HTMLElement;
    const record = JSON.parse(pane.textContent ?? "");
    expect(record.n).toBe(4);
    expect(record.raw_turns).toEqual([2, 2, 2, 2]);

    // the exported record passes the batch validator
    const dir = mkdtempSync(join(tmpdir(), "railgrid-ui-"));
    const path = join(dir, "export.jsonl");
    writeFileSync(path, `${JSON.stringify(record)}\n`);
    const verdict = execFileSync(
      "python3",
      [
        "-c",
        [
          "import sys",
          "from railgrid.records import read_circuits",
          "from railgrid.assembly import is_constructible",
          "with open(sys.argv[1]) as fh:",
          "    circuits = read_circuits(fh)",
          "assert len(circuits) == 1 and is_constructible(circuits[0])",
          "print('valid')",
        ].join("\n"),
        path,
      ],
      { cwd: REPO_ROOT, encoding: "utf-8" },
    );
    expect(verdict.trim()).toBe("valid");
    rmSync(dir, { recursive: true, force: true });
    root.remove();
  }, 60_000);

  it("rejects an out-of-palette move with a toast, view unchanged", async () => {
    const api = new DesignerApi(BASE, (url, init) => fetch(url, init));
    const store = new DesignerStore(api);
    const root = document.createElement("div");
    document.body.appendChild(root);
    mountDesigner(root, store);
    await store.start(BOXED_CAPS);
    const before = store.getState().snapshot;

    await store.apply({
      kind: "turn",
      turn: 2,
      close: false,
      piece_type: 2,
      sign: 1,
      head: [0, 0],
    });
    expect(store.getState().snapshot).toBe(before);
    expect(store.getState().toasts).toContain("move is no longer legal");
    root.remove();
  }, 30_000);
});
