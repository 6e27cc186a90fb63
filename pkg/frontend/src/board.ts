/** DOM renderer for the designer.
 *
 * The scene is the service's own SVG render (authoritative geometry);
 * the palette shows a fixed set of slots, but only slots backed by a
 * move from the last `/moves` response become clickable buttons — the
 * rest are greyed placeholders.  Every click dispatches exactly one
 * store action.
 */

import type { DesignerStore, ViewState } from "./store.js";
import type { Move } from "./types.js";
import { moveKey, moveLabel } from "./types.js";

const DIRECTION_SLOTS = [0, 1, 2, 3, 4, 5, 6, 7];
const TURN_SLOTS: Array<[number, boolean]> = [
  [0, false],
  [1, false],
  [2, false],
  [-2, false],
  [-1, false],
  [0, true],
  [1, true],
  [2, true],
  [-2, true],
  [-1, true],
];

function slotKey(slot: number | [number, boolean], fresh: boolean): string {
  if (fresh) {
    return `d${slot as number}`;
  }
  const [turn, close] = slot as [number, boolean];
  return `t${turn}${close ? "c" : ""}`;
}

function slotLabel(slot: number | [number, boolean], fresh: boolean): string {
  if (fresh) {
    const names = ["E", "NE", "N", "NW", "W", "SW", "S", "SE"];
    return names[slot as number] ?? String(slot);
  }
  const [turn, close] = slot as [number, boolean];
  const sign = turn > 0 ? `+${turn}` : String(turn);
  return close ? `${sign} close` : sign;
}

function renderPalette(doc: Document, state: ViewState): HTMLElement {
  const palette = doc.createElement("div");
  palette.className = "palette";
  const fresh =
    state.snapshot !== null &&
    state.snapshot.status === "open" &&
    state.snapshot.pieces.length === 0;
  const byKey = new Map<string, Move>();
  for (const move of state.legalMoves) {
    byKey.set(moveKey(move), move);
  }
  const slots: Array<number | [number, boolean]> = fresh
    ? DIRECTION_SLOTS
    : TURN_SLOTS;
  for (const slot of slots) {
    const key = slotKey(slot, fresh);
    const move = byKey.get(key);
    if (move !== undefined && !state.busy) {
      const button = doc.createElement("button");
      button.className = "palette-slot";
      button.dataset["move"] = JSON.stringify(move);
      button.textContent = moveLabel(move);
      palette.appendChild(button);
    } else {
      const span = doc.createElement("span");
      span.className = "palette-slot palette-slot--disabled";
      span.textContent = slotLabel(slot, fresh);
      palette.appendChild(span);
    }
  }
  return palette;
}

function renderInventory(doc: Document, state: ViewState): HTMLElement {
  const inventory = doc.createElement("div");
  inventory.className = "inventory";
  const remaining = state.snapshot?.remaining ?? null;
  if (remaining === null) {
    inventory.textContent = "inventory: unlimited";
    return inventory;
  }
  for (const [type, count] of Object.entries(remaining)) {
    const cell = doc.createElement("span");
    cell.className =
      count > 0 ? "inventory-cell" : "inventory-cell inventory-cell--empty";
    cell.dataset["pieceType"] = type;
    cell.textContent = `type ${type}: ${count}`;
    inventory.appendChild(cell);
  }
  return inventory;
}

function closureText(state: ViewState): string {
  if (state.snapshot?.status === "closed") {
    return "closed";
  }
  if (state.closure === null) {
    return "…";
  }
  if (state.closure.closable) {
    return `closable in ${state.closure.min_pieces}`;
  }
  return "open";
}

export function renderView(root: HTMLElement, state: ViewState): void {
  const doc = root.ownerDocument;
  root.textContent = "";

  const badge = doc.createElement("div");
  badge.className = "closure-badge";
  badge.dataset["state"] =
    state.snapshot?.status === "closed"
      ? "closed"
      : state.closure?.closable
        ? "closable"
        : "open";
  badge.textContent = closureText(state);
  root.appendChild(badge);

  const board = doc.createElement("div");
  board.className = "board";
  board.innerHTML = state.renderSvg;
  root.appendChild(board);

  root.appendChild(renderPalette(doc, state));
  root.appendChild(renderInventory(doc, state));

  const toolbar = doc.createElement("div");
  toolbar.className = "toolbar";
  for (const action of ["undo", "export"]) {
    const button = doc.createElement("button");
    button.className = "toolbar-button";
    button.dataset["action"] = action;
    button.textContent = action;
    toolbar.appendChild(button);
  }
  root.appendChild(toolbar);

  const exportPane = doc.createElement("pre");
  exportPane.className = "export-pane";
  root.appendChild(exportPane);

  const toasts = doc.createElement("ul");
  toasts.className = "toasts";
  for (const message of state.toasts) {
    const item = doc.createElement("li");
    item.className = "toast";
    item.textContent = message;
    toasts.appendChild(item);
  }
  root.appendChild(toasts);
}

/** Mount the designer: render on every store change and translate DOM
 * clicks into store actions (one click, one action). */
export function mountDesigner(root: HTMLElement, store: DesignerStore): void {
  store.subscribe((state) => renderView(root, state));
  renderView(root, store.getState());

  root.addEventListener("click", (event) => {
    const target = event.target as HTMLElement | null;
    if (target === null || target.tagName !== "BUTTON") {
      return;
    }
    const moveJson = target.dataset["move"];
    if (moveJson !== undefined) {
      void store.apply(JSON.parse(moveJson) as Move);
      return;
    }
    if (target.dataset["action"] === "undo") {
      void store.undo();
      return;
    }
    if (target.dataset["action"] === "export") {
      void store.exportRecord().then((record) => {
        if (record !== null) {
          const pane = root.querySelector(".export-pane");
          if (pane !== null) {
            pane.textContent = JSON.stringify(record);
          }
        }
      });
    }
  });
}
