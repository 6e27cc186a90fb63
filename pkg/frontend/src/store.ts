/** Client-side session state.
 *
 * The store renders only server-confirmed state: the legal-move palette
 * is replaced wholesale from each `/moves` response and never edited
 * locally.  A clicked move is shown as an optimistic ghost while its
 * request is in flight and rolled back if the service answers 409.
 * Mutations are serialized — one request in flight, later clicks queue.
 */

import { ApiError, DesignerApi } from "./api.js";
import type { Closure, ExportRecord, Move, MoveRequest, Snapshot } from "./types.js";

export interface ViewState {
  snapshot: Snapshot | null;
  /** Move optimistically applied, not yet confirmed by the service. */
  pending: Move | null;
  /** Palette from the most recent `/moves` response. */
  legalMoves: Move[];
  closure: Closure | null;
  /** Authoritative scene from the service render endpoint. */
  renderSvg: string;
  busy: boolean;
  toasts: string[];
}

export type Listener = (state: ViewState) => void;

function moveToRequest(move: Move): MoveRequest {
  if (move.kind === "direction") {
    return { direction: move.direction };
  }
  return { turn: move.turn, close: move.close };
}

export class DesignerStore {
  private state: ViewState = {
    snapshot: null,
    pending: null,
    legalMoves: [],
    closure: null,
    renderSvg: "",
    busy: false,
    toasts: [],
  };
  private listeners: Listener[] = [];
  private chain: Promise<void> = Promise.resolve();

  constructor(private readonly api: DesignerApi) {}

  getState(): ViewState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private set(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  private get sid(): string {
    const snapshot = this.state.snapshot;
    if (snapshot === null) {
      throw new Error("no active session");
    }
    return snapshot.id;
  }

  /** Resolves once every queued action so far has settled. */
  idle(): Promise<void> {
    return this.chain;
  }

  /** Serialize mutations: at most one request in flight per session. */
  private enqueue(task: () => Promise<void>): Promise<void> {
    const run = this.chain.then(task);
    this.chain = run.catch(() => undefined);
    return run;
  }

  /** Pull confirmed state from the service: snapshot, palette, badge,
   * and the authoritative render. */
  private async refresh(): Promise<void> {
    const sid = this.sid;
    const [snapshot, legalMoves, closure, renderSvg] = await Promise.all([
      this.api.getSession(sid),
      this.api.legalMoves(sid),
      this.api.closure(sid),
      this.api.render(sid),
    ]);
    this.set({ snapshot, legalMoves, closure, renderSvg });
  }

  start(caps?: Record<number, number>): Promise<void> {
    return this.enqueue(async () => {
      this.set({ busy: true });
      try {
        const snapshot = await this.api.newSession(caps);
        this.set({ snapshot });
        await this.refresh();
      } finally {
        this.set({ busy: false, pending: null });
      }
    });
  }

  apply(move: Move): Promise<void> {
    return this.enqueue(async () => {
      // only moves from the last /moves response may be sent
      const known = this.state.legalMoves.some(
        (m) => JSON.stringify(m) === JSON.stringify(move),
      );
      if (!known) {
        this.toast("move is no longer legal");
        return;
      }
      this.set({ busy: true, pending: move });
      try {
        const snapshot = await this.api.applyMove(this.sid, moveToRequest(move));
        this.set({ snapshot });
        await this.refresh();
      } catch (error) {
        this.rollback(error);
      } finally {
        this.set({ busy: false, pending: null });
      }
    });
  }

  undo(): Promise<void> {
    return this.enqueue(async () => {
      this.set({ busy: true });
      try {
        const snapshot = await this.api.undo(this.sid);
        this.set({ snapshot });
        await this.refresh();
      } catch (error) {
        this.rollback(error);
      } finally {
        this.set({ busy: false, pending: null });
      }
    });
  }

  /** Fetch the closed session's record; an open session yields a toast
   * and null instead of an export. */
  async exportRecord(): Promise<ExportRecord | null> {
    try {
      return await this.api.exportRecord(this.sid);
    } catch (error) {
      this.rollback(error);
      return null;
    }
  }

  /** Surface a rejected mutation as a toast; confirmed state is
   * untouched, so dropping the ghost is the whole rollback. */
  private rollback(error: unknown): void {
    if (error instanceof ApiError) {
      this.toast(`${error.status}: ${error.message}`);
      return;
    }
    throw error;
  }

  private toast(message: string): void {
    this.set({ toasts: [...this.state.toasts, message] });
  }

  dismissToasts(): void {
    this.set({ toasts: [] });
  }
}
