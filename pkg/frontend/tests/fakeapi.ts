/** In-memory stand-in for the designer service used by unit tests.
 *
 * It implements the same method surface as DesignerApi but with
 * scripted responses: tests control the legal-move palette and can make
 * any mutation fail with a given status.
 */

import { ApiError } from "../src/api.js";
import type {
  Closure,
  ExportRecord,
  Move,
  MoveRequest,
  Snapshot,
} from "../src/types.js";

export function emptySnapshot(id = "s1"): Snapshot {
  return { id, status: "open", pieces: [], head: [0, 0], remaining: null };
}

export class FakeApi {
  snapshot: Snapshot = emptySnapshot();
  moves: Move[] = [];
  closureAnswer: Closure = { closable: false, min_pieces: null };
  svg = "<svg></svg>";
  /** Next mutation fails with this status when set. */
  failNext: number | null = null;
  log: string[] = [];
  exported: ExportRecord | null = null;

  /** Gate letting tests hold a mutation in flight. */
  private gate: Promise<void> = Promise.resolve();
  private release: (() => void) | null = null;

  holdMutations(): void {
    this.gate = new Promise((resolve) => {
      this.release = resolve;
    });
  }

  releaseMutations(): void {
    this.release?.();
    this.release = null;
  }

  private mutate(label: string): Promise<Snapshot> {
    this.log.push(label);
    const gate = this.gate;
    return gate.then(() => {
      if (this.failNext !== null) {
        const status = this.failNext;
        this.failNext = null;
        throw new ApiError(status, "scripted failure");
      }
      return this.snapshot;
    });
  }

  newSession(_caps?: Record<number, number>): Promise<Snapshot> {
    return this.mutate("newSession");
  }

  getSession(_sid: string): Promise<Snapshot> {
    this.log.push("getSession");
    return Promise.resolve(this.snapshot);
  }

  legalMoves(_sid: string): Promise<Move[]> {
    this.log.push("legalMoves");
    return Promise.resolve(this.moves.map((m) => ({ ...m })));
  }

  applyMove(_sid: string, move: MoveRequest): Promise<Snapshot> {
    return this.mutate(`applyMove ${JSON.stringify(move)}`);
  }

  undo(_sid: string): Promise<Snapshot> {
    return this.mutate("undo");
  }

  closure(_sid: string, _max?: number): Promise<Closure> {
    this.log.push("closure");
    return Promise.resolve(this.closureAnswer);
  }

  render(_sid: string): Promise<string> {
    this.log.push("render");
    return Promise.resolve(this.svg);
  }

  exportRecord(_sid: string): Promise<ExportRecord> {
    this.log.push("export");
    if (this.failNext !== null) {
      const status = this.failNext;
      this.failNext = null;
      return Promise.reject(new ApiError(status, "scripted failure"));
    }
    if (this.exported === null) {
      return Promise.reject(new ApiError(409, "session is still open"));
    }
    return Promise.resolve(this.exported);
  }
}

/** Small deterministic RNG for property-style tests. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function randomMoves(rand: () => number, fresh: boolean): Move[] {
  const moves: Move[] = [];
  if (fresh) {
    for (let d = 0; d < 8; d += 1) {
      if (rand() < 0.5) {
        moves.push({ kind: "direction", direction: d, head: [0, 0] });
      }
    }
    return moves;
  }
  for (const turn of [0, 1, 2, -2, -1]) {
    for (const close of [false, true]) {
      if (rand() < 0.4) {
        moves.push({
          kind: "turn",
          turn,
          close,
          piece_type: 1 + Math.floor(rand() * 6),
          sign: 0,
          head: [0, 0],
        });
      }
    }
  }
  return moves;
}
