/** Shared wire types for the designer service HTTP API. */

export type Point = [number, number];

export interface PieceView {
  square: Point;
  entry_anchor: number | null;
  exit_anchor: number;
}

export interface Snapshot {
  id: string;
  status: "open" | "closed";
  pieces: PieceView[];
  head: Point;
  remaining: Record<string, number> | null;
}

export interface DirectionMove {
  kind: "direction";
  direction: number;
  head: Point;
}

export interface TurnMove {
  kind: "turn";
  turn: number;
  close: boolean;
  piece_type: number;
  sign: number;
  head: Point;
}

export type Move = DirectionMove | TurnMove;

export interface MoveRequest {
  direction?: number;
  turn?: number;
  close?: boolean;
}

export interface Closure {
  closable: boolean;
  min_pieces: number | null;
}

export interface ExportRecord {
  n: number;
  end_choice: number;
  second_dir: number;
  raw_turns: number[];
  centers: Point[];
}

/** Stable key identifying a move for overlays and click dispatch. */
export function moveKey(move: Move): string {
  if (move.kind === "direction") {
    return `d${move.direction}`;
  }
  return `t${move.turn}${move.close ? "c" : ""}`;
}

/** Human-facing label for a move button. */
export function moveLabel(move: Move): string {
  if (move.kind === "direction") {
    const names = ["E", "NE", "N", "NW", "W", "SW", "S", "SE"];
    return names[move.direction] ?? String(move.direction);
  }
  const turn = move.turn > 0 ? `+${move.turn}` : String(move.turn);
  return move.close ? `${turn} close` : turn;
}
