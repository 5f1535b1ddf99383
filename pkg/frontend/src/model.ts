/** View-state shaping and request sequencing.
 *
 * The view state mirrors the server payload exactly; the only client-side
 * work is text formatting and layout hints (no algebra).
 */

import type {
  EndoSummary,
  FullState,
  HistoryEntry,
  Move,
  Triangle,
} from "./api.js";

export interface Chip {
  index: number;
  id: string;
  shift: number;
  /** server-side canonical name, e.g. "S1[1]" */
  name: string;
  /** chip text "(id, shift)" */
  label: string;
}

export interface ViewState {
  sessionId: string;
  quiver: string;
  m: number;
  object: string;
  chips: Chip[];
  inWindow: boolean;
  endo: EndoSummary;
  history: HistoryEntry[];
  moves: Move[];
  historyLength: number;
  triangle: Triangle | null;
}

function isRecord(x: unknown): x is Record<string, unknown> {
  return typeof x === "object" && x !== null;
}

/** Shape a server state document; throws on malformed payloads so the
 *  caller can surface an error banner without touching the current view. */
export function toViewState(
  state: FullState,
  triangle: Triangle | null = null,
): ViewState {
  if (!isRecord(state) || !Array.isArray(state.summands) ||
      !isRecord(state.endo) || !Array.isArray(state.endo.arrows)) {
    throw new TypeError("malformed state payload");
  }
  return {
    sessionId: state.id,
    quiver: state.quiver,
    m: state.m,
    object: state.object,
    chips: state.summands.map((s, index) => ({
      index,
      id: s.id,
      shift: s.shift,
      name: s.name,
      label: `(${s.id}, ${s.shift})`,
    })),
    inWindow: state.in_window,
    endo: state.endo,
    history: state.history ?? [],
    moves: state.moves ?? [],
    historyLength: state.history_length,
    triangle,
  };
}

/** Parse the shift out of a canonical name: "P1" -> 0, "S1[2]" -> 2. */
export function nameShift(name: string): number {
  const m = /\[(-?\d+)\]$/.exec(name);
  return m ? Number(m[1]) : 0;
}

/** Canonical name shifted by one, for the fourth triangle term. */
export function shiftName(name: string, by = 1): string {
  const base = name.replace(/\[(-?\d+)\]$/, "");
  const k = nameShift(name) + by;
  return k === 0 ? base : `${base}[${k}]`;
}

/** One in-flight mutation at a time; stale responses are discarded by
 *  sequence number. */
export class RequestGate {
  private seq = 0;
  private inflight: number | null = null;

  /** Returns a token, or null when a request is already in flight. */
  begin(): number | null {
    if (this.inflight !== null) {
      return null;
    }
    this.seq += 1;
    this.inflight = this.seq;
    return this.seq;
  }

  /** True iff this token is still the active request; always clears it. */
  settle(token: number): boolean {
    const live = this.inflight === token;
    if (live) {
      this.inflight = null;
    }
    return live;
  }

  get busy(): boolean {
    return this.inflight !== null;
  }
}
