// Wire protocol of the typing session service, verbatim.  The client sends
// pointer samples, configuration, and resets; the server answers with
// layout geometry, dwell progress, commits, the transcript buffer, and
// structured errors.  One JSON object per websocket frame.

export type SectorSpan = {
  r_in: number;
  r_out: number;
  a_start: number;
  a_end: number; // may exceed 2*pi for spans that wrap the seam
};

export type KeyShape = {
  letter: string;
  absorbed: string[];
  sectors: SectorSpan[];
  center: [number, number];
};

export type CornerShape = {
  id: string;
  rect: [number, number, number, number]; // x0, y0, x1, y1
  center: [number, number];
  selectable: boolean;
};

export type LayoutMsg = {
  type: "layout";
  mode: "merging" | "non_merging";
  prefix: string;
  radii: [number, number, number];
  keys: KeyShape[];
  corners: CornerShape[];
};

export type DwellPhase = "first" | "second";

export type DwellMsg = {
  type: "dwell";
  letter: string; // a key letter or a corner id
  phase: DwellPhase;
  fraction: number;
  word: string | null;
};

export type CommitMsg = {
  type: "commit";
  kind: "char" | "word" | "space" | "delete";
  text: string;
};

export type BufferMsg = { type: "buffer"; text: string };

export type ErrorMsg = { type: "error"; code: string; detail: string };

export type ServerMsg = LayoutMsg | DwellMsg | CommitMsg | BufferMsg | ErrorMsg;

export type PointerMsg = { type: "pointer"; t_ms: number; x: number; y: number };
export type ConfigMsg = {
  type: "config";
  dwell_ms?: number;
  mode?: "merging" | "non_merging";
  corpus_id?: string;
};
export type ResetMsg = { type: "reset" };

export type ClientMsg = PointerMsg | ConfigMsg | ResetMsg;

const SERVER_TYPES = new Set(["layout", "dwell", "commit", "buffer", "error"]);

// One frame may arrive with a trailing newline; anything that is not a
// JSON object with a known type field is dropped (never thrown) so a
// malformed frame cannot take the render loop down.
export function parseServerMessage(raw: string): ServerMsg | null {
  let parsed: unknown;
  try {
    parsed = JSON.parse(raw);
  } catch {
    return null;
  }
  if (typeof parsed !== "object" || parsed === null) return null;
  const type = (parsed as { type?: unknown }).type;
  if (typeof type !== "string" || !SERVER_TYPES.has(type)) return null;
  return parsed as ServerMsg;
}

export function serializeClientMessage(msg: ClientMsg): string {
  return JSON.stringify(msg);
}
