// Explorer state lives in the URL query string: reloading or sharing the
// address reproduces the same palette. Pinned palettes are deliberately
// session-local and stay out of the URL.

export type Mode = "paper" | "derived";
export type Space = "linear" | "encoded";

export interface ExplorerState {
  color: string; // #rrggbb, lowercase
  mode: Mode;
  space: Space;
  levels: number;
  ratios: string[]; // validated p:q tokens; empty = ladder mode
  compare: boolean;
}

export const DEFAULT_STATE: ExplorerState = {
  color: "#0000ff",
  mode: "derived",
  space: "linear",
  levels: 2,
  ratios: [],
  compare: false,
};

const HEX_RE = /^#?[0-9a-fA-F]{6}$/;
const RATIO_RE = /^(\d+)[:/](\d+)$/;

export function normalizeHex(raw: string): string | null {
  const text = raw.trim();
  if (!HEX_RE.test(text)) return null;
  const digits = text.startsWith("#") ? text.slice(1) : text;
  return "#" + digits.toLowerCase();
}

export interface RatioListParse {
  valid: string[];
  invalid: string[];
}

// Tokens are comma separated; a valid token is p:q (or p/q) with both terms
// positive integers. Invalid tokens are reported, never silently dropped.
export function parseRatioList(text: string): RatioListParse {
  const valid: string[] = [];
  const invalid: string[] = [];
  for (const raw of text.split(",")) {
    const token = raw.trim();
    if (!token) continue;
    const m = RATIO_RE.exec(token);
    if (m && Number(m[1]) > 0 && Number(m[2]) > 0) {
      valid.push(`${Number(m[1])}:${Number(m[2])}`);
    } else {
      invalid.push(token);
    }
  }
  return { valid, invalid };
}

export function serializeState(state: ExplorerState): string {
  const params = new URLSearchParams();
  params.set("color", state.color);
  params.set("mode", state.mode);
  params.set("space", state.space);
  params.set("levels", String(state.levels));
  if (state.ratios.length > 0) params.set("ratios", state.ratios.join(","));
  if (state.compare) params.set("compare", "1");
  return params.toString();
}

export function parseState(query: string): ExplorerState {
  const params = new URLSearchParams(query);
  const state: ExplorerState = { ...DEFAULT_STATE, ratios: [] };

  const color = params.get("color");
  const normalized = color === null ? null : normalizeHex(color);
  if (normalized !== null) state.color = normalized;

  const mode = params.get("mode");
  if (mode === "paper" || mode === "derived") state.mode = mode;

  const space = params.get("space");
  if (space === "linear" || space === "encoded") state.space = space;

  const levels = Number(params.get("levels"));
  if (Number.isInteger(levels) && levels >= 1 && levels <= 16) {
    state.levels = levels;
  }

  const ratios = params.get("ratios");
  if (ratios) state.ratios = parseRatioList(ratios).valid;

  state.compare = params.get("compare") === "1";
  return state;
}
