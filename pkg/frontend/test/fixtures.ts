import type { PaletteEntryDto, PaletteResponseDto } from "../src/types";

export function entry(
  hex: string,
  level: number,
  extra: Partial<PaletteEntryDto> = {},
): PaletteEntryDto {
  return {
    hex,
    rgb: [0, 0, 0],
    level,
    ratios: level === 0 ? [] : ["3:2", "4:3", "3:2"],
    wavelengths_nm: level === 0 ? [] : [407.6, 732.133, 696.3],
    clamped: { scaled: false, zeroed: false },
    ...extra,
  };
}

export function paletteResponse(
  hexes: string[],
  overrides: Partial<PaletteResponseDto> = {},
): PaletteResponseDto {
  const [base, ...rest] = hexes;
  return {
    engine_version: "0.1.0",
    cmf_dataset: "cie1931-2deg-5nm-test",
    mode: "derived",
    space: "linear",
    base: entry(base, 0),
    entries: rest.map((hex, i) => entry(hex, i + 1)),
    skipped: [],
    ...overrides,
  };
}

export const CONTROLS_HTML = `
  <input type="color" id="color" value="#0000ff">
  <input type="text" id="color-text" value="#0000ff">
  <select id="mode">
    <option value="derived" selected>derived</option>
    <option value="paper">paper</option>
  </select>
  <select id="space">
    <option value="linear" selected>linear</option>
    <option value="encoded">encoded</option>
  </select>
  <input type="number" id="levels" value="2">
  <input type="text" id="ratios">
  <span id="ratio-feedback"></span>
  <input type="checkbox" id="compare">
  <button type="button" id="pin">pin</button>
  <div id="error"></div>
  <main id="palette"></main>
  <aside id="pinned"></aside>
`;

export function mountDom(): void {
  document.body.innerHTML = CONTROLS_HTML;
}

export interface FetchLogEntry {
  url: string;
  params: URLSearchParams;
}

// fetch stub: answers palette requests from a routing function and records
// every request it sees
export function stubFetch(
  route: (params: URLSearchParams) => PaletteResponseDto | { status: number; body: unknown },
): { calls: FetchLogEntry[]; fetch: typeof fetch } {
  const calls: FetchLogEntry[] = [];
  const impl = async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
    const url = String(input);
    const params = new URLSearchParams(url.split("?")[1] ?? "");
    calls.push({ url, params });
    if (init?.signal?.aborted) {
      throw Object.assign(new Error("aborted"), { name: "AbortError" });
    }
    const result = route(params);
    if ("status" in result && typeof result.status === "number" && "body" in result) {
      return new Response(JSON.stringify(result.body), {
        status: result.status,
        headers: { "content-type": "application/json" },
      });
    }
    return new Response(JSON.stringify(result), {
      status: 200,
      headers: { "content-type": "application/json" },
    });
  };
  return { calls, fetch: impl as typeof fetch };
}
