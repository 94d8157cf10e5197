import type { ExplorerState, Mode } from "./state";
import type { PaletteResponseDto } from "./types";

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

export function paletteUrl(state: ExplorerState, modeOverride?: Mode): string {
  const params = new URLSearchParams();
  params.set("color", state.color);
  params.set("mode", modeOverride ?? state.mode);
  params.set("space", state.space);
  if (state.ratios.length > 0) {
    params.set("ratios", state.ratios.join(","));
  } else {
    params.set("levels", String(state.levels));
  }
  return `/api/v1/palette?${params.toString()}`;
}

async function readError(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (body?.error?.message) {
      return body.error.field
        ? `${body.error.field}: ${body.error.message}`
        : body.error.message;
    }
  } catch {
    // fall through to the generic message
  }
  return `request failed (${response.status})`;
}

// Latest wins: starting a new request aborts whichever one is in flight, so
// a stale palette can never overwrite a newer pick.
export class PaletteClient {
  private inflight: AbortController | null = null;

  async fetch(state: ExplorerState, modeOverride?: Mode): Promise<PaletteResponseDto> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    const response = await fetch(paletteUrl(state, modeOverride), {
      signal: controller.signal,
    });
    if (!response.ok) {
      throw new ApiError(await readError(response), response.status);
    }
    return (await response.json()) as PaletteResponseDto;
  }
}
