import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { PaletteClient } from "../src/api";
import { App } from "../src/main";
import { mountDom, paletteResponse, stubFetch } from "./fixtures";
import type { PaletteResponseDto } from "../src/types";

function routeByColor(params: URLSearchParams): PaletteResponseDto {
  const color = params.get("color") ?? "#0000ff";
  const mode = params.get("mode") ?? "derived";
  const levels = Number(params.get("levels") ?? "2");
  const ratios = params.get("ratios");
  const n = ratios ? ratios.split(",").length : levels;
  const hexes = [color, ...Array.from({ length: n }, (_, i) => `#ff00${String(i).padStart(2, "0")}`)];
  return paletteResponse(hexes, { mode });
}

function setUrl(query: string): void {
  window.history.replaceState(null, "", query ? `?${query}` : window.location.pathname);
}

type Route = Parameters<typeof stubFetch>[0];

async function bootApp(route: Route = routeByColor) {
  const stub = stubFetch(route);
  vi.stubGlobal("fetch", stub.fetch);
  mountDom();
  const app = new App(document, new PaletteClient(), window);
  await app.start();
  return { app, calls: stub.calls };
}

beforeEach(() => setUrl(""));
afterEach(() => vi.unstubAllGlobals());

describe("App boot", () => {
  it("reads state from the URL and fetches it", async () => {
    setUrl("color=%23112233&mode=paper&space=encoded&levels=1");
    const { calls } = await bootApp();
    expect(calls).toHaveLength(1);
    expect(calls[0].params.get("color")).toBe("#112233");
    expect(calls[0].params.get("mode")).toBe("paper");
    expect(calls[0].params.get("levels")).toBe("1");
    expect(document.querySelectorAll(".swatch")).toHaveLength(2);
  });

  it("controls reflect the URL state", async () => {
    setUrl("color=%23112233&mode=paper&space=encoded&levels=1");
    await bootApp();
    expect((document.getElementById("mode") as HTMLSelectElement).value).toBe("paper");
    expect((document.getElementById("levels") as HTMLInputElement).value).toBe("1");
  });
});

describe("ratio editing", () => {
  it("valid list updates state, URL and refetches", async () => {
    const { app, calls } = await bootApp();
    const input = document.getElementById("ratios") as HTMLInputElement;
    input.value = "3:2, 4:3";
    input.dispatchEvent(new Event("change"));
    await app.pending;
    expect(app.state.ratios).toEqual(["3:2", "4:3"]);
    expect(window.location.search).toContain("ratios=3%3A2%2C4%3A3");
    const last = calls[calls.length - 1];
    expect(last.params.get("ratios")).toBe("3:2,4:3");
    expect(last.params.get("levels")).toBeNull();
  });

  it("invalid tokens are flagged without dropping valid ones", async () => {
    const { app, calls } = await bootApp();
    const input = document.getElementById("ratios") as HTMLInputElement;
    input.value = "3:2, 3:0";
    input.dispatchEvent(new Event("change"));
    await app.pending;
    expect(document.getElementById("ratio-feedback")!.textContent).toContain("3:0");
    expect(input.classList.contains("invalid")).toBe(true);
    expect(calls[calls.length - 1].params.get("ratios")).toBe("3:2");
  });

  it("all-invalid input never fetches and keeps the palette", async () => {
    const { app, calls } = await bootApp();
    const before = calls.length;
    const paletteBefore = document.getElementById("palette")!.innerHTML;
    const input = document.getElementById("ratios") as HTMLInputElement;
    input.value = "3:0";
    input.dispatchEvent(new Event("change"));
    await app.pending;
    expect(calls).toHaveLength(before);
    expect(document.getElementById("ratio-feedback")!.textContent).toContain("3:0");
    expect(document.getElementById("palette")!.innerHTML).toBe(paletteBefore);
  });

  it("clearing the list reverts to ladder mode", async () => {
    setUrl("color=%230000ff&ratios=3:2");
    const { app, calls } = await bootApp();
    expect(calls[0].params.get("ratios")).toBe("3:2");
    const input = document.getElementById("ratios") as HTMLInputElement;
    input.value = "";
    input.dispatchEvent(new Event("change"));
    await app.pending;
    const last = calls[calls.length - 1];
    expect(last.params.get("ratios")).toBeNull();
    expect(last.params.get("levels")).toBe("2");
  });
});

describe("error handling", () => {
  it("API errors show inline and retain the prior palette", async () => {
    let fail = false;
    const { app } = await bootApp((params) => {
      if (fail) {
        return { status: 400, body: { error: { field: "levels", message: "too deep" } } };
      }
      return routeByColor(params);
    });
    const rendered = document.querySelectorAll(".swatch").length;
    expect(rendered).toBeGreaterThan(0);

    fail = true;
    const levels = document.getElementById("levels") as HTMLInputElement;
    levels.value = "9";
    levels.dispatchEvent(new Event("change"));
    await app.pending;
    expect(document.querySelector("#error .error")?.textContent).toContain("too deep");
    expect(document.querySelectorAll(".swatch")).toHaveLength(rendered);
  });
});

describe("compare mode", () => {
  it("renders paper and derived side by side at levels <= 2", async () => {
    const { app } = await bootApp();
    const compare = document.getElementById("compare") as HTMLInputElement;
    compare.checked = true;
    compare.dispatchEvent(new Event("change"));
    await app.pending;
    const cols = document.querySelectorAll(".compare-col");
    expect(cols).toHaveLength(2);
    expect(cols[1].querySelectorAll(".swatch").length).toBeGreaterThan(0);
  });

  it("caps the paper column above level 2", async () => {
    setUrl("color=%230000ff&levels=3&compare=1");
    await bootApp();
    expect(document.querySelector(".cap-note")?.textContent).toContain("levels 1 and 2");
    const cols = document.querySelectorAll(".compare-col");
    expect(cols[0].querySelectorAll(".swatch").length).toBeGreaterThan(0);
    expect(cols[1].querySelectorAll(".swatch")).toHaveLength(0);
  });
});

describe("pinning", () => {
  it("pins are session-local snapshots", async () => {
    const { app } = await bootApp();
    (document.getElementById("pin") as HTMLButtonElement).click();
    expect(document.querySelectorAll("#pinned .pin")).toHaveLength(1);
    // pinning twice keeps both
    (document.getElementById("pin") as HTMLButtonElement).click();
    expect(document.querySelectorAll("#pinned .pin")).toHaveLength(2);
    expect(app.pins).toHaveLength(2);
    // pins never enter the URL
    expect(window.location.search).not.toContain("pin");
  });
});
