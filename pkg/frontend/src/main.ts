import { ApiError, PaletteClient } from "./api";
import {
  DEFAULT_STATE,
  ExplorerState,
  Mode,
  Space,
  normalizeHex,
  parseRatioList,
  parseState,
  serializeState,
} from "./state";
import {
  PinnedPalette,
  clearError,
  renderComparison,
  renderError,
  renderPalette,
  renderPinned,
} from "./render";
import type { PaletteResponseDto } from "./types";

const PAPER_CAP_NOTE =
  "paper mode publishes levels 1 and 2 only; lower the level count to compare";

interface Elements {
  color: HTMLInputElement;
  colorText: HTMLInputElement;
  mode: HTMLSelectElement;
  space: HTMLSelectElement;
  levels: HTMLInputElement;
  ratios: HTMLInputElement;
  ratioFeedback: HTMLElement;
  compare: HTMLInputElement;
  pin: HTMLButtonElement;
  palette: HTMLElement;
  error: HTMLElement;
  pinned: HTMLElement;
}

function grab(root: Document): Elements {
  const byId = <T extends HTMLElement>(id: string) => {
    const el = root.getElementById(id);
    if (!el) throw new Error(`missing #${id}`);
    return el as T;
  };
  return {
    color: byId<HTMLInputElement>("color"),
    colorText: byId<HTMLInputElement>("color-text"),
    mode: byId<HTMLSelectElement>("mode"),
    space: byId<HTMLSelectElement>("space"),
    levels: byId<HTMLInputElement>("levels"),
    ratios: byId<HTMLInputElement>("ratios"),
    ratioFeedback: byId("ratio-feedback"),
    compare: byId<HTMLInputElement>("compare"),
    pin: byId<HTMLButtonElement>("pin"),
    palette: byId("palette"),
    error: byId("error"),
    pinned: byId("pinned"),
  };
}

export class App {
  state: ExplorerState;
  lastResponse: PaletteResponseDto | null = null;
  pins: PinnedPalette[] = [];
  pending: Promise<void> = Promise.resolve();

  private readonly els: Elements;

  constructor(
    private readonly root: Document,
    private readonly client: PaletteClient = new PaletteClient(),
    private readonly win: Window = window,
  ) {
    this.els = grab(root);
    this.state = parseState(this.win.location.search);
    this.bind();
    this.syncControls();
  }

  start(): Promise<void> {
    return this.refresh();
  }

  private bind(): void {
    const onChange = () => {
      this.readControls();
      this.pushUrl();
      this.pending = this.refresh();
    };
    this.els.color.addEventListener("input", () => {
      this.els.colorText.value = this.els.color.value;
      onChange();
    });
    this.els.colorText.addEventListener("change", () => {
      const normalized = normalizeHex(this.els.colorText.value);
      if (normalized === null) {
        this.els.ratioFeedback.textContent = "";
        renderError(this.els.error, `not a hex color: ${this.els.colorText.value}`);
        return;
      }
      this.els.color.value = normalized;
      onChange();
    });
    for (const el of [this.els.mode, this.els.space, this.els.levels, this.els.compare]) {
      el.addEventListener("change", onChange);
    }
    this.els.ratios.addEventListener("change", () => this.onRatiosEdited());
    this.els.pin.addEventListener("click", () => this.pinCurrent());
    this.win.addEventListener("popstate", () => {
      this.state = parseState(this.win.location.search);
      this.syncControls();
      this.pending = this.refresh();
    });
  }

  private readControls(): void {
    this.state = {
      ...this.state,
      color: normalizeHex(this.els.color.value) ?? this.state.color,
      mode: this.els.mode.value as Mode,
      space: this.els.space.value as Space,
      levels: Math.max(1, Number(this.els.levels.value) || DEFAULT_STATE.levels),
      compare: this.els.compare.checked,
    };
  }

  private syncControls(): void {
    this.els.color.value = this.state.color;
    this.els.colorText.value = this.state.color;
    this.els.mode.value = this.state.mode;
    this.els.space.value = this.state.space;
    this.els.levels.value = String(this.state.levels);
    this.els.ratios.value = this.state.ratios.join(", ");
    this.els.compare.checked = this.state.compare;
  }

  // Invalid tokens are highlighted but do not discard the valid ones; an
  // all-invalid edit never fires a request. Clearing the field returns to
  // ladder mode.
  onRatiosEdited(): void {
    const text = this.els.ratios.value;
    const { valid, invalid } = parseRatioList(text);
    if (invalid.length > 0) {
      this.els.ratioFeedback.textContent = `invalid: ${invalid.join(", ")}`;
      this.els.ratios.classList.add("invalid");
    } else {
      this.els.ratioFeedback.textContent = "";
      this.els.ratios.classList.remove("invalid");
    }
    if (valid.length === 0 && invalid.length > 0) {
      return; // nothing usable; keep the current palette untouched
    }
    this.state = { ...this.state, ratios: valid };
    this.pushUrl();
    this.pending = this.refresh();
  }

  private pushUrl(): void {
    this.win.history.replaceState(null, "", "?" + serializeState(this.state));
  }

  pinCurrent(): void {
    if (!this.lastResponse) return;
    const r = this.lastResponse;
    const label =
      `${r.base.hex} · ${r.mode}/${r.space}` +
      (this.state.ratios.length > 0 ? ` · ${this.state.ratios.join(",")}` : ` · L${this.state.levels}`);
    this.pins.push({ label, response: r });
    renderPinned(this.els.pinned, this.pins);
  }

  async refresh(): Promise<void> {
    try {
      if (this.state.compare) {
        const canPaper = this.state.levels <= 2 && this.state.ratios.length === 0;
        const derived = await this.client.fetch(this.state, "derived");
        let paper: PaletteResponseDto | null = null;
        if (canPaper) {
          // sequential on one client: latest-wins must not cancel our pair
          paper = await new PaletteClient().fetch(this.state, "paper");
        }
        this.lastResponse = derived;
        renderComparison(this.els.palette, derived, paper, PAPER_CAP_NOTE);
      } else {
        const response = await this.client.fetch(this.state);
        this.lastResponse = response;
        renderPalette(this.els.palette, response);
      }
      clearError(this.els.error);
    } catch (err) {
      if ((err as Error).name === "AbortError") return; // superseded
      const message = err instanceof ApiError ? err.message : "request failed";
      renderError(this.els.error, message); // prior palette stays rendered
    }
  }
}

export function boot(): void {
  const app = new App(document);
  void app.start();
}

if (typeof document !== "undefined" && document.getElementById("palette")) {
  boot();
}
