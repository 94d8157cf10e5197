import type { PaletteEntryDto, PaletteResponseDto } from "./types";

// Every hex string shown anywhere in the DOM is copied verbatim from a
// service response; the UI performs no color arithmetic of its own.

function clear(el: HTMLElement): void {
  while (el.firstChild) el.removeChild(el.firstChild);
}

export function copyToClipboard(text: string): void {
  (window as any).latestCopiedHex = text; // observable in tests
  void navigator.clipboard?.writeText(text).catch(() => undefined);
}

function swatch(entry: PaletteEntryDto): HTMLElement {
  const card = document.createElement("div");
  card.className = "swatch";
  if (entry.wavelengths_nm.length > 0) {
    card.title = entry.wavelengths_nm.map((w) => `${w} nm`).join(", ");
  }

  const color = document.createElement("div");
  color.className = "swatch-color";
  color.style.background = entry.hex;
  card.appendChild(color);

  const label = document.createElement("code");
  label.className = "swatch-hex";
  label.textContent = entry.hex;
  card.appendChild(label);

  const meta = document.createElement("div");
  meta.className = "swatch-meta";
  meta.textContent =
    entry.level === 0
      ? "base"
      : `level ${entry.level} · ${entry.ratios.join(" ")}`;
  card.appendChild(meta);

  if (entry.clamped.scaled || entry.clamped.zeroed) {
    const badges = document.createElement("div");
    badges.className = "swatch-badges";
    for (const [flag, name] of [
      [entry.clamped.scaled, "scaled"],
      [entry.clamped.zeroed, "zeroed"],
    ] as const) {
      if (!flag) continue;
      const badge = document.createElement("span");
      badge.className = "badge";
      badge.textContent = name;
      badges.appendChild(badge);
    }
    card.appendChild(badges);
  }

  const copy = document.createElement("button");
  copy.className = "copy";
  copy.type = "button";
  copy.textContent = "copy";
  copy.addEventListener("click", () => copyToClipboard(entry.hex));
  card.appendChild(copy);

  return card;
}

export function renderPalette(container: HTMLElement, resp: PaletteResponseDto): void {
  clear(container);
  const strip = document.createElement("div");
  strip.className = "strip";
  for (const entry of [resp.base, ...resp.entries]) {
    strip.appendChild(swatch(entry));
  }
  container.appendChild(strip);

  if (resp.skipped.length > 0) {
    const skipped = document.createElement("div");
    skipped.className = "skipped";
    skipped.textContent =
      "skipped: " + resp.skipped.map((s) => `${s.ratio} (${s.reason})`).join("; ");
    container.appendChild(skipped);
  }

  const source = document.createElement("div");
  source.className = "source-note";
  source.textContent = `${resp.mode} · ${resp.space} · engine ${resp.engine_version} · ${resp.cmf_dataset}`;
  container.appendChild(source);
}

export function renderComparison(
  container: HTMLElement,
  derived: PaletteResponseDto,
  paper: PaletteResponseDto | null,
  paperCapNote: string | null,
): void {
  clear(container);
  const grid = document.createElement("div");
  grid.className = "compare";

  const derivedCol = document.createElement("div");
  derivedCol.className = "compare-col";
  const derivedTitle = document.createElement("h3");
  derivedTitle.textContent = "derived";
  derivedCol.appendChild(derivedTitle);
  const derivedBody = document.createElement("div");
  derivedCol.appendChild(derivedBody);
  renderPalette(derivedBody, derived);
  grid.appendChild(derivedCol);

  const paperCol = document.createElement("div");
  paperCol.className = "compare-col";
  const paperTitle = document.createElement("h3");
  paperTitle.textContent = "paper";
  paperCol.appendChild(paperTitle);
  if (paper !== null) {
    const paperBody = document.createElement("div");
    paperCol.appendChild(paperBody);
    renderPalette(paperBody, paper);
  } else {
    const note = document.createElement("p");
    note.className = "cap-note";
    note.textContent = paperCapNote ?? "paper mode unavailable";
    paperCol.appendChild(note);
  }
  grid.appendChild(paperCol);

  container.appendChild(grid);
}

export function renderError(container: HTMLElement, message: string): void {
  clear(container);
  const box = document.createElement("div");
  box.className = "error";
  box.textContent = message;
  container.appendChild(box);
}

export function clearError(container: HTMLElement): void {
  clear(container);
}

export interface PinnedPalette {
  label: string;
  response: PaletteResponseDto;
}

export function renderPinned(container: HTMLElement, pins: PinnedPalette[]): void {
  clear(container);
  if (pins.length === 0) return;
  const title = document.createElement("h3");
  title.textContent = "pinned";
  container.appendChild(title);
  for (const pin of pins) {
    const row = document.createElement("div");
    row.className = "pin";
    const label = document.createElement("div");
    label.className = "pin-label";
    label.textContent = pin.label;
    row.appendChild(label);
    const body = document.createElement("div");
    row.appendChild(body);
    renderPalette(body, pin.response);
    container.appendChild(row);
  }
}
