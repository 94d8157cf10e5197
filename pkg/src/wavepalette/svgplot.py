"""Minimal SVG output: palette swatch strips and wave line plots.

Hand-rolled so the artifacts stay dependency-free, deterministic and
diffable in tests.
"""

from __future__ import annotations

_SVG_OPEN = (
    '<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
    'viewBox="0 0 {w} {h}">'
)


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def svg_swatches(hexes: list[str], labels: list[str] | None = None) -> str:
    """Horizontal swatch rectangles with hex labels underneath."""
    if labels is None:
        labels = hexes
    sw, sh, pad, text_h = 120, 80, 4, 18
    w = pad + len(hexes) * (sw + pad)
    h = sh + text_h + 2 * pad
    parts = [_SVG_OPEN.format(w=w, h=h)]
    for i, (color, label) in enumerate(zip(hexes, labels)):
        x = pad + i * (sw + pad)
        parts.append(
            f'<rect x="{x}" y="{pad}" width="{sw}" height="{sh}" '
            f'fill="{color}" stroke="#222" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x + sw / 2:.0f}" y="{pad + sh + text_h - 4}" '
            f'font-family="monospace" font-size="13" '
            f'text-anchor="middle">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def svg_line_plot(
    series: list[tuple[str, list[tuple[float, float]]]],
    width: int = 900,
    height: int = 360,
    markers: list[float] | None = None,
    x_label: str = "x (nm)",
) -> str:
    """One polyline per series over a shared frame.

    markers are x positions drawn as dashed vertical lines (used to flag
    synchronized zero crossings).
    """
    if not series or not any(pts for _, pts in series):
        raise ValueError("nothing to plot")
    xs = [x for _, pts in series for x, _ in pts]
    ys = [y for _, pts in series for _, y in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0
    pad = 40.0
    plot_w, plot_h = width - 2 * pad, height - 2 * pad

    def px(x: float) -> float:
        return pad + (x - x0) / (x1 - x0) * plot_w

    def py(y: float) -> float:
        return pad + (y1 - y) / (y1 - y0) * plot_h

    colors = ("#1f6feb", "#d1242f", "#1a7f37", "#9a6700", "#8250df")
    parts = [_SVG_OPEN.format(w=width, h=height)]
    # axes: frame plus the y=0 line the crossings live on
    parts.append(
        f'<rect x="{_fmt(pad)}" y="{_fmt(pad)}" width="{_fmt(plot_w)}" '
        f'height="{_fmt(plot_h)}" fill="none" stroke="#888" stroke-width="1"/>'
    )
    if y0 < 0 < y1:
        zy = _fmt(py(0.0))
        parts.append(
            f'<line x1="{_fmt(pad)}" y1="{zy}" x2="{_fmt(pad + plot_w)}" '
            f'y2="{zy}" stroke="#bbb" stroke-width="1"/>'
        )
    for x in markers or []:
        mx = _fmt(px(x))
        parts.append(
            f'<line x1="{mx}" y1="{_fmt(pad)}" x2="{mx}" '
            f'y2="{_fmt(pad + plot_h)}" stroke="#444" stroke-width="1" '
            f'stroke-dasharray="5,4"/>'
        )
    for i, (label, pts) in enumerate(series):
        color = colors[i % len(colors)]
        coords = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in pts)
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{_fmt(pad + 6)}" y="{_fmt(pad + 16 + 16 * i)}" '
            f'font-family="monospace" font-size="12" fill="{color}">{label}</text>'
        )
    parts.append(
        f'<text x="{_fmt(width / 2)}" y="{_fmt(height - 8)}" '
        f'font-family="monospace" font-size="12" '
        f'text-anchor="middle">{x_label}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
