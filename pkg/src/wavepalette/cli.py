"""Command-line front door: palettes, consonance scores, CMF lookups, figures.

Exit codes: 0 success, 2 usage or validation problem, 1 internal error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .cmf_data import chromaticity_at, cmf_at, load_default_cmf
from .colorspace import clamp_paper_report, parse_hex, srgb_encode, format_hex, wavelength_to_linear_rgb
from .palette import (
    custom_ratio_palette,
    divergence_report,
    format_divergence_report,
    palette_for_color,
    spectral_palette,
)
from .serialize import (
    consonance_payload,
    palette_payload,
    spectral_payload,
    to_json,
)
from .svgplot import svg_line_plot, svg_swatches
from .wavemodel import (
    PAPER_MIXTURES,
    CrossingParams,
    Mixture,
    Ratio,
    mixture_eval,
    synchronized_zero_count,
)


def _write_out(text: str, out_path: str | None) -> None:
    if out_path and out_path != "-":
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _spectral_entries(sp, table) -> list[dict]:
    entries = []
    items = [(None, sp.base_nm)] + list(sp.picks)
    for level, (ratio, lam) in enumerate(items):
        clamped, scaled, zeroed = clamp_paper_report(
            wavelength_to_linear_rgb(lam, table)
        )
        rgb = srgb_encode(clamped)
        entries.append(
            {
                "hex": format_hex(rgb),
                "rgb": list(rgb),
                "level": level,
                "ratio": str(ratio) if ratio is not None else None,
                "wavelength_nm": lam,
                "clamped": {"scaled": scaled, "zeroed": zeroed},
            }
        )
    return entries


def _render_css(hexes: list[str]) -> str:
    return "".join(
        f"--wave-palette-{i}: {h};\n" for i, h in enumerate(hexes)
    )


def cmd_palette(args) -> int:
    table = load_default_cmf()
    params = CrossingParams()

    if args.color is not None:
        base = parse_hex(args.color)
        if args.ratios:
            if args.mode == "paper":
                raise ValueError("custom ratios need --mode derived")
            ratios = [Ratio.parse(tok) for tok in args.ratios.split(",") if tok.strip()]
            if not ratios:
                raise ValueError("empty ratio list")
            palette = custom_ratio_palette(
                base, ratios, space=args.space, table=table, params=params
            )
        else:
            palette = palette_for_color(
                base, args.levels, mode=args.mode, space=args.space,
                table=table, params=params,
            )
        payload = palette_payload(palette, args.mode, table.dataset_id)
        all_entries = [payload["base"]] + payload["entries"]
    else:
        sp = spectral_palette(args.wavelength, args.count)
        entries = _spectral_entries(sp, table)
        payload = spectral_payload(sp, entries, table.dataset_id)
        all_entries = entries

    hexes = [e["hex"] for e in all_entries]
    if args.format == "json":
        _write_out(to_json(payload), args.out)
    elif args.format == "hex":
        _write_out("".join(h + "\n" for h in hexes), args.out)
    elif args.format == "css":
        _write_out(_render_css(hexes), args.out)
    elif args.format == "svg":
        _write_out(svg_swatches(hexes), args.out)
    return 0


def _scan_params(args) -> CrossingParams:
    return CrossingParams(
        domain_end=args.domain, step=args.step, epsilon=args.epsilon
    )


def cmd_consonance(args) -> int:
    params = _scan_params(args)
    if args.paper_eq is not None:
        if args.paper_eq == "all":
            pairs = [(1, k) for k in (2, 3, 4)]
            lines = []
            for i, k in pairs:
                count, density = synchronized_zero_count(
                    PAPER_MIXTURES[i], PAPER_MIXTURES[k], params
                )
                lines.append(
                    f"eq({i}) vs eq({k}): count={count} density={density:.6g} /nm"
                )
            _write_out("".join(line + "\n" for line in lines), args.out)
            return 0
        n = int(args.paper_eq)
        if n not in PAPER_MIXTURES:
            raise ValueError(f"--paper-eq must be 1..4 or 'all', got {args.paper_eq}")
        a, b = PAPER_MIXTURES[1], PAPER_MIXTURES[n]
    else:
        if not args.a or not args.b:
            raise ValueError("need --a and --b mixture specs, or --paper-eq")
        a, b = Mixture.parse(args.a), Mixture.parse(args.b)
    count, density = synchronized_zero_count(a, b, params)
    if args.format == "json":
        _write_out(to_json(consonance_payload(a, b, count, density, params)), args.out)
    else:
        _write_out(f"count={count} density={density:.6g} /nm\n", args.out)
    return 0


def _sine_pair_series(lams: list[float], x_max: float, n: int = 1200):
    series = []
    for lam in lams:
        m = Mixture.single(lam)
        pts = [(i * x_max / n, mixture_eval(m, i * x_max / n)) for i in range(n + 1)]
        series.append((f"sin(2pix/{lam:g})", pts))
    return series


def _mixture_series(mixtures: list[tuple[str, Mixture]], x_max: float, n: int = 1200):
    series = []
    for label, m in mixtures:
        pts = [(i * x_max / n, mixture_eval(m, i * x_max / n)) for i in range(n + 1)]
        series.append((label, pts))
    return series


def cmd_figure(args) -> int:
    if args.mixture:
        mixtures = [(f"mix {i + 1}", Mixture.parse(s)) for i, s in enumerate(args.mixture)]
        x_max = args.x_max or 3000.0
        svg = svg_line_plot(_mixture_series(mixtures, x_max))
        _write_out(svg, args.out)
        return 0
    fid = args.id
    if fid in (1, 2):
        # perfect-fifth pair; the dashed line marks the first shared rest
        lam_a, lam_b = 600.0, 400.0
        first_common = 600.0  # lcm of half-periods 300 and 200
        x_max = args.x_max or 1500.0
        svg = svg_line_plot(
            _sine_pair_series([lam_a, lam_b], x_max), markers=[first_common]
        )
    elif fid == 3:
        x_max = args.x_max or 2700.0
        svg = svg_line_plot(_sine_pair_series([450.0, 675.0, 600.0], x_max))
    elif fid == 4:
        x_max = args.x_max or 3000.0
        svg = svg_line_plot(
            _mixture_series(
                [("base mix", PAPER_MIXTURES[1]), ("consonant mix", PAPER_MIXTURES[3])],
                x_max,
            )
        )
    elif fid == 5:
        x_max = args.x_max or 3000.0
        svg = svg_line_plot(_mixture_series([("base mix", PAPER_MIXTURES[1])], x_max))
    else:
        raise ValueError(f"unknown figure id {fid}, expected 1-5")
    _write_out(svg, args.out)
    return 0


def cmd_cmf(args) -> int:
    table = load_default_cmf()
    lines = [f"dataset: {table.dataset_id}",
             f"rows: {len(table)} ({table.lambda_min:g}-{table.lambda_max:g} nm)"]
    if args.at is not None:
        xbar, ybar, zbar = cmf_at(table, args.at)
        c = chromaticity_at(table, args.at)
        lines.append(f"cmf({args.at:g}): {xbar:.6f} {ybar:.6f} {zbar:.6f}")
        lines.append(f"chromaticity({args.at:g}): {c.x:.6f} {c.y:.6f} {c.z:.6f}")
    _write_out("".join(line + "\n" for line in lines), args.out)
    return 0


def cmd_divergence(args) -> int:
    table = load_default_cmf()
    report = divergence_report(table)
    if args.format == "json":
        _write_out(to_json(report), args.out)
    else:
        _write_out(format_divergence_report(report), args.out)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavepalette",
        description="Consonant color palettes from wavelength ratios.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("palette", help="generate a palette")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--color", help="base color as #rrggbb")
    src.add_argument("--wavelength", type=float, help="base spectral wavelength in nm")
    p.add_argument("--count", type=int, default=3,
                   help="colors for a spectral palette (default 3)")
    p.add_argument("--levels", type=int, default=2,
                   help="consonant levels for a color palette (default 2)")
    p.add_argument("--mode", choices=("paper", "derived"), default="derived")
    p.add_argument("--space", choices=("linear", "encoded"), default="linear")
    p.add_argument("--ratios", help="comma-separated p:q list (a custom tune)")
    p.add_argument("--format", choices=("hex", "json", "css", "svg"), default="json")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_palette)

    p = sub.add_parser("consonance", help="score two mixtures")
    p.add_argument("--a", help="mixture spec a@lambda,a@lambda,...")
    p.add_argument("--b", help="mixture spec a@lambda,a@lambda,...")
    p.add_argument("--paper-eq", help="1..4 compares eq(1) vs eq(N); 'all' for the table")
    p.add_argument("--domain", type=float, default=10_000.0)
    p.add_argument("--step", type=float, default=0.1)
    p.add_argument("--epsilon", type=float, default=0.01)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_consonance)

    p = sub.add_parser("figure", help="emit an SVG wave plot")
    p.add_argument("id", type=int, nargs="?", help="figure id 1-5")
    p.add_argument("--mixture", action="append",
                   help="explicit mixture spec (repeatable)")
    p.add_argument("--x-max", type=float, help="x range end in nm")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("cmf", help="inspect the CMF dataset")
    p.add_argument("--at", type=float, help="wavelength to look up (nm)")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_cmf)

    p = sub.add_parser("divergence", help="derived-vs-published transform report")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_divergence)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--static-dir", help="directory of UI assets to serve at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "figure" and args.id is None and not args.mixture:
        parser.error("figure needs an id (1-5) or --mixture")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - kept from leaking tracebacks
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
