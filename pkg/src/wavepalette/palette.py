"""The wave method proper: palettes from consonant wavelength ratios.

Spectral palettes ladder a single wavelength through interval ratios.
Non-spectral colors are handled per primary: each sRGB primary is mapped to
its consonant wavelength, those wavelengths become the columns of a 3x3
transform, and the transform plus the scale-then-zero clamp produces the
consonant color. Two matrix sources exist side by side: `paper` mode uses
the published level-1/level-2 constants verbatim, `derived` mode recomputes
the whole pipeline from the CMF table and reports where the two disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cmf_data import CmfTable, DegenerateStimulusError, spectral_locus
from .colorspace import (
    Triple,
    clamp_paper_report,
    dominant_wavelength,
    format_hex,
    linear_to_xyz,
    primary_chromaticities,
    srgb_decode,
    srgb_encode,
    wavelength_to_linear_rgb,
    white_point_d65,
)
from .wavemodel import (
    VISIBLE_MAX_NM,
    VISIBLE_MIN_NM,
    CrossingParams,
    Mixture,
    Ratio,
    consonant_wavelengths,
    synchronized_zero_count,
)


class LadderExhaustedError(ValueError):
    """The ratio ladder ran out before the requested level was reached."""


class UnsupportedPaperLevelError(ValueError):
    """Paper mode publishes transform constants for levels 1 and 2 only."""


# --------------------------------------------------------------------------
# Ratio ladder
# --------------------------------------------------------------------------

_LADDER_MAX_SPAN = 3  # widest interval in the method's source list is 5/2
_LADDER_MAX_PRODUCT = 120


def default_ladder() -> tuple[Ratio, ...]:
    """The default interval ladder: 2/1, 3/2, 5/2, 4/3, 5/3, 5/4, ...

    The octave, then every coprime p/q with 2 <= q < p, p - q <= 3 and
    p*q <= 120, ordered by descending consonance score 1/(p*q) with ties
    to the smaller numerator. Integer rungs past the octave are omitted:
    they are octave duplicates and can never pair two visible wavelengths.
    Rungs whose interval exceeds the visible span simply never match and
    are skipped during walking.
    """
    rungs = [Ratio(2, 1)]
    for q in range(2, _LADDER_MAX_PRODUCT // 2 + 1):
        for p in range(q + 1, q + _LADDER_MAX_SPAN + 1):
            if p * q <= _LADDER_MAX_PRODUCT and math.gcd(p, q) == 1:
                rungs.append(Ratio(p, q))
    rungs.sort(key=lambda r: (r.p * r.q, r.p))
    return tuple(rungs)


def validate_ladder(ladder: tuple[Ratio, ...]) -> tuple[Ratio, ...]:
    seen = set()
    for r in ladder:
        if (r.p, r.q) in seen:
            raise ValueError(f"duplicate ladder ratio {r}")
        seen.add((r.p, r.q))
    ordered = sorted(ladder, key=lambda r: (r.p * r.q, r.p))
    if list(ladder) != ordered:
        raise ValueError("ladder not ordered by descending consonance score")
    return tuple(ladder)


# --------------------------------------------------------------------------
# Spectral palettes
# --------------------------------------------------------------------------

_DEDUPE_NM = 0.01


@dataclass(frozen=True)
class SpectralPalette:
    base_nm: float
    picks: tuple[tuple[Ratio, float], ...]
    exhausted: bool

    @property
    def wavelengths(self) -> list[float]:
        return [self.base_nm] + [wl for _, wl in self.picks]


def spectral_palette(
    lambda_nm: float, n: int, ladder: tuple[Ratio, ...] | None = None
) -> SpectralPalette:
    """Base wavelength plus consonant companions, most consonant first.

    Walks the ladder taking every in-range candidate (longer wavelength
    first within a rung), deduplicating within 0.01 nm, until n colors are
    collected or the ladder is exhausted (then exhausted=True).
    """
    if not (VISIBLE_MIN_NM <= lambda_nm <= VISIBLE_MAX_NM):
        raise ValueError(f"{lambda_nm} nm outside the visible range")
    if n < 1:
        raise ValueError("n must be >= 1")
    rungs = default_ladder() if ladder is None else validate_ladder(ladder)
    taken = [lambda_nm]
    picks: list[tuple[Ratio, float]] = []
    for ratio in rungs:
        if len(taken) >= n:
            break
        for cand in sorted(consonant_wavelengths(lambda_nm, ratio), reverse=True):
            if any(abs(cand - t) < _DEDUPE_NM for t in taken):
                continue
            taken.append(cand)
            picks.append((ratio, cand))
            if len(taken) >= n:
                break
    return SpectralPalette(
        base_nm=lambda_nm, picks=tuple(picks), exhausted=len(taken) < n
    )


# --------------------------------------------------------------------------
# Transform matrices
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TransformMatrix:
    """3x3 consonant-color map on RGB triples (row-major)."""

    rows: tuple[tuple[float, float, float], ...]
    mode: str  # 'paper' or 'derived'
    level: int
    source_wavelengths: tuple[float, float, float]
    source_ratios: tuple[Ratio, Ratio, Ratio]
    degenerate_fallback: tuple[bool, bool, bool] = (False, False, False)

    def apply(self, c: Triple) -> Triple:
        r = self.rows
        return (
            r[0][0] * c[0] + r[0][1] * c[1] + r[0][2] * c[2],
            r[1][0] * c[0] + r[1][1] * c[1] + r[1][2] * c[2],
            r[2][0] * c[0] + r[2][1] * c[1] + r[2][2] * c[2],
        )


# Published consonant-color constants, digit for digit as printed. The g2/b
# coefficient really is five decimals in the source.
PAPER_M1 = (
    (0.412554, 0.075942, 1.361850),
    (-0.387623, -0.025863, -0.496422),
    (0.942622, -0.008750, -0.140190),
)
PAPER_M2 = (
    (0.153969, 0.075942, 1.291906),
    (-0.265282, -0.025863, -0.32766),
    (0.941624, -0.008750, -0.186152),
)

_PAPER_WAVELENGTHS = {
    1: (407.6, 732.133, 696.3),
    2: (458.55, 732.133, 618.933),
}
_PAPER_RATIOS = {
    1: (Ratio(3, 2), Ratio(4, 3), Ratio(3, 2)),
    2: (Ratio(4, 3), Ratio(4, 3), Ratio(4, 3)),
}


def paper_matrix(level: int) -> TransformMatrix:
    """The published transform for level 1 or 2; higher levels do not exist."""
    if level == 1:
        rows = PAPER_M1
    elif level == 2:
        rows = PAPER_M2
    else:
        raise UnsupportedPaperLevelError(
            f"paper mode publishes levels 1 and 2 only, got {level}"
        )
    return TransformMatrix(
        rows=rows,
        mode="paper",
        level=level,
        source_wavelengths=_PAPER_WAVELENGTHS[level],
        source_ratios=_PAPER_RATIOS[level],
    )


# --------------------------------------------------------------------------
# Derived pipeline
# --------------------------------------------------------------------------

def srgb_primary_wavelengths(table: CmfTable) -> tuple[float, float, float]:
    """Dominant wavelengths of the sRGB primaries (about 611.4/549.1/464.2)."""
    locus = spectral_locus(table)
    white = white_point_d65()
    return tuple(
        dominant_wavelength(c, white, locus) for c in primary_chromaticities()
    )


@dataclass(frozen=True)
class ConsonantPick:
    """One primary's choice at one level, with its selection record."""

    source_nm: float
    ratio: Ratio
    wavelength_nm: float
    candidates: tuple[float, ...]  # in-range candidates, longest first
    scores: tuple[int, ...]  # synchronized-zero counts vs the source sine
    chosen_by: str  # 'only-candidate' | 'higher-consonance' | 'tie-longer'


def _pick_for_primary(
    primary_nm: float,
    level: int,
    ladder: tuple[Ratio, ...],
    params: CrossingParams,
) -> ConsonantPick:
    usable = 0
    for ratio in ladder:
        cands = sorted(consonant_wavelengths(primary_nm, ratio), reverse=True)
        if not cands:
            continue
        usable += 1
        if usable < level:
            continue
        base = Mixture.single(primary_nm)
        scores = tuple(
            synchronized_zero_count(base, Mixture.single(c), params)[0]
            for c in cands
        )
        if len(cands) == 1:
            chosen, chosen_by = cands[0], "only-candidate"
        elif scores[0] == scores[1]:
            chosen, chosen_by = cands[0], "tie-longer"
        else:
            chosen = cands[max(range(len(cands)), key=scores.__getitem__)]
            chosen_by = "higher-consonance"
        return ConsonantPick(
            source_nm=primary_nm,
            ratio=ratio,
            wavelength_nm=chosen,
            candidates=tuple(cands),
            scores=scores,
            chosen_by=chosen_by,
        )
    raise LadderExhaustedError(
        f"ladder exhausted before level {level} for primary {primary_nm:g} nm"
    )


def derived_consonant_wavelengths(
    table: CmfTable,
    level: int,
    ladder: tuple[Ratio, ...] | None = None,
    params: CrossingParams | None = None,
    primaries: tuple[float, float, float] | None = None,
) -> tuple[ConsonantPick, ConsonantPick, ConsonantPick]:
    """Level-k consonant wavelength per primary, each walking its own ladder.

    Rungs with no visible candidate are skipped; the k-th usable rung wins.
    When a rung offers both directions, the synchronized-zero scan against
    the primary's own sine decides, ties going to the longer wavelength.
    """
    if level < 1:
        raise ValueError("level must be >= 1")
    rungs = default_ladder() if ladder is None else validate_ladder(ladder)
    scan = params if params is not None else CrossingParams()
    prims = primaries if primaries is not None else srgb_primary_wavelengths(table)
    return tuple(_pick_for_primary(p, level, rungs, scan) for p in prims)


def _spectral_column(table: CmfTable, lambda_nm: float) -> tuple[Triple, float, bool]:
    """Linear RGB of a spectral color, nudged inward if the tail is degenerate."""
    lam = lambda_nm
    step = 0.05 if lambda_nm > 580.0 else -0.05
    substituted = False
    while True:
        try:
            return wavelength_to_linear_rgb(lam, table), lam, substituted
        except DegenerateStimulusError:
            substituted = True
            lam -= step
            if not (VISIBLE_MIN_NM <= lam <= VISIBLE_MAX_NM):
                raise


def derived_matrix(
    table: CmfTable,
    level: int,
    ladder: tuple[Ratio, ...] | None = None,
    params: CrossingParams | None = None,
    primaries: tuple[float, float, float] | None = None,
) -> TransformMatrix:
    """Recompute the consonant transform for any level from the CMF table.

    Column i is the linear RGB of primary i's level-k consonant wavelength.
    """
    picks = derived_consonant_wavelengths(table, level, ladder, params, primaries)
    cols = []
    wavelengths = []
    fallback = []
    for pick in picks:
        col, lam, substituted = _spectral_column(table, pick.wavelength_nm)
        cols.append(col)
        wavelengths.append(lam)
        fallback.append(substituted)
    rows = tuple(
        (cols[0][i], cols[1][i], cols[2][i]) for i in range(3)
    )
    return TransformMatrix(
        rows=rows,
        mode="derived",
        level=level,
        source_wavelengths=tuple(wavelengths),
        source_ratios=tuple(p.ratio for p in picks),
        degenerate_fallback=tuple(fallback),
    )


def _matrix_for_ratio(
    table: CmfTable,
    ratio: Ratio,
    level: int,
    params: CrossingParams,
    primaries: tuple[float, float, float],
) -> TransformMatrix | None:
    """Transform whose three columns all come from one ratio; None if any
    primary has no visible candidate at that ratio."""
    cols = []
    wavelengths = []
    fallback = []
    for primary_nm in primaries:
        cands = sorted(consonant_wavelengths(primary_nm, ratio), reverse=True)
        if not cands:
            return None
        if len(cands) == 1:
            chosen = cands[0]
        else:
            base = Mixture.single(primary_nm)
            scores = [
                synchronized_zero_count(base, Mixture.single(c), params)[0]
                for c in cands
            ]
            chosen = cands[0] if scores[0] >= scores[1] else cands[1]
        col, lam, substituted = _spectral_column(table, chosen)
        cols.append(col)
        wavelengths.append(lam)
        fallback.append(substituted)
    rows = tuple((cols[0][i], cols[1][i], cols[2][i]) for i in range(3))
    return TransformMatrix(
        rows=rows,
        mode="derived",
        level=level,
        source_wavelengths=tuple(wavelengths),
        source_ratios=(ratio, ratio, ratio),
        degenerate_fallback=tuple(fallback),
    )


# --------------------------------------------------------------------------
# Color palettes
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ClampFlags:
    scaled: bool
    zeroed: bool


@dataclass(frozen=True)
class PaletteEntry:
    rgb: Triple  # encoded sRGB, components in [0, 1]
    hex: str
    level: int
    mode: str | None  # None for the base entry
    ratios: tuple[Ratio, ...]
    wavelengths_nm: tuple[float, ...]
    clamped: ClampFlags


@dataclass(frozen=True)
class SkippedRatio:
    ratio: Ratio
    reason: str


@dataclass(frozen=True)
class Palette:
    base: PaletteEntry
    entries: tuple[PaletteEntry, ...]
    space: str
    skipped: tuple[SkippedRatio, ...] = ()


def _validate_encoded(c: Triple) -> Triple:
    c = tuple(float(v) for v in c)
    for v in c:
        if not (0.0 <= v <= 1.0):
            raise ValueError(f"encoded component {v!r} outside [0, 1]")
    return c


def _base_entry(c: Triple) -> PaletteEntry:
    return PaletteEntry(
        rgb=c,
        hex=format_hex(c),
        level=0,
        mode=None,
        ratios=(),
        wavelengths_nm=(),
        clamped=ClampFlags(False, False),
    )


def _apply_matrix(matrix: TransformMatrix, c: Triple, space: str) -> PaletteEntry:
    if space == "linear":
        out, scaled, zeroed = clamp_paper_report(matrix.apply(srgb_decode(c)))
        encoded = srgb_encode(out)
    elif space == "encoded":
        encoded, scaled, zeroed = clamp_paper_report(matrix.apply(c))
    else:
        raise ValueError(f"unknown space {space!r}, expected linear or encoded")
    return PaletteEntry(
        rgb=encoded,
        hex=format_hex(encoded),
        level=matrix.level,
        mode=matrix.mode,
        ratios=matrix.source_ratios,
        wavelengths_nm=matrix.source_wavelengths,
        clamped=ClampFlags(scaled, zeroed),
    )


def consonant_color(
    c: Triple,
    level: int,
    mode: str = "derived",
    space: str = "linear",
    table: CmfTable | None = None,
    params: CrossingParams | None = None,
) -> PaletteEntry:
    """Consonant color of an encoded sRGB triple at the given level."""
    c = _validate_encoded(c)
    if mode == "paper":
        matrix = paper_matrix(level)
    elif mode == "derived":
        if table is None:
            raise ValueError("derived mode requires a CMF table")
        matrix = derived_matrix(table, level, params=params)
    else:
        raise ValueError(f"unknown mode {mode!r}, expected paper or derived")
    return _apply_matrix(matrix, c, space)


def palette_for_color(
    c: Triple,
    levels: int,
    mode: str = "derived",
    space: str = "linear",
    table: CmfTable | None = None,
    params: CrossingParams | None = None,
) -> Palette:
    """Base color plus one consonant entry per level 1..levels.

    Every level's matrix applies to the base color, not to the previous
    entry. Paper mode caps levels at 2.
    """
    if levels < 1:
        raise ValueError("levels must be >= 1")
    if mode == "paper" and levels > 2:
        raise UnsupportedPaperLevelError(
            f"paper mode publishes levels 1 and 2 only, got levels={levels}"
        )
    c = _validate_encoded(c)
    entries = tuple(
        consonant_color(c, level, mode=mode, space=space, table=table, params=params)
        for level in range(1, levels + 1)
    )
    return Palette(base=_base_entry(c), entries=entries, space=space)


def custom_ratio_palette(
    c: Triple,
    ratios: list[Ratio],
    space: str = "linear",
    table: CmfTable | None = None,
    params: CrossingParams | None = None,
) -> Palette:
    """One derived entry per user ratio (a palette "tune").

    A ratio with no visible candidate for some primary is flagged and
    skipped rather than failing the whole palette.
    """
    if not ratios:
        raise ValueError("ratio list must not be empty")
    if table is None:
        raise ValueError("custom ratio palettes require a CMF table")
    c = _validate_encoded(c)
    scan = params if params is not None else CrossingParams()
    primaries = srgb_primary_wavelengths(table)
    entries = []
    skipped = []
    for position, ratio in enumerate(ratios, start=1):
        matrix = _matrix_for_ratio(table, ratio, position, scan, primaries)
        if matrix is None:
            missing = [
                f"{p:g}" for p in primaries if not consonant_wavelengths(p, ratio)
            ]
            skipped.append(
                SkippedRatio(
                    ratio=ratio,
                    reason=f"no visible candidate for primary {', '.join(missing)} nm",
                )
            )
            continue
        entries.append(_apply_matrix(matrix, c, space))
    return Palette(
        base=_base_entry(c), entries=tuple(entries), space=space,
        skipped=tuple(skipped),
    )


# --------------------------------------------------------------------------
# Divergence report
# --------------------------------------------------------------------------

def divergence_report(
    table: CmfTable, params: CrossingParams | None = None
) -> dict:
    """Element-wise comparison of the recomputed level-1 transform against
    the published constants, plus the back-substitution check showing why
    the published numbers cannot come from the published sRGB->XYZ matrix
    (mapping its blue column back to XYZ yields a negative Y, impossible
    for a physical spectral stimulus)."""
    derived = derived_matrix(table, 1, params=params)
    paper = paper_matrix(1)
    delta = tuple(
        tuple(derived.rows[i][j] - paper.rows[i][j] for j in range(3))
        for i in range(3)
    )
    max_abs = max(abs(v) for row in delta for v in row)
    blue_col = tuple(paper.rows[i][2] for i in range(3))
    xyz = linear_to_xyz(blue_col)
    return {
        "level": 1,
        "paper_matrix": [list(r) for r in paper.rows],
        "derived_matrix": [list(r) for r in derived.rows],
        "elementwise_delta": [list(r) for r in delta],
        "max_abs_delta": max_abs,
        "paper_wavelengths_nm": list(paper.source_wavelengths),
        "derived_wavelengths_nm": list(derived.source_wavelengths),
        "back_substitution": {
            "rgb_column": list(blue_col),
            "xyz": list(xyz),
            "y_is_negative": xyz[1] < 0,
        },
    }


def format_divergence_report(report: dict) -> str:
    lines = [
        "derived vs published level-1 transform",
        "",
        f"published source wavelengths (nm): "
        f"{', '.join(f'{v:g}' for v in report['paper_wavelengths_nm'])}",
        f"derived source wavelengths (nm):   "
        f"{', '.join(f'{v:g}' for v in report['derived_wavelengths_nm'])}",
        "",
        f"{'':>4} {'published':>12} {'derived':>12} {'delta':>12}",
    ]
    names = ("r", "g", "b")
    for i in range(3):
        for j in range(3):
            lines.append(
                f"{names[i]}<-{names[j]} "
                f"{report['paper_matrix'][i][j]:>12.6f} "
                f"{report['derived_matrix'][i][j]:>12.6f} "
                f"{report['elementwise_delta'][i][j]:>12.6f}"
            )
    lines.append("")
    lines.append(f"max |delta|: {report['max_abs_delta']:.6f}")
    bs = report["back_substitution"]
    lines.append(
        "back-substitution of the published blue column "
        f"({', '.join(f'{v:g}' for v in bs['rgb_column'])}) through the "
        "published sRGB->XYZ matrix gives XYZ = "
        f"({', '.join(f'{v:.6f}' for v in bs['xyz'])})"
    )
    lines.append(
        "Y < 0: the published constants are not reproducible from the "
        "published matrix; the printed numbers are kept verbatim in paper "
        "mode and this table documents the derived-mode difference."
        if bs["y_is_negative"]
        else "Y >= 0"
    )
    return "\n".join(lines) + "\n"
