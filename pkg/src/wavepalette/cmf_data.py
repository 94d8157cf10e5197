"""CIE 1931 2-degree standard observer color matching functions.

Loads the bundled 5 nm table (380-780 nm), interpolates it linearly, and
derives per-wavelength chromaticity and the spectral locus. The table is the
bridge from "a wavelength of light" to CIE XYZ tristimulus space.
"""

from __future__ import annotations

import hashlib
import io
import os
from dataclasses import dataclass
from importlib import resources

VISIBLE_MIN_NM = 380.0
VISIBLE_MAX_NM = 780.0

# Chromaticity is undefined where the observer response has effectively died
# out; normalizing sums below this is numeric noise, not color.
DEGENERACY_THRESHOLD = 1e-6

MAX_COVERAGE_STEP_NM = 5.0

CMF_ENV_VAR = "WAVEPALETTE_CMF"

_BUNDLED_NAME = "cie1931_2deg_5nm.csv"
_HEADER = "lambda_nm,xbar,ybar,zbar"


class CmfParseError(ValueError):
    """Malformed CMF CSV input. Carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class CmfValidationError(ValueError):
    """Structurally valid CSV whose content violates table invariants."""


class DegenerateStimulusError(ValueError):
    """Chromaticity requested where xbar+ybar+zbar is below threshold."""


def is_visible(lambda_nm: float) -> bool:
    return VISIBLE_MIN_NM <= lambda_nm <= VISIBLE_MAX_NM


@dataclass(frozen=True)
class CmfRow:
    lambda_nm: float
    xbar: float
    ybar: float
    zbar: float


@dataclass(frozen=True)
class Chromaticity:
    """Unit-sum (x, y, z) position in the CIE chromaticity diagram."""

    x: float
    y: float
    z: float

    def xy(self) -> tuple[float, float]:
        return (self.x, self.y)


class CmfTable:
    """Immutable, validated CMF table sorted by wavelength.

    All lookups are pure; instances are safe to share across threads.
    """

    def __init__(self, rows: list[CmfRow], dataset_id: str = "custom"):
        if not rows:
            raise CmfValidationError("table has no rows")
        for prev, cur in zip(rows, rows[1:]):
            if cur.lambda_nm <= prev.lambda_nm:
                raise CmfValidationError(
                    f"wavelengths not strictly increasing at {cur.lambda_nm} nm"
                )
        if rows[0].lambda_nm > VISIBLE_MIN_NM or rows[-1].lambda_nm < VISIBLE_MAX_NM:
            raise CmfValidationError(
                f"table covers [{rows[0].lambda_nm}, {rows[-1].lambda_nm}] nm, "
                f"needs [{VISIBLE_MIN_NM}, {VISIBLE_MAX_NM}]"
            )
        for prev, cur in zip(rows, rows[1:]):
            gap = cur.lambda_nm - prev.lambda_nm
            if gap > MAX_COVERAGE_STEP_NM + 1e-9:
                raise CmfValidationError(
                    f"coverage gap of {gap:g} nm between {prev.lambda_nm:g} "
                    f"and {cur.lambda_nm:g} nm (max {MAX_COVERAGE_STEP_NM:g})"
                )
        self._rows = tuple(rows)
        self.dataset_id = dataset_id

    @property
    def rows(self) -> tuple[CmfRow, ...]:
        return self._rows

    @property
    def lambda_min(self) -> float:
        return self._rows[0].lambda_nm

    @property
    def lambda_max(self) -> float:
        return self._rows[-1].lambda_nm

    def __len__(self) -> int:
        return len(self._rows)


def _parse_float(line_number: int, field: str, value: str) -> float:
    try:
        out = float(value)
    except ValueError:
        raise CmfParseError(line_number, f"bad {field} value {value!r}") from None
    if out != out or out in (float("inf"), float("-inf")):
        raise CmfParseError(line_number, f"non-finite {field} value {value!r}")
    return out


def load_cmf(source, dataset_id: str = "custom") -> CmfTable:
    """Parse a CMF CSV byte stream (header: lambda_nm,xbar,ybar,zbar).

    Raises CmfParseError for malformed rows (with line number) and
    CmfValidationError for ordering/coverage violations.
    """
    if isinstance(source, bytes):
        source = io.BytesIO(source)
    text = io.TextIOWrapper(source, encoding="utf-8", newline="")
    rows: list[CmfRow] = []
    header_seen = False
    for line_number, raw in enumerate(text, start=1):
        line = raw.strip()
        if not line:
            continue
        if not header_seen:
            if line != _HEADER:
                raise CmfParseError(line_number, f"expected header {_HEADER!r}")
            header_seen = True
            continue
        parts = line.split(",")
        if len(parts) != 4:
            raise CmfParseError(line_number, f"expected 4 fields, got {len(parts)}")
        lam = _parse_float(line_number, "lambda_nm", parts[0])
        xbar = _parse_float(line_number, "xbar", parts[1])
        ybar = _parse_float(line_number, "ybar", parts[2])
        zbar = _parse_float(line_number, "zbar", parts[3])
        if lam <= 0:
            raise CmfParseError(line_number, f"wavelength must be positive, got {lam}")
        if xbar < 0 or ybar < 0 or zbar < 0:
            raise CmfParseError(line_number, "negative tristimulus weight")
        rows.append(CmfRow(lam, xbar, ybar, zbar))
    if not header_seen:
        raise CmfParseError(1, "empty input, no header")
    return CmfTable(rows, dataset_id=dataset_id)


def serialize_cmf(table: CmfTable) -> bytes:
    """Emit the canonical CSV form (6-decimal weights, LF endings).

    Re-serializing the bundled asset reproduces it bit-exactly.
    """
    lines = [_HEADER]
    for row in table.rows:
        lam = row.lambda_nm
        lam_text = f"{int(lam)}" if lam == int(lam) else f"{lam:g}"
        lines.append(f"{lam_text},{row.xbar:.6f},{row.ybar:.6f},{row.zbar:.6f}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def bundled_cmf_path() -> str:
    """Path of the CMF asset in use: env override or the packaged file."""
    override = os.environ.get(CMF_ENV_VAR)
    if override:
        return override
    return str(resources.files("wavepalette").joinpath("data", _BUNDLED_NAME))


def load_default_cmf() -> CmfTable:
    """Load the CMF asset (honoring the WAVEPALETTE_CMF override)."""
    path = bundled_cmf_path()
    with open(path, "rb") as fh:
        payload = fh.read()
    digest = hashlib.sha256(payload).hexdigest()[:12]
    return load_cmf(payload, dataset_id=f"cie1931-2deg-5nm-{digest}")


def cmf_at(table: CmfTable, lambda_nm: float) -> tuple[float, float, float]:
    """Linearly interpolated (xbar, ybar, zbar) at lambda_nm.

    Exact at grid nodes. Raises ValueError outside the table range.
    """
    rows = table.rows
    if not (rows[0].lambda_nm <= lambda_nm <= rows[-1].lambda_nm):
        raise ValueError(
            f"{lambda_nm} nm outside table range "
            f"[{rows[0].lambda_nm:g}, {rows[-1].lambda_nm:g}]"
        )
    lo, hi = 0, len(rows) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if rows[mid].lambda_nm <= lambda_nm:
            lo = mid
        else:
            hi = mid
    a, b = rows[lo], rows[hi]
    if lambda_nm == a.lambda_nm:
        return (a.xbar, a.ybar, a.zbar)
    if lambda_nm == b.lambda_nm:
        return (b.xbar, b.ybar, b.zbar)
    t = (lambda_nm - a.lambda_nm) / (b.lambda_nm - a.lambda_nm)
    return (
        a.xbar + t * (b.xbar - a.xbar),
        a.ybar + t * (b.ybar - a.ybar),
        a.zbar + t * (b.zbar - a.zbar),
    )


def chromaticity_at(table: CmfTable, lambda_nm: float) -> Chromaticity:
    """Unit-sum chromaticity of the spectral color at lambda_nm.

    Raises DegenerateStimulusError in the deep spectral tail where the
    CMF sum falls below DEGENERACY_THRESHOLD.
    """
    if not is_visible(lambda_nm):
        raise ValueError(f"{lambda_nm} nm outside the visible range")
    xbar, ybar, zbar = cmf_at(table, lambda_nm)
    total = xbar + ybar + zbar
    if total < DEGENERACY_THRESHOLD:
        raise DegenerateStimulusError(
            f"CMF sum {total:g} at {lambda_nm:g} nm below {DEGENERACY_THRESHOLD:g}"
        )
    return Chromaticity(xbar / total, ybar / total, zbar / total)


@dataclass(frozen=True)
class SpectralLocus:
    """Chromaticity of every usable grid wavelength, ordered by wavelength."""

    points: tuple[tuple[float, float, float], ...]  # (lambda_nm, x, y)
    skipped: int


def spectral_locus(table: CmfTable) -> SpectralLocus:
    """One (lambda, x, y) point per visible grid wavelength.

    Degenerate tail rows are skipped and counted, never an error.
    """
    points = []
    skipped = 0
    for row in table.rows:
        if not is_visible(row.lambda_nm):
            continue
        try:
            c = chromaticity_at(table, row.lambda_nm)
        except DegenerateStimulusError:
            skipped += 1
            continue
        points.append((row.lambda_nm, c.x, c.y))
    return SpectralLocus(points=tuple(points), skipped=skipped)
