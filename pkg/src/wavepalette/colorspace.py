"""sRGB <-> CIE XYZ conversions, gamut clamping, dominant wavelength.

The linear-RGB -> XYZ matrix is pinned to the published transition constants;
everything else (inverse matrix, white point, primary wavelengths) is derived
from it so the pipeline stays self-consistent.
"""

from __future__ import annotations

import math

import numpy as np

from .cmf_data import Chromaticity, CmfTable, SpectralLocus, chromaticity_at

Triple = tuple[float, float, float]

# Columns are the XYZ coordinates of the sRGB red, green and blue primaries.
RGB_TO_XYZ = (
    (0.412456, 0.357576, 0.180437),
    (0.212673, 0.715152, 0.072175),
    (0.019334, 0.119192, 0.950304),
)

_XYZ_TO_RGB_NP = np.linalg.inv(np.array(RGB_TO_XYZ, dtype=float))
XYZ_TO_RGB = tuple(tuple(float(v) for v in row) for row in _XYZ_TO_RGB_NP)


class NoDominantWavelengthError(ValueError):
    """The ray from white exits through the purple line, not the locus."""


class UndefinedDirectionError(ValueError):
    """Chromaticity coincides with the white point; no hue direction."""


def _require_unit_range(c: Triple, what: str) -> None:
    for v in c:
        if not (0.0 <= v <= 1.0):
            raise ValueError(f"{what} component {v!r} outside [0, 1]")


def srgb_decode(c: Triple) -> Triple:
    """Gamma-expand an encoded sRGB triple to linear light."""
    _require_unit_range(c, "encoded sRGB")
    return tuple(
        v / 12.92 if v <= 0.04045 else ((v + 0.055) / 1.055) ** 2.4 for v in c
    )


_ENCODE_KNEE = 0.04045 / 12.92


def srgb_encode(c: Triple) -> Triple:
    """Gamma-compress a linear triple; exact inverse of srgb_decode on [0, 1]."""
    _require_unit_range(c, "linear RGB")
    return tuple(
        v * 12.92 if v <= _ENCODE_KNEE else 1.055 * v ** (1.0 / 2.4) - 0.055
        for v in c
    )


def _mat_mul(m, v: Triple) -> Triple:
    return (
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    )


def linear_to_xyz(c: Triple) -> Triple:
    """Linear RGB -> XYZ. Out-of-gamut input is allowed and passes through."""
    return _mat_mul(RGB_TO_XYZ, c)


def xyz_to_linear(t: Triple) -> Triple:
    """XYZ -> linear RGB via the exact matrix inverse."""
    return _mat_mul(XYZ_TO_RGB, t)


def clamp_paper(c: Triple) -> Triple:
    """Scale-then-zero gamut clamp.

    If any component exceeds one, all are scaled so the maximum becomes one;
    any remaining negative component is set to zero. Order matters: the
    reverse order yields different colors.
    """
    return clamp_paper_report(c)[0]


def clamp_paper_report(c: Triple) -> tuple[Triple, bool, bool]:
    """clamp_paper plus (scaled, zeroed) event flags for provenance."""
    for v in c:
        if not math.isfinite(v):
            raise ValueError(f"non-finite component {v!r}")
    scaled = False
    m = max(c)
    if m > 1.0:
        c = tuple(v / m for v in c)
        scaled = True
    zeroed = any(v < 0.0 for v in c)
    if zeroed:
        c = tuple(0.0 if v < 0.0 else v for v in c)
    return c, scaled, zeroed


def white_point_d65() -> Chromaticity:
    """Reference white chromaticity, derived from the matrix itself.

    linear (1,1,1) maps to the D65 tristimulus by construction, so the
    white point needs no independent constant.
    """
    x, y, z = linear_to_xyz((1.0, 1.0, 1.0))
    total = x + y + z
    return Chromaticity(x / total, y / total, z / total)


def primary_chromaticities() -> tuple[Chromaticity, Chromaticity, Chromaticity]:
    """Chromaticities of the red, green, blue primaries (matrix columns)."""
    out = []
    for basis in ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)):
        x, y, z = linear_to_xyz(basis)
        total = x + y + z
        out.append(Chromaticity(x / total, y / total, z / total))
    return tuple(out)


def _cross(ax: float, ay: float, bx: float, by: float) -> float:
    return ax * by - ay * bx


def dominant_wavelength(
    c: Chromaticity, white: Chromaticity, locus: SpectralLocus
) -> float:
    """Wavelength where the ray white->c meets the spectral locus polyline.

    Interpolates linearly along the intersected segment. Raises
    UndefinedDirectionError when c sits on the white point and
    NoDominantWavelengthError when the ray leaves through the purple line.
    """
    wx, wy = white.x, white.y
    dx, dy = c.x - wx, c.y - wy
    if math.hypot(dx, dy) < 1e-12:
        raise UndefinedDirectionError("chromaticity equals the white point")

    best = None  # (t, lambda)
    pts = locus.points
    for i in range(len(pts) - 1):
        l0, x0, y0 = pts[i]
        l1, x1, y1 = pts[i + 1]
        ex, ey = x1 - x0, y1 - y0
        denom = _cross(dx, dy, ex, ey)
        if abs(denom) < 1e-15:
            continue
        rx, ry = x0 - wx, y0 - wy
        t = _cross(rx, ry, ex, ey) / denom
        s = _cross(rx, ry, dx, dy) / denom
        if t <= 1e-9 or s < -1e-9 or s > 1.0 + 1e-9:
            continue
        s = min(max(s, 0.0), 1.0)
        lam = l0 + s * (l1 - l0)
        if best is None or t < best[0]:
            best = (t, lam)
    if best is None:
        raise NoDominantWavelengthError(
            "ray exits through the purple line; no spectral intersection"
        )
    return best[1]


def wavelength_to_linear_rgb(lambda_nm: float, table: CmfTable) -> Triple:
    """Linear RGB of the spectral color at lambda_nm.

    The unit-sum chromaticity is used directly as tristimulus, so spectral
    colors come back out of gamut (negative or >1 components) by design.
    """
    c = chromaticity_at(table, lambda_nm)
    return xyz_to_linear((c.x, c.y, c.z))


def parse_hex(text: str) -> Triple:
    """#rrggbb (case-insensitive, '#' optional) -> encoded triple in [0,1]."""
    s = text.strip()
    if s.startswith("#"):
        s = s[1:]
    if len(s) != 6 or any(ch not in "0123456789abcdefABCDEF" for ch in s):
        raise ValueError(f"invalid hex color {text!r}")
    return tuple(int(s[i : i + 2], 16) / 255.0 for i in (0, 2, 4))


def quantize_8bit(v: float) -> int:
    """Round half away from zero onto 0..255 (palette hexes are golden-tested)."""
    return min(255, max(0, int(math.floor(v * 255.0 + 0.5))))


def format_hex(c: Triple) -> str:
    _require_unit_range(c, "encoded sRGB")
    return "#" + "".join(f"{quantize_8bit(v):02x}" for v in c)
