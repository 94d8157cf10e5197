"""Canonical JSON payloads shared by the CLI and the HTTP service.

Both front ends must emit byte-identical output for equivalent requests, so
every palette/consonance response is built here and rendered through one
dumps configuration.
"""

from __future__ import annotations

import json

from . import __version__
from .palette import Palette, PaletteEntry, SpectralPalette
from .wavemodel import CrossingParams, Mixture


def entry_dict(e: PaletteEntry) -> dict:
    return {
        "hex": e.hex,
        "rgb": list(e.rgb),
        "level": e.level,
        "ratios": [str(r) for r in e.ratios],
        "wavelengths_nm": list(e.wavelengths_nm),
        "clamped": {"scaled": e.clamped.scaled, "zeroed": e.clamped.zeroed},
    }


def palette_payload(palette: Palette, mode: str, cmf_dataset: str) -> dict:
    return {
        "engine_version": __version__,
        "cmf_dataset": cmf_dataset,
        "mode": mode,
        "space": palette.space,
        "base": entry_dict(palette.base),
        "entries": [entry_dict(e) for e in palette.entries],
        "skipped": [
            {"ratio": str(s.ratio), "reason": s.reason} for s in palette.skipped
        ],
    }


def spectral_payload(
    sp: SpectralPalette, entries: list[dict], cmf_dataset: str
) -> dict:
    """entries: rendered swatches aligned with [base] + picks."""
    return {
        "engine_version": __version__,
        "cmf_dataset": cmf_dataset,
        "base_nm": sp.base_nm,
        "wavelengths_nm": sp.wavelengths,
        "entries": entries,
        "exhausted": sp.exhausted,
    }


def consonance_payload(
    a: Mixture, b: Mixture, count: int, density: float, params: CrossingParams
) -> dict:
    return {
        "engine_version": __version__,
        "a": [{"amplitude": amp, "wavelength_nm": lam} for amp, lam in a.terms],
        "b": [{"amplitude": amp, "wavelength_nm": lam} for amp, lam in b.terms],
        "count": count,
        "density_per_nm": density,
        "params": {
            "domain_end_nm": params.domain_end,
            "step_nm": params.step,
            "epsilon": params.epsilon,
        },
    }


def to_json(payload: dict) -> str:
    """Canonical rendering: 2-space indent, stable key order, trailing LF."""
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"
