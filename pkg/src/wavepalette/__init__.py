"""Wave-method color palettes: consonant wavelength ratios over CIE 1931 data."""

__version__ = "0.1.0"

from .cmf_data import (
    Chromaticity,
    CmfParseError,
    CmfRow,
    CmfTable,
    CmfValidationError,
    DegenerateStimulusError,
    SpectralLocus,
    chromaticity_at,
    cmf_at,
    load_cmf,
    load_default_cmf,
    spectral_locus,
)
from .colorspace import (
    NoDominantWavelengthError,
    UndefinedDirectionError,
    clamp_paper,
    dominant_wavelength,
    format_hex,
    linear_to_xyz,
    parse_hex,
    srgb_decode,
    srgb_encode,
    wavelength_to_linear_rgb,
    white_point_d65,
    xyz_to_linear,
)
from .wavemodel import (
    CrossingParams,
    Mixture,
    Ratio,
    consonant_wavelengths,
    mixture_consonance,
    mixture_eval,
    ratio_consonance_score,
    ratio_normalize,
    synchronized_zero_count,
)
from .palette import (
    LadderExhaustedError,
    Palette,
    PaletteEntry,
    TransformMatrix,
    UnsupportedPaperLevelError,
    consonant_color,
    custom_ratio_palette,
    default_ladder,
    derived_consonant_wavelengths,
    derived_matrix,
    divergence_report,
    palette_for_color,
    paper_matrix,
    spectral_palette,
)
