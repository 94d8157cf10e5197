// Wire types for the palette service. The UI never derives color values
// itself; these are rendered verbatim.

export interface ClampFlags {
  scaled: boolean;
  zeroed: boolean;
}

export interface PaletteEntryDto {
  hex: string;
  rgb: number[];
  level: number;
  ratios: string[];
  wavelengths_nm: number[];
  clamped: ClampFlags;
}

export interface SkippedRatioDto {
  ratio: string;
  reason: string;
}

export interface PaletteResponseDto {
  engine_version: string;
  cmf_dataset: string;
  mode: string;
  space: string;
  base: PaletteEntryDto;
  entries: PaletteEntryDto[];
  skipped: SkippedRatioDto[];
}

export interface ConsonanceResponseDto {
  engine_version: string;
  count: number;
  density_per_nm: number;
  params: { domain_end_nm: number; step_nm: number; epsilon: number };
}
