"""Consonance machinery: interval ratios, sinusoid mixtures, zero crossings.

Two waves are consonant to the degree that they rest together: the score of
a pair is the density of positions where both are (near) zero at once. For
pure sines at wavelength ratio p/q in lowest terms on base unit u, those
synchronized zeros sit at multiples of p*q*u/2, so the density closed form
is 2/(p*q*u) and the ratio-only score 1/(p*q) preserves its ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, order=True)
class Ratio:
    """Positive rational in lowest terms, canonically p >= q.

    A ratio and its reciprocal name the same interval.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError(f"ratio terms must be positive, got {self.p}/{self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} not in lowest terms")
        if self.p < self.q:
            raise ValueError(f"{self.p}/{self.q} not canonical (need p >= q)")

    @staticmethod
    def parse(text: str) -> "Ratio":
        """Parse 'p:q' or 'p/q'."""
        sep = ":" if ":" in text else "/"
        parts = text.strip().split(sep)
        if len(parts) != 2:
            raise ValueError(f"invalid ratio {text!r}, expected p{sep}q")
        try:
            p, q = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"invalid ratio {text!r}, terms must be integers") from None
        return ratio_normalize(p, q)

    def __str__(self) -> str:
        return f"{self.p}:{self.q}"

    @property
    def value(self) -> float:
        return self.p / self.q


def ratio_normalize(p: int, q: int) -> Ratio:
    """Reduce by gcd and orient so p >= q."""
    if p < 1 or q < 1:
        raise ValueError(f"ratio terms must be positive integers, got {p}/{q}")
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if p < q:
        p, q = q, p
    return Ratio(p, q)


def ratio_consonance_score(r: Ratio) -> float:
    """1/(p*q): simpler ratios score higher, unison scores 1."""
    return 1.0 / (r.p * r.q)


@dataclass(frozen=True)
class Mixture:
    """Sum of sinusoids: terms are (amplitude, wavelength_nm) pairs."""

    terms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("mixture needs at least one term")
        for amp, lam in self.terms:
            if amp < 0 or not math.isfinite(amp):
                raise ValueError(f"amplitude {amp!r} must be finite and >= 0")
            if lam <= 0 or not math.isfinite(lam):
                raise ValueError(f"wavelength {lam!r} must be finite and > 0")
        if not any(amp > 0 for amp, _ in self.terms):
            raise ValueError("mixture needs at least one positive amplitude")

    @staticmethod
    def of(*terms: tuple[float, float]) -> "Mixture":
        return Mixture(tuple(terms))

    @staticmethod
    def single(lambda_nm: float) -> "Mixture":
        return Mixture(((1.0, lambda_nm),))

    @staticmethod
    def parse(text: str) -> "Mixture":
        """Parse 'a@lambda,a@lambda,...' (amplitudes and wavelengths in nm)."""
        terms = []
        for token in text.split(","):
            token = token.strip()
            if not token:
                continue
            if "@" not in token:
                raise ValueError(f"invalid mixture term {token!r}, expected a@lambda")
            amp_text, lam_text = token.split("@", 1)
            try:
                terms.append((float(amp_text), float(lam_text)))
            except ValueError:
                raise ValueError(f"invalid mixture term {token!r}") from None
        if not terms:
            raise ValueError(f"empty mixture spec {text!r}")
        return Mixture(tuple(terms))

    @property
    def total_amplitude(self) -> float:
        return sum(amp for amp, _ in self.terms)


# The published mixture equations, with wavelengths restated in nm (the
# printed divisors are nm/100; zero-crossing structure is scale-invariant).
PAPER_MIXTURES = {
    1: Mixture.of((1.0, 611.4), (1.0, 549.1), (1.0, 464.2)),
    2: Mixture.of((1.0, 407.6), (1.0, 411.8), (1.0, 696.3)),
    3: Mixture.of((1.0, 407.6), (1.0, 732.1), (1.0, 696.3)),
    4: Mixture.of((1.0, 407.6), (1.0, 549.1), (1.0, 696.3)),
}


def mixture_eval(m: Mixture, x_nm: float) -> float:
    """Sum of a_i * sin(2*pi*x/lambda_i) at a single position."""
    return sum(amp * math.sin(2.0 * math.pi * x_nm / lam) for amp, lam in m.terms)


def _eval_grid(m: Mixture, x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    for amp, lam in m.terms:
        out += amp * np.sin((2.0 * np.pi / lam) * x)
    return out


@dataclass(frozen=True)
class CrossingParams:
    """Scan configuration for synchronized zero counting.

    Defaults: 10,000 nm domain, 0.1 nm grid, 1% relative amplitude band.
    """

    domain_end: float = 10_000.0
    step: float = 0.1
    epsilon: float = 0.01

    def __post_init__(self):
        if self.domain_end <= 0:
            raise ValueError("domain_end must be > 0")
        if not (0 < self.step <= self.domain_end):
            raise ValueError("step must be in (0, domain_end]")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be > 0")


def synchronized_zero_count(
    f: Mixture, g: Mixture, params: CrossingParams = CrossingParams()
) -> tuple[int, float]:
    """Count positions in [0, domain_end) where both mixtures rest near zero.

    A grid cell qualifies when |f| <= epsilon*A_f and |g| <= epsilon*A_g
    (A = total amplitude of that mixture); consecutive qualifying cells merge
    into one event. The domain is half-open: a qualifying run touching both
    ends is one event, so a rest at an exact multiple of the domain length is
    never counted twice. Returns (count, count/domain_end).
    """
    n = max(1, int(round(params.domain_end / params.step)))
    x = np.arange(n, dtype=float) * params.step
    tol_f = params.epsilon * f.total_amplitude
    tol_g = params.epsilon * g.total_amplitude
    qual = (np.abs(_eval_grid(f, x)) <= tol_f) & (np.abs(_eval_grid(g, x)) <= tol_g)

    starts = int(qual[0]) + int(np.count_nonzero(qual[1:] & ~qual[:-1]))
    if starts >= 2 and qual[0] and qual[-1]:
        starts -= 1
    return starts, starts / params.domain_end


def mixture_consonance(
    f: Mixture, g: Mixture, params: CrossingParams = CrossingParams()
) -> float:
    """Synchronized-rest density of the pair; larger is more consonant."""
    _, density = synchronized_zero_count(f, g, params)
    return density


VISIBLE_MIN_NM = 380.0
VISIBLE_MAX_NM = 780.0


def consonant_wavelengths(lambda_nm: float, r: Ratio) -> set[float]:
    """Wavelengths at interval r from lambda_nm that stay visible.

    Both directions (times p/q and times q/p) are considered; the result may
    be empty when the interval leaves the visible range on both sides.
    """
    if not (VISIBLE_MIN_NM <= lambda_nm <= VISIBLE_MAX_NM):
        raise ValueError(f"{lambda_nm} nm outside the visible range")
    out = set()
    for candidate in (lambda_nm * r.p / r.q, lambda_nm * r.q / r.p):
        if VISIBLE_MIN_NM <= candidate <= VISIBLE_MAX_NM:
            out.add(candidate)
    return out
