"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import io
import json
import math
import random
import subprocess
import sys
import time
from contextlib import redirect_stdout
from urllib.parse import quote

import pytest
from fastapi.testclient import TestClient

from wavepalette.cli import main as cli_main
from wavepalette.cmf_data import load_default_cmf, spectral_locus
from wavepalette.colorspace import (
    Chromaticity,
    clamp_paper,
    clamp_paper_report,
    linear_to_xyz,
    dominant_wavelength,
    white_point_d65,
)
from wavepalette.palette import (
    derived_consonant_wavelengths,
    divergence_report,
    paper_matrix,
    spectral_palette,
)
from wavepalette.service import create_app
from wavepalette.wavemodel import (
    PAPER_MIXTURES,
    CrossingParams,
    Mixture,
    synchronized_zero_count,
)


@pytest.fixture(scope="module")
def table():
    return load_default_cmf()


def _ok(line: str) -> None:
    print(f"PASS {line}")


def test_criterion_1_srgb_xyz_matrix_columns():
    published = {
        (1.0, 0.0, 0.0): (0.412456, 0.212673, 0.019334),
        (0.0, 1.0, 0.0): (0.357576, 0.715152, 0.119192),
        (0.0, 0.0, 1.0): (0.180437, 0.072175, 0.950304),
    }
    for basis, expected in published.items():
        got = linear_to_xyz(basis)
        for g, e in zip(got, expected):
            assert abs(g - e) <= 1e-6
    _ok("sRGB->XYZ basis vectors reproduce the published columns to 1e-6")


def test_criterion_2_primary_wavelengths(table):
    start = time.perf_counter()
    locus = spectral_locus(table)
    white = white_point_d65()
    results = []
    for xy, expected in (((0.64, 0.33), 611.4), ((0.30, 0.60), 549.1),
                         ((0.15, 0.06), 464.2)):
        c = Chromaticity(xy[0], xy[1], 1.0 - xy[0] - xy[1])
        got = dominant_wavelength(c, white, locus)
        assert abs(got - expected) <= 1.5, f"{got} vs {expected}"
        results.append(got)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _ok(
        "primary dominant wavelengths "
        f"{', '.join(f'{v:.2f}' for v in results)} nm within +/-1.5 of "
        f"611.4/549.1/464.2 ({elapsed * 1000:.0f} ms)"
    )


def test_criterion_3_consonant_wavelength_arithmetic(table):
    primaries = (611.4, 549.1, 464.2)
    red1, green1, blue1 = derived_consonant_wavelengths(table, 1, primaries=primaries)
    red2, green2, blue2 = derived_consonant_wavelengths(table, 2, primaries=primaries)
    checks = {
        407.6: red1.wavelength_nm,
        696.3: blue1.wavelength_nm,
        411.825: min(green1.candidates),
        732.133: max(green1.candidates),
        458.55: red2.wavelength_nm,
        618.933: blue2.wavelength_nm,
    }
    for expected, got in checks.items():
        assert abs(got - expected) <= 0.1, f"{got} vs {expected}"
    _ok("all six published consonant wavelengths reproduced within +/-0.1 nm")


def test_criterion_4_paper_matrices_digit_for_digit():
    m1_expected = (
        (0.412554, 0.075942, 1.361850),
        (-0.387623, -0.025863, -0.496422),
        (0.942622, -0.008750, -0.140190),
    )
    m2_expected = (
        (0.153969, 0.075942, 1.291906),
        (-0.265282, -0.025863, -0.32766),
        (0.941624, -0.008750, -0.186152),
    )
    assert paper_matrix(1).rows == m1_expected
    assert paper_matrix(2).rows == m2_expected
    _ok("published M1 and M2 constants embedded digit for digit")


def test_criterion_5_clamp_rule():
    got, scaled, zeroed = clamp_paper_report((1.361850, -0.496422, -0.140190))
    assert got == (1.0, 0.0, 0.0)
    assert scaled and zeroed
    rng = random.Random(1905)
    for _ in range(1000):
        v = tuple(rng.uniform(-3, 3) for _ in range(3))
        once = clamp_paper(v)
        assert clamp_paper(once) == once
        assert all(0.0 <= c <= 1.0 for c in once)
    _ok("scale-then-zero clamp maps the published vector to (1,0,0); "
        "idempotent on 1000 random triples")


def test_criterion_6_spectral_palette_450():
    sp = spectral_palette(450.0, 3)
    assert sp.wavelengths == [450.0, 675.0, 600.0]
    _ok("spectral palette for 450 nm is [450, 675, 600]")


def test_criterion_7_consonance_density_law():
    start = time.perf_counter()
    u = 100.0

    def scan_density(p, q, cycles=120):
        event_spacing = p * q * u / 2
        params = CrossingParams(
            domain_end=cycles * event_spacing, step=u / 1000, epsilon=0.01
        )
        _, density = synchronized_zero_count(
            Mixture.single(p * u), Mixture.single(q * u), params
        )
        return density

    for p, q in ((2, 1), (3, 2), (4, 3), (5, 4), (5, 3)):
        density = scan_density(p, q)
        target = 2 / (p * q * u)
        assert abs(density - target) / target <= 0.02, f"{p}/{q}"

    ratios = [
        (p, q)
        for q in range(1, 7)
        for p in range(q, 41)
        if p * q <= 40 and math.gcd(p, q) == 1
    ]
    densities = {r: scan_density(*r) for r in ratios}
    for a in ratios:
        for b in ratios:
            if 1 / (a[0] * a[1]) > 1 / (b[0] * b[1]):
                assert densities[a] > densities[b], f"{a} !> {b}"
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _ok(
        f"scan density matches 2/(p*q*u) within 2% and orders all "
        f"{len(ratios)} ratios with p*q<=40 like 1/(p*q) ({elapsed:.1f} s)"
    )


def test_criterion_8_equation_scan():
    params = CrossingParams()  # published domain 0..10,000 nm
    first = {k: synchronized_zero_count(PAPER_MIXTURES[1], PAPER_MIXTURES[k], params)
             for k in (2, 3, 4)}
    second = {k: synchronized_zero_count(PAPER_MIXTURES[1], PAPER_MIXTURES[k], params)
              for k in (2, 3, 4)}
    assert first == second  # deterministic
    report = []
    for k in (2, 3, 4):
        count, density = first[k]
        assert count > 0 and density > 0
        report.append(f"(1)-({k}): count={count}")
    _ok("mixture pairings deterministic and positive under defaults: "
        + ", ".join(report)
        + " (the published preference for (3) is reported, not asserted)")


def test_criterion_9_divergence_report(table):
    report = divergence_report(table)
    delta = report["elementwise_delta"]
    assert len(delta) == 3 and all(len(row) == 3 for row in delta)
    assert all(math.isfinite(v) for row in delta for v in row)
    bs = report["back_substitution"]
    assert bs["rgb_column"] == [1.361850, -0.496422, -0.140190]
    assert bs["xyz"][1] < 0 and bs["y_is_negative"] is True
    assert report["max_abs_delta"] > 0  # exact reproduction is impossible
    _ok(
        "derived-vs-published divergence table emitted "
        f"(max |delta| {report['max_abs_delta']:.3f}); back-substituted "
        f"blue column has Y = {bs['xyz'][1]:.4f} < 0"
    )


def _random_request(rng):
    color = "#" + "".join(rng.choice("0123456789abcdef") for _ in range(6))
    mode = rng.choice(("paper", "derived"))
    space = rng.choice(("linear", "encoded"))
    use_ratios = mode == "derived" and rng.random() < 0.3
    if use_ratios:
        pool = ("2:1", "3:2", "4:3", "5:3", "5:4", "6:5")
        ratios = ",".join(rng.sample(pool, rng.randint(1, 3)))
        args = ["--color", color, "--mode", mode, "--space", space,
                "--ratios", ratios]
        query = f"color={quote(color)}&mode={mode}&space={space}&ratios={quote(ratios)}"
    else:
        levels = rng.randint(1, 2) if mode == "paper" else rng.randint(1, 4)
        args = ["--color", color, "--mode", mode, "--space", space,
                "--levels", str(levels)]
        query = f"color={quote(color)}&mode={mode}&space={space}&levels={levels}"
    return args, query


def test_criterion_10_cross_interface_consistency():
    rng = random.Random(2024)
    with TestClient(create_app()) as client:
        for i in range(20):
            args, query = _random_request(rng)
            buf = io.StringIO()
            with redirect_stdout(buf):
                code = cli_main(["palette", "--format", "json", *args])
            assert code == 0, f"case {i}: {args}"
            srv = client.get(f"/api/v1/palette?{query}")
            assert srv.status_code == 200, f"case {i}: {query}"
            assert buf.getvalue().encode() == srv.content, f"case {i}: {query}"
        # two of them through a real process boundary as well
        rng2 = random.Random(7)
        for _ in range(2):
            args, query = _random_request(rng2)
            cli = subprocess.run(
                [sys.executable, "-m", "wavepalette.cli", "palette",
                 "--format", "json", *args],
                capture_output=True, check=True,
            )
            srv = client.get(f"/api/v1/palette?{query}")
            assert cli.stdout == srv.content
    _ok("CLI and service JSON byte-identical on 20 randomized requests")
