import csv

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from planckjitter.colorimetry import (
    D65,
    IlluminantRgb,
    export_tables,
    illuminant_rgb,
    illuminant_rgb_array,
    illuminant_xyz,
    lab_to_xyz,
    load_cmf,
    normalize_y,
    planckian_locus,
    spectrum_to_xyz,
    srgb_decode,
    srgb_encode,
    srgb_to_xyz,
    xy_chromaticity,
    xyz_to_lab,
    xyz_to_srgb,
)
from planckjitter.errors import DegenerateStimulusError, GridMismatchError
from planckjitter.spectral import Spectrum, blackbody_spectrum, sweep_temperatures

import oracles

# pure-Python pipeline (tests/oracles.py), frozen
ILLUMINANT_3000K = (0.6742971647636444, 0.4029459161514384, 0.0012499301832686969)
ILLUMINANT_6500K = (0.4816121486837793, 0.4604267048742004, 0.47816625200394164)
ILLUMINANT_15000K = (0.3503403427223059, 0.46534503011529643, 0.6932760095959047)
XY_6500K = (0.31359883558178303, 0.3241497023590191)
L_OF_18_PERCENT_WHITE = 49.496107610119594

unit = st.floats(0, 1, allow_nan=False)


def test_cmf_asset_matches_transcribed_table():
    cmf = load_cmf()
    assert cmf.values.shape == (31, 3)
    assert np.allclose(cmf.wavelengths, blackbody_spectrum(5000).wavelengths, rtol=0, atol=1e-18)
    assert np.array_equal(cmf.values, np.array(list(oracles.CIE1931_10NM.values())))
    assert np.all(cmf.values >= 0)


def test_white_point_constants():
    assert (D65.Xn, D65.Yn, D65.Zn) == (0.95047, 1.0, 1.08883)


def test_export_tables(tmp_path):
    paths = export_tables(tmp_path)
    assert {p.name for p in paths} == {"cie1931_2deg_400_700_10nm.csv", "whitepoint_d65.csv"}
    rows = [r for r in csv.reader(l for l in paths[0].read_text().splitlines() if not l.startswith("#"))]
    assert rows[0] == ["wavelength_nm", "x_bar", "y_bar", "z_bar"] and len(rows) == 32


def test_spectrum_to_xyz_linear():
    s = blackbody_spectrum(5000).power
    assert np.array_equal(spectrum_to_xyz(np.zeros(31)), np.zeros(3))
    assert np.allclose(spectrum_to_xyz(2 * s), 2 * spectrum_to_xyz(s), rtol=1e-15)
    t = blackbody_spectrum(9000).power
    a, b = 0.3, 1.7
    assert np.allclose(spectrum_to_xyz(a * s + b * t), a * spectrum_to_xyz(s) + b * spectrum_to_xyz(t), rtol=1e-13)


def test_spectrum_to_xyz_matches_loop_oracle():
    for t in (3000, 6500, 15000):
        assert np.allclose(spectrum_to_xyz(blackbody_spectrum(t)), oracles.blackbody_xyz(t), rtol=1e-12)


def test_blackbody_6500_chromaticity():
    xy = xy_chromaticity(spectrum_to_xyz(blackbody_spectrum(6500)))
    assert np.allclose(xy, XY_6500K, atol=1e-12)
    assert np.allclose(xy, (0.3135, 0.3237), atol=0.01)


def test_grid_mismatch():
    off_grid = Spectrum(5000, np.ones(31), np.arange(405, 706, 10) * 1e-9)
    with pytest.raises(GridMismatchError):
        spectrum_to_xyz(off_grid)
    with pytest.raises(GridMismatchError):
        spectrum_to_xyz(np.ones(30))


def test_normalize_y():
    assert np.array_equal(normalize_y([0.5, 0.5, 0.5]), [1, 1, 1])
    assert np.allclose(normalize_y([0.2, 0.4, 0.8]), [0.5, 1.0, 2.0])
    with pytest.raises(DegenerateStimulusError):
        normalize_y([0.1, 0.0, 0.2])


@given(arrays(float, 3, elements=st.floats(1e-3, 10)))
def test_normalize_y_keeps_chromaticity(xyz):
    n = normalize_y(xyz)
    assert n[1] == 1.0
    assert np.allclose(xy_chromaticity(n), xy_chromaticity(xyz), atol=1e-12, rtol=0)


def test_xy_chromaticity():
    assert np.allclose(xy_chromaticity([1, 1, 1]), [1 / 3, 1 / 3])
    assert np.allclose(xy_chromaticity(D65.xyz), (0.3127, 0.3290), atol=5e-4)
    with pytest.raises(DegenerateStimulusError):
        xy_chromaticity([0, 0, 0])


@given(arrays(float, 3, elements=st.floats(1e-3, 10)), st.floats(1e-3, 1e3))
def test_xy_projective(xyz, s):
    assert np.allclose(xy_chromaticity(s * xyz), xy_chromaticity(xyz), atol=1e-12)


def test_lab_white_and_gray():
    assert np.allclose(xyz_to_lab(D65.xyz), [100, 0, 0], atol=1e-12)
    lab = xyz_to_lab(0.18 * D65.xyz)
    assert lab[0] == pytest.approx(L_OF_18_PERCENT_WHITE, abs=1e-10)
    assert lab[0] == pytest.approx(49.50, abs=0.005)
    assert np.allclose(lab[1:], 0, atol=1e-12)


def test_lab_round_trip_random():
    rng = np.random.default_rng(0)
    xyz = srgb_to_xyz(rng.uniform(0, 1, (10_000, 3)))
    back = lab_to_xyz(xyz_to_lab(xyz))
    assert np.max(np.abs(back - xyz) / np.maximum(np.abs(xyz), 1e-12)) < 1e-9
    lab = xyz_to_lab(xyz)
    assert np.max(np.abs(xyz_to_lab(lab_to_xyz(lab)) - lab)) < 1e-9
    assert np.all((lab[:, 0] >= 0) & (lab[:, 0] <= 100 + 1e-9))


@given(unit)
def test_gamma_round_trip(v):
    assert srgb_encode(srgb_decode(v)) == pytest.approx(v, abs=1e-12)
    assert srgb_decode(srgb_encode(v)) == pytest.approx(v, abs=1e-12)


def test_gamma_continuous_at_threshold():
    from planckjitter.colorimetry import SRGB_LINEAR_THRESHOLD as t

    assert 1.055 * t ** (1 / 2.4) - 0.055 == pytest.approx(12.92 * t, abs=1e-15)
    band = np.linspace(0.00312, 0.00314, 20_001)
    assert np.all(np.diff(srgb_encode(band)) > 0)
    assert np.max(np.abs(srgb_decode(srgb_encode(band)) - band)) < 1e-15


def test_xyz_to_srgb_endpoints():
    assert np.allclose(xyz_to_srgb(D65.xyz), 1, atol=1e-3)
    assert np.array_equal(xyz_to_srgb([0, 0, 0]), [0, 0, 0])
    # far outside the gamut: clamped, still a valid colour
    rgb = xyz_to_srgb([0.1, 0.9, 0.0])
    assert np.all((rgb >= 0) & (rgb <= 1))


def test_illuminant_matches_oracle():
    for t, want in [(3000, ILLUMINANT_3000K), (6500, ILLUMINANT_6500K), (15000, ILLUMINANT_15000K)]:
        got = illuminant_rgb(t)
        assert isinstance(got, IlluminantRgb) and got.temperature == t
        assert np.allclose(got.rgb, want, atol=1e-12)


def test_illuminant_warm_and_cool():
    warm, cool = illuminant_rgb(3000), illuminant_rgb(15000)
    assert warm.r > warm.g > warm.b
    assert cool.b > cool.g > cool.r


def test_illuminant_6500_near_neutral():
    rgb = illuminant_rgb(6500).rgb
    assert np.max(np.abs(rgb[:, None] - rgb[None, :])) < 0.08


def test_illuminant_red_blue_ratio_monotone():
    rgbs = np.array([illuminant_rgb(t).rgb for t in sweep_temperatures(25)])
    assert np.all(np.diff(rgbs[:, 0] / rgbs[:, 2]) < 0)


def test_illuminant_lightness_fixed():
    for t in (3000, 5000, 11000):
        assert xyz_to_lab(illuminant_xyz(t))[0] == pytest.approx(50.0, abs=1e-12)


@given(st.floats(3000, 15000))
def test_illuminant_in_range(t):
    rgb = illuminant_rgb(t).rgb
    assert np.all((rgb >= 0) & (rgb <= 1)) and rgb.max() > 0


def test_illuminant_vectorised_agrees():
    temps = np.linspace(3000, 15000, 13)
    scalar = np.array([illuminant_rgb(t).rgb for t in temps])
    assert np.allclose(illuminant_rgb_array(temps), scalar, atol=1e-14)


def test_locus_x_decreasing():
    temps = sweep_temperatures(25)
    pre_srgb = np.array([xy_chromaticity(illuminant_xyz(t)) for t in temps])
    assert np.all(np.diff(pre_srgb[:, 0]) < 0)
    assert np.all(np.diff(planckian_locus(temps)[:, 0]) < 0)
