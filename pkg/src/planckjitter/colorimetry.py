"""CIE 1931 colorimetry: spectra to XYZ, CIE L*a*b*, sRGB, and the black-body illuminant colour.

Colour values are plain float arrays with a trailing axis of length 3
(X, Y, Z), (L, a, b) or (R, G, B); every conversion broadcasts over leading
axes. All conversions are referred to the D65 white.
"""

from __future__ import annotations

import csv
import shutil
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import DegenerateStimulusError, GridMismatchError
from .spectral import WAVELENGTH_STEP, WAVELENGTHS, Spectrum, blackbody_spectrum, planck_radiance

CMF_FILE = "cie1931_2deg_400_700_10nm.csv"
WHITE_FILE = "whitepoint_d65.csv"

LAB_DELTA = 6.0 / 29.0
L_FIXED = 50.0

# IEC 61966-2-1 transfer function. The printed threshold 0.0031308 leaves a
# 3e-8 jump between the branches, so it is moved to where the two branches
# actually cross; encode is then continuous and decode inverts it exactly.
SRGB_LINEAR_THRESHOLD = 0.0031306684425005758
SRGB_ENCODED_THRESHOLD = 12.92 * SRGB_LINEAR_THRESHOLD

# XYZ (D65) -> linear sRGB
XYZ_TO_LINEAR_SRGB = np.array(
    [
        [3.2404542, -1.5371385, -0.4985314],
        [-0.9692660, 1.8760108, 0.0415560],
        [0.0556434, -0.2040259, 1.0572252],
    ]
)
LINEAR_SRGB_TO_XYZ = np.linalg.inv(XYZ_TO_LINEAR_SRGB)
XYZ_TO_LINEAR_SRGB.setflags(write=False)
LINEAR_SRGB_TO_XYZ.setflags(write=False)


def _read_csv_rows(name: str) -> list[list[str]]:
    text = resources.files(__package__).joinpath("data", name).read_text()
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    return list(csv.reader(lines))[1:]


@dataclass(frozen=True)
class CmfTable:
    wavelengths: np.ndarray  # metres
    values: np.ndarray  # (n, 3): x_bar, y_bar, z_bar

    def __post_init__(self):
        if self.values.shape != (self.wavelengths.size, 3):
            raise GridMismatchError("CMF rows do not match the wavelength grid")
        if np.any(self.values < 0):
            raise ValueError("colour-matching functions must be non-negative")

    @property
    def step(self) -> float:
        return float(self.wavelengths[1] - self.wavelengths[0])


@dataclass(frozen=True)
class WhitePoint:
    Xn: float
    Yn: float
    Zn: float

    @property
    def xyz(self) -> np.ndarray:
        return np.array([self.Xn, self.Yn, self.Zn])


@lru_cache(maxsize=None)
def load_cmf() -> CmfTable:
    rows = np.array(_read_csv_rows(CMF_FILE), dtype=float)
    table = CmfTable(rows[:, 0] * 1e-9, rows[:, 1:])
    table.wavelengths.setflags(write=False)
    table.values.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def load_whitepoint() -> WhitePoint:
    (row,) = _read_csv_rows(WHITE_FILE)
    return WhitePoint(*map(float, row))


D65 = load_whitepoint()


def export_tables(directory) -> list[Path]:
    """Copy the shipped CMF and white-point CSVs into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for name in (CMF_FILE, WHITE_FILE):
        src = resources.files(__package__).joinpath("data", name)
        with resources.as_file(src) as path:
            out.append(Path(shutil.copy(path, directory / name)))
    return out


def spectrum_to_xyz(spectrum, cmf: CmfTable | None = None) -> np.ndarray:
    """Riemann sum of the spectrum against the colour-matching functions.

    ``spectrum`` is a :class:`Spectrum` or a bare array of samples on the
    canonical 400-700 nm grid (the latter admits zero or scaled spectra).
    """
    cmf = cmf or load_cmf()
    if isinstance(spectrum, Spectrum):
        if spectrum.wavelengths.shape != cmf.wavelengths.shape or not np.allclose(
            spectrum.wavelengths, cmf.wavelengths, rtol=0, atol=1e-15
        ):
            raise GridMismatchError("spectrum and CMF wavelength grids differ")
        power = spectrum.power
    else:
        power = np.asarray(spectrum, dtype=float)
        if power.shape[-1] != cmf.wavelengths.size:
            raise GridMismatchError(
                f"expected {cmf.wavelengths.size} spectral samples, got {power.shape[-1]}"
            )
    return power @ cmf.values * WAVELENGTH_STEP


def normalize_y(xyz) -> np.ndarray:
    xyz = np.asarray(xyz, dtype=float)
    y = xyz[..., 1:2]
    if np.any(y <= 0):
        raise DegenerateStimulusError("cannot normalise a stimulus with Y <= 0")
    return xyz / y


def xy_chromaticity(xyz) -> np.ndarray:
    xyz = np.asarray(xyz, dtype=float)
    total = xyz.sum(axis=-1, keepdims=True)
    if np.any(total <= 0):
        raise DegenerateStimulusError("chromaticity undefined for X + Y + Z <= 0")
    return xyz[..., :2] / total


def _lab_f(t):
    d = LAB_DELTA
    return np.where(t > d**3, np.cbrt(t), t / (3 * d * d) + 4.0 / 29.0)


def _lab_finv(f):
    d = LAB_DELTA
    return np.where(f > d, f**3, 3 * d * d * (f - 4.0 / 29.0))


def xyz_to_lab(xyz, white: WhitePoint = D65) -> np.ndarray:
    fx, fy, fz = np.moveaxis(_lab_f(np.asarray(xyz, dtype=float) / white.xyz), -1, 0)
    return np.stack([116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)], axis=-1)


def lab_to_xyz(lab, white: WhitePoint = D65) -> np.ndarray:
    L, a, b = np.moveaxis(np.asarray(lab, dtype=float), -1, 0)
    fy = (L + 16.0) / 116.0
    f = np.stack([fy + a / 500.0, fy, fy - b / 200.0], axis=-1)
    return _lab_finv(f) * white.xyz


def srgb_encode(linear) -> np.ndarray:
    """Linear-light values to gamma-encoded sRGB (no clamping)."""
    v = np.asarray(linear, dtype=float)
    return np.where(
        v <= SRGB_LINEAR_THRESHOLD,
        12.92 * v,
        1.055 * np.power(np.maximum(v, SRGB_LINEAR_THRESHOLD), 1 / 2.4) - 0.055,
    )


def srgb_decode(encoded) -> np.ndarray:
    v = np.asarray(encoded, dtype=float)
    return np.where(
        v <= SRGB_ENCODED_THRESHOLD,
        v / 12.92,
        np.power((np.maximum(v, SRGB_ENCODED_THRESHOLD) + 0.055) / 1.055, 2.4),
    )


def xyz_to_srgb(xyz) -> np.ndarray:
    """XYZ to gamma-encoded sRGB; out-of-gamut values are clamped in linear light."""
    linear = np.asarray(xyz, dtype=float) @ XYZ_TO_LINEAR_SRGB.T
    return srgb_encode(np.clip(linear, 0.0, 1.0))


def srgb_to_xyz(rgb) -> np.ndarray:
    return srgb_decode(rgb) @ LINEAR_SRGB_TO_XYZ.T


def srgb_to_xy(rgb) -> np.ndarray:
    """Chromaticity of gamma-encoded sRGB colours."""
    return xy_chromaticity(srgb_to_xyz(rgb))


@dataclass(frozen=True)
class IlluminantRgb:
    r: float
    g: float
    b: float
    temperature: float

    @property
    def rgb(self) -> np.ndarray:
        return np.array([self.r, self.g, self.b])


def illuminant_xyz(temperature: float, cmf: CmfTable | None = None) -> np.ndarray:
    """XYZ of the black body after Y-normalisation and fixing L* to 50."""
    xyz = normalize_y(spectrum_to_xyz(blackbody_spectrum(temperature), cmf))
    lab = xyz_to_lab(xyz)
    lab[0] = L_FIXED
    return lab_to_xyz(lab)


def illuminant_rgb(temperature: float, cmf: CmfTable | None = None) -> IlluminantRgb:
    """Gamma-encoded sRGB colour of a black-body illuminant at ``temperature`` kelvin."""
    r, g, b = xyz_to_srgb(illuminant_xyz(temperature, cmf))
    return IlluminantRgb(float(r), float(g), float(b), float(temperature))


def illuminant_rgb_array(temperatures, cmf: CmfTable | None = None) -> np.ndarray:
    """Vectorised :func:`illuminant_rgb`: returns an (n, 3) array of sRGB colours."""
    temps = np.asarray(temperatures, dtype=float).reshape(-1, 1)
    xyz = normalize_y(spectrum_to_xyz(planck_radiance(temps, WAVELENGTHS), cmf))
    lab = xyz_to_lab(xyz)
    lab[:, 0] = L_FIXED
    return xyz_to_srgb(lab_to_xyz(lab))


def planckian_locus(temperatures) -> np.ndarray:
    """xy chromaticities of black bodies, integrated on the 400-700 nm grid."""
    return np.array([xy_chromaticity(spectrum_to_xyz(blackbody_spectrum(t))) for t in temperatures])


def rendered_locus(temperatures) -> np.ndarray:
    """xy chromaticities of the sRGB illuminant colours actually used for re-illumination."""
    rgbs = np.array([illuminant_rgb(t).rgb for t in temperatures])
    return srgb_to_xy(rgbs)
