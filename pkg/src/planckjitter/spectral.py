"""Black-body spectra on the 400-700 nm grid and illuminant temperature sampling."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

# Constants exactly as used by the reference pipeline (pre-CODATA-2018 h and k),
# kept verbatim so spectra are reproducible.
SPEED_OF_LIGHT = 2.99792458e8  # m/s
PLANCK = 6.626176e-34  # J s
BOLTZMANN = 1.380662e-23  # J/K

WAVELENGTH_STEP = 10e-9  # m
WAVELENGTHS = np.arange(400, 701, 10) * 1e-9
WAVELENGTHS.setflags(write=False)

DEFAULT_T_MIN = 3000.0
DEFAULT_T_MAX = 15000.0


@dataclass(frozen=True)
class PhysicalConstants:
    c: float = SPEED_OF_LIGHT
    h: float = PLANCK
    k: float = BOLTZMANN


CONSTANTS = PhysicalConstants()


@dataclass(frozen=True)
class TemperatureRange:
    """Closed interval of black-body temperatures in kelvin.

    ``t_min == t_max`` is allowed and pins every draw to one temperature.
    """

    t_min: float = DEFAULT_T_MIN
    t_max: float = DEFAULT_T_MAX

    def __post_init__(self):
        if not (0 < self.t_min <= self.t_max) or not np.isfinite(self.t_max):
            raise DomainError(
                f"invalid temperature range [{self.t_min}, {self.t_max}]"
            )

    @property
    def degenerate(self) -> bool:
        return self.t_min == self.t_max


@dataclass(frozen=True)
class Spectrum:
    temperature: float
    power: np.ndarray
    wavelengths: np.ndarray = field(default=WAVELENGTHS, repr=False)

    def __post_init__(self):
        power = np.array(self.power, dtype=float)
        wl = np.array(self.wavelengths, dtype=float)
        if power.shape != wl.shape or power.ndim != 1:
            raise DomainError(f"{power.shape} power samples for {wl.shape} wavelengths")
        if not np.all(np.isfinite(power) & (power > 0)):
            raise DomainError("spectral power must be positive and finite")
        for arr in (power, wl):
            arr.setflags(write=False)
        object.__setattr__(self, "power", power)
        object.__setattr__(self, "wavelengths", wl)


def planck_radiance(temperature, wavelength, constants: PhysicalConstants = CONSTANTS):
    """Spectral radiant exitance of a black body, in W/m^3.

    Vectorised over both arguments (standard numpy broadcasting).

    >>> float(planck_radiance(6500.0, 550e-9)) > 0
    True
    """
    t = np.asarray(temperature, dtype=float)
    lam = np.asarray(wavelength, dtype=float)
    if np.any(~(t > 0)) or np.any(~(lam > 0)):
        raise DomainError("temperature and wavelength must be positive")
    c, h, k = constants.c, constants.h, constants.k
    # expm1 keeps full precision where hc/(kT lambda) is small
    out = 2.0 * np.pi * h * c**2 / (lam**5 * np.expm1(h * c / (k * t * lam)))
    if out.ndim == 0:
        return float(out)
    return out


def blackbody_spectrum(temperature: float) -> Spectrum:
    return Spectrum(float(temperature), planck_radiance(temperature, WAVELENGTHS))


def sweep_temperatures(k: int = 25, trange: TemperatureRange | None = None) -> np.ndarray:
    """``k`` evenly spaced temperatures covering the range, endpoints included."""
    if k < 2:
        raise DomainError("a sweep needs at least two temperatures")
    trange = trange or TemperatureRange()
    return np.linspace(trange.t_min, trange.t_max, k)


def sample_temperature(
    trange: TemperatureRange,
    rng: np.random.Generator,
    mode: str = "uniform",
    k: int = 25,
) -> float:
    """Draw one illuminant temperature.

    mode
        ``"uniform"``: uniform in kelvin (default).
        ``"mired"``: uniform in reciprocal temperature, 1e6/T.
        ``"discrete"``: uniform over the ``k`` evenly spaced sweep temperatures.
    """
    if trange.degenerate:
        return float(trange.t_min)
    if mode == "uniform":
        return float(rng.uniform(trange.t_min, trange.t_max))
    if mode == "mired":
        m = rng.uniform(1e6 / trange.t_max, 1e6 / trange.t_min)
        return float(np.clip(1e6 / m, trange.t_min, trange.t_max))
    if mode == "discrete":
        temps = sweep_temperatures(k, trange)
        return float(temps[rng.integers(k)])
    raise ValueError(f"unknown temperature sampling mode {mode!r}")
