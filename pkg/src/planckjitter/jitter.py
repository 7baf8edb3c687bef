"""Planckian Jitter and the default (SimCLR-style) colour jitter.

Images are float arrays of shape (H, W, 3) holding gamma-encoded sRGB in
[0, 1]. Every operation returns a new array and clamps its output to [0, 1].
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

import numpy as np
from matplotlib.colors import hsv_to_rgb, rgb_to_hsv

from .colorimetry import IlluminantRgb, illuminant_rgb, srgb_decode, srgb_encode
from .spectral import TemperatureRange, sample_temperature

LUMA_WEIGHTS = np.array([0.299, 0.587, 0.114])


def as_image(img) -> np.ndarray:
    """Validate and return ``img`` as a float64 (H, W, 3) array."""
    arr = np.asarray(img, dtype=float)
    if arr.ndim != 3 or arr.shape[2] != 3 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"expected an (H, W, 3) image, got shape {arr.shape}")
    if not np.all((arr >= 0.0) & (arr <= 1.0)):
        raise ValueError("image values must lie in [0, 1]")
    return arr


@dataclass(frozen=True)
class JitterConfig:
    """Parameters for both jitter pipelines.

    Strengths follow the usual colour-jitter convention: a strength ``s``
    draws a factor uniformly from ``[max(0, 1 - s), 1 + s]`` (hue: a shift
    uniformly from ``[-s, s]`` of a full turn).

    With ``literal_coefficients`` the Planckian pipeline skips the draw and
    uses ``brightness`` and ``contrast`` directly as the factors.
    """

    temperature_range: TemperatureRange = field(default_factory=TemperatureRange)
    temperature_sampling: str = "uniform"
    brightness: float = 0.8
    contrast: float = 0.8
    saturation: float = 0.8
    hue: float = 0.2
    cj_apply_probability: float = 0.8
    grayscale_probability: float = 0.2
    pj_apply_probability: float = 1.0
    linear_light: bool = False
    literal_coefficients: bool = False
    seed: int = 1234

    def __post_init__(self):
        for name in ("brightness", "contrast", "saturation", "hue"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} strength must be non-negative")
        if self.hue > 0.5:
            raise ValueError("hue strength must be at most 0.5")
        for name in ("cj_apply_probability", "grayscale_probability", "pj_apply_probability"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")
        if self.temperature_sampling not in ("uniform", "mired", "discrete"):
            raise ValueError(f"unknown temperature sampling {self.temperature_sampling!r}")

    def replace(self, **changes) -> "JitterConfig":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["temperature_range"] = [self.temperature_range.t_min, self.temperature_range.t_max]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "JitterConfig":
        d = dict(d)
        if "temperature_range" in d:
            d["temperature_range"] = TemperatureRange(*d["temperature_range"])
        return cls(**d)


# Augmentation configurations compared in the experiments: CJ, CJ- and PJ.
PRESETS = {
    "CJ": JitterConfig(),
    "CJ-": JitterConfig(grayscale_probability=0.0),
    "PJ": JitterConfig(),
}


def luma(img) -> np.ndarray:
    return np.asarray(img, dtype=float) @ LUMA_WEIGHTS


def to_grayscale(img) -> np.ndarray:
    y = luma(img)
    return np.repeat(y[..., None], 3, axis=-1)


def spatial_mean(img) -> float:
    """Mean luma over all pixels; the average used by the contrast adjustment."""
    return float(luma(img).mean())


def _factor(strength: float, rng: np.random.Generator) -> float:
    return float(rng.uniform(max(0.0, 1.0 - strength), 1.0 + strength))


def reilluminate(img, illum, linear_light: bool = False) -> np.ndarray:
    """Von Kries re-illumination: scale each channel by the illuminant colour.

    The scene is assumed to have been lit by white (1, 1, 1), so dividing
    by the original illuminant is the identity.
    """
    rgb = illum.rgb if isinstance(illum, IlluminantRgb) else np.asarray(illum, dtype=float)
    img = np.asarray(img, dtype=float)
    if linear_light:
        out = srgb_encode(srgb_decode(img) * srgb_decode(rgb))
    else:
        out = img * rgb
    return np.clip(out, 0.0, 1.0)


def brightness_contrast(img, b: float, c: float) -> np.ndarray:
    """``c*b*I + (1 - c) * mean(b*I)``, clamped to [0, 1]."""
    if b < 0 or c < 0:
        raise ValueError("brightness and contrast factors must be non-negative")
    scaled = b * np.asarray(img, dtype=float)
    out = c * scaled + (1.0 - c) * spatial_mean(scaled)
    return np.clip(out, 0.0, 1.0)


def planckian_jitter(img, cfg: JitterConfig, rng: np.random.Generator) -> np.ndarray:
    img = np.asarray(img, dtype=float)
    if cfg.pj_apply_probability < 1.0 and rng.random() >= cfg.pj_apply_probability:
        return img.copy()
    t = sample_temperature(cfg.temperature_range, rng, cfg.temperature_sampling)
    out = reilluminate(img, illuminant_rgb(t), cfg.linear_light)
    if cfg.literal_coefficients:
        b, c = cfg.brightness, cfg.contrast
    else:
        b, c = _factor(cfg.brightness, rng), _factor(cfg.contrast, rng)
    return brightness_contrast(out, b, c)


def adjust_brightness(img, factor: float) -> np.ndarray:
    return np.clip(img * factor, 0.0, 1.0)


def adjust_contrast(img, factor: float) -> np.ndarray:
    return np.clip(factor * img + (1.0 - factor) * spatial_mean(img), 0.0, 1.0)


def adjust_saturation(img, factor: float) -> np.ndarray:
    gray = luma(img)[..., None]
    return np.clip(factor * img + (1.0 - factor) * gray, 0.0, 1.0)


def adjust_hue(img, shift: float) -> np.ndarray:
    """Rotate hue by ``shift`` turns in HSV space."""
    hsv = rgb_to_hsv(img)
    hsv[..., 0] = (hsv[..., 0] + shift) % 1.0
    return np.clip(hsv_to_rgb(hsv), 0.0, 1.0)


def default_color_jitter(img, cfg: JitterConfig, rng: np.random.Generator) -> np.ndarray:
    """Random brightness/contrast/saturation/hue in random order, then random grayscale.

    Adjustments with zero strength are skipped entirely, so all-zero
    strengths leave the image untouched.
    """
    out = np.asarray(img, dtype=float).copy()
    if rng.random() < cfg.cj_apply_probability:
        for op in rng.permutation(4):
            if op == 0 and cfg.brightness > 0:
                out = adjust_brightness(out, _factor(cfg.brightness, rng))
            elif op == 1 and cfg.contrast > 0:
                out = adjust_contrast(out, _factor(cfg.contrast, rng))
            elif op == 2 and cfg.saturation > 0:
                out = adjust_saturation(out, _factor(cfg.saturation, rng))
            elif op == 3 and cfg.hue > 0:
                out = adjust_hue(out, float(rng.uniform(-cfg.hue, cfg.hue)))
    if rng.random() < cfg.grayscale_probability:
        out = to_grayscale(out)
    return out


def identity(img, cfg: JitterConfig | None = None, rng=None) -> np.ndarray:
    return np.asarray(img, dtype=float).copy()


AUGMENTATIONS = {
    "planckian": planckian_jitter,
    "default": default_color_jitter,
    "none": identity,
}


def image_rng(seed: int, index: int, view: int = 0) -> np.random.Generator:
    """Independent random stream for one (image, view) pair.

    Derived from the root seed alone, so results do not depend on how
    images are scheduled across workers.
    """
    return np.random.default_rng(np.random.SeedSequence([seed, index, view]))
