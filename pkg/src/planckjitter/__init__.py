"""Planckian Jitter: physically based colour augmentation by black-body re-illumination."""

__version__ = "0.1.0"

from .analysis import (
    ActivationSet,
    chromaticity_cloud,
    classify_neuron,
    color_selectivity,
    illuminant_sweep,
)
from .colorimetry import (
    D65,
    IlluminantRgb,
    illuminant_rgb,
    lab_to_xyz,
    normalize_y,
    spectrum_to_xyz,
    xy_chromaticity,
    xyz_to_lab,
    xyz_to_srgb,
)
from .jitter import (
    JitterConfig,
    brightness_contrast,
    default_color_jitter,
    image_rng,
    planckian_jitter,
    reilluminate,
    to_grayscale,
)
from .spectral import Spectrum, TemperatureRange, blackbody_spectrum, planck_radiance, sample_temperature
