"""Colour-selectivity index, illuminant sweep and chromaticity clouds."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .colorimetry import D65, illuminant_rgb, illuminant_rgb_array, rendered_locus, srgb_to_xyz
from .errors import DegenerateStimulusError
from .jitter import JitterConfig, default_color_jitter, reilluminate
from .spectral import TemperatureRange, sample_temperature, sweep_temperatures

COLOR_SELECTIVE = "color-selective"
INTERMEDIATE = "intermediate"
COLORBLIND = "colorblind"
CLASSES = (COLOR_SELECTIVE, INTERMEDIATE, COLORBLIND)

SELECTIVE_THRESHOLD = 0.25
COLORBLIND_THRESHOLD = 0.1


# -- colour selectivity -------------------------------------------------------


@dataclass(frozen=True)
class ActivationSet:
    """Top-N patch activations of one neuron for colour and grayscale inputs."""

    color: np.ndarray
    gray: np.ndarray
    neuron: str = ""

    def __post_init__(self):
        color = np.asarray(self.color, dtype=float)
        gray = np.asarray(self.gray, dtype=float)
        if color.shape != gray.shape or color.ndim != 1:
            raise ValueError("colour and grayscale activations must be aligned 1-d lists")
        if np.any(color < 0) or np.any(gray < 0):
            raise ValueError("activations must be non-negative")
        object.__setattr__(self, "color", color)
        object.__setattr__(self, "gray", gray)

    @property
    def n(self) -> int:
        return self.color.size


def color_selectivity(acts: ActivationSet) -> float:
    """``1 - sum(gray) / sum(color)``; may be negative, never above 1."""
    total = acts.color.sum()
    if total <= 0:
        raise DegenerateStimulusError(f"neuron {acts.neuron!r} has no colour activation")
    return float(1.0 - acts.gray.sum() / total)


def classify_neuron(alpha: float) -> str:
    if alpha > 1:
        raise ValueError(f"selectivity index {alpha} exceeds 1")
    if alpha > SELECTIVE_THRESHOLD:
        return COLOR_SELECTIVE
    if alpha < COLORBLIND_THRESHOLD:
        return COLORBLIND
    return INTERMEDIATE


@dataclass(frozen=True)
class NeuronSelectivity:
    neuron: str
    n: int
    alpha: float
    label: str


@dataclass
class SelectivityReport:
    neurons: list[NeuronSelectivity]

    def histogram(self) -> dict[str, int]:
        counts = dict.fromkeys(CLASSES, 0)
        for rec in self.neurons:
            counts[rec.label] += 1
        return counts

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["neuron", "n", "alpha", "class"])
        for rec in self.neurons:
            w.writerow([rec.neuron, rec.n, repr(rec.alpha), rec.label])
        return buf.getvalue()


def selectivity_report(activations) -> SelectivityReport:
    out = []
    for acts in activations:
        alpha = color_selectivity(acts)
        out.append(NeuronSelectivity(acts.neuron, acts.n, alpha, classify_neuron(alpha)))
    return SelectivityReport(out)


class ActivationParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _parse_record(rec: dict, line: int) -> ActivationSet:
    try:
        color = [float(v) for v in rec["w"]]
        gray = [float(v) for v in rec["w_gray"]]
        neuron = str(rec.get("neuron", line))
        n = rec.get("n")
        if n is not None and int(n) != len(color):
            raise ValueError(f"n={n} but {len(color)} activations given")
        return ActivationSet(color, gray, neuron)
    except KeyError as exc:
        raise ActivationParseError(line, f"missing field {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        raise ActivationParseError(line, str(exc)) from None


def parse_activations_csv(text: str) -> list[ActivationSet]:
    """CSV with header ``neuron,n,w,w_gray``; list cells are ``;``-separated."""
    lines = text.splitlines()
    reader = csv.reader(lines)
    header = next(reader, None)
    if header is None:
        return []
    header = [h.strip() for h in header]
    required = {"neuron", "n", "w", "w_gray"}
    if not required <= set(header):
        raise ActivationParseError(1, f"header must contain {sorted(required)}")
    out = []
    for lineno, row in enumerate(reader, start=2):
        if not row or not "".join(row).strip():
            continue
        if len(row) != len(header):
            raise ActivationParseError(lineno, f"expected {len(header)} fields, got {len(row)}")
        rec = dict(zip(header, (c.strip() for c in row)))
        for key in ("w", "w_gray"):
            rec[key] = [v for v in rec[key].split(";") if v.strip()]
        out.append(_parse_record(rec, lineno))
    return out


def parse_activations_json(text: str) -> list[ActivationSet]:
    """JSON list of ``{"neuron", "n", "w", "w_gray"}`` records (or ``{"neurons": [...]}``).

    Record numbers stand in for line numbers in error messages, except when
    the document as a whole is malformed.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ActivationParseError(exc.lineno, exc.msg) from None
    if isinstance(doc, dict):
        doc = doc.get("neurons", [])
    if not isinstance(doc, list):
        raise ActivationParseError(1, "expected a list of neuron records")
    out = []
    for i, rec in enumerate(doc, start=1):
        if not isinstance(rec, dict):
            raise ActivationParseError(i, "record is not an object")
        out.append(_parse_record(rec, i))
    return out


def load_activations(path) -> list[ActivationSet]:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        return parse_activations_json(text)
    return parse_activations_csv(text)


# -- illuminant sweep ---------------------------------------------------------


def illuminant_sweep(images, k: int = 25, trange: TemperatureRange | None = None):
    """Re-illuminate every image under ``k`` evenly spaced black-body temperatures.

    Returns a list of ``(temperature, [images])`` pairs in increasing
    temperature. Only the illuminant changes; no brightness/contrast draw.
    """
    images = list(images)
    if not images:
        raise ValueError("illuminant sweep needs at least one image")
    out = []
    for t in sweep_temperatures(k, trange):
        illum = illuminant_rgb(t)
        out.append((float(t), [reilluminate(img, illum) for img in images]))
    return out


def sweep_dirname(temperature: float) -> str:
    return f"sweep_T{int(round(temperature)):05d}"


# -- chromaticity clouds ------------------------------------------------------


def rgb_chromaticity(rgb) -> np.ndarray:
    """xy of gamma-encoded sRGB colours; black maps to the D65 white point."""
    xyz = srgb_to_xyz(np.asarray(rgb, dtype=float))
    total = xyz.sum(axis=-1, keepdims=True)
    white = D65.xyz[:2] / D65.xyz.sum()
    safe = np.where(total > 0, total, 1.0)
    return np.where(total > 0, xyz[..., :2] / safe, white)


def sample_inputs(n: int, rng: np.random.Generator, inputs: str = "uniform") -> np.ndarray:
    """``n`` initial sRGB colours: uniform over the cube, or neutral grays with uniform level."""
    if inputs == "uniform":
        return rng.uniform(0.0, 1.0, size=(n, 3))
    if inputs == "gray":
        level = 1.0 - rng.uniform(0.0, 1.0, size=n)  # (0, 1]: black has no chromaticity
        return np.repeat(level[:, None], 3, axis=1)
    raise ValueError(f"unknown input distribution {inputs!r}")


def chromaticity_cloud(
    kind: str,
    n: int,
    rng: np.random.Generator,
    inputs: str = "uniform",
    cfg: JitterConfig | None = None,
) -> np.ndarray:
    """xy chromaticities of ``n`` randomly drawn colours after one colour augmentation.

    ``planckian`` re-illuminates each colour with its own black body drawn
    from the configured temperature range. ``default`` applies the
    hue/saturation/brightness/contrast jitter to each colour as a 1x1 image
    (grayscale conversion excluded).
    """
    if n < 1:
        raise ValueError("cloud needs at least one sample")
    cfg = cfg or JitterConfig()
    rgb = sample_inputs(n, rng, inputs)
    if kind == "planckian":
        temps = [sample_temperature(cfg.temperature_range, rng, cfg.temperature_sampling) for _ in range(n)]
        out = reilluminate(rgb, illuminant_rgb_array(temps), cfg.linear_light)
    elif kind == "default":
        color_only = cfg.replace(cj_apply_probability=1.0, grayscale_probability=0.0)
        out = np.array(
            [default_color_jitter(px.reshape(1, 1, 3), color_only, rng)[0, 0] for px in rgb]
        )
    else:
        raise ValueError(f"unknown jitter kind {kind!r}")
    return rgb_chromaticity(out)


def locus_polyline(trange: TemperatureRange | None = None, points: int = 241) -> np.ndarray:
    """The rendered Planckian locus in xy, densely sampled over the range."""
    trange = trange or TemperatureRange()
    if trange.degenerate:
        return rendered_locus([trange.t_min])
    return rendered_locus(np.linspace(trange.t_min, trange.t_max, points))


def distance_to_polyline(points, polyline) -> np.ndarray:
    """Euclidean distance of each 2-d point to the nearest segment of ``polyline``."""
    p = np.asarray(points, dtype=float).reshape(-1, 2)
    poly = np.asarray(polyline, dtype=float).reshape(-1, 2)
    if len(poly) == 1:
        return np.linalg.norm(p - poly[0], axis=1)
    a, b = poly[:-1], poly[1:]
    ab = b - a
    denom = np.maximum((ab * ab).sum(-1), 1e-300)
    t = np.clip(((p[:, None, :] - a) * ab).sum(-1) / denom, 0.0, 1.0)
    nearest = a + t[..., None] * ab
    return np.sqrt(((p[:, None, :] - nearest) ** 2).sum(-1)).min(axis=1)


def hull_area(points) -> float:
    pts = np.unique(np.asarray(points, dtype=float), axis=0)
    if len(pts) < 3:
        return 0.0
    try:
        return float(ConvexHull(pts).volume)
    except QhullError:  # collinear points: qhull refuses a flat hull
        return 0.0


def quadrant_counts(points, center=None) -> dict[str, int]:
    """Points per quadrant around ``center`` (default: the D65 white point in xy)."""
    if center is None:
        center = D65.xyz[:2] / D65.xyz.sum()
    d = np.asarray(points, dtype=float) - center
    return {
        "+x+y": int(np.sum((d[:, 0] > 0) & (d[:, 1] > 0))),
        "-x+y": int(np.sum((d[:, 0] < 0) & (d[:, 1] > 0))),
        "-x-y": int(np.sum((d[:, 0] < 0) & (d[:, 1] < 0))),
        "+x-y": int(np.sum((d[:, 0] > 0) & (d[:, 1] < 0))),
    }
