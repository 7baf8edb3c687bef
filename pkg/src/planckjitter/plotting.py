"""Deterministic SVG figures: xy chromaticity scatters and timing charts."""

from __future__ import annotations

import matplotlib
from matplotlib.figure import Figure

from .bench import summarize

SRGB_PRIMARIES_XY = ((0.64, 0.33), (0.30, 0.60), (0.15, 0.06))


def _save_svg(fig: Figure, path) -> None:
    # fixed salt gives stable element ids, hence byte-identical files
    with matplotlib.rc_context({"svg.hashsalt": "planckjitter"}):
        fig.savefig(path, format="svg", metadata={"Date": None, "Creator": None})


def chromaticity_svg(points, path, locus=None, title: str = "") -> None:
    """Scatter of xy points over the sRGB gamut triangle and the Planckian-locus polyline."""
    fig = Figure(figsize=(5, 5))
    ax = fig.add_subplot()
    tri = list(SRGB_PRIMARIES_XY) + [SRGB_PRIMARIES_XY[0]]
    ax.plot([p[0] for p in tri], [p[1] for p in tri], color="0.3", lw=1, label="sRGB gamut")
    ax.scatter(points[:, 0], points[:, 1], s=2, alpha=0.4, linewidths=0, label="samples")
    if locus is not None and len(locus) > 1:
        ax.plot(locus[:, 0], locus[:, 1], color="k", lw=1.5, label="Planckian locus")
    ax.set_xlim(0.0, 0.8)
    ax.set_ylim(0.0, 0.9)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    ax.legend(loc="upper right", fontsize="small")
    _save_svg(fig, path)


def bench_svg(results, path) -> None:
    rows = summarize(results)
    res = [r["resolution"] for r in rows]
    fig = Figure(figsize=(6, 4))
    ax = fig.add_subplot()
    for key, label in (("planckian", "Planckian Jitter"), ("default", "Color Jitter")):
        mean = [r[f"{key}_mean"] * 1e3 for r in rows]
        std = [r[f"{key}_std"] * 1e3 for r in rows]
        ax.errorbar(res, mean, yerr=std, marker="o", capsize=3, label=label)
    ax.set_xlabel("resolution (px per side)")
    ax.set_ylabel("time per call (ms)")
    ax.set_yscale("log")
    ax.legend()
    _save_svg(fig, path)


def spectra_svg(spectra, path) -> None:
    fig = Figure(figsize=(6, 4))
    ax = fig.add_subplot()
    for s in spectra:
        ax.plot(s.wavelengths * 1e9, s.power / s.power.max(), lw=1, label=f"{s.temperature:.0f} K")
    ax.set_xlabel("wavelength (nm)")
    ax.set_ylabel("relative power")
    if len(spectra) <= 8:
        ax.legend(fontsize="small")
    _save_svg(fig, path)
