"""
Planckian Jitter vs colour jitter
=================================

Both augmentations applied to random colours, compared by the spread of
their outputs in xy chromaticity.
"""

import sys
from pathlib import Path

import numpy as np

from planckjitter import imageio, plotting
from planckjitter.analysis import chromaticity_cloud, distance_to_polyline, hull_area, locus_polyline
from planckjitter.jitter import JitterConfig, default_color_jitter, image_rng, planckian_jitter

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)
locus = locus_polyline()

# neutral inputs: Planckian outputs stay on the locus
pj = chromaticity_cloud("planckian", 5000, np.random.default_rng(1234), inputs="gray")
d = distance_to_polyline(pj, locus)
print(f"Planckian, gray inputs: {np.mean(d < 0.01):.1%} within 0.01 of the locus")

# colour jitter needs coloured inputs to move anything
cj = chromaticity_cloud("default", 5000, np.random.default_rng(1234), inputs="uniform")
print(f"hull area: colour jitter {hull_area(cj):.3f}, Planckian {hull_area(pj):.3f}")

plotting.chromaticity_svg(pj, out / "cloud_planckian.svg", locus, "Planckian Jitter")
plotting.chromaticity_svg(cj, out / "cloud_default.svg", locus, "colour jitter")

# a strip of views of one synthetic image under each augmentation
y, x = np.mgrid[0:64, 0:64] / 63.0
img = np.stack([x, y, 1 - x * y], axis=-1)
cfg = JitterConfig()
rows = []
for fn in (planckian_jitter, default_color_jitter):
    rows.append(np.concatenate([fn(img, cfg, image_rng(1234, 0, v)) for v in range(6)], axis=1))
imageio.save(np.concatenate(rows, axis=0), out / "views.png")
print("wrote", out / "views.png")
