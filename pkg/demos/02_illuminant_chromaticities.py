"""
Where the illuminants sit in xy
===============================

The 25 sweep illuminants traced in xy chromaticity. Before sRGB rendering
they follow the Planckian locus, and none of them is clipped by rendering.
"""

import sys
from pathlib import Path

from planckjitter import plotting
from planckjitter.analysis import locus_polyline
from planckjitter.colorimetry import illuminant_xyz, rendered_locus, xy_chromaticity
from planckjitter.spectral import sweep_temperatures

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)

temps = sweep_temperatures(25)
rendered = rendered_locus(temps)
for t, xy in zip(temps, rendered):
    pre = xy_chromaticity(illuminant_xyz(t))
    print(f"{t:7.0f} K  xy {pre[0]:.4f} {pre[1]:.4f}  rendered {xy[0]:.4f} {xy[1]:.4f}")

plotting.chromaticity_svg(rendered, out / "illuminants_xy.svg", locus_polyline(), "sweep illuminants")
