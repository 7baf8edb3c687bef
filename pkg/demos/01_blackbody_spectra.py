"""
Black-body spectra over the visible range
=========================================

Radiance of a few black bodies between 400 and 700 nm, and the colour each
one renders to once it is pushed through the CIE observer and into sRGB.
"""

import sys
from pathlib import Path

import numpy as np

from planckjitter import plotting
from planckjitter.colorimetry import illuminant_rgb
from planckjitter.spectral import blackbody_spectrum

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)

# warm bodies peak in the red, hot ones in the blue
temps = [3000, 4500, 6500, 9000, 15000]
spectra = [blackbody_spectrum(t) for t in temps]
for s in spectra:
    peak = s.wavelengths[np.argmax(s.power)] * 1e9
    print(f"{s.temperature:6.0f} K  peak on grid at {peak:.0f} nm")

plotting.spectra_svg(spectra, out / "spectra.svg")

# every illuminant is rendered at the same lightness (L* = 50)
for t in temps:
    ill = illuminant_rgb(t)
    print(f"{t:6d} K  rgb = ({ill.r:.3f}, {ill.g:.3f}, {ill.b:.3f})")
