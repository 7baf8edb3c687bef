"""
Execution time
==============

Single-threaded wall clock of both augmentations at a few resolutions.
"""

import sys
from pathlib import Path

from planckjitter import bench, plotting

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)

results = bench.run_benchmark([32, 64, 128, 224], repeats=10)
print(bench.summary_table(results))
plotting.bench_svg(results, out / "timing.svg")
