"""
Colour selectivity of neurons
=============================

The index compares a neuron's top activations on colour patches with its
activations on the same patches in grayscale. The numbers here are made up.
"""

import numpy as np

from planckjitter.analysis import ActivationSet, selectivity_report

rng = np.random.default_rng(1234)
neurons = []
for i in range(200):
    w = np.sort(rng.uniform(0.5, 1.0, 10))[::-1]
    # how much of the response survives without colour
    keep = rng.beta(4, 2)
    neurons.append(ActivationSet(w, w * keep * rng.uniform(0.9, 1.1, 10), f"n{i}"))

report = selectivity_report(neurons)
for label, count in report.histogram().items():
    print(f"{label:>16}: {count}")

alphas = np.array([n.alpha for n in report.neurons])
print(f"alpha: mean {alphas.mean():.3f}, min {alphas.min():.3f}, max {alphas.max():.3f}")
