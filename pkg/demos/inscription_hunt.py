#!/usr/bin/env python3
"""Inscription hunting, positive and negative.

Solves three instances end to end: a pinwheel into a random smooth curve
(solutions guaranteed), six concyclic points into another random curve
(quadratic inscriptions), and six colinear points into the circle (provably
empty).  Writes an SVG of the first instance next to this script.
"""

import pathlib

import numpy as np

from polyinscribe import (
    SolveOptions,
    colinear_config,
    find_inscriptions,
    make_pinwheel,
    random_concyclic_config,
    random_curve,
    unit_circle,
)
from polyinscribe.plot import render_svg

rng = np.random.default_rng(42)

print("== pinwheel into a random smooth curve ==")
curve = random_curve(rng)
cfg = make_pinwheel(3, 1.1)
report = find_inscriptions(curve, cfg, SolveOptions(n_starts=6000, seed=1))
print(f"found {len(report.inscriptions)} inscriptions "
      f"({report.n_converged} converged, {report.n_constant_discarded} constants)")
for ins in report.inscriptions[:3]:
    print("  residual %.1e  coeffs %s" % (ins.residual, np.round(ins.poly.coeffs, 4)))

out = pathlib.Path(__file__).with_name("inscription_hunt.svg")
out.write_text(render_svg(curve, cfg, report.inscriptions[:3]))
print("wrote", out.name)

print()
print("== six concyclic points into another random curve ==")
curve2 = random_curve(rng)
cfg2 = random_concyclic_config(rng, n=3)
report2 = find_inscriptions(curve2, cfg2, SolveOptions(n_starts=8000, seed=2))
print(f"found {len(report2.inscriptions)} quadratic inscriptions")

print()
print("== six colinear points into the unit circle: impossible ==")
report3 = find_inscriptions(unit_circle(), colinear_config(3), SolveOptions(n_starts=8000, seed=3))
print(f"found {len(report3.inscriptions)} nonconstant inscriptions "
      f"({report3.n_constant_discarded} constant-family hits discarded)")
