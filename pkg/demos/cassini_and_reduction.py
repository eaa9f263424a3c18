#!/usr/bin/env python3
"""Which six-point sets inscribe quadratically into a circle?

Exactly those on a Cassini oval (product of distances to two foci constant).
This script plants points on the oval |z^2 - 0.25| = 1, recovers the foci by
fitting, and contrasts a cyclically reducible set (the sixth roots of unity,
which collapse through z^2 to a concyclic triple) with a generic one.
"""

import numpy as np

from polyinscribe import detect_cyclically_reducible_quadratic, fit_cassini

print("== plant on |z - 0.5| |z + 0.5| = 1 and recover ==")
thetas = np.array([0.1, 1.0, 2.0, 3.0, 4.2, 5.5])
rho2 = (0.5 * np.cos(2 * thetas) + np.sqrt(0.25 * np.cos(2 * thetas) ** 2 + 3.75)) / 2
pts = np.sqrt(rho2) * np.exp(1j * thetas)
fit = fit_cassini(pts)
print("foci:", np.round(fit.foci, 8), " level:", round(fit.level, 8))

print()
print("== sixth roots of unity: a degenerate (circular) Cassini oval ==")
roots = np.exp(2j * np.pi * np.arange(6) / 6)
fit = fit_cassini(roots)
print("foci:", np.round(fit.foci, 8), " level:", round(fit.level, 8))

red = detect_cyclically_reducible_quadratic(roots)
print("cyclically reducible:", red is not None)
print("  center:", np.round(red.center, 8))
print("  images under (q - c)^2:", np.round(red.images, 6))

print()
print("== colinear points lie on no Cassini oval ==")
print("fit:", fit_cassini(np.linspace(-2.5, 2.5, 6) + 0j))

print()
print("== generic concyclic points: concyclic but not reducible ==")
rng = np.random.default_rng(3)
generic = np.exp(1j * np.sort(rng.uniform(0, 2 * np.pi, 6)))
print("reduction:", detect_cyclically_reducible_quadratic(generic))
