"""How far apart are two ways of asking a question?

The distance between measurement bases is the mean entropy of the rows of
their transition matrix: 0 bits means same context, log2(n) bits means each
basis is maximally noncommittal about the other.
"""

import math

import numpy as np

from orderctx import (
    BlochAxis,
    NBasis,
    contextual_distance,
    identical_context_closure,
    qubit_distance_curve,
)

z = BlochAxis.named("z")
x = BlochAxis.named("x")

for a, b, tag in [(z, z, "z vs z"), (z, x, "z vs x"), (BlochAxis(math.pi / 3), z, "pi/3 tilt vs z")]:
    r = contextual_distance(a, b)
    print(f"{tag:<16} {r.value_bits:.6f} / {r.sup_bits:.6f} bits  {r.classification.value}")

print()
print("distance against tilt angle, 0 to pi/2:")
thetas = np.linspace(0.0, math.pi / 2, 13)
for theta, value in zip(thetas, qubit_distance_curve(thetas)):
    bar = "#" * int(round(40 * value))
    print(f"  {theta:5.3f} rad  {value:8.6f}  {bar}")

print()

# in higher dimensions the ceiling rises to log2(n); the Fourier basis
# against the computational basis sits exactly on it
n = 3
grid = np.arange(n)
fourier = NBasis(np.exp(2j * np.pi * np.outer(grid, grid) / n) / math.sqrt(n))
r = contextual_distance(NBasis.computational(n), fourier)
print(f"computational vs Fourier (n={n}): {r.value_bits:.6f} of {r.sup_bits:.6f} bits, {r.classification.value}")

# zero distance is a real equivalence: relabeling or rephasing outcomes
# stays in the same context, and the closure check agrees
relabeled = NBasis(fourier.columns[:, [2, 0, 1]])
rephased = NBasis(fourier.columns * np.exp(0.4j))
print("closure over relabeled and rephased copies:", identical_context_closure(fourier, relabeled, rephased))
