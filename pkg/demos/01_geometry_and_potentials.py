"""Geometry and potentials of the Darboux III oscillator.

Walks through the closed-form scalar functions: the nonconstant negative
curvature of the space, the bounded oscillator potential, the classical and
quantum radial effective potentials, and the discrete spectrum with its
accumulation threshold.  Every printed landmark can be cross-checked against
`darboux3 figures --which k`.
"""

import numpy as np

from darboux3.model import (
    ModelParams,
    classical_effective_minimum,
    classical_effective_potential,
    closed_form_energy,
    continuum_threshold,
    flattening_coordinate,
    inverse_flattening,
    oscillator_potential,
    quantum_effective_minimum,
    scalar_curvature,
)

print("=" * 70)
print("1. Scalar curvature (N=3, lambda=0.1)")
print("=" * 70)
params = ModelParams(dim=3, lam=0.1)
print(f"R(0) = {scalar_curvature(params, 0.0):+.4f}   (hyperbolic value -2*lambda*N*(N-1))")
for r in (0.5, 1.0, 2.0, 5.0, 20.0):
    print(f"R({r:4.1f}) = {scalar_curvature(params, r):+.6f}")
print("negative, increasing, and vanishing at infinity\n")

print("=" * 70)
print("2. Oscillator potential plateau omega^2/(2*lambda)")
print("=" * 70)
for lam in (0.0, 0.02, 0.04, 0.06, 0.1):
    p = ModelParams(dim=3, lam=lam)
    plateau = continuum_threshold(p)
    at10 = oscillator_potential(p, 10.0)
    print(f"lambda={lam:5.2f}: U(10) = {at10:7.3f},  U(inf) = {plateau}")
print()

print("=" * 70)
print("3. Flattening coordinate and its inverse")
print("=" * 70)
p = ModelParams(dim=3, lam=0.02)
for r in (1.0, 3.49, 10.0):
    q = flattening_coordinate(p, r)
    back = inverse_flattening(p, q)
    print(f"r = {r:6.3f}  ->  Q = {q:8.4f}  ->  r = {back:.12f}")
print()

print("=" * 70)
print("4. Classical effective potential, c_N = 100")
print("=" * 70)
m = classical_effective_minimum(p, 100.0)
m0 = classical_effective_minimum(ModelParams(dim=3, lam=0.0), 100.0)
print(f"deformed: minimum {m.u_min:.4f} at r = {m.r_min:.4f}  (plateau {continuum_threshold(p)})")
print(f"flat:     minimum {m0.u_min:.4f} at r = {m0.r_min:.4f}")
print("the deformation pushes the well outward and down")
value = classical_effective_potential(p, 100.0, m.r_min)
print(f"substituting r_min back: {value:.12f} == u_min to machine precision\n")

print("=" * 70)
print("5. Quantum effective potential minima (N=3, l=10)")
print("=" * 70)
qm = quantum_effective_minimum(p, 10)
qm0 = quantum_effective_minimum(ModelParams(dim=3, lam=0.0), 10)
print(f"deformed: minimum {qm.u_min:.4f} at r = {qm.r_min:.4f}")
print(f"flat:     minimum {qm0.u_min:.4f} at r = {qm0.r_min:.4f}  (= sqrt(110), 110^(1/4))\n")

print("=" * 70)
print("6. Discrete spectrum accumulating at the continuum threshold")
print("=" * 70)
header = "  n   " + "".join(f"lambda={lam:<8}" for lam in (0.0, 0.01, 0.02, 0.04))
print(header)
for n in (0, 1, 2, 5, 10, 25):
    row = f" {n:3d}  "
    for lam in (0.0, 0.01, 0.02, 0.04):
        row += f"{closed_form_energy(ModelParams(dim=3, lam=lam), n):<15.6f}"
    print(row)
print("thresholds:", [continuum_threshold(ModelParams(dim=3, lam=lam)) for lam in (0.0, 0.01, 0.02, 0.04)])
gaps = np.diff([closed_form_energy(p, n) for n in range(40)])
print(f"gaps shrink: E_1-E_0 = {gaps[0]:.4f}, E_39-E_38 = {gaps[-1]:.4f}")
