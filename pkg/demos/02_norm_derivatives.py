"""Norm derivatives: spectral closed form against the raw definition.

rho_plus(x, y) is the right derivative of t -> ||x + t y||^2 / 2 at 0.
The closed form takes the largest eigenvalue of the Hermitian part of
<x, y> compressed to the top eigenspace of <x, x>; the definition is a
one-sided difference quotient.  Both are computed here side by side,
then the standard algebraic properties are sampled.
"""

import numpy as np

from rhoperp import module_norm, rho_fd, rho_pair, rho_plus
from rhoperp.verify import random_element

rng = np.random.default_rng(7)
x = random_element(rng, 4, 3)
y = random_element(rng, 4, 3)

pair = rho_pair(x, y)
print("closed form : rho_plus =", f"{pair.rho_plus:+.10f}",
      " rho_minus =", f"{pair.rho_minus:+.10f}")
print("difference  : rho_plus =", f"{rho_fd(x, y, '+'):+.10f}",
      " rho_minus =", f"{rho_fd(x, y, '-'):+.10f}")

print("\nThe quotient converges monotonically from above (side +):")
base = module_norm(x) ** 2
for k in (2, 6, 10, 14, 18):
    t = 2.0 ** (-k)
    q = (module_norm(x + t * y) ** 2 - base) / (2 * t)
    print(f"  t = 2^-{k:<2d}  quotient = {q:+.10f}   excess = {q - pair.rho_plus:.3e}")

print("\nSampled properties:")
nx = module_norm(x)
alpha = 0.8 - 0.3j
print("  rho(x, x) = ||x||^2          :",
      f"{rho_plus(x, x)[0]:.10f} vs {nx**2:.10f}")
print("  rho(x, ax + y) - Re(a)||x||^2:",
      f"{rho_plus(x, alpha * x + y)[0] - alpha.real * nx**2:.10f} vs {pair.rho_plus:.10f}")
print("  rho_plus(x, -y)              :",
      f"{rho_plus(x, -y)[0]:.10f} vs -rho_minus = {-pair.rho_minus:.10f}")

w = pair.max_witness
print("\nThe maximizing state is a density matrix supported on the top")
print("eigenspace of <x, x>; its trace is", f"{np.trace(w.density).real:.12f}",
      "and its eigenvalues are", np.round(np.linalg.eigvalsh(w.density), 12))
