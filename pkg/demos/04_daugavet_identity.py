"""The norm identities around x <x, x>.

For any module element x the derivative pair of (x, x<x,x>) collapses to
the single value ||x||^4, which forces the additive norm identity
||a x + b x<x,x>|| = a ||x|| + b ||x||^3 for positive a, b.  For square
matrices this reads ||T + T T* T|| = ||T|| + ||T||^3, with an explicit
unit vector on which both summands act in perfect alignment.
"""

import numpy as np

from rhoperp import (is_norm_parallel, inner_product, module_action,
                     module_daugavet_check, operator_daugavet_witness,
                     rho_cube_identity)
from rhoperp.verify import random_element

rng = np.random.default_rng(21)
x = random_element(rng, 3, 3)

rep = rho_cube_identity(x)
print(f"rho_plus(x, x<x,x>)  = {rep.rho_plus:.10f}")
print(f"rho_minus(x, x<x,x>) = {rep.rho_minus:.10f}")
print(f"||x||^4              = {rep.norm_fourth:.10f}")
print(f"largest deviation    = {rep.max_deviation:.3e}")

print("\nAdditive norm identity for several coefficient pairs:")
for alpha, beta in ((1.0, 1.0), (0.5, 2.0), (3.0, 0.1)):
    d = module_daugavet_check(x, alpha, beta)
    print(f"  a={alpha:3.1f} b={beta:3.1f}:  lhs = {d.lhs:.10f}  rhs = {d.rhs:.10f}"
          f"  residual = {d.residual:.2e}")

par = is_norm_parallel(x, module_action(x, inner_product(x, x)))
print(f"\nx and x<x,x> are norm-parallel with xi = {par.witness:.6f}")

w = operator_daugavet_witness(x)
print(f"\nOperator form: ||T + TT*T|| = {w.sum_norm:.10f}"
      f" = {w.norm_t:.10f} + {w.norm_cube:.10f}")
print(f"witness vector aligns T/||T|| and TT*T/||TT*T||:"
      f" residual = {w.alignment_residual:.3e}")
