"""A 2x2 tour: six orthogonality relations that genuinely differ.

Three matrices are enough to separate the relations: the identity T,
the balanced sign flip S = diag(-1, 1), and the one-sided R = diag(-1, 0),
all viewed as elements of the module of 2x2 matrices over itself.
"""

from rhoperp import (incomparability_triple, is_bj, is_bj_real, is_bj_strong,
                     is_ip_orthogonal, is_norm_parallel, is_rho_orthogonal,
                     rho_pair, state_value, inner_product)

T, S, R = incomparability_triple()

print("T =\n", T.real, "\nS =\n", S.real, "\nR =\n", R.real, sep="")

print("\nOne-sided norm derivatives (exact spectral values):")
for name, y in (("S", S), ("R", R)):
    pair = rho_pair(T, y)
    print(f"  rho_plus(T, {name}) = {pair.rho_plus:+.6f}   "
          f"rho_minus(T, {name}) = {pair.rho_minus:+.6f}")

relations = (is_ip_orthogonal, is_bj, is_bj_real, is_bj_strong,
             is_rho_orthogonal, is_norm_parallel)

print("\nRelation table (rows: direction, columns: relation):")
header = "".join(f"{rel.__name__.removeprefix('is_'):>16s}" for rel in relations)
print(f"{'':>6s}{header}")
for name, y in (("S", S), ("R", R)):
    row = "".join(f"{str(rel(T, y).holds):>16s}" for rel in relations)
    print(f"(T, {name}){row}")

print("""
Reading the table:
  * (T, S) is rho-orthogonal but NOT strongly Birkhoff-James orthogonal:
    the algebra element C = diag(1, -1) collapses T + S C to zero.
  * (T, R) is strongly BJ orthogonal but NOT rho-orthogonal:
    rho_plus + rho_minus = -1 there.
  So neither of the two relations contains the other.""")

rep = is_bj_strong(T, R)
phi_value = state_value(rep.witness, inner_product(T, R) @ inner_product(R, T)).real
print(f"Strong-BJ witness state for (T, R): density =\n{rep.witness.density.real}")
print(f"It annihilates <T,R><R,T>: phi(...) = {phi_value:.2e}")
