"""From norming states to numerical-range membership certificates.

The states attaining phi(<x, x>) = ||x||^2 are the density matrices
supported on the top eigenspace of <x, x>.  Their values on any algebra
element a sweep out the numerical range of the compression V* a V, so
deciding Birkhoff-James orthogonality reduces to the question
"is 0 in that numerical range?" - answered here with certificates.
"""

import numpy as np

from rhoperp import (face_compression, inner_product, module_norm,
                     state_from_face_vector, state_value, top_face,
                     zero_in_numrange)
from rhoperp.verify import random_degenerate_element, random_element

rng = np.random.default_rng(11)

x = random_degenerate_element(rng, 5, 4, multiplicity=2)
face = top_face(x)
print(f"||x||^2 = {module_norm(x)**2:.6f}; top eigenspace dimension k = {face.dim}")

p = state_from_face_vector(face, np.array([0.6, 0.8]))
print("A face state indeed attains the norm:",
      f"phi(<x,x>) = {state_value(p, inner_product(x, x)).real:.12f}")

a = random_element(rng, 4, 4)
comp = face_compression(face, a)
print(f"\nCompression of a random algebra element to the face: {comp.shape[0]}x{comp.shape[1]}")

res = zero_in_numrange(comp)
print("0 in numerical range of the compression?", res.contains_zero)
print("signed distance from 0 to the boundary:", f"{res.margin:+.6f}")
if res.contains_zero:
    z = res.vector
    print("membership certificate: unit z with |z* M z| =", f"{abs(z.conj() @ comp @ z):.3e}")
else:
    h = (np.exp(1j * res.angle) * comp + np.exp(-1j * res.angle) * comp.conj().T) / 2
    print("separation certificate: angle with lambda_max(Re(e^{it} M)) =",
          f"{np.linalg.eigvalsh(h)[-1]:+.6f}")

# shift the compression so that 0 is pushed outside, and certify that too
shifted = comp + (3.0 + 1.0j) * np.eye(face.dim)
res2 = zero_in_numrange(shifted)
print("\nAfter shifting by 3 + i:")
print("0 in numerical range?", res2.contains_zero,
      " margin:", f"{res2.margin:+.6f}", " separating angle:", f"{res2.angle:.4f}")
