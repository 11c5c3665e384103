"""Cat qubits live on two non-orthogonal coherent states |alpha> and |-alpha>.

Run: python demos/01_cat_basis.py
"""
import numpy as np

from catdamp import CatQubit, ortho_coeffs, overlap, qubit_norm

# The overlap dies off quickly: by alpha = 2 the two states are nearly orthogonal.
for alpha in (0.5, 1.0, 1.5, 2.0, 3.0):
    print(f"alpha={alpha:.1f}  <-alpha|alpha>={overlap(alpha, -alpha):.3e}")

# The even/odd cats give an orthonormal basis u, v.  Each coherent state
# has coordinates (mu, +-nu) in it.
mu, nu = ortho_coeffs(1.0)
print("\nmu, nu at alpha=1:", mu, nu)

# A qubit a|-alpha> + b|alpha> needs a norm that depends on alpha.
s = 1 / np.sqrt(2)
even = CatQubit(s, s, 1.0)
odd = CatQubit(s, -s, 1.0)
print("norms of the even and odd cat:", qubit_norm(even), qubit_norm(odd))
print("even cat in (u, v):", np.round(even.vector(), 12))
print("odd cat in (u, v): ", np.round(odd.vector(), 12))
