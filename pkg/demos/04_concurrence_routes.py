"""Entanglement after the channel, by three routes.

The general route diagonalises the output density; the X route reads the
closed form off an X-shaped density; the factorised route multiplies the
Bell-channel concurrence by the initial one.  With one rail they agree to
rounding.  With a code they do not, and the gap is printed.

Run: python demos/04_concurrence_routes.py
"""
import numpy as np

from catdamp import (TwoModeCatState, XMatrix, concurrence, concurrence_x, evolved_concurrence,
                     initial_concurrence, transmit_encoded)

print("initial concurrence, w = 1/2:")
for theta in (0.0, np.pi / 2, np.pi):
    c = [initial_concurrence(TwoModeCatState(a, a, 0.5, theta)) for a in (0.3, 0.6, 1.0)]
    print(f"  theta={theta:.3f}", np.round(c, 6))

alpha, eta = 0.8, 0.2
s = TwoModeCatState(alpha, alpha, 0.5, 0.0)
print(f"\nalpha={alpha}, eta={eta}, even cat")
print(" n   general      X matrix     factorised")
for n in (1, 3, 5, 11):
    rho = transmit_encoded(s, eta, n)
    print(f"{n:2d}   {concurrence(rho):.9f}  {concurrence_x(XMatrix.from_dense(rho)):.9f}  "
          f"{evolved_concurrence(alpha, eta, n, s):.9f}")

s = TwoModeCatState(alpha, alpha, 0.5, np.pi)
print("\nodd cat, where all routes agree for every n")
for n in (1, 3, 5, 11):
    rho = transmit_encoded(s, eta, n)
    print(f"{n:2d}   {concurrence(rho):.9f}  {evolved_concurrence(alpha, eta, n, s):.9f}")
