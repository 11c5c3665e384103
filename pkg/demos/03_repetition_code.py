"""Majority vote over n rails, as polynomials and by brute enumeration.

Run: python demos/03_repetition_code.py
"""
import numpy as np

from catdamp import success_prob
from catdamp.oracle import majority_vote_success

p = np.array([0.01, 0.05, 0.1, 0.2, 0.3, 0.45])
for n in (1, 3, 5, 11, 51):
    print(f"n={n:2d}", np.round(success_prob(n, p), 6))

# 3 and 5 rails in closed form
print("\n1 - 3p^2 + 2p^3:", np.round(1 - 3 * p**2 + 2 * p**3, 6))
print("enumerated n=13 vs polynomial:",
      np.abs(majority_vote_success(13, p) - success_prob(13, p)).max())

# past p = 1/2 the code works against you
print("\nat p=0.6:", [round(success_prob(n, 0.6), 4) for n in (1, 3, 5, 11)])
