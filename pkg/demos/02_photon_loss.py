"""Photon loss turns into a phase flip, checked against two brute-force models.

Run: python demos/02_photon_loss.py
"""
import numpy as np

from catdamp import TwoModeCatState, flip_prob_pair, flip_prob_single, flip_prob_state, transmit_direct
from catdamp.oracle import cat_span_state, fock_channel_density, gram_channel_density

# Flip probability for a single qubit and for a Bell-type pair.
for eta in (2 / 3, 0.9):
    row = [f"{flip_prob_single(a, eta):.4f}" for a in (0.5, 1.0, 2.0, 3.0)]
    print(f"eta={eta:.3f}  p_e at alpha=0.5,1,2,3: {row}")
print("P_e(alpha=1, eta=0.9) =", flip_prob_pair(1.0, 0.9))

# The renormalised flip weight depends on the state.
even = TwoModeCatState(1.0, 1.0, 0.5, 0.0)
odd = TwoModeCatState(1.0, 1.0, 0.5, np.pi)
print("flip weight, even pair:", flip_prob_state(even, 0.9))
print("flip weight, odd pair: ", flip_prob_state(odd, 0.9))

# Same output from the closed form, from coherent overlaps, and from a
# beam splitter in a truncated Fock space.
s = TwoModeCatState(1.2, 1.2, 0.3, np.pi / 2)
rho = transmit_direct(s, 0.7)
ref = cat_span_state(1.2, 0.3, np.pi / 2)
gram = gram_channel_density(ref, 0.7)
fock = fock_channel_density(ref, 0.7, cutoff=40)
print("\nmax |closed form - overlaps|:", np.abs(rho - gram).max())
print("max |overlaps - Fock|:      ", np.abs(gram - fock.density).max())
print("Fock truncation deficit:    ", fock.truncation_error)
