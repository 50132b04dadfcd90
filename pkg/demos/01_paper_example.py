"""
Two controls, two fractional bits: the worked bit-table example.

The four angles are exact two-bit binary fractions of a full turn, so the
oracular circuit reproduces the multiplexor with no error at all.
"""
import numpy as np

from oracmux import (build_full_oracle, check_bound, quantize, restricted_unitary,
                     synth_multiplexor_oracular, reference_multiplexor, spectral_distance)

# theta_b = 2pi * 0.a1a2 (binary) for b = 00, 01, 10, 11
angles = 2 * np.pi * np.array([0b01, 0b11, 0b10, 0b00]) / 4

table = quantize(angles, n_alpha=2)
print("bit table a[b, k]  (rows b = 00, 01, 10, 11; columns k = 1, 2)")
print(table.to_text())

# one multi-controlled X per set bit; '!' marks a control that fires on |0>
print("oracle Omega:")
print(build_full_oracle(table))

oc = synth_multiplexor_oracular(angles, n_alpha=2)
print("\nfull oracular circuit:")
print(oc.circuit)

# feed every |b>|0>_alpha|t> through and keep the alpha = 0 sector
u, leak = restricted_unitary(oc.circuit, oc.ancillas)
print("\nspectral error vs exact multiplexor:", spectral_distance(reference_multiplexor(angles), u))
print("amplitude left in the ancillas:", leak)

print("\nreport:", check_bound(angles, 2).to_dict())
