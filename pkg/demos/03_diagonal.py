"""
Diagonal unitaries through a Z multiplexor.

Conjugating the Y multiplexor on tau by RotX(pi/4) turns it into a Z
multiplexor, and with tau in |0> that acts as diag(exp(i theta_b)) on the
controls. Both the exact and the oracular versions are checked here.
"""
import numpy as np

from oracmux import (TAU, count_gates, reference_diagonal, restricted_unitary, spectral_distance,
                     synth_diagonal_exact, synth_diagonal_oracular)

theta = np.array([0.0, np.pi / 2, np.pi, 3 * np.pi / 2, 0.3, 1.1, 2.9, 5.0])
target = reference_diagonal(theta)

exact = synth_diagonal_exact(theta)
u, leak = restricted_unitary(exact, [TAU])
print("exact:    ", dict(count_gates(exact)), f"error {spectral_distance(target, u):.2e}, leak {leak:.1e}")

for n_alpha in (2, 4, 6):
    oc = synth_diagonal_oracular(theta, n_alpha)
    u, leak = restricted_unitary(oc.circuit, oc.ancillas)
    off = np.max(np.abs(u - np.diag(np.diag(u))))
    print(f"N_alpha={n_alpha}:", dict(count_gates(oc.circuit)),
          f"error {spectral_distance(target, u):.4f} <= {oc.bound:.4f}, off-diagonal {off:.1e}")
