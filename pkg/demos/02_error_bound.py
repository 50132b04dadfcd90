"""
How the realized error tracks the 2pi / 2**N_alpha bound.

For random angles the realized spectral error is the worst per-angle error
2|sin((theta_b - theta_hat_b)/2)|. Truncation keeps it under 2pi/2**N and
rounding to the nearest value under half that.
"""
import numpy as np

from oracmux import check_bound

rng = np.random.default_rng(0)
n_beta, trials = 3, 50

print(f"{'N_alpha':>7} {'bound':>10} {'max err (trunc)':>16} {'max err (nearest)':>18}")
for n_alpha in range(1, 9):
    worst = {"truncate": 0.0, "nearest": 0.0}
    for _ in range(trials):
        theta = rng.uniform(0, 2 * np.pi, 2 ** n_beta)
        for mode in worst:
            rep = check_bound(theta, n_alpha, mode)
            assert rep.passed
            worst[mode] = max(worst[mode], rep.realized_error)
    bound = 2 * np.pi / 2 ** n_alpha
    print(f"{n_alpha:>7} {bound:>10.5f} {worst['truncate']:>16.5f} {worst['nearest']:>18.5f}")
