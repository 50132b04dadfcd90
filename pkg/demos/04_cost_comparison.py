"""
Gate budgets of the exact and oracular compilations.

The exact Gray-code circuit spends 2**N_beta CNOTs. The oracular circuit
spends no bare CNOTs but needs multi-controlled X gates whose cost depends
on how they are decomposed, so the comparison takes a cost per gate class.
The per-class weights below are illustrative placeholders, not measurements.
"""
import numpy as np

from oracmux import count_gates, synth_multiplexor_exact, synth_multiplexor_oracular, weighted_cost

rng = np.random.default_rng(1)


def weights_for(n_beta):
    # rough CNOT-equivalents: 6 per Toffoli-sized gate, linear growth beyond
    w = {"CNOT": 1.0, "ROT": 0.0, "CROT(1)": 2.0}
    w[f"MCX({n_beta})"] = 1.0 if n_beta == 1 else 6.0 * (n_beta - 1)
    return w


for n_beta in (1, 2, 3, 4):
    theta = rng.uniform(0, 2 * np.pi, 2 ** n_beta)
    exact = synth_multiplexor_exact(theta)
    w = weights_for(n_beta)
    print(f"N_beta={n_beta}: exact {dict(count_gates(exact))} -> cost {weighted_cost(exact, w):g}")
    for n_alpha in (2, 4):
        oc = synth_multiplexor_oracular(theta, n_alpha)
        print(f"   N_alpha={n_alpha}: {dict(count_gates(oc.circuit))} -> cost {weighted_cost(oc.circuit, w):g}")
