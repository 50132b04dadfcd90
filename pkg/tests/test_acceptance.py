"""Exit criteria. Each test prints one ``AC<n> PASS|FAIL`` line."""
import subprocess
import sys
import time

import numpy as np
import pytest
from scipy.linalg import expm

from oracmux.circuit import Polarity, alpha, beta, count_gates
from oracmux.exact import synth_multiplexor_exact
from oracmux.oracular import build_full_oracle, synth_diagonal_oracular, synth_multiplexor_oracular
from oracmux.quantize import dequantize, per_angle_error, quantize
from oracmux.simulate import (circuit_to_unitary, multiplexor_exponential_form,
                              multiplexor_product_form, reference_multiplexor, restricted_unitary,
                              spectral_distance)

from conftest import SX, SY, SZ

TWO_PI = 2 * np.pi
P, N = Polarity.POS, Polarity.NEG


@pytest.fixture
def verdict(capsys):
    def _verdict(n, ok, detail):
        with capsys.disabled():
            print(f"\nAC{n} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail
    return _verdict


def test_ac1_paper_bit_table_and_oracle(verdict):
    start = time.perf_counter()
    angles = [TWO_PI * 0b01 / 4, TWO_PI * 0b11 / 4, TWO_PI * 0b10 / 4, 0.0]
    table = quantize(angles, 2, "truncate")
    omega = build_full_oracle(table)
    elapsed = time.perf_counter() - start
    got = [(g.target, {c.qubit: c.polarity for c in g.controls}) for g in omega.gates]
    expected = [
        (alpha(1), {beta(0): P, beta(1): N}),
        (alpha(1), {beta(0): N, beta(1): P}),
        (alpha(2), {beta(0): N, beta(1): N}),
        (alpha(2), {beta(0): P, beta(1): N}),
    ]
    ok = (table.bits.astype(int).tolist() == [[0, 1], [1, 1], [1, 0], [0, 0]]
          and got == expected and count_gates(omega) == {"MCX(2)": 4} and elapsed < 1.0)
    verdict(1, ok, f"table={table.bits.astype(int).tolist()} gates={len(omega)} in {elapsed:.3f}s")


def test_ac2_error_bound(verdict):
    rng = np.random.default_rng(2)
    violations = mismatch = total = 0
    worst_ratio = 0.0
    start = time.perf_counter()
    for n_beta in (1, 2, 3):
        for n_alpha in range(1, 9):
            bound = TWO_PI / 2 ** n_alpha
            for _ in range(100):
                th = rng.uniform(0, TWO_PI, 2 ** n_beta)
                oc = synth_multiplexor_oracular(th, n_alpha, "truncate")
                u, _ = restricted_unitary(oc.circuit, oc.ancillas)
                err = spectral_distance(reference_multiplexor(th), u)
                hat = dequantize(oc.bit_table).angles
                formula = max(per_angle_error(t, h) for t, h in zip(th, hat))
                violations += err > bound
                mismatch += abs(err - formula) > 1e-10
                worst_ratio = max(worst_ratio, err / bound)
                total += 1
    elapsed = time.perf_counter() - start
    verdict(2, violations == 0 and mismatch == 0,
            f"{total} instances, {violations} bound violations, {mismatch} formula mismatches, "
            f"worst error/bound={worst_ratio:.4f}, {elapsed:.1f}s")


def test_ac3_exact_baseline(verdict):
    rng = np.random.default_rng(3)
    counts, worst = [], 0.0
    for n_beta in (1, 2, 3, 4):
        th = rng.uniform(0, TWO_PI, 2 ** n_beta)
        c = synth_multiplexor_exact(th)
        counts.append(count_gates(c)["CNOT"])
        worst = max(worst, np.max(np.abs(circuit_to_unitary(c) - reference_multiplexor(th))))
    ok = counts == [2, 4, 8, 16] and worst <= 1e-10
    verdict(3, ok, f"CNOT counts {counts}, max entry error {worst:.2e}")


def test_ac4_three_forms(verdict):
    rng = np.random.default_rng(4)
    worst = 0.0
    for i in range(50):
        th = rng.uniform(-TWO_PI, TWO_PI, 2 ** (1 + i % 3))
        s = reference_multiplexor(th)
        worst = max(worst, np.max(np.abs(multiplexor_exponential_form(th) - s)),
                    np.max(np.abs(multiplexor_product_form(th) - s)))
    verdict(4, worst <= 1e-10, f"50 instances, max entry disagreement {worst:.2e}")


def test_ac5_diagonal_reduction(verdict):
    rng = np.random.default_rng(5)
    rx = expm(1j * np.pi / 4 * SX)
    conj = max(np.max(np.abs(rx.conj().T @ expm(1j * t * SY) @ rx - expm(1j * t * SZ)))
               for t in rng.uniform(-TWO_PI, TWO_PI, 100))
    diag_err = leak = 0.0
    for i in range(30):
        n_beta, n_alpha = 1 + i % 3, 1 + i % 6
        th = rng.uniform(0, TWO_PI, 2 ** n_beta)
        oc = synth_diagonal_oracular(th, n_alpha)
        u, lk = restricted_unitary(oc.circuit, oc.ancillas)
        hat = dequantize(oc.bit_table).angles
        diag_err = max(diag_err, np.max(np.abs(u - np.diag(np.exp(1j * hat)))))
        leak = max(leak, lk)
    ok = conj <= 1e-12 and diag_err <= 1e-10 and leak <= 1e-12
    verdict(5, ok, f"conjugation {conj:.2e}, diagonal {diag_err:.2e}, leak {leak:.2e}")


def test_ac6_exact_at_dyadic(verdict):
    rng = np.random.default_rng(6)
    worst = 0.0
    for n_beta in (1, 2, 3):
        for n_alpha in range(1, 9):
            m = rng.integers(0, 2 ** n_alpha, 2 ** n_beta)
            th = TWO_PI * m / 2 ** n_alpha
            oc = synth_multiplexor_oracular(th, n_alpha)
            u, _ = restricted_unitary(oc.circuit, oc.ancillas)
            worst = max(worst, spectral_distance(reference_multiplexor(th), u))
    verdict(6, worst <= 1e-10, f"24 dyadic configurations, max realized error {worst:.2e}")


def test_ac7_sine_inequality(verdict):
    rng = np.random.default_rng(7)
    pairs = rng.uniform(-20, 20, (10_000, 2))
    bad = sum(per_angle_error(t, h) > abs(t - h) for t, h in pairs)
    verdict(7, bad == 0, f"10000 pairs, {bad} violations")


def test_ac8_cli_determinism(verdict, tmp_path):
    def cli(out):
        return subprocess.run(
            [sys.executable, "-m", "oracmux.cli", "compare", "--n-beta", "3", "--n-alpha", "5",
             "--seed", "8", "--out", str(out)], capture_output=True, text=True)

    runs = [cli(tmp_path / "a"), cli(tmp_path / "b")]
    names = ("circuit_oracular.json", "circuit_exact.json", "report.json")
    same = all(r.returncode == 0 for r in runs) and all(
        (tmp_path / "a" / n).read_bytes() == (tmp_path / "b" / n).read_bytes() for n in names)
    verdict(8, same, f"exit codes {[r.returncode for r in runs]}, {len(names)} artifacts compared")
