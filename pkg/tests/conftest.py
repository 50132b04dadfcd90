import numpy as np
import pytest
from scipy.linalg import expm

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = {"roty": SY, "rotx": SX, "rotz": SZ}

PAPER_ANGLES = [np.pi / 2, 3 * np.pi / 2, np.pi, 0.0]
PAPER_TABLE = [[0, 1], [1, 1], [1, 0], [0, 0]]


def kron_all(mats):
    out = np.eye(1, dtype=complex)
    for m in mats:
        out = np.kron(out, m)
    return out


def dense_gate(gate, qubits):
    """Full matrix of one gate, built from projectors with kron.

    Independent of the simulator: base 2x2 from scipy expm of the Pauli
    generator, controls as P_0/P_1 factors.
    """
    kind = gate.kind.value
    base = SX if kind in ("x", "cnot") else expm(1j * gate.angle * PAULI[kind])
    ctrl = {cs.qubit: cs.value for cs in gate.controls}
    proj = [np.diag([1.0, 0.0]), np.diag([0.0, 1.0])]
    fire = [proj[ctrl[q]] if q in ctrl else np.eye(2) for q in qubits]
    fire_u = [proj[ctrl[q]] if q in ctrl else (base if q == gate.target else np.eye(2)) for q in qubits]
    return np.eye(2 ** len(qubits)) - kron_all(fire) + kron_all(fire_u)


def dense_unitary(circuit):
    u = np.eye(2 ** circuit.n_qubits, dtype=complex)
    for g in circuit.gates:
        u = dense_gate(g, circuit.qubits) @ u
    return u


def block_mux(thetas, pauli=SY):
    """Block-diagonal multiplexor from expm blocks; tau is the low bit."""
    n = len(thetas)
    u = np.zeros((2 * n, 2 * n), dtype=complex)
    for b, t in enumerate(thetas):
        u[2 * b:2 * b + 2, 2 * b:2 * b + 2] = expm(1j * t * pauli)
    return u


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
