"""
Dense simulation and error metrology.

Everything here is desk-scale linear algebra: circuits are applied to a batch
of basis columns held as a ``(2,)*n + (batch,)`` tensor, so building the part
of a unitary that acts on ``ancilla = |0>`` costs only as many columns as the
non-ancilla space has.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable

import numpy as np
from scipy.linalg import expm

from oracmux.circuit import Circuit, Gate, GateKind, QubitId, count_gates
from oracmux.oracular import (Axis, MultiplexorSpec, OracularCircuit, synth_diagonal_oracular,
                              synth_multiplexor_oracular)
from oracmux.quantize import AngleVector, Mode, as_angle_vector, dequantize, quantize

DEFAULT_MAX_QUBITS = 12
UNITARITY_TOL = 1e-10
LEAK_TOL = 1e-12

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
P0 = np.diag([1.0, 0.0]).astype(complex)
P1 = np.diag([0.0, 1.0]).astype(complex)


class QubitCapExceeded(ValueError):
    def __init__(self, n_qubits: int, cap: int):
        super().__init__(f"circuit has {n_qubits} qubits, over the dense-simulation cap of {cap}")
        self.n_qubits = n_qubits
        self.cap = cap


def rot(axis: str, angle: float) -> np.ndarray:
    """``exp(i angle sigma_axis)``."""
    c, s = np.cos(angle), np.sin(angle)
    if axis == "y":
        return np.array([[c, s], [-s, c]], dtype=complex)
    if axis == "x":
        return np.array([[c, 1j * s], [1j * s, c]], dtype=complex)
    if axis == "z":
        return np.diag([np.exp(1j * angle), np.exp(-1j * angle)])
    raise ValueError(f"unknown axis {axis!r}")


def gate_matrix(g: Gate) -> np.ndarray:
    """2x2 matrix the gate applies to its target when its controls fire."""
    if g.kind in (GateKind.X, GateKind.CNOT):
        return SIGMA_X
    return rot(g.kind.value[-1], g.angle)


def _check_cap(n: int, max_qubits: int):
    if n > max_qubits:
        raise QubitCapExceeded(n, max_qubits)


def apply_circuit(c: Circuit, states: np.ndarray) -> np.ndarray:
    """Apply ``c`` to column states of shape ``(2**n,)`` or ``(2**n, batch)``."""
    n = c.n_qubits
    states = np.asarray(states, dtype=complex)
    single = states.ndim == 1
    batch = 1 if single else states.shape[1]
    if states.shape[0] != 2 ** n:
        raise ValueError(f"state dimension {states.shape[0]} does not match {n} qubits")
    psi = states.reshape((2,) * n + (batch,)).copy()
    axis = {q: i for i, q in enumerate(c.qubits)}
    for g in c.gates:
        m = gate_matrix(g)
        idx = [slice(None)] * (n + 1)
        for cs in g.controls:
            idx[axis[cs.qubit]] = cs.value
        t = axis[g.target]
        i0, i1 = list(idx), list(idx)
        i0[t], i1[t] = 0, 1
        i0, i1 = tuple(i0), tuple(i1)
        a0 = psi[i0].copy()
        a1 = psi[i1]
        psi[i0] = m[0, 0] * a0 + m[0, 1] * a1
        psi[i1] = m[1, 0] * a0 + m[1, 1] * a1
    out = psi.reshape(2 ** n, batch)
    return out[:, 0] if single else out


def basis_state(c: Circuit, assignment: dict[QubitId, int] | None = None) -> np.ndarray:
    """Computational basis state over ``c.qubits``; unlisted qubits are ``|0>``."""
    assignment = assignment or {}
    index = 0
    for q in c.qubits:
        index = (index << 1) | int(assignment.get(q, 0))
    psi = np.zeros(2 ** c.n_qubits, dtype=complex)
    psi[index] = 1.0
    return psi


def unitarity_error(u: np.ndarray) -> float:
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def circuit_to_unitary(c: Circuit, max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
    _check_cap(c.n_qubits, max_qubits)
    u = apply_circuit(c, np.eye(2 ** c.n_qubits, dtype=complex))
    err = unitarity_error(u)
    if err > UNITARITY_TOL:
        raise ArithmeticError(f"circuit unitary is off by {err:.3g} from unitarity")
    return u


def restricted_unitary(c: Circuit, ancillas: Iterable[QubitId],
                       max_qubits: int = DEFAULT_MAX_QUBITS) -> tuple[np.ndarray, float]:
    """Action of ``c`` on inputs with every ancilla in ``|0>``.

    Returns the matrix on the non-ancilla qubits (in circuit order) and the
    largest norm any input column leaks into sectors where an ancilla is not
    ``|0>``.
    """
    ancillas = set(ancillas)
    if not ancillas <= set(c.qubits):
        raise ValueError("ancillas must be qubits of the circuit")
    n = c.n_qubits
    _check_cap(n, max_qubits)
    free_pos = [i for i, q in enumerate(c.qubits) if q not in ancillas]
    m = len(free_pos)

    # full index of each free basis state with ancillas at 0
    sub = np.arange(2 ** m)
    full = np.zeros(2 ** m, dtype=np.int64)
    for bit, pos in enumerate(reversed(free_pos)):
        full |= ((sub >> bit) & 1) << (n - 1 - pos)

    inputs = np.zeros((2 ** n, 2 ** m), dtype=complex)
    inputs[full, sub] = 1.0
    out = apply_circuit(c, inputs)
    restricted = out[full, :]
    rest = np.delete(out, full, axis=0)
    leak = float(np.max(np.linalg.norm(rest, axis=0))) if rest.size else 0.0
    return restricted, leak


def _projector(b: int, n_beta: int) -> np.ndarray:
    """``P_b`` on beta qubits, beta_{n-1} most significant."""
    p = np.zeros((2 ** n_beta, 2 ** n_beta), dtype=complex)
    p[b, b] = 1.0
    return p


def reference_multiplexor(angles: AngleVector, axis: Axis | str = Axis.Y) -> np.ndarray:
    """Sum form: block diagonal with ``exp(i theta_b sigma)`` blocks, tau least significant."""
    angles = as_angle_vector(angles)
    ax = Axis(axis).value
    size = len(angles)
    u = np.zeros((2 * size, 2 * size), dtype=complex)
    for b, theta in enumerate(angles.angles):
        u[2 * b:2 * b + 2, 2 * b:2 * b + 2] = rot(ax, theta)
    return u


def multiplexor_exponential_form(angles: AngleVector, axis: Axis | str = Axis.Y) -> np.ndarray:
    """``expm(i sum_b theta_b sigma(tau) P_b(beta))``."""
    angles = as_angle_vector(angles)
    sigma = SIGMA_Y if Axis(axis) is Axis.Y else SIGMA_Z
    n = angles.n_beta
    h = sum(theta * np.kron(_projector(b, n), sigma) for b, theta in enumerate(angles.angles))
    return expm(1j * h)


def multiplexor_product_form(angles: AngleVector, axis: Axis | str = Axis.Y) -> np.ndarray:
    """``prod_b expm(i theta_b sigma(tau) P_b(beta))``."""
    angles = as_angle_vector(angles)
    sigma = SIGMA_Y if Axis(axis) is Axis.Y else SIGMA_Z
    n = angles.n_beta
    u = np.eye(2 ** (n + 1), dtype=complex)
    for b, theta in enumerate(angles.angles):
        u = expm(1j * theta * np.kron(_projector(b, n), sigma)) @ u
    return u


def reference_diagonal(angles: AngleVector) -> np.ndarray:
    return np.diag(np.exp(1j * as_angle_vector(angles).angles))


def spectral_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Largest singular value of ``a - b``."""
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.svd(a - b, compute_uv=False)[0])


def multiplexor_distance(theta, theta_hat) -> float:
    """Closed form of the spectral distance between two multiplexors: worst block."""
    d = np.asarray(theta, dtype=float) - np.asarray(theta_hat, dtype=float)
    return float(np.max(2 * np.abs(np.sin(d / 2))))


@dataclass
class SynthReport:
    n_beta: int
    n_alpha: int
    mode: str
    bound: float
    realized_error: float
    counts: dict[str, int] = field(default_factory=dict)
    leak: float = 0.0
    target: str = "multiplexor"

    @property
    def passed(self) -> bool:
        return self.realized_error <= self.bound and self.leak <= LEAK_TOL

    def to_dict(self) -> dict:
        d = asdict(self)
        d["counts"] = dict(sorted(self.counts.items()))
        d["pass"] = self.passed
        return d



def realized_error(oc: OracularCircuit, angles: AngleVector, diagonal: bool = False,
                   max_qubits: int = DEFAULT_MAX_QUBITS) -> tuple[float, float]:
    """Spectral error against the exact target, and the ancilla leak."""
    restricted, leak = restricted_unitary(oc.circuit, oc.ancillas, max_qubits)
    ref = reference_diagonal(angles) if diagonal else reference_multiplexor(angles)
    return spectral_distance(ref, restricted), leak


def check_bound(spec: MultiplexorSpec | AngleVector, n_alpha: int,
                mode: Mode | str = Mode.TRUNCATE, diagonal: bool = False,
                max_qubits: int = DEFAULT_MAX_QUBITS) -> SynthReport:
    """Synthesize the oracular circuit and compare its error with the analytic bound."""
    angles = spec.angles if isinstance(spec, MultiplexorSpec) else as_angle_vector(spec)
    synth = synth_diagonal_oracular if diagonal else synth_multiplexor_oracular
    oc = synth(angles, n_alpha, mode)
    _check_cap(oc.circuit.n_qubits, max_qubits)
    err, leak = realized_error(oc, angles, diagonal, max_qubits)
    return SynthReport(
        n_beta=angles.n_beta, n_alpha=n_alpha, mode=Mode(mode).value, bound=oc.bound,
        realized_error=err, counts=dict(count_gates(oc.circuit)), leak=leak,
        target="diagonal" if diagonal else "multiplexor",
    )


def quantized_angles(angles: AngleVector, n_alpha: int, mode: Mode | str = Mode.TRUNCATE) -> AngleVector:
    return dequantize(quantize(angles, n_alpha, mode))


def dump_matrix(u: np.ndarray) -> str:
    """Row-major text dump, one row per line, entries as ``re,im`` pairs."""
    return "".join(
        " ".join(f"{z.real:.17g},{z.imag:.17g}" for z in row) + "\n" for row in np.asarray(u)
    )
