"""
Exact Gray-code compilation of Y multiplexors and diagonal unitaries.

A multiplexor with ``N`` controls becomes ``2**N`` rotations on ``tau``
interleaved with ``2**N`` CNOTs. Between rotation ``j`` and ``j + 1`` the CNOT
is controlled by the beta bit that changes from Gray code ``g(j)`` to
``g(j+1)``, and the last CNOT closes the cycle back to ``g(0) = 0``. For input
``|b>`` rotation ``j`` is seen with sign ``(-1)**<g(j), b>``, so

    theta_b = sum_j (-1)**<g(j), b> phi_j

and ``phi = T theta`` with ``T = H[g(j), :] / 2**N`` (H the Sylvester
Hadamard matrix) inverts it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from oracmux.circuit import TAU, Circuit, beta, cnot, compose, roty, rotx
from oracmux.oracular import Axis, MultiplexorSpec
from oracmux.quantize import AngleVector, as_angle_vector


def gray_code(j: int) -> int:
    return j ^ (j >> 1)


def _parity(x: np.ndarray) -> np.ndarray:
    x = x.copy()
    p = np.zeros_like(x)
    while np.any(x):
        p ^= x & 1
        x >>= 1
    return p


def angle_transform(n_beta: int) -> np.ndarray:
    """Matrix ``T[j, b] = 2**-n (-1)**<g(j), b>`` mapping theta to phi."""
    size = 2 ** n_beta
    g = np.array([gray_code(j) for j in range(size)])
    b = np.arange(size)
    signs = 1 - 2 * _parity(g[:, None] & b[None, :])
    return signs / size


@dataclass(frozen=True)
class GrayPlan:
    n_beta: int
    rotation_angles: np.ndarray
    cnot_controls: tuple[int, ...]


def gray_plan(angles: AngleVector) -> GrayPlan:
    angles = as_angle_vector(angles)
    n = angles.n_beta
    size = 2 ** n
    phi = angle_transform(n) @ angles.angles
    controls = tuple(
        (gray_code(j) ^ gray_code((j + 1) % size)).bit_length() - 1 for j in range(size)
    )
    return GrayPlan(n, phi, controls)


def synth_multiplexor_exact(spec: MultiplexorSpec | AngleVector) -> Circuit:
    if not isinstance(spec, MultiplexorSpec):
        spec = MultiplexorSpec(spec)
    if spec.axis is not Axis.Y:
        raise ValueError("exact synthesis is implemented for Y multiplexors")
    plan = gray_plan(spec.angles)
    gates = []
    for phi, ctrl in zip(plan.rotation_angles, plan.cnot_controls):
        gates.append(roty(TAU, phi))
        gates.append(cnot(beta(ctrl), TAU))
    return Circuit(tuple(gates), tuple(beta(j) for j in range(plan.n_beta)) + (TAU,))


def synth_diagonal_exact(angles: AngleVector) -> Circuit:
    """``diag(exp(i theta_b))`` on beta, with ``tau`` as a ``|0>`` ancilla."""
    mux = synth_multiplexor_exact(MultiplexorSpec(angles))
    return compose(compose(Circuit((rotx(TAU, np.pi / 4),)), mux),
                   Circuit((rotx(TAU, -np.pi / 4),)))
