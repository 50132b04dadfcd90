"""
Oracular approximation of R_y(2)-multiplexors and diagonal unitaries.

The angles are quantized to ``N_alpha`` fractional bits and written into
ancillas ``alpha_1..alpha_N`` by the oracle ``Omega``: one multi-controlled X
per set bit of the bit table. Controlled rotations by ``2pi/2**k`` from each
``alpha_k`` then rotate ``tau`` by the stored angle, and a second ``Omega``
uncomputes the ancillas::

    Omega ; CRotY(pi) from alpha_1 ; ... ; CRotY(2pi/2**N) from alpha_N ; Omega

The diagonal variant conjugates this by ``RotX(+-pi/4)`` on ``tau``, turning
the Y multiplexor into a Z multiplexor whose action on ``tau = |0>`` is the
diagonal ``diag(exp(i theta_b))`` on the controls.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from oracmux.circuit import TAU, Circuit, QubitId, Register, alpha, beta, compose, mcx, neg, pos, rotx, roty
from oracmux.quantize import AngleVector, BitTable, Mode, as_angle_vector, error_bound, quantize


class Axis(str, Enum):
    Y = "y"
    Z = "z"


@dataclass(frozen=True)
class MultiplexorSpec:
    angles: AngleVector
    axis: Axis = Axis.Y

    def __post_init__(self):
        object.__setattr__(self, "angles", as_angle_vector(self.angles))
        object.__setattr__(self, "axis", Axis(self.axis))

    @property
    def n_beta(self) -> int:
        return self.angles.n_beta


@dataclass(frozen=True)
class OracularCircuit:
    circuit: Circuit
    n_alpha: int
    bit_table: BitTable
    bound: float
    mode: Mode = Mode.TRUNCATE
    diagonal: bool = False

    @property
    def ancillas(self) -> tuple[QubitId, ...]:
        """Qubits that start and end in ``|0>``: the alphas, plus tau for a diagonal."""
        keep = (Register.ALPHA, Register.TAU) if self.diagonal else (Register.ALPHA,)
        return tuple(q for q in self.circuit.qubits if q.register in keep)


def register_qubits(n_beta: int, n_alpha: int = 0, with_tau: bool = True):
    qs = [beta(j) for j in range(n_beta)] + [alpha(k) for k in range(1, n_alpha + 1)]
    return tuple(qs + [TAU]) if with_tau else tuple(qs)


def control_pattern(b: int, n_beta: int):
    """Controls on ``beta_0..beta_{n-1}`` that fire exactly on basis value ``b``."""
    return tuple(pos(beta(j)) if (b >> j) & 1 else neg(beta(j)) for j in range(n_beta))


def build_oracle(table: BitTable, k: int) -> Circuit:
    """``Omega(alpha_k)``: flip ``alpha_k`` for every ``b`` with ``a_{b,k} = 1``."""
    col = table.column(k)
    target = alpha(k)
    gates = tuple(mcx(target, control_pattern(b, table.n_beta)) for b in np.flatnonzero(col))
    return Circuit(gates, register_qubits(table.n_beta, with_tau=False) + (target,))


def build_full_oracle(table: BitTable) -> Circuit:
    out = Circuit((), register_qubits(table.n_beta, table.n_alpha, with_tau=False))
    for k in range(1, table.n_alpha + 1):
        out = compose(out, build_oracle(table, k))
    return out


def build_fraction_rotation(n_alpha: int, axis: Axis | str = Axis.Y) -> Circuit:
    """Rotate ``tau`` by ``2pi * 0.n(alpha_1)...n(alpha_N)``."""
    if Axis(axis) is not Axis.Y:
        raise ValueError("fraction rotation is only defined about the Y axis")
    if n_alpha < 1:
        raise ValueError(f"n_alpha must be positive, got {n_alpha}")
    gates = tuple(roty(TAU, 2 * np.pi / 2 ** k, [pos(alpha(k))]) for k in range(1, n_alpha + 1))
    return Circuit(gates)


def _oracular_from_table(table: BitTable) -> Circuit:
    omega = build_full_oracle(table)
    return compose(compose(omega, build_fraction_rotation(table.n_alpha)), omega)


def synth_multiplexor_oracular(spec: MultiplexorSpec | AngleVector, n_alpha: int,
                               mode: Mode | str = Mode.TRUNCATE) -> OracularCircuit:
    if not isinstance(spec, MultiplexorSpec):
        spec = MultiplexorSpec(spec)
    if spec.axis is not Axis.Y:
        raise ValueError("oracular synthesis needs a Y-axis multiplexor; "
                         "use synth_diagonal_oracular for the Z case")
    table = quantize(spec.angles, n_alpha, mode)
    return OracularCircuit(_oracular_from_table(table), n_alpha, table,
                           error_bound(n_alpha, mode), Mode(mode))


def synth_diagonal_oracular(angles: AngleVector, n_alpha: int,
                            mode: Mode | str = Mode.TRUNCATE) -> OracularCircuit:
    mux = synth_multiplexor_oracular(MultiplexorSpec(angles), n_alpha, mode)
    circuit = compose(compose(Circuit((rotx(TAU, np.pi / 4),)), mux.circuit),
                      Circuit((rotx(TAU, -np.pi / 4),)))
    return OracularCircuit(circuit, n_alpha, mux.bit_table, mux.bound, mux.mode, diagonal=True)
