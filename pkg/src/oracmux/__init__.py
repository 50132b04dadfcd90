"""Oracular and exact compilation of quantum multiplexors and diagonal unitaries.

Rotations follow ``RotY(t) = exp(i t sigma_y)`` throughout (no half angle).
"""
from oracmux.circuit import (TAU, Circuit, ControlSpec, Gate, GateKind, Polarity, QubitId,
                             Register, alpha, beta, cnot, compose, count_gates, inverse, mcx,
                             neg, normalize_cnots, pos, rotx, roty, rotz, weighted_cost)
from oracmux.exact import (GrayPlan, angle_transform, gray_code, gray_plan, synth_diagonal_exact,
                           synth_multiplexor_exact)
from oracmux.oracular import (Axis, MultiplexorSpec, OracularCircuit, build_fraction_rotation,
                              build_full_oracle, build_oracle, synth_diagonal_oracular,
                              synth_multiplexor_oracular)
from oracmux.quantize import (AngleVector, BitTable, Mode, dequantize, error_bound,
                              per_angle_error, quantize)
from oracmux.simulate import (QubitCapExceeded, SynthReport, check_bound, circuit_to_unitary,
                              multiplexor_distance, reference_diagonal, reference_multiplexor,
                              restricted_unitary, spectral_distance)

__version__ = "0.1.0"
