"""
Circuit intermediate representation.

Qubits live in three registers: the control register ``beta`` (indices
0..N_beta-1), the angle ancillas ``alpha`` (indices 1..N_alpha) and the single
rotation target ``tau`` (index 0).

Conventions used everywhere in this package:

* Rotations are ``RotY(t) = exp(i t sigma_y)`` (likewise X, Z). This is NOT the
  half-angle ``exp(-i t/2 sigma)`` convention most toolchains use.
* ``gates[0]`` acts first. The circuit unitary is ``U[-1] @ ... @ U[0]``.
* Qubits are ordered beta (descending index), alpha (ascending index), tau.
  The first qubit in that order is the most significant bit of a basis index,
  so a beta-only basis index is the integer ``b = (b_{N-1} ... b_1 b_0)``.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping


class Register(str, Enum):
    BETA = "beta"
    ALPHA = "alpha"
    TAU = "tau"


class Polarity(str, Enum):
    POS = "pos"  # fires on |1>
    NEG = "neg"  # fires on |0>


class GateKind(str, Enum):
    ROTY = "roty"
    ROTX = "rotx"
    ROTZ = "rotz"
    X = "x"
    CNOT = "cnot"


ROTATIONS = frozenset({GateKind.ROTY, GateKind.ROTX, GateKind.ROTZ})
_REG_RANK = {Register.BETA: 0, Register.ALPHA: 1, Register.TAU: 2}


@dataclass(frozen=True)
class QubitId:
    register: Register
    index: int

    def __post_init__(self):
        object.__setattr__(self, "register", Register(self.register))
        if not isinstance(self.index, int) or self.index < 0:
            raise ValueError(f"qubit index must be a non-negative int, got {self.index!r}")
        if self.register is Register.ALPHA and self.index < 1:
            raise ValueError("alpha qubits are indexed from 1")
        if self.register is Register.TAU and self.index != 0:
            raise ValueError("tau has exactly index 0")

    def __str__(self):
        if self.register is Register.TAU:
            return "tau"
        return f"{self.register.value}{self.index}"

    def sort_key(self) -> tuple[int, int]:
        # beta descending so that beta_{N-1} is the most significant bit
        idx = -self.index if self.register is Register.BETA else self.index
        return (_REG_RANK[self.register], idx)


def beta(j: int) -> QubitId:
    return QubitId(Register.BETA, j)


def alpha(k: int) -> QubitId:
    return QubitId(Register.ALPHA, k)


TAU = QubitId(Register.TAU, 0)


def canonical_order(qubits: Iterable[QubitId]) -> tuple[QubitId, ...]:
    return tuple(sorted(set(qubits), key=QubitId.sort_key))


@dataclass(frozen=True)
class ControlSpec:
    qubit: QubitId
    polarity: Polarity = Polarity.POS

    def __post_init__(self):
        object.__setattr__(self, "polarity", Polarity(self.polarity))

    @property
    def value(self) -> int:
        """Basis value of the control qubit on which the gate fires."""
        return 1 if self.polarity is Polarity.POS else 0


def pos(q: QubitId) -> ControlSpec:
    return ControlSpec(q, Polarity.POS)


def neg(q: QubitId) -> ControlSpec:
    return ControlSpec(q, Polarity.NEG)


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    target: QubitId
    controls: tuple[ControlSpec, ...] = ()
    angle: float | None = None

    def __post_init__(self):
        kind = GateKind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "controls", tuple(self.controls))
        cqs = [c.qubit for c in self.controls]
        if self.target in cqs:
            raise ValueError(f"control qubit {self.target} equals the target")
        if len(set(cqs)) != len(cqs):
            raise ValueError(f"duplicate control qubits in {[str(q) for q in cqs]}")
        if kind in ROTATIONS:
            if self.angle is None:
                raise ValueError(f"{kind.value} gate needs an angle")
            object.__setattr__(self, "angle", float(self.angle))
        elif self.angle is not None:
            raise ValueError(f"{kind.value} gate takes no angle")
        if kind is GateKind.CNOT and (
            len(self.controls) != 1 or self.controls[0].polarity is not Polarity.POS
        ):
            raise ValueError("CNOT must have exactly one positive control")

    @property
    def qubits(self) -> tuple[QubitId, ...]:
        return tuple(c.qubit for c in self.controls) + (self.target,)

    @property
    def gate_class(self) -> str:
        """Counting class of the gate, e.g. ``"CNOT"``, ``"ROT"``, ``"MCX(2)"``, ``"CROT(1)"``."""
        n = len(self.controls)
        if self.kind is GateKind.CNOT:
            return "CNOT"
        if self.kind is GateKind.X:
            return f"MCX({n})"
        return "ROT" if n == 0 else f"CROT({n})"

    def __str__(self):
        name = self.kind.value.upper()
        if self.angle is not None:
            name += f"({self.angle:.6g})"
        ctrl = ", ".join(("" if c.polarity is Polarity.POS else "!") + str(c.qubit)
                         for c in self.controls)
        return f"{name} {self.target}" + (f" <- {ctrl}" if ctrl else "")

    def inverse(self) -> "Gate":
        if self.kind in ROTATIONS:
            return Gate(self.kind, self.target, self.controls, -self.angle)
        return self


def roty(target: QubitId, angle: float, controls: Iterable[ControlSpec] = ()) -> Gate:
    return Gate(GateKind.ROTY, target, tuple(controls), angle)


def rotx(target: QubitId, angle: float, controls: Iterable[ControlSpec] = ()) -> Gate:
    return Gate(GateKind.ROTX, target, tuple(controls), angle)


def rotz(target: QubitId, angle: float, controls: Iterable[ControlSpec] = ()) -> Gate:
    return Gate(GateKind.ROTZ, target, tuple(controls), angle)


def mcx(target: QubitId, controls: Iterable[ControlSpec] = ()) -> Gate:
    return Gate(GateKind.X, target, tuple(controls))


def cnot(control: QubitId, target: QubitId) -> Gate:
    return Gate(GateKind.CNOT, target, (pos(control),))


@dataclass(frozen=True)
class Circuit:
    """Immutable gate list over labelled qubits.

    ``qubits`` may be given explicitly to include idle wires; it is always
    stored in canonical order and must cover every qubit a gate touches.
    """

    gates: tuple[Gate, ...] = ()
    qubits: tuple[QubitId, ...] = field(default=())

    def __post_init__(self):
        gates = tuple(self.gates)
        used = {q for g in gates for q in g.qubits}
        declared = set(self.qubits)
        missing = used - declared
        if self.qubits and missing:
            raise ValueError(f"gates reference undeclared qubits: {sorted(map(str, missing))}")
        object.__setattr__(self, "gates", gates)
        object.__setattr__(self, "qubits", canonical_order(declared | used))

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        return compose(self, other)

    @property
    def n_qubits(self) -> int:
        return len(self.qubits)

    def __str__(self):
        head = "qubits: " + " ".join(map(str, self.qubits))
        return "\n".join([head] + [f"{i:4d}  {g}" for i, g in enumerate(self.gates)])

    def on(self, qubits: Iterable[QubitId]) -> "Circuit":
        """Same gates, with extra idle qubits declared."""
        return Circuit(self.gates, tuple(qubits) + self.qubits)

    def to_dict(self) -> dict:
        return {
            "qubits": [_qubit_to_dict(q) for q in self.qubits],
            "gates": [_gate_to_dict(g) for g in self.gates],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Circuit":
        try:
            qubits = tuple(_qubit_from_dict(q) for q in data["qubits"])
            gates = tuple(_gate_from_dict(g) for g in data["gates"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed circuit JSON: {exc!r}") from exc
        return cls(gates, qubits)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text: str) -> "Circuit":
        return cls.from_dict(json.loads(text))


def compose(a: Circuit, b: Circuit) -> Circuit:
    """Gates of ``a`` followed by gates of ``b``; unitary is ``U(b) @ U(a)``."""
    return Circuit(a.gates + b.gates, a.qubits + b.qubits)


def inverse(c: Circuit) -> Circuit:
    return Circuit(tuple(g.inverse() for g in reversed(c.gates)), c.qubits)


def normalize_cnots(c: Circuit, form: str = "cnot") -> Circuit:
    """Map between the two spellings of a CNOT.

    ``form="cnot"`` turns every X gate with a single positive control into a
    CNOT gate; ``form="x"`` does the reverse. The unitary is unchanged.
    """
    if form not in ("cnot", "x"):
        raise ValueError(f"form must be 'cnot' or 'x', got {form!r}")
    out = []
    for g in c.gates:
        if form == "cnot" and g.kind is GateKind.X and len(g.controls) == 1 \
                and g.controls[0].polarity is Polarity.POS:
            g = Gate(GateKind.CNOT, g.target, g.controls)
        elif form == "x" and g.kind is GateKind.CNOT:
            g = Gate(GateKind.X, g.target, g.controls)
        out.append(g)
    return Circuit(tuple(out), c.qubits)


def count_gates(c: Circuit) -> Counter:
    """Gate counts keyed by :attr:`Gate.gate_class`.

    Missing classes read as zero, so ``count_gates(empty)["CNOT"] == 0``.
    """
    return Counter(g.gate_class for g in c.gates)


def weighted_cost(c: Circuit, weights: Mapping[str, float]) -> float:
    total = 0.0
    for cls, n in sorted(count_gates(c).items()):
        if cls not in weights:
            raise KeyError(f"no weight given for gate class {cls}")
        w = weights[cls]
        if w < 0:
            raise ValueError(f"weight for {cls} is negative")
        total += n * w
    return total


def _qubit_to_dict(q: QubitId) -> dict:
    return {"reg": q.register.value, "idx": q.index}


def _qubit_from_dict(d: Mapping) -> QubitId:
    return QubitId(Register(d["reg"]), int(d["idx"]))


def _gate_to_dict(g: Gate) -> dict:
    d = {"kind": g.kind.value}
    if g.angle is not None:
        d["angle"] = g.angle
    d["target"] = _qubit_to_dict(g.target)
    d["controls"] = [
        {"qubit": _qubit_to_dict(cs.qubit), "polarity": cs.polarity.value} for cs in g.controls
    ]
    return d


def _gate_from_dict(d: Mapping) -> Gate:
    controls = tuple(
        ControlSpec(_qubit_from_dict(cs["qubit"]), Polarity(cs["polarity"]))
        for cs in d.get("controls", ())
    )
    angle = d.get("angle")
    return Gate(GateKind(d["kind"]), _qubit_from_dict(d["target"]), controls,
                None if angle is None else float(angle))
