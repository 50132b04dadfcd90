"""
Command-line front end.

    oracmux synth       --n-beta 2 --n-alpha 2 --angles pi/2,3pi/2,pi,0 --out out/
    oracmux verify      --n-beta 3 --n-alpha 5 --seed 1 --out out/
    oracmux compare     --n-beta 2 --n-alpha 2 --angles-file angles.txt --out out/
    oracmux verify-file --circuit out/circuit_oracular.json --n-beta 3 --seed 1

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
Random angles come from ``numpy.random.default_rng(seed)`` (PCG64), uniform on
``[0, 2pi)``.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from oracmux.circuit import Circuit, Register, count_gates, weighted_cost
from oracmux.exact import synth_diagonal_exact, synth_multiplexor_exact
from oracmux.oracular import synth_diagonal_oracular, synth_multiplexor_oracular
from oracmux.quantize import AngleVector, Mode, error_bound
from oracmux.simulate import (DEFAULT_MAX_QUBITS, LEAK_TOL, QubitCapExceeded, check_bound,
                              reference_diagonal, reference_multiplexor, restricted_unitary,
                              spectral_distance)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
EXACT_TOL = 1e-10


class ConfigError(Exception):
    pass


@dataclass
class JobConfig:
    n_beta: int
    n_alpha: int = 3
    mode: str = "truncate"
    target: str = "multiplexor"
    method: str = "oracular"
    angles: list[float] | None = None
    angles_file: str | None = None
    generator: dict | None = None  # {"kind": "random"|"constant"|"dyadic", ...}
    verify: bool = False
    cost_weights: dict[str, float] | None = None
    out: str | None = None
    max_qubits: int = DEFAULT_MAX_QUBITS

    def validate(self):
        if not isinstance(self.n_beta, int) or self.n_beta < 1:
            raise ConfigError(f"malformed config: n_beta must be a positive integer, got {self.n_beta!r}")
        if not isinstance(self.n_alpha, int) or self.n_alpha < 1:
            raise ConfigError(f"malformed config: n_alpha must be a positive integer, got {self.n_alpha!r}")
        for name, allowed in (("mode", ("truncate", "nearest")),
                              ("target", ("multiplexor", "diagonal")),
                              ("method", ("oracular", "exact", "both"))):
            if getattr(self, name) not in allowed:
                raise ConfigError(f"malformed config: {name} must be one of {allowed}")
        sources = [s for s in (self.angles, self.angles_file, self.generator) if s is not None]
        if len(sources) > 1:
            raise ConfigError("malformed config: give exactly one angle source")


_PI_TERM = re.compile(r"^\s*([-+]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d*\.?\d+))?\s*$")


def parse_angle(text: str) -> float:
    """A decimal number, or a multiple of pi such as ``3pi/2`` or ``-pi/4``."""
    try:
        return float(text)
    except ValueError:
        pass
    m = _PI_TERM.match(text)
    if not m:
        raise ConfigError(f"malformed config: cannot parse angle {text!r}")
    coef = m.group(1)
    coef = -1.0 if coef == "-" else 1.0 if coef in ("", "+") else float(coef)
    denom = float(m.group(2)) if m.group(2) else 1.0
    return coef * np.pi / denom


def read_angles_file(path: str) -> list[float]:
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read angles file: {exc}") from exc
    return [parse_angle(line) for line in lines if line.strip() and not line.lstrip().startswith("#")]


def resolve_angles(cfg: JobConfig) -> AngleVector:
    size = 2 ** cfg.n_beta
    if cfg.angles is not None:
        values = list(cfg.angles)
    elif cfg.angles_file is not None:
        values = read_angles_file(cfg.angles_file)
    else:
        gen = cfg.generator or {"kind": "random", "seed": 0}
        kind = gen.get("kind")
        if kind == "random":
            rng = np.random.default_rng(int(gen.get("seed", 0)))
            values = rng.uniform(0.0, 2 * np.pi, size)
        elif kind == "constant":
            values = np.full(size, float(gen.get("value", 0.0)))
        elif kind == "dyadic":
            exponent = int(gen.get("exponent", cfg.n_alpha))
            rng = np.random.default_rng(int(gen.get("seed", 0)))
            values = 2 * np.pi * rng.integers(0, 2 ** exponent, size) / 2 ** exponent
        else:
            raise ConfigError(f"malformed config: unknown generator {kind!r}")
    if len(values) != size:
        raise ConfigError(f"angle count mismatch: got {len(values)} angles, "
                          f"need 2**n_beta = {size}")
    if not np.all(np.isfinite(values)):
        raise ConfigError("malformed config: angles must be finite")
    return AngleVector(values)


def _write_json(path: Path, data) -> None:
    path.write_text(json.dumps(data, indent=2) + "\n")


def _costs(circuit: Circuit, weights: dict[str, float] | None):
    if weights is None:
        return None
    try:
        return weighted_cost(circuit, weights)
    except KeyError as exc:
        raise ConfigError(f"malformed config: {exc.args[0]}") from exc


def _exact_error(circuit: Circuit, angles: AngleVector, diagonal: bool, max_qubits: int):
    ancillas = [q for q in circuit.qubits if q.register is Register.TAU] if diagonal else []
    restricted, leak = restricted_unitary(circuit, ancillas, max_qubits)
    ref = reference_diagonal(angles) if diagonal else reference_multiplexor(angles)
    return spectral_distance(ref, restricted), leak


def run(cfg: JobConfig) -> int:
    """Synthesize, optionally verify, and write artifacts under ``cfg.out``."""
    cfg.validate()
    angles = resolve_angles(cfg)
    diagonal = cfg.target == "diagonal"
    out = Path(cfg.out or ".")
    out.mkdir(parents=True, exist_ok=True)

    n_qubits = cfg.n_beta + 1 + (cfg.n_alpha if cfg.method != "exact" else 0)
    if n_qubits > cfg.max_qubits:
        raise QubitCapExceeded(n_qubits, cfg.max_qubits)

    report: dict = {"n_beta": cfg.n_beta, "n_alpha": cfg.n_alpha, "mode": cfg.mode,
                    "target": cfg.target, "method": cfg.method}
    passed = True

    if cfg.method in ("oracular", "both"):
        synth = synth_diagonal_oracular if diagonal else synth_multiplexor_oracular
        oc = synth(angles, cfg.n_alpha, cfg.mode)
        _write_json(out / "circuit_oracular.json", oc.circuit.to_dict())
        counts = dict(sorted(count_gates(oc.circuit).items()))
        report["bound"] = oc.bound
        report["counts"] = counts
        cost = _costs(oc.circuit, cfg.cost_weights)
        if cost is not None:
            report["cost"] = cost
        if cfg.verify:
            rep = check_bound(angles, cfg.n_alpha, cfg.mode, diagonal, cfg.max_qubits)
            report["realized_error"] = rep.realized_error
            report["leak"] = rep.leak
            report["pass"] = rep.passed
            passed &= rep.passed

    if cfg.method in ("exact", "both"):
        circuit = synth_diagonal_exact(angles) if diagonal else synth_multiplexor_exact(angles)
        _write_json(out / "circuit_exact.json", circuit.to_dict())
        exact: dict = {"counts": dict(sorted(count_gates(circuit).items()))}
        cost = _costs(circuit, cfg.cost_weights)
        if cost is not None:
            exact["cost"] = cost
        if cfg.verify:
            err, leak = _exact_error(circuit, angles, diagonal, cfg.max_qubits)
            ok = err <= EXACT_TOL and leak <= LEAK_TOL
            exact.update(realized_error=err, leak=leak, tolerance=EXACT_TOL)
            exact["pass"] = ok
            passed &= ok
        report["exact"] = exact

    if cfg.method == "both":
        report["comparison"] = {
            "exact_cnot": report["exact"]["counts"].get("CNOT", 0),
            "oracular": report["counts"],
            "oracular_cnot": report["counts"].get("CNOT", 0),
        }

    if cfg.verify:
        report["pass"] = passed
        _write_json(out / "report.json", report)
    return EXIT_OK if passed else EXIT_FAIL


def verify_file(circuit_path: str, cfg: JobConfig) -> int:
    """Re-ingest a circuit JSON and measure its error against the exact target.

    Alpha qubits in the file are treated as ancillas (and tau too for a
    diagonal target). A circuit with alphas is held to the quantization bound
    for its alpha count; one without is held to ``EXACT_TOL``.
    """
    try:
        circuit = Circuit.from_json(Path(circuit_path).read_text())
    except (OSError, ValueError) as exc:
        raise ConfigError(f"cannot load circuit: {exc}") from exc
    angles = resolve_angles(cfg)
    diagonal = cfg.target == "diagonal"
    if circuit.n_qubits > cfg.max_qubits:
        raise QubitCapExceeded(circuit.n_qubits, cfg.max_qubits)
    n_beta = sum(q.register is Register.BETA for q in circuit.qubits)
    if n_beta != cfg.n_beta:
        raise ConfigError(f"malformed config: circuit has {n_beta} beta qubits, config says {cfg.n_beta}")
    n_alpha = sum(q.register is Register.ALPHA for q in circuit.qubits)
    keep = (Register.ALPHA, Register.TAU) if diagonal else (Register.ALPHA,)
    ancillas = [q for q in circuit.qubits if q.register in keep]
    restricted, leak = restricted_unitary(circuit, ancillas, cfg.max_qubits)
    ref = reference_diagonal(angles) if diagonal else reference_multiplexor(angles)
    err = spectral_distance(ref, restricted)
    bound = error_bound(n_alpha, cfg.mode) if n_alpha else EXACT_TOL
    ok = err <= bound and leak <= LEAK_TOL
    report = {"n_beta": n_beta, "n_alpha": n_alpha, "mode": Mode(cfg.mode).value,
              "target": cfg.target, "bound": bound, "realized_error": err, "leak": leak,
              "counts": dict(sorted(count_gates(circuit).items())), "pass": ok}
    text = json.dumps(report, indent=2) + "\n"
    if cfg.out is not None:
        out = Path(cfg.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def _add_job_args(p: argparse.ArgumentParser):
    p.add_argument("--config", help="JSON file with JobConfig fields; flags override it")
    p.add_argument("--n-beta", type=int)
    p.add_argument("--n-alpha", type=int)
    p.add_argument("--mode", choices=["truncate", "nearest"])
    p.add_argument("--target", choices=["multiplexor", "diagonal"])
    src = p.add_mutually_exclusive_group()
    src.add_argument("--angles", help="comma-separated radians; multiples of pi like 3pi/2 allowed")
    src.add_argument("--angles-file", help="one radian value per line, in order b = 0..2**n_beta-1")
    src.add_argument("--constant", type=float, help="set every angle to this value")
    src.add_argument("--dyadic", type=int, metavar="EXPONENT",
                     help="random multiples of 2pi/2**EXPONENT (uses --seed)")
    p.add_argument("--seed", type=int, help="seed for random (default) or dyadic angles")
    p.add_argument("--weights", help='JSON map of gate class to cost, e.g. \'{"CNOT": 1}\'')
    p.add_argument("--max-qubits", type=int)
    p.add_argument("--out", help="output directory (default: current directory)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oracmux", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="emit circuit JSON")
    _add_job_args(p)
    p.add_argument("--method", choices=["oracular", "exact", "both"])
    p.add_argument("--verify", action="store_true", default=None)

    p = sub.add_parser("verify", help="synthesize and check the error bound")
    _add_job_args(p)
    p.add_argument("--method", choices=["oracular", "exact", "both"])

    p = sub.add_parser("compare", help="oracular vs exact gate counts, both verified")
    _add_job_args(p)

    p = sub.add_parser("verify-file", help="check a previously emitted circuit JSON")
    _add_job_args(p)
    p.add_argument("--circuit", required=True)
    return parser


def config_from_args(args: argparse.Namespace) -> JobConfig:
    data: dict = {}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"malformed config: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("malformed config: top level must be a JSON object")
        unknown = set(data) - set(JobConfig.__dataclass_fields__)
        if unknown:
            raise ConfigError(f"malformed config: unknown keys {sorted(unknown)}")

    def take(name, value):
        if value is not None:
            data[name] = value

    take("n_beta", args.n_beta)
    take("n_alpha", args.n_alpha)
    take("mode", args.mode)
    take("target", args.target)
    take("method", getattr(args, "method", None))
    take("max_qubits", args.max_qubits)
    take("out", args.out)
    if getattr(args, "verify", None):
        data["verify"] = True

    source = _source_from_flags(args)
    if source:
        for k in ("angles", "angles_file", "generator"):
            data.pop(k, None)
        data.update(source)

    if args.weights is not None:
        try:
            data["cost_weights"] = json.loads(args.weights)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed config: --weights is not JSON: {exc}") from exc

    if "n_beta" not in data:
        raise ConfigError("malformed config: --n-beta is required")
    try:
        return JobConfig(**data)
    except TypeError as exc:
        raise ConfigError(f"malformed config: {exc}") from exc


def _source_from_flags(args: argparse.Namespace) -> dict:
    if args.angles is not None:
        return {"angles": [parse_angle(t) for t in args.angles.split(",") if t.strip()]}
    if args.angles_file is not None:
        return {"angles_file": args.angles_file}
    if args.constant is not None:
        return {"generator": {"kind": "constant", "value": args.constant}}
    if args.dyadic is not None:
        return {"generator": {"kind": "dyadic", "exponent": args.dyadic, "seed": args.seed or 0}}
    if args.seed is not None:
        return {"generator": {"kind": "random", "seed": args.seed}}
    return {}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.command == "verify":
            cfg.verify = True
        elif args.command == "compare":
            cfg.method, cfg.verify = "both", True
        cfg.validate()
        if args.command == "verify-file":
            return verify_file(args.circuit, cfg)
        return run(cfg)
    except (ConfigError, QubitCapExceeded) as exc:
        print(f"oracmux: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
