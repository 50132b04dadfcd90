"""
Fixed-point quantization of multiplexor angles.

An angle is stored as ``N_alpha`` fractional bits of ``theta / 2pi``:
``theta_hat = 2pi * sum_k a_k / 2**k`` for ``k = 1..N_alpha``. Row ``b`` of a
:class:`BitTable` holds the bits of angle ``theta_b``; column ``k`` (1-based)
is the Boolean function computed by the k-th oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

TWO_PI = 2 * np.pi

# x * 2**n_alpha within this distance of an integer is treated as that integer,
# so dyadic inputs like 2pi*m/2**n never fall to m-1 through rounding noise.
SNAP_TOL = 1e-9


class Mode(str, Enum):
    TRUNCATE = "truncate"
    NEAREST = "nearest"


@dataclass(frozen=True, eq=False)
class AngleVector:
    """``2**n_beta`` angles in radians, indexed by the control bitstring ``b``."""

    angles: np.ndarray

    def __post_init__(self):
        a = np.array(self.angles, dtype=float).reshape(-1)
        n = a.size
        if n < 2 or n & (n - 1):
            raise ValueError(f"number of angles must be 2**n_beta with n_beta >= 1, got {n}")
        a.setflags(write=False)
        object.__setattr__(self, "angles", a)

    @property
    def n_beta(self) -> int:
        return self.angles.size.bit_length() - 1

    def __len__(self):
        return self.angles.size

    def __eq__(self, other):
        return isinstance(other, AngleVector) and np.array_equal(self.angles, other.angles)


@dataclass(frozen=True, eq=False)
class BitTable:
    """Boolean matrix ``bits[b, k-1] = a_{b,k}`` of shape ``(2**n_beta, n_alpha)``."""

    bits: np.ndarray

    def __post_init__(self):
        bits = np.array(self.bits, dtype=bool)
        if bits.ndim != 2 or bits.shape[1] < 1:
            raise ValueError(f"bit table must be 2-D with at least one column, got shape {bits.shape}")
        rows = bits.shape[0]
        if rows < 2 or rows & (rows - 1):
            raise ValueError(f"bit table needs 2**n_beta rows, got {rows}")
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    @property
    def n_beta(self) -> int:
        return self.bits.shape[0].bit_length() - 1

    @property
    def n_alpha(self) -> int:
        return self.bits.shape[1]

    def column(self, k: int) -> np.ndarray:
        """Bits ``a_{b,k}`` for all ``b``; ``k`` is 1-based."""
        if not 1 <= k <= self.n_alpha:
            raise IndexError(f"k must be in 1..{self.n_alpha}, got {k}")
        return self.bits[:, k - 1]

    def integers(self) -> np.ndarray:
        """Each row read as the integer ``m`` with ``theta_hat = 2pi m / 2**n_alpha``."""
        weights = 1 << np.arange(self.n_alpha - 1, -1, -1)
        return self.bits.astype(np.int64) @ weights

    def __eq__(self, other):
        return isinstance(other, BitTable) and np.array_equal(self.bits, other.bits)

    def to_text(self) -> str:
        """One row per line, bits as ``0``/``1`` characters, rows in order of ``b``."""
        return "".join("".join("1" if x else "0" for x in row) + "\n" for row in self.bits)

    @classmethod
    def from_text(cls, text: str) -> "BitTable":
        rows = [line.strip() for line in text.splitlines() if line.strip()]
        if any(set(r) - {"0", "1"} for r in rows):
            raise ValueError("bit table text may only contain 0 and 1")
        if len({len(r) for r in rows}) > 1:
            raise ValueError("bit table rows have unequal length")
        return cls([[c == "1" for c in r] for r in rows])


def as_angle_vector(angles) -> AngleVector:
    return angles if isinstance(angles, AngleVector) else AngleVector(angles)


def quantize(angles: AngleVector | Sequence[float], n_alpha: int,
             mode: Mode | str = Mode.TRUNCATE) -> BitTable:
    """Encode each angle (reduced mod 2pi) into ``n_alpha`` fractional bits.

    ``truncate`` keeps the leading bits of the binary expansion of
    ``theta / 2pi``; ``nearest`` rounds to the closest representable value,
    wrapping ``2**n_alpha`` around to 0.
    """
    angles = as_angle_vector(angles)
    mode = Mode(mode)
    if not isinstance(n_alpha, (int, np.integer)) or n_alpha < 1:
        raise ValueError(f"n_alpha must be a positive integer, got {n_alpha!r}")
    theta = angles.angles
    bad = np.flatnonzero(~np.isfinite(theta))
    if bad.size:
        raise ValueError(f"angle at index b={int(bad[0])} is not finite: {theta[bad[0]]}")

    scale = 2 ** int(n_alpha)
    y = np.mod(theta, TWO_PI) / TWO_PI * scale
    nearest = np.rint(y)
    y = np.where(np.abs(y - nearest) < SNAP_TOL, nearest, y)
    m = np.floor(y) if mode is Mode.TRUNCATE else np.floor(y + 0.5)
    m = m.astype(np.int64) % scale

    shifts = np.arange(n_alpha - 1, -1, -1)
    return BitTable((m[:, None] >> shifts) & 1)


def dequantize(table: BitTable) -> AngleVector:
    return AngleVector(TWO_PI * table.integers() / 2 ** table.n_alpha)


def per_angle_error(theta: float, theta_hat: float) -> float:
    """Spectral distance ``||exp(i theta s) - exp(i theta_hat s)||`` for a Pauli ``s``."""
    return float(2 * np.abs(np.sin((theta - theta_hat) / 2)))


def error_bound(n_alpha: int, mode: Mode | str = Mode.TRUNCATE) -> float:
    """Worst-case per-angle error: ``2pi/2**n`` truncating, ``pi/2**n`` rounding."""
    full = TWO_PI / 2 ** n_alpha
    return full if Mode(mode) is Mode.TRUNCATE else full / 2
