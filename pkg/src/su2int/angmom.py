"""Angular-momentum operator matrices and state vectors for arbitrary ell.

Basis convention: index 0 is the highest weight m = ell, descending to
m = -ell, so the spin-1/2 matrices are literally the Pauli matrices over 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError
from .halfint import HalfInt, dim, m_values


@dataclass(frozen=True, eq=False)
class Ket:
    """Complex amplitudes over |ell, m>, m descending from ell to -ell."""

    ell: HalfInt
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "amplitudes", amps)
        if amps.shape != (dim(self.ell),):
            raise DimensionMismatchError(
                f"ell={self.ell} needs {dim(self.ell)} amplitudes, got {amps.shape}"
            )

    @property
    def dim(self) -> int:
        return dim(self.ell)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "Ket":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize a zero ket")
        return Ket(self.ell, self.amplitudes / n)

    def overlap(self, other: "Ket") -> complex:
        """<self|other>."""
        if other.ell != self.ell:
            raise DimensionMismatchError(f"ell mismatch: {self.ell} vs {other.ell}")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def fidelity(self, other: "Ket") -> float:
        """|<self|other>| for normalized kets."""
        return abs(self.overlap(other))


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Dense operator in the same descending-m basis as Ket."""

    ell: HalfInt
    mat: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.mat, dtype=complex)
        object.__setattr__(self, "mat", mat)
        d = dim(self.ell)
        if mat.shape != (d, d):
            raise DimensionMismatchError(f"ell={self.ell} needs a {d}x{d} matrix, got {mat.shape}")

    def apply(self, ket: Ket) -> Ket:
        if ket.ell != self.ell:
            raise DimensionMismatchError(f"ell mismatch: {self.ell} vs {ket.ell}")
        return Ket(self.ell, self.mat @ ket.amplitudes)


def basis_ket(ell, m) -> Ket:
    """|ell, m> as a unit coordinate vector."""
    from .halfint import check_m, m_index

    ell = HalfInt.of(ell)
    m = HalfInt.of(m)
    check_m(ell, m)
    amps = np.zeros(dim(ell), dtype=complex)
    amps[m_index(ell, m)] = 1.0
    return Ket(ell, amps)


def op_lz(ell) -> OperatorMatrix:
    """L_z: diagonal with entries m = ell ... -ell."""
    ell = HalfInt.of(ell)
    diag = np.array([m.value for m in m_values(ell)], dtype=complex)
    return OperatorMatrix(ell, np.diag(diag))


def op_lplus(ell) -> OperatorMatrix:
    """L_+ with <ell,m+1|L_+|ell,m> = sqrt((ell-m)(ell+m+1))."""
    ell = HalfInt.of(ell)
    d = dim(ell)
    mat = np.zeros((d, d), dtype=complex)
    ms = m_values(ell)
    for i in range(1, d):
        m = ms[i].value  # raises |ell,m> -> |ell,m+1>, i.e. row i-1, column i
        mat[i - 1, i] = np.sqrt((ell.value - m) * (ell.value + m + 1.0))
    return OperatorMatrix(ell, mat)


def op_lminus(ell) -> OperatorMatrix:
    ell = HalfInt.of(ell)
    return OperatorMatrix(ell, op_lplus(ell).mat.T.copy())


def op_lx(ell) -> OperatorMatrix:
    ell = HalfInt.of(ell)
    lp = op_lplus(ell).mat
    return OperatorMatrix(ell, (lp + lp.T) / 2.0)


def op_ly(ell) -> OperatorMatrix:
    ell = HalfInt.of(ell)
    lp = op_lplus(ell).mat
    return OperatorMatrix(ell, (lp - lp.T) / 2.0j)


def shifted_op(ell, alpha: float) -> OperatorMatrix:
    """L_x - i*alpha*L_y = (1-alpha)/2 L_+ + (1+alpha)/2 L_-."""
    ell = HalfInt.of(ell)
    lp = op_lplus(ell).mat
    return OperatorMatrix(ell, 0.5 * (1.0 - alpha) * lp + 0.5 * (1.0 + alpha) * lp.T)


def rotation_y(ell, beta: float) -> np.ndarray:
    """Matrix of R_y(beta) = e^{-i beta L_y}, the operational d-function oracle."""
    from .linalg import expm_action

    ell = HalfInt.of(ell)
    d = dim(ell)
    gen = -1j * beta * op_ly(ell).mat
    cols = [expm_action(gen, np.eye(d)[:, j]) for j in range(d)]
    return np.array(cols).T
