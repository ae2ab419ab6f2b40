import numpy as np
import pytest

from su2int.angmom import (
    Ket,
    basis_ket,
    op_lminus,
    op_lplus,
    op_lx,
    op_ly,
    op_lz,
    shifted_op,
)
from su2int.errors import DimensionMismatchError
from su2int.halfint import HalfInt, dim


def test_lz_spin_half_and_ladder():
    assert np.allclose(op_lz("1/2").mat, np.diag([0.5, -0.5]))
    assert np.allclose(op_lz(0).mat, [[0.0]])
    assert np.allclose(op_lz(1).mat, np.diag([1.0, 0.0, -1.0]))


def test_pauli_over_two():
    assert np.allclose(op_lx("1/2").mat, [[0, 0.5], [0.5, 0]])
    assert np.allclose(op_ly("1/2").mat, [[0, -0.5j], [0.5j, 0]])


def test_shifted_op_values():
    mat = shifted_op("1/2", 0.25).mat
    assert np.allclose(mat, [[0, 0.375], [0.625, 0]])
    assert np.allclose(shifted_op("1/2", 0.6).mat, [[0, 0.2], [0.8, 0]])
    assert np.allclose(shifted_op(2, 0.0).mat, op_lx(2).mat)
    assert np.allclose(shifted_op(2, 1.0).mat, op_lminus(2).mat)
    assert np.allclose(shifted_op(2, -1.0).mat, op_lplus(2).mat)


@pytest.mark.parametrize("ell_twice", range(1, 51))
def test_commutators_and_casimir(ell_twice):
    ell = HalfInt(ell_twice)
    lz, lp, lm = op_lz(ell).mat, op_lplus(ell).mat, op_lminus(ell).mat
    lx, ly = op_lx(ell).mat, op_ly(ell).mat
    # entry magnitudes reach ell(ell+1); the tolerance tracks the ulp at that scale
    scale = max(1.0, ell.value * (ell.value + 1.0) / 300.0)
    assert np.abs(lz @ lp - lp @ lz - lp).max() <= 1e-13 * scale
    assert np.abs(lz @ lm - lm @ lz + lm).max() <= 1e-13 * scale
    assert np.abs(lp @ lm - lm @ lp - 2.0 * lz).max() <= 1e-13 * scale
    casimir = lx @ lx + ly @ ly + lz @ lz
    assert np.abs(casimir - ell.value * (ell.value + 1.0) * np.eye(dim(ell))).max() <= 1e-12


@pytest.mark.parametrize("ell_twice", range(0, 13))
@pytest.mark.parametrize("alpha", [1.0, -1.0])
def test_shifted_op_nilpotent_at_unit_alpha(ell_twice, alpha):
    mat = shifted_op(HalfInt(ell_twice), alpha).mat
    power = np.eye(ell_twice + 1, dtype=complex)
    for _ in range(ell_twice + 1):
        power = power @ mat
    assert np.abs(power).max() <= 1e-10


def test_hermiticity():
    for ell_twice in (1, 4, 9):
        for op in (op_lx, op_ly, op_lz):
            mat = op(HalfInt(ell_twice)).mat
            assert np.abs(mat - mat.conj().T).max() <= 1e-14


def test_ket_validation_and_overlap():
    with pytest.raises(DimensionMismatchError):
        Ket(HalfInt(2), np.zeros(2))
    a = basis_ket(1, 1)
    b = basis_ket(1, 0)
    assert a.overlap(b) == 0
    assert a.fidelity(a) == pytest.approx(1.0)
    with pytest.raises(DimensionMismatchError):
        a.overlap(basis_ket("1/2", "1/2"))


def test_operator_apply():
    lowered = op_lminus(1).apply(basis_ket(1, 1))
    assert np.allclose(lowered.amplitudes, np.sqrt(2.0) * basis_ket(1, 0).amplitudes)
