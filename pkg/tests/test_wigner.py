import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from su2int.angmom import rotation_y
from su2int.errors import QuantumNumberMismatchError
from su2int.halfint import HalfInt, dim, m_values
from su2int.wigner import (
    LNFACT,
    LogFactTable,
    SignedLogMagnitude,
    binomial_sum_identity_check,
    cg_lowering_oracle,
    little_d,
    little_d_matrix,
    little_d_symmetries_check,
    stretched_cg,
)


def test_logfact_table_invariants():
    table = LogFactTable(40)
    assert table[0] == 0.0 and table[1] == 0.0
    values = [table[n] for n in range(1, 41)]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert table[20] == pytest.approx(math.lgamma(21.0), rel=1e-14)
    assert table[300] == pytest.approx(math.lgamma(301.0), rel=1e-13)  # growth on demand


def test_signed_log_magnitude():
    zero = SignedLogMagnitude.of(0.0)
    assert zero.sign == 0 and zero.to_float() == 0.0
    x = SignedLogMagnitude.of(-3.0).times(SignedLogMagnitude.of(2.0))
    assert x.to_float() == pytest.approx(-6.0)
    assert x.times(zero).to_float() == 0.0


def test_little_d_spin_half():
    for beta in (0.0, 0.7, 2.0, math.pi):
        assert little_d("1/2", "1/2", "1/2", beta) == pytest.approx(math.cos(beta / 2.0))
        assert little_d("1/2", "-1/2", "1/2", beta) == pytest.approx(math.sin(beta / 2.0))


def test_little_d_identity_rotation():
    for ell in ("1/2", 1, "5/2", 4):
        assert little_d(ell, ell, ell, 0.0) == pytest.approx(1.0)
        mat = little_d_matrix(HalfInt.of(ell), 0.0)
        assert np.allclose(mat, np.eye(dim(HalfInt.of(ell))))


def test_little_d_convention_pinned_by_expm():
    # sign convention fixed operationally: d(beta) = <m| e^{-i beta L_y} |m'>
    value = little_d(1, 0, 1, math.pi / 2.0)
    oracle = rotation_y(HalfInt(2), math.pi / 2.0).real[1, 0]
    assert value == pytest.approx(oracle, abs=1e-14)
    assert value == pytest.approx(1.0 / math.sqrt(2.0))


@pytest.mark.parametrize("ell_twice", range(0, 21))
def test_little_d_matrix_matches_expm(ell_twice):
    ell = HalfInt(ell_twice)
    rng = np.random.default_rng(ell_twice)
    for beta in rng.uniform(0.0, 2.0 * math.pi, 20):
        dmat = little_d_matrix(ell, float(beta))
        assert np.abs(dmat - rotation_y(ell, float(beta)).real).max() <= 1e-11
        assert np.abs(dmat.T @ dmat - np.eye(dim(ell))).max() <= 1e-11


def test_little_d_rejects_bad_quantum_numbers():
    with pytest.raises(QuantumNumberMismatchError):
        little_d(1, "1/2", 1, 0.3)
    with pytest.raises(QuantumNumberMismatchError):
        little_d(1, 2, 1, 0.3)


def test_symmetry_check_examples():
    assert little_d_symmetries_check("1/2", "-1/2", 0.7)
    assert little_d_symmetries_check(1, 1, 0.0)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.01, 2.0 * math.pi))
def test_symmetry_check_all_m_ell_5half(beta):
    ell = HalfInt(5)
    assert all(little_d_symmetries_check(ell, m, beta) for m in m_values(ell))


def test_stretched_cg_values():
    assert stretched_cg("1/2", "1/2", "1/2", "1/2") == pytest.approx(1.0)
    assert stretched_cg("1/2", "1/2", "1/2", "-1/2") == pytest.approx(1.0 / math.sqrt(2.0))
    assert stretched_cg("3/2", "3/2", 1, 0) == pytest.approx(math.sqrt(0.4))
    with pytest.raises(QuantumNumberMismatchError):
        stretched_cg(1, 2, 1, 0)


def test_cg_lowering_oracle_small_cases():
    assert all(v == pytest.approx(1.0) for v in cg_lowering_oracle("1/2", 0).values())
    table = cg_lowering_oracle("1/2", "1/2")
    half = HalfInt(1)
    assert table[(half, -half)] == pytest.approx(1.0 / math.sqrt(2.0))
    assert table[(-half, half)] == pytest.approx(1.0 / math.sqrt(2.0))
    assert len(cg_lowering_oracle("3/2", 1)) == 12


@pytest.mark.parametrize("ell_a_twice", range(0, 9))
@pytest.mark.parametrize("ell_b_twice", range(0, 9))
def test_cg_closed_form_matches_lowering(ell_a_twice, ell_b_twice):
    if ell_a_twice + ell_b_twice > 16:
        pytest.skip("beyond the ell <= 8 contract")
    ell_a, ell_b = HalfInt(ell_a_twice), HalfInt(ell_b_twice)
    for (m_a, m_b), value in cg_lowering_oracle(ell_a, ell_b).items():
        assert abs(value - stretched_cg(ell_a, m_a, ell_b, m_b)) <= 1e-12


@pytest.mark.parametrize(
    "ell_a,ell_b",
    [("1/2", "1/2"), ("1/2", 0), ("3/2", 1), (3, 2), (4, 4), ("5/2", "7/2")],
)
def test_binomial_sum_identity(ell_a, ell_b):
    ell = HalfInt.of(ell_a) + HalfInt.of(ell_b)
    for m in m_values(ell):
        assert binomial_sum_identity_check(ell_a, ell_b, m)


def test_binomial_sum_both_sides_zero():
    # balanced blocks kill the odd-(l-m) coefficients on both sides
    assert binomial_sum_identity_check("1/2", "1/2", 0)


def test_d_product_identity():
    rng = np.random.default_rng(7)
    for ell_a_twice in range(0, 7):
        for ell_b_twice in range(0, 7):
            ell_a, ell_b = HalfInt(ell_a_twice), HalfInt(ell_b_twice)
            ell = ell_a + ell_b
            for beta in rng.uniform(0.05, math.pi - 0.05, 2):
                for m_a in m_values(ell_a):
                    for m_b in m_values(ell_b):
                        lhs = little_d(ell_a, m_a, ell_a, beta) * little_d(ell_b, m_b, ell_b, beta)
                        rhs = stretched_cg(ell_a, m_a, ell_b, m_b) * little_d(
                            ell, m_a + m_b, ell, beta
                        )
                        assert abs(lhs - rhs) <= 1e-11
