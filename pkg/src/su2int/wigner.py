"""Reduced Wigner d-functions and stretched Clebsch-Gordan coefficients.

All factorial ratios are carried as (sign, log magnitude) pairs so the
formulas stay usable up to ell of order 100 without overflow.  The sign
convention of d^ell_{m,m'}(beta) = <ell,m| e^{-i beta L_y} |ell,m'> is not
taken from any table; it is pinned against the matrix-exponential oracle in
the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import QuantumNumberMismatchError
from .halfint import HalfInt, check_m, dim, m_values


class LogFactTable:
    """Table of ln(n!) for n = 0..n_max, grown on demand."""

    def __init__(self, n_max: int = 128):
        self._values = [0.0, 0.0]
        self._extend(n_max)

    def _extend(self, n_max: int) -> None:
        while len(self._values) <= n_max:
            n = len(self._values)
            self._values.append(self._values[-1] + math.log(n))

    def value(self, n: int) -> float:
        """ln(n!)."""
        if n < 0:
            raise ValueError(f"factorial argument must be nonnegative, got {n}")
        if n >= len(self._values):
            self._extend(n)
        return self._values[n]

    def __getitem__(self, n: int) -> float:
        return self.value(n)

    def __len__(self) -> int:
        return len(self._values)


LNFACT = LogFactTable(512)


@dataclass(frozen=True)
class SignedLogMagnitude:
    """A real number stored as sign and log of absolute value; sign 0 is exact zero."""

    sign: int
    log_abs: float

    @staticmethod
    def of(x: float) -> "SignedLogMagnitude":
        if x == 0.0:
            return SignedLogMagnitude(0, -math.inf)
        return SignedLogMagnitude(1 if x > 0 else -1, math.log(abs(x)))

    def times(self, other: "SignedLogMagnitude") -> "SignedLogMagnitude":
        if self.sign == 0 or other.sign == 0:
            return SignedLogMagnitude(0, -math.inf)
        return SignedLogMagnitude(self.sign * other.sign, self.log_abs + other.log_abs)

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_abs)


def signed_log_sum(terms: list[SignedLogMagnitude]) -> float:
    """Sum of signed-log terms, rescaled by the largest magnitude first."""
    live = [t for t in terms if t.sign != 0]
    if not live:
        return 0.0
    top = max(t.log_abs for t in live)
    acc = sum(t.sign * math.exp(t.log_abs - top) for t in live)
    return acc * math.exp(top)


def _log_pow(base_log: float | None, exponent: int) -> float | None:
    """exponent * log|base|; None marks an exact zero base with positive power."""
    if base_log is None:
        return None if exponent > 0 else 0.0
    return exponent * base_log


def little_d(ell, m, mp, beta: float) -> float:
    """d^ell_{m,m'}(beta) by the standard alternating factorial sum.

    Sum limits are chosen so every factorial argument is nonnegative; each
    term is assembled in the log domain.
    """
    ell, m, mp = HalfInt.of(ell), HalfInt.of(m), HalfInt.of(mp)
    check_m(ell, m)
    check_m(ell, mp)

    lpm = (ell.twice + m.twice) // 2
    lmm = (ell.twice - m.twice) // 2
    lpmp = (ell.twice + mp.twice) // 2
    lmmp = (ell.twice - mp.twice) // 2
    mmmp = (m.twice - mp.twice) // 2  # m - m', an integer

    c = math.cos(beta / 2.0)
    s = math.sin(beta / 2.0)
    log_c = math.log(abs(c)) if c != 0.0 else None
    log_s = math.log(abs(s)) if s != 0.0 else None

    prefactor = 0.5 * (LNFACT[lpm] + LNFACT[lmm] + LNFACT[lpmp] + LNFACT[lmmp])

    k_min = max(0, -mmmp)
    k_max = min(lpmp, lmm)
    terms: list[SignedLogMagnitude] = []
    for k in range(k_min, k_max + 1):
        cos_pow = lmm + lpmp - 2 * k  # = 2l - 2k + m' - m
        sin_pow = 2 * k + mmmp
        lc = _log_pow(log_c, cos_pow)
        ls = _log_pow(log_s, sin_pow)
        if lc is None or ls is None:
            continue
        sign = -1 if (k + mmmp) % 2 else 1
        if c < 0.0 and cos_pow % 2:
            sign = -sign
        if s < 0.0 and sin_pow % 2:
            sign = -sign
        log_den = LNFACT[lpmp - k] + LNFACT[k] + LNFACT[lmm - k] + LNFACT[k + mmmp]
        terms.append(SignedLogMagnitude(sign, prefactor - log_den + lc + ls))
    return signed_log_sum(terms)


@lru_cache(maxsize=4096)
def _d_top_column(ell_twice: int, beta: float) -> tuple[float, ...]:
    """Column d^ell_{m,ell}(beta) for m descending, cached for hot loops."""
    ell = HalfInt(ell_twice)
    return tuple(little_d(ell, m, ell, beta) for m in m_values(ell))


def little_d_matrix(ell, beta: float) -> np.ndarray:
    """[d^ell_{m,m'}(beta)] with both indices descending from ell."""
    ell = HalfInt.of(ell)
    ms = m_values(ell)
    return np.array([[little_d(ell, m, mp, beta) for mp in ms] for m in ms])


def little_d_symmetries_check(ell, m, beta: float, tol: float = 1e-12) -> bool:
    """True iff d^ell_{m,ell}(-beta) = (-1)^(m-ell) d^ell_{m,ell}(beta) within tol."""
    ell, m = HalfInt.of(ell), HalfInt.of(m)
    lhs = little_d(ell, m, ell, -beta)
    sign = -1 if (ell.twice - m.twice) // 2 % 2 else 1
    rhs = sign * little_d(ell, m, ell, beta)
    return abs(lhs - rhs) <= tol


def stretched_cg(ell_a, m_a, ell_b, m_b) -> float:
    """<ell_a m_a; ell_b m_b | ell, m_a+m_b> for the stretched ell = ell_a + ell_b.

    Closed factorial form, evaluated in the log domain; always nonnegative.
    """
    ell_a, m_a = HalfInt.of(ell_a), HalfInt.of(m_a)
    ell_b, m_b = HalfInt.of(ell_b), HalfInt.of(m_b)
    check_m(ell_a, m_a)
    check_m(ell_b, m_b)
    ell = ell_a + ell_b
    m = m_a + m_b

    log_num = (
        LNFACT[ell_a.twice]
        + LNFACT[ell_b.twice]
        + LNFACT[(ell.twice + m.twice) // 2]
        + LNFACT[(ell.twice - m.twice) // 2]
    )
    log_den = (
        LNFACT[ell.twice]
        + LNFACT[(ell_a.twice + m_a.twice) // 2]
        + LNFACT[(ell_a.twice - m_a.twice) // 2]
        + LNFACT[(ell_b.twice + m_b.twice) // 2]
        + LNFACT[(ell_b.twice - m_b.twice) // 2]
    )
    return math.exp(0.5 * (log_num - log_den))


@lru_cache(maxsize=512)
def _cg_cached(ell_a_twice: int, m_a_twice: int, ell_b_twice: int, m_b_twice: int) -> float:
    return stretched_cg(
        HalfInt(ell_a_twice), HalfInt(m_a_twice), HalfInt(ell_b_twice), HalfInt(m_b_twice)
    )


def cg_lowering_oracle(ell_a, ell_b) -> dict:
    """All stretched CG values built by repeated collective lowering.

    Starts from |ell_a,ell_a>|ell_b,ell_b> and applies L_- = L_-^A + L_-^B,
    normalizing each rung.  Returns {(m_a, m_b): coefficient} keyed by
    HalfInt pairs, covering every m of ell = ell_a + ell_b.
    """
    ell_a, ell_b = HalfInt.of(ell_a), HalfInt.of(ell_b)
    ell = ell_a + ell_b
    ms_a = m_values(ell_a)
    ms_b = m_values(ell_b)
    coeff = np.zeros((dim(ell_a), dim(ell_b)))
    coeff[0, 0] = 1.0

    def lower_factor(j: HalfInt, m: HalfInt) -> float:
        return math.sqrt((j.value + m.value) * (j.value - m.value + 1.0))

    table: dict = {(ms_a[0], ms_b[0]): 1.0}
    for step, m in enumerate(m_values(ell)[:-1]):
        new = np.zeros_like(coeff)
        for ia, ma in enumerate(ms_a):
            for ib, mb in enumerate(ms_b):
                if coeff[ia, ib] == 0.0:
                    continue
                if ma.twice > -ell_a.twice:
                    new[ia + 1, ib] += coeff[ia, ib] * lower_factor(ell_a, ma)
                if mb.twice > -ell_b.twice:
                    new[ia, ib + 1] += coeff[ia, ib] * lower_factor(ell_b, mb)
        new /= lower_factor(ell, m)
        coeff = new
        m_next = m - HalfInt(2)
        for ia, ma in enumerate(ms_a):
            for ib, mb in enumerate(ms_b):
                if (ma + mb) == m_next and coeff[ia, ib] != 0.0:
                    table[(ma, mb)] = float(coeff[ia, ib])
    return table


def binomial_sum_identity_check(ell_a, ell_b, m, tol: float = 1e-10) -> bool:
    """Check the exact-integer alternating binomial sum against its d-function form.

    sum_n (-1)^n C(2lA, l-m-n) C(2lB, n)
        = 2^l sqrt((2lB)!(2lA)!/((l+m)!(l-m)!)) d^l_{lB-lA,m}(pi/2)
    """
    ell_a, ell_b, m = HalfInt.of(ell_a), HalfInt.of(ell_b), HalfInt.of(m)
    ell = ell_a + ell_b
    check_m(ell, m)
    lmm = (ell.twice - m.twice) // 2

    lhs = 0
    for n in range(0, ell_b.twice + 1):
        k = lmm - n
        if k < 0 or k > ell_a.twice:
            continue
        lhs += (-1) ** n * math.comb(ell_a.twice, k) * math.comb(ell_b.twice, n)

    log_pref = ell.value * math.log(2.0) + 0.5 * (
        LNFACT[ell_b.twice]
        + LNFACT[ell_a.twice]
        - LNFACT[(ell.twice + m.twice) // 2]
        - LNFACT[lmm]
    )
    rhs = math.exp(log_pref) * little_d(ell, ell_b - ell_a, m, math.pi / 2.0)
    return abs(lhs - rhs) <= tol * max(1.0, abs(lhs), abs(rhs))
