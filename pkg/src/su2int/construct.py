"""Intelligent states of collective angular momentum, built by coupling two
oppositely rotated spin coherent blocks.

A state is labeled by (ell_a, ell_b, beta, branch): 2*ell_a spin-1/2 factors
rotated by +beta and 2*ell_b factors rotated by -beta about the branch axis
(y for |alpha| < 1, x for |alpha| >= 1), projected onto the stretched
ell = ell_a + ell_b sector.  The amplitude of |ell, m> is the kappa
coefficient, computed two independent ways (coupling sum and closed form),
and every state is cross-checked against brute-force oracles: a polynomial
expansion, a full tensor-product projection, and a null-space solve.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import (
    DegenerateAlphaError,
    DegenerateBetaError,
    DimensionTooLargeError,
    QuantumNumberMismatchError,
)
from .halfint import HalfInt, check_m, dim, m_index, m_values
from .linalg import fix_phase
from .wigner import LNFACT, _cg_cached, _d_top_column, little_d
from .angmom import Ket, basis_ket

TENSOR_DIM_CAP = 12  # 2*ell for the full product-space oracle, 2^12 = 4096 amplitudes


class Branch(Enum):
    """Rotation axis of the underlying coherent blocks.

    Y covers |alpha| < 1 (mu real); X covers |alpha| >= 1 (mu purely
    imaginary) and adds a per-m phase to the amplitudes.
    """

    Y = "y"
    X = "x"


@dataclass(frozen=True)
class IntelligentSpec:
    """Full label of one intelligent state."""

    ell_a: HalfInt
    ell_b: HalfInt
    beta: float
    branch: Branch = Branch.Y

    def __post_init__(self):
        object.__setattr__(self, "ell_a", HalfInt.of(self.ell_a))
        object.__setattr__(self, "ell_b", HalfInt.of(self.ell_b))
        if self.ell_a.twice < 0 or self.ell_b.twice < 0:
            raise QuantumNumberMismatchError("ell_a and ell_b must be nonnegative")
        if not (0.0 <= self.beta < 2.0 * math.pi):
            raise ValueError(f"beta must lie in [0, 2*pi), got {self.beta}")

    @property
    def ell(self) -> HalfInt:
        return self.ell_a + self.ell_b


def mu_of_alpha(alpha: float) -> complex:
    """mu = (1+alpha)/sqrt(1-alpha^2); real for |alpha|<1, imaginary beyond.

    For |alpha| > 1 the root branch sqrt(1-alpha^2) = i*sqrt(alpha^2-1) is
    used, so mu = -i (1+alpha)/sqrt(alpha^2-1).
    """
    if not math.isfinite(alpha):
        raise ValueError("alpha must be finite")
    if abs(alpha) == 1.0:
        raise DegenerateAlphaError(f"alpha = {alpha}: use the endpoint states |ell,+-ell>")
    if abs(alpha) < 1.0:
        return complex((1.0 + alpha) / math.sqrt(1.0 - alpha * alpha))
    return complex(0.0, -(1.0 + alpha) / math.sqrt(alpha * alpha - 1.0))


def beta_of_alpha(alpha: float) -> tuple[float, Branch]:
    """Rotation angle and branch for a given alpha; beta = 2*atan2(|mu|, 1)."""
    mu = mu_of_alpha(alpha)
    beta = 2.0 * math.atan2(abs(mu), 1.0)
    return beta, (Branch.Y if abs(alpha) < 1.0 else Branch.X)


def alpha_of_beta(beta: float, branch: Branch = Branch.Y) -> float:
    """Inverse map: alpha = -cos(beta) on Y, alpha = -1/cos(beta) on X."""
    c = math.cos(beta)
    if branch is Branch.Y:
        if abs(c) == 1.0:
            raise DegenerateBetaError(f"beta = {beta} maps to alpha = {-c}")
        return -c
    if c == 0.0:
        raise DegenerateBetaError("beta = pi/2 on the x branch maps to |alpha| = infinity")
    return -1.0 / c


def eigenvalue_for(spec: IntelligentSpec) -> complex:
    """Eigenvalue of L_x - i*alpha*L_y on the constructed state.

    (ell_a - ell_b) sin(beta) on the y branch; -i (ell_a - ell_b) tan(beta)
    on the x branch.
    """
    diff = (spec.ell_a.twice - spec.ell_b.twice) / 2.0
    if spec.branch is Branch.Y:
        return complex(diff * math.sin(spec.beta))
    return complex(0.0, -diff * math.tan(spec.beta))


def shifted_op_for_spec(spec: IntelligentSpec):
    """(operator, eigenvalue, scale) certifying the spec's eigen-relation.

    Normally (L_x - i*alpha*L_y, eigenvalue, max(1, |alpha|)); at the exact
    x-branch pole cos(beta) = 0 the relation degenerates to L_y with
    eigenvalue ell_b - ell_a.
    """
    from .angmom import op_ly, shifted_op

    half_diff = (spec.ell_a.twice - spec.ell_b.twice) / 2.0
    cos_b = math.cos(spec.beta)
    if spec.branch is Branch.X and cos_b == 0.0:
        return op_ly(spec.ell), complex(-half_diff), 1.0
    # alpha directly, without the map's endpoint guard: the operator itself
    # is fine at alpha = -+1 (nilpotent, eigenvalue 0)
    alpha = -cos_b if spec.branch is Branch.Y else -1.0 / cos_b
    return shifted_op(spec.ell, alpha), eigenvalue_for(spec), max(1.0, abs(alpha))


def spin_half_state(sign: int, alpha: float) -> Ket:
    """(|+> +- mu |->)/sqrt(1+|mu|^2), the spin-1/2 eigenstates of L_x - i*alpha*L_y."""
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    mu = mu_of_alpha(alpha)
    norm = math.sqrt(1.0 + abs(mu) ** 2)
    return Ket(HalfInt(1), np.array([1.0, sign * mu]) / norm)


def kappa_sum(ell_a, ell_b, m, beta: float) -> float:
    """Coupling-sum route: sum over m_a of CG * d^{lA}_{mA,lA}(beta) * d^{lB}_{mB,lB}(-beta).

    The A block carries +beta and the B block -beta, matching the coherent
    construction; the opposite assignment is the same function at -beta.
    """
    ell_a, ell_b, m = HalfInt.of(ell_a), HalfInt.of(ell_b), HalfInt.of(m)
    ell = ell_a + ell_b
    check_m(ell, m)
    col_a = _d_top_column(ell_a.twice, beta)
    col_b = _d_top_column(ell_b.twice, -beta)
    ms_a = m_values(ell_a)
    total = 0.0
    for ia, ma in enumerate(ms_a):
        mb = m - ma
        if abs(mb.twice) > ell_b.twice:
            continue
        cg = _cg_cached(ell_a.twice, ma.twice, ell_b.twice, mb.twice)
        total += cg * col_a[ia] * col_b[m_index(ell_b, mb)]
    return total


def kappa_closed(ell_a, ell_b, m, beta: float) -> float:
    """Closed-form route:

    2^l sqrt((2lB)!(2lA)!(l+m)!(l-m)!)/(2l)! * d^l_{lB-lA,m}(pi/2) * d^l_{m,l}(beta).
    """
    ell_a, ell_b, m = HalfInt.of(ell_a), HalfInt.of(ell_b), HalfInt.of(m)
    ell = ell_a + ell_b
    check_m(ell, m)
    log_pref = ell.value * math.log(2.0) + 0.5 * (
        LNFACT[ell_b.twice]
        + LNFACT[ell_a.twice]
        + LNFACT[(ell.twice + m.twice) // 2]
        + LNFACT[(ell.twice - m.twice) // 2]
        - 2.0 * LNFACT[ell.twice]
    )
    half_turn = little_d(ell, ell_b - ell_a, m, math.pi / 2.0)
    return math.exp(log_pref) * half_turn * _d_top_column(ell.twice, beta)[m_index(ell, m)]


def kappa_column(ell_a, ell_b, beta: float, route=None) -> np.ndarray:
    """All kappa^{l,m} for m descending, via the chosen route (closed form by default)."""
    ell_a, ell_b = HalfInt.of(ell_a), HalfInt.of(ell_b)
    route = route or kappa_closed
    ell = ell_a + ell_b
    return np.array([route(ell_a, ell_b, m, beta) for m in m_values(ell)])


def _x_branch_phases(ell: HalfInt) -> np.ndarray:
    """Per-m phases e^{-i pi (l-m)/2} for m descending."""
    return np.array([(-1j) ** ((ell.twice - m.twice) // 2) for m in m_values(ell)])


def intelligent_state(spec: IntelligentSpec, route=None) -> Ket:
    """Normalized intelligent state for the given label.

    At the exact endpoints beta = 0 and pi the shifted operator is nilpotent
    and the state is returned as the basis vector |ell, +-ell>.
    """
    ell = spec.ell
    if spec.beta == 0.0:
        return basis_ket(ell, ell)
    if spec.beta == math.pi:
        return basis_ket(ell, -ell)
    amps = kappa_column(spec.ell_a, spec.ell_b, spec.beta, route=route).astype(complex)
    if spec.branch is Branch.X:
        amps = amps * _x_branch_phases(ell)
    return Ket(ell, amps).normalized()


@dataclass(frozen=True, eq=False)
class PolyState:
    """Coefficients c_x of the monomials xi^x eta^{2l-x}, x ascending 0..2l."""

    coefficients: np.ndarray

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def poly_state(ell_a, ell_b, beta: float) -> PolyState:
    """Expand (xi c + eta s)^{2lA} (xi c - eta s)^{2lB} with c,s = cos,sin(beta/2).

    The eta-degree coefficients are the convolution of two signed binomial
    sequences scaled by the c,s monomials; no rotation machinery is used.
    """
    ell_a, ell_b = HalfInt.of(ell_a), HalfInt.of(ell_b)
    two_l = ell_a.twice + ell_b.twice
    c = math.cos(beta / 2.0)
    s = math.sin(beta / 2.0)
    plus = np.array([math.comb(ell_a.twice, a) for a in range(ell_a.twice + 1)], dtype=float)
    minus = np.array(
        [(-1.0) ** b * math.comb(ell_b.twice, b) for b in range(ell_b.twice + 1)], dtype=float
    )
    conv = np.convolve(plus, minus)  # index k = eta degree
    ks = np.arange(two_l + 1)
    eta_coeffs = conv * c ** (two_l - ks) * s**ks
    return PolyState(coefficients=eta_coeffs[::-1].copy())  # reindex to xi degree x


def poly_oracle(ell_a, ell_b, beta: float) -> Ket:
    """Polynomial-expansion oracle: map xi^{l+m} eta^{l-m} -> sqrt((l+m)!(l-m)!) |l,m>."""
    ell_a, ell_b = HalfInt.of(ell_a), HalfInt.of(ell_b)
    if ell_a.twice + ell_b.twice > 100:
        raise DimensionTooLargeError("poly_oracle supports ell <= 50")
    ell = ell_a + ell_b
    poly = poly_state(ell_a, ell_b, beta)
    amps = np.empty(dim(ell), dtype=complex)
    for i, m in enumerate(m_values(ell)):
        lpm = (ell.twice + m.twice) // 2
        lmm = (ell.twice - m.twice) // 2
        amps[i] = poly.coefficients[lpm] * math.exp(0.5 * (LNFACT[lpm] + LNFACT[lmm]))
    return Ket(ell, amps).normalized()


@dataclass(frozen=True, eq=False)
class ProductState:
    """Spin-1/2 factors of the pre-projection product state, each normalized."""

    factors: list

    def vector(self) -> np.ndarray:
        """Full 2^n product amplitude vector (first factor most significant)."""
        out = np.array([1.0 + 0.0j])
        for f in self.factors:
            out = np.kron(out, f)
        return out


def product_factors(spec: IntelligentSpec) -> ProductState:
    """2*ell_a copies of the +beta-rotated qubit and 2*ell_b of the -beta-rotated one."""
    c = math.cos(spec.beta / 2.0)
    s = math.sin(spec.beta / 2.0)
    if spec.branch is Branch.Y:
        plus = np.array([c, s], dtype=complex)
        minus = np.array([c, -s], dtype=complex)
    else:
        plus = np.array([c, -1j * s], dtype=complex)
        minus = np.array([c, 1j * s], dtype=complex)
    return ProductState([plus] * spec.ell_a.twice + [minus] * spec.ell_b.twice)


def _apply_site_op(vec: np.ndarray, op: np.ndarray, site: int, n_sites: int) -> np.ndarray:
    """Apply a 2x2 operator at one site of a 2^n product vector."""
    shaped = vec.reshape(2**site, 2, 2 ** (n_sites - site - 1))
    return np.einsum("ab,ibj->iaj", op, shaped).reshape(-1)


_QUBIT_LP = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
_QUBIT_LX = (_QUBIT_LP + _QUBIT_LP.T) / 2.0
_QUBIT_LY = (_QUBIT_LP - _QUBIT_LP.T) / 2.0j


@lru_cache(maxsize=32)
def _excitation_masks(n_sites: int) -> tuple[np.ndarray, ...]:
    """Boolean masks grouping the 2^n basis states by number of down spins."""
    counts = np.array([bin(i).count("1") for i in range(2**n_sites)])
    return tuple(counts == k for k in range(n_sites + 1))


def tensor_oracle(ell_a, ell_b, beta: float, branch: Branch = Branch.Y) -> Ket:
    """Brute-force oracle: full product of rotated qubits, projected onto the
    symmetric (Dicke) basis and renormalized.

    Before projecting, the additivity of the eigenvalue on the product state
    is verified directly, scaled by max(1, |alpha|) to stay meaningful near
    the x-branch pole.
    """
    ell_a, ell_b = HalfInt.of(ell_a), HalfInt.of(ell_b)
    n = ell_a.twice + ell_b.twice
    if n > TENSOR_DIM_CAP:
        raise DimensionTooLargeError(f"2*ell = {n} exceeds the product-space cap {TENSOR_DIM_CAP}")
    spec = IntelligentSpec(ell_a, ell_b, beta, branch)
    ell = spec.ell
    if n == 0:
        return basis_ket(ell, ell)
    vec = product_factors(spec).vector()

    _check_product_eigenrelation(vec, spec, n)

    masks = _excitation_masks(n)
    amps = np.empty(dim(ell), dtype=complex)
    for i, m in enumerate(m_values(ell)):
        k = (ell.twice - m.twice) // 2  # number of down spins
        amps[i] = vec[masks[k]].sum() / math.sqrt(math.comb(n, k))
    return Ket(ell, amps).normalized()


def _check_product_eigenrelation(vec: np.ndarray, spec: IntelligentSpec, n_sites: int) -> None:
    """Assert (L_x - i alpha L_y) v = lambda v on the unprojected product state."""
    cos_b = math.cos(spec.beta)
    if spec.branch is Branch.X and cos_b == 0.0:
        op, lam, scale = _QUBIT_LY, -complex((spec.ell_a.twice - spec.ell_b.twice) / 2.0), 1.0
    else:
        alpha = alpha_of_beta(spec.beta, spec.branch)
        op = _QUBIT_LX - 1j * alpha * _QUBIT_LY
        lam = eigenvalue_for(spec)
        scale = max(1.0, abs(alpha))
    acted = np.zeros_like(vec)
    for site in range(n_sites):
        acted += _apply_site_op(vec, op, site, n_sites)
    residual = np.linalg.norm(acted - lam * vec) / scale
    if residual > 1e-9:
        raise ArithmeticError(f"product state violates eigenvalue additivity: {residual:.3e}")


def _coupled_ops(ell_a: HalfInt, ell_b: HalfInt):
    """Collective and difference operators on the (2lA+1)(2lB+1) coupled space."""
    from .angmom import op_lx, op_ly, op_lz

    ia = np.eye(dim(ell_a))
    ib = np.eye(dim(ell_b))
    ops = {}
    for name, op in (("x", op_lx), ("y", op_ly), ("z", op_lz)):
        a = np.kron(op(ell_a).mat, ib)
        b = np.kron(ia, op(ell_b).mat)
        ops[f"l{name}"] = a + b
        ops[f"k{name}"] = a - b
    return ops


def k_algebra_check(ell_a, ell_b, tol: float = 1e-12) -> bool:
    """True iff {K_x, K_y, L_z} close as an angular-momentum algebra on A x B,
    with K_i = L_{i,A} - L_{i,B}."""
    ell_a, ell_b = HalfInt.of(ell_a), HalfInt.of(ell_b)
    if ell_a.twice + ell_b.twice > TENSOR_DIM_CAP:
        raise DimensionTooLargeError("2*ell exceeds the product-space cap")
    ops = _coupled_ops(ell_a, ell_b)
    kx, ky, lz = ops["kx"], ops["ky"], ops["lz"]

    def comm(a, b):
        return a @ b - b @ a

    checks = (
        np.abs(comm(kx, ky) - 1j * lz).max(),
        np.abs(comm(lz, kx) - 1j * ky).max(),
        np.abs(comm(ky, lz) - 1j * kx).max(),
    )
    return max(checks) <= tol


def projected_coupled_state(ell_a, ell_b, ell, beta: float) -> Ket:
    """Project the coupled coherent pair in ell_a x ell_b onto total spin ell.

    Uses the Casimir polynomial projector, so no Clebsch-Gordan input is
    needed even for ell below the stretched value.  The |ell,m> basis inside
    the coupled space is generated by collective lowering from the
    phase-fixed top state.
    """
    ell_a, ell_b, ell = HalfInt.of(ell_a), HalfInt.of(ell_b), HalfInt.of(ell)
    if not (abs(ell_a.twice - ell_b.twice) <= ell.twice <= ell_a.twice + ell_b.twice):
        raise QuantumNumberMismatchError(f"ell={ell} outside |lA-lB|..lA+lB")
    if (ell_a.twice + ell_b.twice - ell.twice) % 2 != 0:
        raise QuantumNumberMismatchError("ell has wrong parity for this coupling")

    ops = _coupled_ops(ell_a, ell_b)
    casimir = ops["lx"] @ ops["lx"] + ops["ly"] @ ops["ly"] + ops["lz"] @ ops["lz"]
    n_tot = dim(ell_a) * dim(ell_b)
    projector = np.eye(n_tot, dtype=complex)
    target = ell.value * (ell.value + 1.0)
    for other_twice in range(abs(ell_a.twice - ell_b.twice), ell_a.twice + ell_b.twice + 2, 2):
        if other_twice == ell.twice:
            continue
        other = other_twice * (other_twice + 2) / 4.0  # ell''(ell''+1)
        projector = projector @ (casimir - other * np.eye(n_tot)) / (target - other)

    prod = np.kron(
        np.array(_d_top_column(ell_a.twice, beta)), np.array(_d_top_column(ell_b.twice, -beta))
    ).astype(complex)
    projected = projector @ prod

    # build |ell, m> inside the coupled space by lowering from the top state,
    # seeded with the largest-m_a basis vector of the m = ell slice
    lminus = ops["lx"] - 1j * ops["ly"]
    ma_top = HalfInt(min(ell_a.twice, ell.twice + ell_b.twice))
    seed = np.zeros(n_tot, dtype=complex)
    seed[m_index(ell_a, ma_top) * dim(ell_b) + m_index(ell_b, ell - ma_top)] = 1.0
    top = projector @ seed
    top = fix_phase(top / np.linalg.norm(top))
    basis_cols = [top]
    current = top
    for m in m_values(ell)[:-1]:
        current = lminus @ current / math.sqrt(
            (ell.value + m.value) * (ell.value - m.value + 1.0)
        )
        basis_cols.append(current)
    amps = np.array([np.vdot(col, projected) for col in basis_cols])
    return Ket(ell, amps).normalized()
