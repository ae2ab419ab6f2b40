"""Expectation values, uncertainties, and the equality checks that certify a
state as intelligent.

The certifying relation is Delta L_x * Delta L_y = |<L_z>| / 2 together with
a vanishing centered anticommutator.  All expectations are brute-force matrix
quadratic forms; closed-form shortcuts are only ever compared against them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .angmom import Ket, OperatorMatrix, op_lx, op_ly, op_lz
from .construct import (
    Branch,
    IntelligentSpec,
    alpha_of_beta,
    beta_of_alpha,
    intelligent_state,
    kappa_column,
    shifted_op_for_spec,
)
from .errors import DimensionMismatchError
from .halfint import HalfInt, m_values


@dataclass(frozen=True)
class ObservableReport:
    """Means, variances, and intelligence residuals for one state."""

    exp_lx: float
    exp_ly: float
    exp_lz: float
    var_lx: float
    var_ly: float
    product: float  # Delta L_x * Delta L_y
    rhs: float  # |<L_z>| / 2
    anticomm: float  # <{L_x - <L_x>, L_y - <L_y>}>
    eigen_residual: float

    @property
    def intelligence_gap(self) -> float:
        return self.product - self.rhs


def expectation(op: OperatorMatrix, psi: Ket) -> complex:
    """<psi|op|psi>."""
    if op.ell != psi.ell:
        raise DimensionMismatchError(f"ell mismatch: {op.ell} vs {psi.ell}")
    return complex(np.vdot(psi.amplitudes, op.mat @ psi.amplitudes))


def report_for_ket(psi: Ket, spec: IntelligentSpec | None = None) -> ObservableReport:
    """Populate an ObservableReport for any normalized ket.

    When a spec is supplied the eigen-residual of the shifted operator is
    included, scaled by max(1, |alpha|) so it stays meaningful near the
    x-branch pole.
    """
    lx, ly, lz = op_lx(psi.ell), op_ly(psi.ell), op_lz(psi.ell)
    ex = expectation(lx, psi).real
    ey = expectation(ly, psi).real
    ez = expectation(lz, psi).real
    vx = expectation(OperatorMatrix(psi.ell, lx.mat @ lx.mat), psi).real - ex * ex
    vy = expectation(OperatorMatrix(psi.ell, ly.mat @ ly.mat), psi).real - ey * ey
    cx = lx.mat - ex * np.eye(psi.dim)
    cy = ly.mat - ey * np.eye(psi.dim)
    anti = expectation(OperatorMatrix(psi.ell, cx @ cy + cy @ cx), psi).real

    eigen_residual = math.nan
    if spec is not None:
        op, lam, scale = shifted_op_for_spec(spec)
        eigen_residual = float(
            np.linalg.norm(op.mat @ psi.amplitudes - lam * psi.amplitudes) / scale
        )

    return ObservableReport(
        exp_lx=ex,
        exp_ly=ey,
        exp_lz=ez,
        var_lx=max(vx, 0.0),
        var_ly=max(vy, 0.0),
        product=math.sqrt(max(vx, 0.0) * max(vy, 0.0)),
        rhs=0.5 * abs(ez),
        anticomm=anti,
        eigen_residual=eigen_residual,
    )


def report(spec: IntelligentSpec) -> ObservableReport:
    """Build the state for a spec and report all observables."""
    return report_for_ket(intelligent_state(spec), spec)


def intelligence_residual(rep: ObservableReport) -> float:
    """Residual of the equality Delta L_x Delta L_y = |<L_z>|/2, evaluated stably.

    The squared form var_lx*var_ly - <L_z>^2/4 is always asserted; the direct
    product-minus-rhs gap is added wherever the product is numerically
    resolvable.  At the isolated zeros of <L_z> (beta = pi/2) the true
    variances vanish and the square root would amplify float noise to ~1e-9,
    so only the squared form (exact there) is meaningful.
    """
    squared = abs(rep.var_lx * rep.var_ly - 0.25 * rep.exp_lz**2)
    direct = abs(rep.intelligence_gap) if rep.product + rep.rhs >= 1e-6 else 0.0
    return max(squared, direct)


def avg_lz_formula(spec: IntelligentSpec) -> float:
    """<L_z> from the normalized kappa populations: N^2 sum_m m |kappa^m|^2."""
    if spec.beta == 0.0:
        return spec.ell.value
    if spec.beta == math.pi:
        return -spec.ell.value
    kappa = kappa_column(spec.ell_a, spec.ell_b, spec.beta)
    weights = kappa * kappa
    ms = np.array([m.value for m in m_values(spec.ell)])
    return float(np.dot(ms, weights) / weights.sum())


def variance_relations_check(
    spec: IntelligentSpec, tol: float = 1e-9
) -> tuple[bool, bool]:
    """Check (Delta L_y)^2 = -<L_z>/(2 alpha) and (Delta L_x)^2 = -alpha <L_z>/2.

    Returns (holds_in_magnitude, signs_as_printed).  alpha = 0 and the
    x-branch pole are excluded by the caller.
    """
    alpha = alpha_of_beta(spec.beta, spec.branch)
    if alpha == 0.0:
        raise ValueError("variance relations are degenerate at alpha = 0")
    rep = report(spec)
    pred_vy = -rep.exp_lz / (2.0 * alpha)
    pred_vx = -alpha * rep.exp_lz / 2.0
    magnitude = (
        abs(rep.var_ly - abs(pred_vy)) <= tol and abs(rep.var_lx - abs(pred_vx)) <= tol
    )
    signed = abs(rep.var_ly - pred_vy) <= tol and abs(rep.var_lx - pred_vx) <= tol
    return magnitude, signed


def max_product_check(ell, points: int = 100, tol: float = 1e-12) -> bool:
    """True iff the uncertainty product peaks at ell/2, attained at the endpoints."""
    ell = HalfInt.of(ell)
    cap = ell.value / 2.0
    for beta in (0.0, math.pi):
        rep = report(IntelligentSpec(ell, HalfInt(0), beta))
        if abs(rep.product - cap) > tol:
            return False
    for la_twice in range(0, ell.twice + 1):
        la, lb = HalfInt(la_twice), HalfInt(ell.twice - la_twice)
        for beta in np.linspace(0.0, math.pi, points + 2)[1:-1]:
            rep = report(IntelligentSpec(la, lb, float(beta)))
            if rep.product > cap + tol:
                return False
    return True


def alpha_inversion_check(ell_a, ell_b, tol: float = 1e-9, points: int = 12) -> bool:
    """True iff the x-branch report at alpha' = -1/alpha matches the y-branch
    report at alpha with the x and y roles swapped (magnitudes), over an
    alpha grid in (0, 1)."""
    ell_a, ell_b = HalfInt.of(ell_a), HalfInt.of(ell_b)
    for alpha in np.linspace(0.08, 0.92, points):
        beta_y, _ = beta_of_alpha(float(alpha))
        beta_x, _ = beta_of_alpha(-1.0 / float(alpha))
        rep_y = report(IntelligentSpec(ell_a, ell_b, beta_y, Branch.Y))
        rep_x = report(IntelligentSpec(ell_a, ell_b, beta_x, Branch.X))
        checks = (
            abs(rep_x.var_lx - rep_y.var_ly),
            abs(rep_x.var_ly - rep_y.var_lx),
            abs(abs(rep_x.exp_ly) - abs(rep_y.exp_lx)),
            abs(rep_x.exp_lx),
            abs(rep_y.exp_ly),
            abs(abs(rep_x.exp_lz) - abs(rep_y.exp_lz)),
            abs(rep_x.product - rep_y.product),
        )
        if max(checks) > tol:
            return False
    return True


def beta_for_target_lz(ell_a, ell_b, target: float, tol_beta: float = 1e-12) -> float:
    """Bisection solve of <L_z>(beta) = target on (0, pi).

    <L_z> falls from ell to -ell across the interval; it is smooth and
    monotone enough at the parameters of interest for plain bisection.
    """
    ell_a, ell_b = HalfInt.of(ell_a), HalfInt.of(ell_b)
    ell = ell_a + ell_b
    if not (-ell.value < target < ell.value):
        raise ValueError(f"target {target} outside (-{ell.value}, {ell.value})")

    def f(beta: float) -> float:
        return avg_lz_formula(IntelligentSpec(ell_a, ell_b, beta)) - target

    lo, hi = 1e-9, math.pi - 1e-9
    flo = f(lo)
    if flo < 0:
        raise ArithmeticError("no sign change: <L_z> does not start above target")
    while hi - lo > tol_beta:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
