"""Self-contained verification suites over every library invariant.

Each suite returns (cases, worst_residual); the runner wraps them into the
JSON summary emitted by the CLI.  Residuals are absolute unless a suite says
otherwise; a suite passes when its worst residual stays below its threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import construct
from .angmom import Ket, basis_ket, op_lx, op_ly, op_lz, op_lplus, op_lminus, rotation_y, shifted_op
from .construct import (
    Branch,
    IntelligentSpec,
    alpha_of_beta,
    eigenvalue_for,
    intelligent_state,
    k_algebra_check,
    kappa_column,
    mu_of_alpha,
    poly_oracle,
    projected_coupled_state,
    spin_half_state,
    tensor_oracle,
)
from .halfint import HalfInt, dim, m_values
from .linalg import expm_action, gram_rank, null_space_vector
from .observables import (
    alpha_inversion_check,
    avg_lz_formula,
    beta_for_target_lz,
    intelligence_residual,
    max_product_check,
    report,
    report_for_ket,
    variance_relations_check,
)
from .wigner import (
    binomial_sum_identity_check,
    cg_lowering_oracle,
    little_d,
    little_d_matrix,
    little_d_symmetries_check,
    stretched_cg,
)


@dataclass
class SuiteResult:
    name: str
    cases: int
    worst_residual: float
    passed: bool

    def as_json(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "worst_residual": self.worst_residual,
            "pass": self.passed,
        }


def _ell_grid(max_ell: HalfInt) -> list[HalfInt]:
    return [HalfInt(t) for t in range(0, max_ell.twice + 1)]


def _pairs_up_to(max_ell: HalfInt) -> list[tuple[HalfInt, HalfInt]]:
    out = []
    for ell_twice in range(0, max_ell.twice + 1):
        for la_twice in range(0, ell_twice + 1):
            out.append((HalfInt(la_twice), HalfInt(ell_twice - la_twice)))
    return out


def suite_nullspace_contract(max_ell: HalfInt, rng) -> tuple[int, float]:
    """||(M - lam I) v|| <= tol ||M||_F for shifted operators across the grid."""
    worst, cases = 0.0, 0
    for ell in _ell_grid(max_ell):
        if ell.twice == 0:
            continue
        for alpha in rng.uniform(-0.95, 0.95, 4):
            mat = shifted_op(ell, float(alpha)).mat
            lam = (ell.value) * math.sqrt(1 - alpha**2)  # top eigenvalue (la, lb) = (ell, 0)
            v = null_space_vector(mat, lam)
            resid = np.linalg.norm(mat @ v - lam * v) / np.linalg.norm(mat)
            worst = max(worst, resid)
            cases += 1
    return cases, worst


def suite_expm_unitarity(max_ell: HalfInt, rng) -> tuple[int, float]:
    worst, cases = 0.0, 0
    for ell in _ell_grid(max_ell):
        d = dim(ell)
        gen = op_ly(ell).mat
        for beta in rng.uniform(0.0, 2.0 * math.pi, 4):
            v = rng.normal(size=d) + 1j * rng.normal(size=d)
            v /= np.linalg.norm(v)
            rotated = expm_action(-1j * beta * gen, v)
            worst = max(worst, abs(np.linalg.norm(rotated) - 1.0))
            # additivity for commuting generators
            half = expm_action(-1j * (beta / 2) * gen, v)
            twice = expm_action(-1j * (beta / 2) * gen, half)
            worst = max(worst, float(np.abs(twice - rotated).max()))
            cases += 1
    return cases, worst


def suite_algebra(max_ell: HalfInt, rng) -> tuple[int, float]:
    """Ladder commutators, Casimir, and nilpotency of the alpha = +-1 operators."""
    worst, cases = 0.0, 0
    ells = _ell_grid(max_ell)
    if HalfInt(50) not in ells:
        ells = ells + [HalfInt(50)]  # ell = 25 stress case
    for ell in ells:
        lz, lp, lm = op_lz(ell).mat, op_lplus(ell).mat, op_lminus(ell).mat
        lx, ly = op_lx(ell).mat, op_ly(ell).mat
        eye = np.eye(dim(ell))
        worst = max(worst, float(np.abs(lz @ lp - lp @ lz - lp).max()))
        worst = max(worst, float(np.abs(lp @ lm - lm @ lp - 2 * lz).max()))
        worst = max(
            worst,
            float(np.abs(lx @ lx + ly @ ly + lz @ lz - ell.value * (ell.value + 1) * eye).max()),
        )
        cases += 3
    for ell in _ell_grid(max_ell):
        for alpha in (1.0, -1.0):
            power = np.eye(dim(ell), dtype=complex)
            mat = shifted_op(ell, alpha).mat
            for _ in range(dim(ell)):
                power = power @ mat
            worst = max(worst, float(np.abs(power).max()))
            cases += 1
    return cases, worst


def suite_wigner_convention(max_ell: HalfInt, rng) -> tuple[int, float]:
    """d-matrix vs matrix exponential, orthogonality, and the -beta symmetry."""
    worst, cases = 0.0, 0
    for ell in _ell_grid(max_ell):
        for beta in rng.uniform(0.0, 2.0 * math.pi, 4):
            dmat = little_d_matrix(ell, float(beta))
            r = rotation_y(ell, float(beta)).real
            worst = max(worst, float(np.abs(dmat - r).max()))
            worst = max(worst, float(np.abs(dmat.T @ dmat - np.eye(dim(ell))).max()))
            cases += 1
        for m in m_values(ell):
            if not little_d_symmetries_check(ell, m, 0.7):
                worst = max(worst, 1.0)
            cases += 1
    return cases, worst


def suite_cg(max_ell: HalfInt, rng) -> tuple[int, float]:
    """Closed-form stretched CG against the collective-lowering oracle."""
    worst, cases = 0.0, 0
    for ell_a, ell_b in _pairs_up_to(max_ell):
        table = cg_lowering_oracle(ell_a, ell_b)
        for (m_a, m_b), value in table.items():
            worst = max(worst, abs(value - stretched_cg(ell_a, m_a, ell_b, m_b)))
            cases += 1
    return cases, worst


def suite_d_product_identity(max_ell: HalfInt, rng) -> tuple[int, float]:
    """d^{lA}_{mA,lA}(b) d^{lB}_{mB,lB}(b) = CG * d^{l}_{m,l}(b)."""
    worst, cases = 0.0, 0
    for ell_a, ell_b in _pairs_up_to(max_ell):
        ell = ell_a + ell_b
        for beta in rng.uniform(0.1, math.pi - 0.1, 2):
            for m_a in m_values(ell_a):
                for m_b in m_values(ell_b):
                    lhs = little_d(ell_a, m_a, ell_a, float(beta)) * little_d(
                        ell_b, m_b, ell_b, float(beta)
                    )
                    rhs = stretched_cg(ell_a, m_a, ell_b, m_b) * little_d(
                        ell, m_a + m_b, ell, float(beta)
                    )
                    worst = max(worst, abs(lhs - rhs))
                    cases += 1
    return cases, worst


def suite_binomial_sum(max_ell: HalfInt, rng) -> tuple[int, float]:
    worst, cases = 0.0, 0
    for ell_a, ell_b in _pairs_up_to(max_ell):
        ell = ell_a + ell_b
        for m in m_values(ell):
            if not binomial_sum_identity_check(ell_a, ell_b, m):
                worst = max(worst, 1.0)
            cases += 1
    return cases, worst


def suite_spin_half(max_ell: HalfInt, rng) -> tuple[int, float]:
    """Closed-form spin-1/2 eigenstates on both alpha ranges."""
    worst, cases = 0.0, 0
    alphas = np.concatenate([rng.uniform(-0.99, 0.99, 25), 1.0 / rng.uniform(-0.99, 0.99, 25)])
    half = HalfInt(1)
    for alpha in alphas:
        if abs(alpha) == 1.0 or alpha == 0.0:
            continue
        mat = shifted_op(half, float(alpha)).mat
        lam = 0.5 * (
            math.sqrt(1 - alpha**2) if abs(alpha) < 1 else 1j * math.sqrt(alpha**2 - 1)
        )
        for sign in (+1, -1):
            ket = spin_half_state(sign, float(alpha))
            resid = np.linalg.norm(mat @ ket.amplitudes - sign * lam * ket.amplitudes)
            worst = max(worst, resid / max(1.0, abs(alpha)))
            cases += 1
    return cases, worst


def suite_four_routes(max_ell: HalfInt, rng) -> tuple[int, float]:
    """Pairwise fidelity deficit across all five construction routes."""
    worst, cases = 0.0, 0
    betas = np.linspace(0.0, math.pi, 27)[1:-1]
    for ell_a, ell_b in _pairs_up_to(max_ell):
        ell = ell_a + ell_b
        for beta in betas:
            spec = IntelligentSpec(ell_a, ell_b, float(beta))
            routes = [
                intelligent_state(spec, route=construct.kappa_closed),
                intelligent_state(spec, route=construct.kappa_sum),
                poly_oracle(ell_a, ell_b, float(beta)),
            ]
            if ell.twice <= construct.TENSOR_DIM_CAP:
                routes.append(tensor_oracle(ell_a, ell_b, float(beta)))
            mat = shifted_op(ell, alpha_of_beta(float(beta))).mat
            routes.append(Ket(ell, null_space_vector(mat, eigenvalue_for(spec))))
            for i in range(len(routes)):
                for j in range(i + 1, len(routes)):
                    worst = max(worst, 1.0 - routes[i].fidelity(routes[j]))
            cases += 1
    return cases, worst


def suite_eigen_residual(max_ell: HalfInt, rng) -> tuple[int, float]:
    """||(L_x - i a L_y) psi - (lA - lB) sin(beta) psi|| on the y branch."""
    worst, cases = 0.0, 0
    betas = np.linspace(0.0, math.pi, 27)[1:-1]
    for ell_a, ell_b in _pairs_up_to(max_ell):
        for beta in betas:
            rep = report(IntelligentSpec(ell_a, ell_b, float(beta)))
            worst = max(worst, rep.eigen_residual)
            cases += 1
    return cases, worst


def suite_intelligence_equality(max_ell: HalfInt, rng) -> tuple[int, float]:
    """Equality residual and the anticommutator on both branches."""
    worst, cases = 0.0, 0
    betas = np.linspace(0.0, math.pi, 15)[1:-1]
    for ell_a, ell_b in _pairs_up_to(max_ell):
        for beta in betas:
            for branch in (Branch.Y, Branch.X):
                rep = report(IntelligentSpec(ell_a, ell_b, float(beta), branch))
                worst = max(worst, intelligence_residual(rep), abs(rep.anticomm))
                cases += 1
    return cases, worst


def suite_robertson_random(max_ell: HalfInt, rng) -> tuple[int, float]:
    """Uncertainty bound product >= rhs on random kets; residual is the violation."""
    worst, cases = 0.0, 0
    per_ell = 1000
    for ell in _ell_grid(min(max_ell, HalfInt(10))):
        if ell.twice == 0:
            continue
        d = dim(ell)
        for _ in range(per_ell):
            amps = rng.normal(size=d) + 1j * rng.normal(size=d)
            ket = Ket(ell, amps).normalized()
            rep = report_for_ket(ket)
            worst = max(worst, rep.rhs - rep.product)
            cases += 1
    return cases, worst


def suite_separation(max_ell: HalfInt, rng) -> tuple[int, float]:
    """Randomly perturbed states must fail the equality by >= 1e-3.

    A few noise directions per state are drawn and the best violation kept:
    isolated draws can land nearly tangent to the intelligent family (which
    is why the equality test has teeth at all).  The residual is
    (1e-3 - violation), so anything above 0 fails the suite.
    """
    worst, cases = 0.0, 0
    betas = np.linspace(0.6, math.pi - 0.6, 5)
    for ell_a, ell_b in _pairs_up_to(max_ell):
        if (ell_a + ell_b).twice == 0:
            continue
        for beta in betas:
            base = intelligent_state(IntelligentSpec(ell_a, ell_b, float(beta)))
            best = 0.0
            for _ in range(8):
                noise = rng.normal(size=base.dim) + 1j * rng.normal(size=base.dim)
                noise /= np.linalg.norm(noise)
                perturbed = Ket(base.ell, base.amplitudes + 0.3 * noise).normalized()
                best = max(best, report_for_ket(perturbed).intelligence_gap)
            worst = max(worst, 1e-3 - best)
            cases += 1
    return cases, worst


def suite_kappa_symmetry(max_ell: HalfInt, rng) -> tuple[int, float]:
    """Population mirror: |kappa^m(pi - beta)|^2 = |kappa^{-m}(beta)|^2, plus
    evenness in beta and the la = lb parity rule."""
    worst, cases = 0.0, 0
    for ell_a, ell_b in _pairs_up_to(max_ell):
        ell = ell_a + ell_b
        for beta in rng.uniform(0.1, math.pi - 0.1, 3):
            col = kappa_column(ell_a, ell_b, float(beta))
            mirrored = kappa_column(ell_a, ell_b, math.pi - float(beta))
            flipped = kappa_column(ell_a, ell_b, -float(beta))
            worst = max(worst, float(np.abs(mirrored**2 - (col**2)[::-1]).max()))
            worst = max(worst, float(np.abs(flipped**2 - col**2).max()))
            if ell_a == ell_b:
                odd = [
                    abs(c)
                    for c, m in zip(col, m_values(ell))
                    if ((ell.twice - m.twice) // 2) % 2 == 1
                ]
                if odd:
                    worst = max(worst, max(odd))
            cases += 1
    return cases, worst


def suite_swap_and_inversion(max_ell: HalfInt, rng) -> tuple[int, float]:
    """lA <-> lB leaves |<L_z>| unchanged; alpha -> -1/alpha swaps the x and y roles."""
    worst, cases = 0.0, 0
    for ell_a, ell_b in _pairs_up_to(min(max_ell, HalfInt(7))):
        if ell_a == ell_b:
            continue
        for beta in rng.uniform(0.1, math.pi - 0.1, 3):
            a = abs(avg_lz_formula(IntelligentSpec(ell_a, ell_b, float(beta))))
            b = abs(avg_lz_formula(IntelligentSpec(ell_b, ell_a, float(beta))))
            worst = max(worst, abs(a - b))
            cases += 1
    for ell_a, ell_b in ((HalfInt(4), HalfInt(1)), (HalfInt(3), HalfInt(2)), (HalfInt(1), HalfInt(0))):
        if not alpha_inversion_check(ell_a, ell_b):
            worst = max(worst, 1.0)
        cases += 1
    return cases, worst


def suite_endpoints(max_ell: HalfInt, rng) -> tuple[int, float]:
    """Endpoint states are exact basis vectors and saturate the product maximum."""
    worst, cases = 0.0, 0
    for ell_a, ell_b in _pairs_up_to(max_ell):
        ell = ell_a + ell_b
        top = intelligent_state(IntelligentSpec(ell_a, ell_b, 0.0))
        bottom = intelligent_state(IntelligentSpec(ell_a, ell_b, math.pi))
        worst = max(worst, float(np.abs(top.amplitudes - basis_ket(ell, ell).amplitudes).max()))
        worst = max(
            worst, float(np.abs(bottom.amplitudes - basis_ket(ell, -ell).amplitudes).max())
        )
        cases += 1
    for ell in _ell_grid(max_ell):
        if ell.twice == 0:
            continue
        if not max_product_check(ell, points=25):
            worst = max(worst, 1.0)
        cases += 1
    return cases, worst


def suite_linear_independence(max_ell: HalfInt, rng) -> tuple[int, float]:
    """2l+1 states at fixed interior beta span the whole representation."""
    worst, cases = 0.0, 0
    for ell_twice in range(1, max_ell.twice + 1):
        ell = HalfInt(ell_twice)
        states = [
            intelligent_state(
                IntelligentSpec(HalfInt(la), HalfInt(ell_twice - la), math.pi / 2)
            ).amplitudes
            for la in range(0, ell_twice + 1)
        ]
        rank = gram_rank(states)
        worst = max(worst, float(dim(ell) - rank))
        cases += 1
    return cases, worst


def suite_shifted_pair(max_ell: HalfInt, rng) -> tuple[int, float]:
    """Coupling (lA + 1/2) x (lB + 1/2) and projecting back to l reproduces the state."""
    worst, cases = 0.0, 0
    for ell_a, ell_b in _pairs_up_to(min(max_ell, HalfInt(4))):
        for beta in (0.6, 1.9):
            ref = intelligent_state(IntelligentSpec(ell_a, ell_b, beta))
            shifted = projected_coupled_state(
                ell_a + HalfInt(1), ell_b + HalfInt(1), ell_a + ell_b, beta
            )
            worst = max(worst, 1.0 - ref.fidelity(shifted))
            cases += 1
    return cases, worst


def suite_k_algebra(max_ell: HalfInt, rng) -> tuple[int, float]:
    worst, cases = 0.0, 0
    for ell_a, ell_b in _pairs_up_to(min(max_ell, HalfInt(5))):
        if not k_algebra_check(ell_a, ell_b):
            worst = max(worst, 1.0)
        cases += 1
    return cases, worst


def suite_variance_relations(max_ell: HalfInt, rng) -> tuple[int, float]:
    worst, cases = 0.0, 0
    for ell_a, ell_b in _pairs_up_to(min(max_ell, HalfInt(6))):
        if (ell_a + ell_b).twice == 0:
            continue
        for beta in rng.uniform(0.1, math.pi - 0.1, 4):
            if abs(math.cos(beta)) < 1e-6:
                continue
            for branch in (Branch.Y, Branch.X):
                magnitude, signed = variance_relations_check(
                    IntelligentSpec(ell_a, ell_b, float(beta), branch)
                )
                if not (magnitude and signed):
                    worst = max(worst, 1.0)
                cases += 1
    return cases, worst


def suite_curve_merging(max_ell: HalfInt, rng) -> tuple[int, float]:
    """All splits converge to one report as beta -> pi on a refining grid."""
    worst, cases = 0.0, 0
    ell = min(max_ell, HalfInt(6))
    if ell.twice == 0:
        return 0, 0.0
    spreads = []
    for delta in (1e-2, 1e-4, 1e-8):
        beta = math.pi - delta
        reports = [
            report(IntelligentSpec(HalfInt(la), HalfInt(ell.twice - la), beta))
            for la in range(0, ell.twice + 1)
        ]
        spread = 0.0
        for i in range(len(reports)):
            for j in range(i + 1, len(reports)):
                for attr in ("product", "exp_lz", "var_lx", "var_ly", "exp_lx"):
                    spread = max(spread, abs(getattr(reports[i], attr) - getattr(reports[j], attr)))
                cases += 1
        spreads.append(spread)
    if any(b >= a for a, b in zip(spreads, spreads[1:])):
        worst = max(worst, 1.0)  # not converging
    worst = max(worst, spreads[-1])
    return cases, worst


def suite_ordering(max_ell: HalfInt, rng) -> tuple[int, float]:
    """The single-block (coherent) state has the smallest |<L_z>| and hence
    the smallest uncertainty product; the most balanced split has the largest."""
    worst, cases = 0.0, 0
    ell = min(max_ell, HalfInt(6))
    if ell.twice == 0:
        return 0, 0.0
    balanced_la = ell.twice // 2
    for beta in np.linspace(0.15, math.pi - 0.15, 9):
        values = {
            la: abs(avg_lz_formula(IntelligentSpec(HalfInt(la), HalfInt(ell.twice - la), float(beta))))
            for la in range(0, ell.twice + 1)
        }
        coherent = values[ell.twice]
        balanced = values[balanced_la]
        for la, val in values.items():
            worst = max(worst, coherent - val)  # every split sits at or above coherent
            worst = max(worst, val - balanced)  # none sits above the balanced split
            cases += 1
    return cases, worst


SUITES = (
    ("nullspace_contract", suite_nullspace_contract, 1e-10),
    ("expm_unitarity", suite_expm_unitarity, 1e-12),
    ("angmom_algebra", suite_algebra, 1e-10),
    ("wigner_convention", suite_wigner_convention, 1e-11),
    ("stretched_cg_vs_lowering", suite_cg, 1e-12),
    ("d_product_identity", suite_d_product_identity, 1e-11),
    ("binomial_sum_identity", suite_binomial_sum, 1e-10),
    ("spin_half_closed_forms", suite_spin_half, 1e-13),
    ("four_route_agreement", suite_four_routes, 1e-10),
    ("eigenvalue_law", suite_eigen_residual, 1e-10),
    ("intelligence_equality", suite_intelligence_equality, 1e-10),
    ("robertson_bound_random", suite_robertson_random, 1e-10),
    ("equality_separation", suite_separation, 0.0),
    ("kappa_symmetry", suite_kappa_symmetry, 1e-9),
    ("swap_and_alpha_inversion", suite_swap_and_inversion, 1e-9),
    ("degenerate_endpoints", suite_endpoints, 1e-10),
    ("linear_independence", suite_linear_independence, 0.5),
    ("shifted_pair_redundancy", suite_shifted_pair, 1e-10),
    ("k_algebra_closure", suite_k_algebra, 0.5),
    ("variance_relations", suite_variance_relations, 0.5),
    ("curve_merging", suite_curve_merging, 1e-6),
    ("uncertainty_ordering", suite_ordering, 1e-9),
)


def discrepancy_notes() -> dict:
    """Quantify where measured values disagree with commonly quoted closed forms.

    Brute-force expectations are the contract; these notes record the measured
    ratios so downstream users can map to other conventions.
    """
    ell = HalfInt(5)  # 5/2
    betas = np.linspace(0.3, math.pi - 0.3, 7)
    lz_over_lcos = []
    lx_over_diffsin = []
    for beta in betas:
        if abs(math.cos(beta)) < 1e-3:
            continue
        rep = report(IntelligentSpec(ell, HalfInt(0), float(beta)))
        lz_over_lcos.append(rep.exp_lz / (ell.value * math.cos(beta)))
        rep2 = report(IntelligentSpec(HalfInt(4), HalfInt(1), float(beta)))
        lx_over_diffsin.append(rep2.exp_lx / ((2.0 - 0.5) * math.sin(beta)))
    lz_factor = float(np.mean(lz_over_lcos))
    lx_factor = float(np.mean(lx_over_diffsin))

    beta = 1.1
    col = kappa_column(HalfInt(3), HalfInt(2), beta)
    pops = col**2 / (col**2).sum()
    mirror = kappa_column(HalfInt(3), HalfInt(2), math.pi - beta)
    mirror_pops = mirror**2 / (mirror**2).sum()
    flipped = kappa_column(HalfInt(3), HalfInt(2), -beta)
    flipped_pops = flipped**2 / (flipped**2).sum()
    return {
        "coherent_lz": {
            "measured_over_ell_cos_beta": lz_factor,
            "measured_over_half_ell_cos_beta": 2.0 * lz_factor,
            "comment": "measured <L_z> of the single-block state is ell*cos(beta); "
            "the half-ell variant is off by the factor shown",
        },
        "mean_lx": {
            "measured_over_diff_sin_beta": lx_factor,
            "measured_over_half_swapped_diff_sin_beta": -2.0 * lx_factor,
            "comment": "measured <L_x> equals (ell_a - ell_b) sin(beta), the eigenvalue; "
            "the half-difference variant with swapped sign is off by the factor shown",
        },
        "population_mirror": {
            "mirror_pi_minus_beta_residual": float(
                np.abs(mirror_pops - pops[::-1]).max()
            ),
            "literal_beta_negation_residual": float(
                np.abs(flipped_pops - pops[::-1]).max()
            ),
            "comment": "populations satisfy pop_m(pi - beta) = pop_{-m}(beta) and are even "
            "in beta; the literal beta -> -beta form of the m-mirror does not hold",
        },
        "ratio_orientation": {
            "balanced_over_coherent_at_beta_1p1": float(
                abs(avg_lz_formula(IntelligentSpec(HalfInt(3), HalfInt(2), 1.1)))
                / abs(avg_lz_formula(IntelligentSpec(HalfInt(5), HalfInt(0), 1.1)))
            ),
            "comment": "every two-block split has |<L_z>| (and uncertainty product) at or "
            "above the single-block state, largest at the most balanced split; the emitted "
            "figure ratio is therefore normalized coherent-over-split so it stays <= 1",
        },
    }


def run_all(max_ell: HalfInt, seed: int) -> dict:
    """Run every suite; returns the JSON-ready summary."""
    if max_ell.twice > 20:
        raise ValueError("max_ell is capped at 10 for full oracle coverage")
    results = []
    for name, fn, threshold in SUITES:
        rng = np.random.default_rng(seed)
        cases, worst = fn(max_ell, rng)
        results.append(SuiteResult(name, cases, float(worst), bool(worst <= threshold)))
    return {
        "max_ell": str(max_ell),
        "seed": seed,
        "suites": [r.as_json() for r in results],
        "notes": discrepancy_notes(),
        "pass": all(r.passed for r in results),
    }
