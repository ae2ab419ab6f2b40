"""su(2) intelligent states as coupled spin coherent states.

Builds the states that saturate the L_x/L_y uncertainty bound by coupling two
oppositely rotated coherent blocks, and verifies every construction against
independent brute-force oracles.
"""

from .angmom import Ket, OperatorMatrix, basis_ket, op_lminus, op_lplus, op_lx, op_ly, op_lz, shifted_op
from .construct import (
    Branch,
    IntelligentSpec,
    alpha_of_beta,
    beta_of_alpha,
    intelligent_state,
    k_algebra_check,
    kappa_closed,
    kappa_column,
    kappa_sum,
    mu_of_alpha,
    poly_oracle,
    spin_half_state,
    tensor_oracle,
)
from .halfint import HalfInt
from .observables import (
    ObservableReport,
    avg_lz_formula,
    beta_for_target_lz,
    expectation,
    report,
    report_for_ket,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "HalfInt",
    "IntelligentSpec",
    "Ket",
    "ObservableReport",
    "OperatorMatrix",
    "alpha_of_beta",
    "avg_lz_formula",
    "basis_ket",
    "beta_for_target_lz",
    "beta_of_alpha",
    "expectation",
    "intelligent_state",
    "k_algebra_check",
    "kappa_closed",
    "kappa_column",
    "kappa_sum",
    "mu_of_alpha",
    "op_lminus",
    "op_lplus",
    "op_lx",
    "op_ly",
    "op_lz",
    "poly_oracle",
    "report",
    "report_for_ket",
    "shifted_op",
    "spin_half_state",
    "tensor_oracle",
    "__version__",
]
