"""Extended Fermi-Dirac / Bose-Einstein functions, the zeta family, their
Fourier representations, and a harness that checks integral identities
among them numerically."""

from .errors import DomainError, PoleError
from .numerics import EvalResult, Tolerance
from .zeta_kernel import (FunctionId, FunctionParams, bose_einstein, dirichlet_eta, ebe_psi,
                          efd_theta, evaluate, fermi_dirac, gamma, hurwitz_zeta, lerch_phi,
                          polylog, riemann_zeta)

__version__ = "0.1.0"

__all__ = [
    "DomainError", "PoleError", "EvalResult", "Tolerance", "FunctionId", "FunctionParams",
    "bose_einstein", "dirichlet_eta", "ebe_psi", "efd_theta", "evaluate", "fermi_dirac",
    "gamma", "hurwitz_zeta", "lerch_phi", "polylog", "riemann_zeta",
]
