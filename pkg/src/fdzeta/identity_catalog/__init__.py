"""Registry of checkable identities and the harness that runs them."""

from .registry import (Erratum, IdentitySpec, LINE_BUDGET, MELLIN_TOL, POINTWISE_TOL,
                       ParamAxis, get, known_ids, register_catalog)
from .runner import (CheckReport, IdentityReport, ResidualRecord, SamplePlan,
                     evaluate_identity, random_sample, report_from_json, run_checks)

__all__ = [
    "Erratum", "IdentitySpec", "ParamAxis", "LINE_BUDGET", "MELLIN_TOL", "POINTWISE_TOL",
    "get", "known_ids", "register_catalog",
    "CheckReport", "IdentityReport", "ResidualRecord", "SamplePlan",
    "evaluate_identity", "random_sample", "report_from_json", "run_checks",
]
