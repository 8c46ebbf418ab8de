"""Ball proximal point method and broximal alignment checks."""

import json as _json

from ._core import (
    BroxResult,
    CatalogError,
    DomainError,
    Geometry,
    Objective,
    OracleError,
    Trajectory,
    VerificationReport,
    Witness,
    affine_value,
    brox,
    builtin,
    catalog,
    check_aiming,
    check_assumption1,
    check_assumption2,
    check_F1_nonmonotone_witnesses,
    check_pseudoconvex,
    check_quasar,
    check_quasiconvex,
    check_trajectory,
    check_uba,
    finite_objective,
    kappa_bound,
    pullback_orthogonal_affine,
    run_bpm,
    run_suite_json,
    sin_abs_minimizer,
)


def run_suite(filter="", seed=0):
    """Run the acceptance battery (or the entries matching `filter`) and return the summary dict."""
    return _json.loads(run_suite_json(filter, seed))


__all__ = [name for name in dir() if not name.startswith("_")]
