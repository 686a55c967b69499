"""Competence-weighted teaching ratings.

Thin Python layer over the C++ core in ``peerrate._core``.
"""

import json

from ._core import (
    DEFAULT_ALPHA,
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    CompetenceMatrix,
    PeerRateError,
    RatingVector,
    aggregate,
    build_stochastic,
    degree_weighted_rating,
    degree_weights,
    dispersion_row,
    eigenfactor_weighted_rating,
    eigenfactor_weights,
    inject_bias,
    mode_of,
    normalize,
    precounted_row,
    stationary_distribution,
    TransitionModel,
    validate_survey,
)
from . import _core

__all__ = [
    "CompetenceMatrix",
    "PeerRateError",
    "RatingVector",
    "TransitionModel",
    "aggregate",
    "build_stochastic",
    "degree_weighted_rating",
    "degree_weights",
    "dispersion_row",
    "eigenfactor_weighted_rating",
    "eigenfactor_weights",
    "inject_bias",
    "mode_of",
    "normalize",
    "precounted_row",
    "rate",
    "run_scenarios",
    "stationary_distribution",
    "validate_survey",
]


def rate(ratings, competence, *, scale=(1, 5), diagonal_policy="coerce",
         alpha=DEFAULT_ALPHA, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER):
    """Validate a survey and return the weighted-rating report as a dict."""
    survey = validate_survey(ratings, competence, scale=tuple(scale),
                             diagonal_policy=diagonal_policy)
    return json.loads(_core.evaluate_survey_json(survey, alpha, tol, max_iter))


def run_scenarios(path, *, alpha=DEFAULT_ALPHA, tol=DEFAULT_TOL,
                  max_iter=DEFAULT_MAX_ITER):
    """Run a scenario JSON file; returns {"results": [...], "summary": {...}}."""
    return json.loads(_core.run_scenarios_json(str(path), alpha, tol, max_iter))
