"""Bayesian reliability engine for two-outcome litigation games.

Models adjudication as a binary diagnostic test (sensitivity,
specificity) applied to a defendant who is guilty with some prior
probability, and answers: how likely is it that a defendant found liable
is actually guilty?  Provides exact closed-form posteriors, a built-in
2x2 scenario catalog, seeded Monte Carlo verification, parameter sweeps,
and prior inversion, plus a CLI over all of it.
"""

from .errors import (
    AmbiguousScenario,
    GridTooLarge,
    LitigationGameError,
    NoPositives,
    ParseError,
    UndefinedPosterior,
    UnreachableTarget,
    ValidationError,
)
from .inference import (
    PosteriorReport,
    PriorBelief,
    Probability,
    TestCharacteristics,
    full_report,
    likelihood_ratios,
    p_positive,
    posterior_guilty_given_positive,
    posterior_innocent_given_negative,
    posterior_via_odds,
    required_prior,
)
from .scenarios import (
    AdjudicationRegime,
    MovingPartyProfile,
    Scenario,
    catalog,
    evaluate,
    parse_scenario,
    serialize_scenario,
)
from .simulate import (
    AgreementReport,
    ConfusionCounts,
    SimConfig,
    SimResult,
    agreement_check,
    empirical_interval,
    simulate,
)
from .sweep import (
    Axis,
    BreakEvenPoint,
    GridSpec,
    SweepRow,
    break_even_curve,
    run_sweep,
    write_csv,
)

__version__ = "0.1.0"

__all__ = [
    "Probability",
    "TestCharacteristics",
    "PriorBelief",
    "PosteriorReport",
    "p_positive",
    "posterior_guilty_given_positive",
    "posterior_innocent_given_negative",
    "posterior_via_odds",
    "likelihood_ratios",
    "required_prior",
    "full_report",
    "AdjudicationRegime",
    "MovingPartyProfile",
    "Scenario",
    "catalog",
    "evaluate",
    "parse_scenario",
    "serialize_scenario",
    "SimConfig",
    "ConfusionCounts",
    "SimResult",
    "AgreementReport",
    "simulate",
    "empirical_interval",
    "agreement_check",
    "Axis",
    "GridSpec",
    "SweepRow",
    "BreakEvenPoint",
    "run_sweep",
    "break_even_curve",
    "write_csv",
    "LitigationGameError",
    "ValidationError",
    "UndefinedPosterior",
    "UnreachableTarget",
    "NoPositives",
    "GridTooLarge",
    "ParseError",
    "AmbiguousScenario",
    "__version__",
]
