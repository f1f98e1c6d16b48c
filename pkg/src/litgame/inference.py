"""Closed-form Bayesian arithmetic for the litigation game.

The litigation game models adjudication as a binary diagnostic test run
against a defendant who is guilty with some prior probability.  A trial
returns a positive verdict (liability imposed) with probability
``sensitivity`` when the defendant is guilty and ``1 - specificity`` when
innocent.  From those three numbers everything else follows in closed
form: the marginal probability of a positive verdict, the positive and
negative predictive values, the error posteriors, and the likelihood
ratios.

All functions here are pure and total on validated inputs; the only
failure mode is conditioning on an impossible outcome, which raises
:class:`~litgame.errors.UndefinedPosterior` rather than producing NaN.
Values are ordinary double-precision floats; closed-form identities hold
to within 1e-12 and inversion round-trips to within 1e-9.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import UndefinedPosterior, UnreachableTarget, ValidationError

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
]


class Probability(float):
    """A float validated to lie in the closed unit interval.

    Construction rejects NaN, infinities, and anything outside [0, 1];
    instances behave as ordinary floats in arithmetic.
    """

    __slots__ = ()

    def __new__(cls, value: float) -> "Probability":
        v = float(value)
        # "not 0 <= v <= 1" is also true for NaN, whose comparisons are all false.
        if not 0.0 <= v <= 1.0:
            raise ValidationError(f"probability must lie in [0, 1], got {value!r}")
        return super().__new__(cls, v)

    @property
    def value(self) -> float:
        return float(self)

    @property
    def complement(self) -> "Probability":
        return Probability(1.0 - self)

    def __repr__(self) -> str:
        return f"Probability({float(self)!r})"


@dataclass(frozen=True)
class TestCharacteristics:
    """Reliability of the adjudication process.

    ``sensitivity`` is the chance a guilty defendant is found liable;
    ``specificity`` the chance an innocent defendant is not.
    """

    # Not a test case despite the name pytest matches on.
    __test__ = False

    sensitivity: Probability
    specificity: Probability

    def __post_init__(self) -> None:
        object.__setattr__(self, "sensitivity", Probability(self.sensitivity))
        object.__setattr__(self, "specificity", Probability(self.specificity))

    @property
    def false_positive_rate(self) -> Probability:
        """Chance an innocent defendant is found liable (Type I error rate)."""
        return self.specificity.complement

    @property
    def false_negative_rate(self) -> Probability:
        """Chance a guilty defendant escapes liability (Type II error rate)."""
        return self.sensitivity.complement


@dataclass(frozen=True)
class PriorBelief:
    """Prior probability that a named defendant actually committed the act.

    Only the guilt side is stored; ``p_innocent`` is always derived so the
    two can never disagree.
    """

    p_guilty: Probability

    def __post_init__(self) -> None:
        object.__setattr__(self, "p_guilty", Probability(self.p_guilty))

    @property
    def p_innocent(self) -> Probability:
        return self.p_guilty.complement


@dataclass(frozen=True)
class PosteriorReport:
    """Complete derived picture for one (prior, characteristics) pair.

    Posterior fields are ``None`` when the outcome being conditioned on
    has probability zero; they are never filled with sentinels.  The
    complements are derived from their partners, so each pair sums to one
    by construction.  ``lr_positive`` may be ``math.inf`` (a test with no
    false positives); ``None`` for either ratio means the 0/0
    indeterminate corner.
    """

    prior: PriorBelief
    chars: TestCharacteristics
    p_positive: Probability
    ppv: Probability | None
    p_innocent_given_positive: Probability | None
    npv: Probability | None
    p_guilty_given_negative: Probability | None
    lr_positive: float | None
    lr_negative: float | None

    def as_dict(self) -> dict:
        """Canonical serialized form; field names match the attributes."""
        return {
            "prior": {"p_guilty": float(self.prior.p_guilty)},
            "chars": {
                "sensitivity": float(self.chars.sensitivity),
                "specificity": float(self.chars.specificity),
            },
            "p_positive": float(self.p_positive),
            "ppv": _opt(self.ppv),
            "p_innocent_given_positive": _opt(self.p_innocent_given_positive),
            "npv": _opt(self.npv),
            "p_guilty_given_negative": _opt(self.p_guilty_given_negative),
            "lr_positive": self.lr_positive,
            "lr_negative": self.lr_negative,
        }


def _opt(p: Probability | None) -> float | None:
    return None if p is None else float(p)


def _positive_terms(prior: PriorBelief, chars: TestCharacteristics) -> tuple[float, float]:
    """True-positive and false-positive probability mass."""
    tp = chars.sensitivity * prior.p_guilty
    fp = chars.false_positive_rate * prior.p_innocent
    return tp, fp


def _negative_terms(prior: PriorBelief, chars: TestCharacteristics) -> tuple[float, float]:
    """True-negative and false-negative probability mass."""
    tn = chars.specificity * prior.p_innocent
    fn = chars.false_negative_rate * prior.p_guilty
    return tn, fn


def p_positive(prior: PriorBelief, chars: TestCharacteristics) -> Probability:
    """Marginal probability of a positive verdict (law of total probability).

    ``sensitivity * p_guilty + false_positive_rate * p_innocent``.
    """
    tp, fp = _positive_terms(prior, chars)
    # min() guards the one-ulp overshoot possible when both terms round up.
    return Probability(min(1.0, tp + fp))


def posterior_guilty_given_positive(
    prior: PriorBelief, chars: TestCharacteristics
) -> Probability:
    """Probability a defendant found liable is actually guilty (PPV).

    Raises UndefinedPosterior when a positive verdict has probability
    zero, since conditioning on it is meaningless.
    """
    tp, fp = _positive_terms(prior, chars)
    denom = tp + fp
    if denom == 0.0:
        raise UndefinedPosterior(
            "a positive verdict has probability zero under these parameters; "
            "the posterior given a positive is undefined"
        )
    return Probability(tp / denom)


def posterior_innocent_given_negative(
    prior: PriorBelief, chars: TestCharacteristics
) -> Probability:
    """Probability a defendant not found liable is actually innocent (NPV)."""
    tn, fn = _negative_terms(prior, chars)
    denom = tn + fn
    if denom == 0.0:
        raise UndefinedPosterior(
            "a negative verdict has probability zero under these parameters; "
            "the posterior given a negative is undefined"
        )
    return Probability(tn / denom)


def posterior_via_odds(prior: PriorBelief, chars: TestCharacteristics) -> Probability:
    """PPV computed through the odds form of Bayes' rule.

    posterior odds = prior odds x positive likelihood ratio.  Exists as an
    independent route to cross-check the direct formula; the two agree to
    within 1e-12 everywhere both are defined.
    """
    tp, fp = _positive_terms(prior, chars)
    if tp + fp == 0.0:
        raise UndefinedPosterior(
            "a positive verdict has probability zero under these parameters; "
            "the posterior given a positive is undefined"
        )
    p = prior.p_guilty
    if p == 1.0:
        # Prior odds are infinite and positives can only come from the guilty.
        return Probability(1.0)
    f = chars.false_positive_rate
    if f == 0.0:
        # Infinite likelihood ratio: a positive verdict is conclusive.
        return Probability(1.0)
    post_odds = (p / (1.0 - p)) * (chars.sensitivity / f)
    if math.isfinite(post_odds):
        return Probability(post_odds / (1.0 + post_odds))
    # Extreme magnitudes: redo the product in log-odds.  Unreachable for
    # double inputs (odds and ratio are each bounded by ~9e15) but kept as
    # a guard so overflow can never surface as inf/NaN.
    log_odds = math.log(p) - math.log1p(-p) + math.log(chars.sensitivity) - math.log(f)
    return Probability(1.0 / (1.0 + math.exp(-log_odds)))


def likelihood_ratios(chars: TestCharacteristics) -> tuple[float | None, float | None]:
    """Positive and negative likelihood ratios of the adjudication process.

    ``lr_positive = sensitivity / (1 - specificity)``; ``math.inf`` when
    the test has no false positives but can still convict, ``None``
    (indeterminate) in the 0/0 corner.  ``lr_negative = (1 - sensitivity)
    / specificity`` with the symmetric conventions.
    """
    s = chars.sensitivity
    f = chars.false_positive_rate
    if f == 0.0:
        lr_pos = math.inf if s > 0.0 else None
    else:
        lr_pos = s / f
    fnr = chars.false_negative_rate
    spec = chars.specificity
    if spec == 0.0:
        lr_neg = math.inf if fnr > 0.0 else None
    else:
        lr_neg = fnr / spec
    return lr_pos, lr_neg


def required_prior(chars: TestCharacteristics, target_ppv: float) -> Probability:
    """Prior guilt probability needed for the PPV to hit ``target_ppv``.

    Closed-form inversion: ``p = t*f / (t*f + s*(1 - t))`` with
    ``s = sensitivity`` and ``f = 1 - specificity``.  Applying the forward
    posterior to the result recovers the target to within 1e-9.
    """
    t = float(Probability(target_ppv))
    if not 0.0 < t < 1.0:
        raise UnreachableTarget(
            f"target PPV must lie strictly between 0 and 1, got {t!r}; "
            "the boundary values are attainable only by degenerate priors"
        )
    s = chars.sensitivity
    if s == 0.0:
        raise UnreachableTarget(
            "a process that never convicts the guilty cannot reach any PPV target"
        )
    f = chars.false_positive_rate
    if f == 0.0:
        raise UnreachableTarget(
            "a process with no false positives has PPV 1 for every prior; "
            "no interior target is reachable"
        )
    return Probability(t * f / (t * f + s * (1.0 - t)))


def full_report(prior: PriorBelief, chars: TestCharacteristics) -> PosteriorReport:
    """Evaluate every derived quantity for one (prior, characteristics) pair.

    Never raises: posteriors whose conditioning outcome has probability
    zero appear as ``None`` in the report.
    """
    tp, fp = _positive_terms(prior, chars)
    tn, fn = _negative_terms(prior, chars)

    ppv = Probability(tp / (tp + fp)) if tp + fp > 0.0 else None
    npv = Probability(tn / (tn + fn)) if tn + fn > 0.0 else None
    lr_pos, lr_neg = likelihood_ratios(chars)

    return PosteriorReport(
        prior=prior,
        chars=chars,
        p_positive=Probability(min(1.0, tp + fp)),
        ppv=ppv,
        p_innocent_given_positive=None if ppv is None else ppv.complement,
        npv=npv,
        p_guilty_given_negative=None if npv is None else npv.complement,
        lr_positive=lr_pos,
        lr_negative=lr_neg,
    )
