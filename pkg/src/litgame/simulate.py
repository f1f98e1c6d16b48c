"""Monte Carlo verification of the analytic posteriors.

Each simulated trial is the two-stage chance process of the model: draw
guilt with the prior probability, then draw a verdict with probability
``sensitivity`` (guilty) or ``1 - specificity`` (innocent).  Trials are
instantaneous coin-toss events; there is no time dimension and no
dependence between trials.

Determinism contract: the confusion counts are a pure function of
(prior, characteristics, n_trials, seed).  Chunk size and worker count
change only how the work is partitioned, never the result, because trial
i's randomness comes from a counter-based generator keyed on (seed, i)
and per-chunk counts reduce by integer addition.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import NoPositives, UndefinedPosterior, ValidationError
from .inference import PosteriorReport, PriorBelief, Probability, TestCharacteristics
from .rng import trial_uniforms

__all__ = [
    "SimConfig",
    "ConfusionCounts",
    "SimResult",
    "AgreementReport",
    "simulate",
    "empirical_interval",
    "agreement_check",
]

# Two-sided 95% normal quantile used by the Wilson score interval.
Z95 = 1.959963984540054


@dataclass(frozen=True)
class SimConfig:
    """Size, seed, and work-partition granularity of one simulation run."""

    n_trials: int
    seed: int
    chunk_size: int = 65536

    def __post_init__(self) -> None:
        if not isinstance(self.n_trials, int) or self.n_trials < 1:
            raise ValidationError(f"n_trials must be a positive integer, got {self.n_trials!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ValidationError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if not isinstance(self.chunk_size, int) or self.chunk_size < 1:
            raise ValidationError(
                f"chunk_size must be a positive integer, got {self.chunk_size!r}"
            )


@dataclass(frozen=True)
class ConfusionCounts:
    """Confusion-matrix counts of one run.

    ``false_positive`` is the Type I error count (innocent found liable),
    ``false_negative`` the Type II count (guilty escaping liability).
    """

    true_positive: int
    false_positive: int
    true_negative: int
    false_negative: int

    def __post_init__(self) -> None:
        for field_name in ("true_positive", "false_positive", "true_negative", "false_negative"):
            value = getattr(self, field_name)
            if not isinstance(value, int) or value < 0:
                raise ValidationError(f"{field_name} must be a nonnegative integer, got {value!r}")

    @property
    def total(self) -> int:
        return (
            self.true_positive + self.false_positive + self.true_negative + self.false_negative
        )

    @property
    def positives(self) -> int:
        return self.true_positive + self.false_positive

    @property
    def negatives(self) -> int:
        return self.true_negative + self.false_negative

    def __add__(self, other: "ConfusionCounts") -> "ConfusionCounts":
        return ConfusionCounts(
            self.true_positive + other.true_positive,
            self.false_positive + other.false_positive,
            self.true_negative + other.true_negative,
            self.false_negative + other.false_negative,
        )

    def as_dict(self) -> dict:
        return {
            "true_positive": self.true_positive,
            "false_positive": self.false_positive,
            "true_negative": self.true_negative,
            "false_negative": self.false_negative,
        }


@dataclass(frozen=True)
class SimResult:
    """Counts plus the empirical estimates derived from them.

    The estimate fields are ``None`` when their denominator is zero (a run
    that drew no positives has no empirical PPV, and no negatives no NPV).
    """

    counts: ConfusionCounts
    ppv_hat: Probability | None
    npv_hat: Probability | None
    standard_error_ppv: float | None
    ci95_ppv: tuple[Probability, Probability] | None

    def as_dict(self) -> dict:
        return {
            "counts": self.counts.as_dict(),
            "ppv_hat": None if self.ppv_hat is None else float(self.ppv_hat),
            "npv_hat": None if self.npv_hat is None else float(self.npv_hat),
            "standard_error_ppv": self.standard_error_ppv,
            "ci95_ppv": None
            if self.ci95_ppv is None
            else [float(self.ci95_ppv[0]), float(self.ci95_ppv[1])],
        }


@dataclass(frozen=True)
class AgreementReport:
    """Verdict of one simulated-vs-analytic comparison, with diagnostics."""

    passed: bool
    ppv_hat: Probability
    analytic_ppv: Probability
    standard_error: float
    z: float
    margin: float
    delta: float

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "ppv_hat": float(self.ppv_hat),
            "analytic_ppv": float(self.analytic_ppv),
            "standard_error": self.standard_error,
            "z": self.z,
            "margin": self.margin,
            "delta": self.delta,
        }


def _chunk_counts(
    seed: int, start: int, stop: int, p_guilty: float, sensitivity: float, fp_rate: float
) -> ConfusionCounts:
    u_guilt, u_verdict = trial_uniforms(seed, start, stop)
    guilty = u_guilt < p_guilty
    positive = np.where(guilty, u_verdict < sensitivity, u_verdict < fp_rate)
    tp = int(np.count_nonzero(guilty & positive))
    fp = int(np.count_nonzero(~guilty & positive))
    fn = int(np.count_nonzero(guilty & ~positive))
    tn = (stop - start) - tp - fp - fn
    return ConfusionCounts(tp, fp, tn, fn)


def simulate(
    prior: PriorBelief,
    chars: TestCharacteristics,
    config: SimConfig,
    workers: int = 1,
) -> SimResult:
    """Run ``config.n_trials`` independent trials of the two-stage process.

    Deterministic in (prior, chars, n_trials, seed): the same inputs give
    bit-identical counts for any chunk_size and any worker count.
    ``workers > 1`` evaluates chunks in a thread pool; the reduction is
    integer addition, so completion order cannot matter.
    """
    if not isinstance(workers, int) or workers < 1:
        raise ValidationError(f"workers must be a positive integer, got {workers!r}")
    p = float(prior.p_guilty)
    s = float(chars.sensitivity)
    f = float(chars.false_positive_rate)
    n = config.n_trials
    spans = [(a, min(a + config.chunk_size, n)) for a in range(0, n, config.chunk_size)]

    def run(span: tuple[int, int]) -> ConfusionCounts:
        return _chunk_counts(config.seed, span[0], span[1], p, s, f)

    if workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_chunk = list(pool.map(run, spans))
    else:
        per_chunk = [run(span) for span in spans]

    total = ConfusionCounts(0, 0, 0, 0)
    for counts in per_chunk:
        total = total + counts

    ppv_hat = se = ci = None
    if total.positives > 0:
        ppv_hat, se, ci = empirical_interval(total)
    npv_hat = None
    if total.negatives > 0:
        npv_hat = Probability(total.true_negative / total.negatives)
    return SimResult(
        counts=total,
        ppv_hat=ppv_hat,
        npv_hat=npv_hat,
        standard_error_ppv=se,
        ci95_ppv=ci,
    )


def empirical_interval(
    counts: ConfusionCounts,
) -> tuple[Probability, float, tuple[Probability, Probability]]:
    """Empirical PPV with its standard error and 95% Wilson score interval.

    The Wilson interval is used instead of the normal approximation
    because the PPV of a reliable process sits near 1, where the normal
    interval escapes [0, 1].  The interval always contains the point
    estimate.
    """
    n_pos = counts.positives
    if n_pos == 0:
        raise NoPositives("no positive verdicts were drawn; the empirical PPV is undefined")
    phat = counts.true_positive / n_pos
    se = math.sqrt(phat * (1.0 - phat) / n_pos)
    z2 = Z95 * Z95
    denom = 1.0 + z2 / n_pos
    center = (phat + z2 / (2.0 * n_pos)) / denom
    half = Z95 * math.sqrt(phat * (1.0 - phat) / n_pos + z2 / (4.0 * n_pos * n_pos)) / denom
    # The Wilson interval provably covers phat and lies in [0, 1]; the
    # clamps only shave float residue (e.g. lower bound 3e-18 at phat=0).
    lo = min(max(0.0, center - half), phat)
    hi = max(min(1.0, center + half), phat)
    return Probability(phat), se, (Probability(lo), Probability(hi))


def agreement_check(
    result: SimResult, analytic: PosteriorReport, z: float = 4.0
) -> AgreementReport:
    """Does the empirical PPV agree with the analytic one to within z SEs?

    Refuses (NoPositives) when the run drew no positives instead of
    passing vacuously.  The default z = 4 keeps the false-alarm rate of a
    correct simulator below about 1e-4 per check.
    """
    if not math.isfinite(z) or z <= 0.0:
        raise ValidationError(f"z must be a positive finite real, got {z!r}")
    if result.ppv_hat is None or result.standard_error_ppv is None:
        raise NoPositives(
            "the run drew no positive verdicts; agreement with the analytic PPV "
            "cannot be checked"
        )
    if analytic.ppv is None:
        raise UndefinedPosterior(
            "the analytic PPV is undefined for these parameters; nothing to agree with"
        )
    delta = abs(float(result.ppv_hat) - float(analytic.ppv))
    margin = z * result.standard_error_ppv
    return AgreementReport(
        passed=delta <= margin,
        ppv_hat=result.ppv_hat,
        analytic_ppv=analytic.ppv,
        standard_error=result.standard_error_ppv,
        z=float(z),
        margin=margin,
        delta=delta,
    )
