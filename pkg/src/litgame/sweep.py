"""Grid exploration of the (prior, sensitivity, specificity) cube.

``run_sweep`` evaluates the full posterior report on a lattice and
projects each cell to one row; ``break_even_curve`` inverts the posterior
along an axis of test characteristics to find the prior needed for a
target reliability.  Row order is lexicographic by (prior, sensitivity,
specificity) and is part of the external contract, so exports are
diffable.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .errors import GridTooLarge, UnreachableTarget, ValidationError
from .inference import (
    PriorBelief,
    Probability,
    TestCharacteristics,
    full_report,
    required_prior,
)

__all__ = [
    "Axis",
    "GridSpec",
    "SweepRow",
    "BreakEvenPoint",
    "run_sweep",
    "break_even_curve",
    "write_csv",
    "CSV_COLUMNS",
]

# Slack used when deciding whether an axis step has reached the upper
# endpoint; steps that land within this of hi are snapped onto it.
_ENDPOINT_TOL = 1e-9

DEFAULT_MAX_CELLS = 1_000_000

CSV_COLUMNS = ("prior", "sensitivity", "specificity", "p_positive", "ppv", "npv")


@dataclass(frozen=True)
class Axis:
    """One axis of the grid: an inclusive [lo, hi] range with a step, or a
    single fixed value (lo == hi, no step)."""

    lo: float
    hi: float
    step: float | None = None

    def __post_init__(self) -> None:
        Probability(self.lo)
        Probability(self.hi)
        if self.lo > self.hi:
            raise ValidationError(f"axis lower bound {self.lo!r} exceeds upper bound {self.hi!r}")
        if self.lo < self.hi:
            if self.step is None:
                raise ValidationError("a ranged axis needs a step")
            if not math.isfinite(self.step) or self.step < _ENDPOINT_TOL:
                raise ValidationError(
                    f"axis step must be at least {_ENDPOINT_TOL}, got {self.step!r}"
                )

    @classmethod
    def fixed(cls, value: float) -> "Axis":
        return cls(lo=value, hi=value)

    def _last_interior_index(self) -> int:
        """Largest k with lo + k*step strictly below hi - tolerance.

        At least 0: the lower endpoint is always kept even when the whole
        range is narrower than the tolerance.
        """
        assert self.step is not None
        n = int(math.floor((self.hi - self.lo) / self.step + _ENDPOINT_TOL))
        # step >= tolerance bounds this walk-back to a couple of iterations.
        while n >= 1 and self.lo + n * self.step >= self.hi - _ENDPOINT_TOL:
            n -= 1
        return n

    def count(self) -> int:
        """Number of materialized points, computed without materializing."""
        if self.lo == self.hi:
            return 1
        return self._last_interior_index() + 2

    def materialize(self) -> list[float]:
        """The points lo, lo + step, ... with hi always included, exactly.

        A step that lands within 1e-9 of hi counts as having reached it,
        so the grid point is hi itself rather than a float-noise neighbour;
        a last step that falls shorter than that gets hi appended after it.
        Either way asking for [0, 1] with step 0.3 really does end at 1.0.
        """
        if self.lo == self.hi:
            return [self.lo]
        assert self.step is not None
        values = [self.lo + k * self.step for k in range(self._last_interior_index() + 1)]
        values.append(self.hi)
        return values


@dataclass(frozen=True)
class GridSpec:
    """Cartesian grid over the three model parameters, with a cell cap."""

    prior_axis: Axis
    sensitivity_axis: Axis
    specificity_axis: Axis
    max_cells: int = DEFAULT_MAX_CELLS

    def __post_init__(self) -> None:
        if not isinstance(self.max_cells, int) or self.max_cells < 1:
            raise ValidationError(f"max_cells must be a positive integer, got {self.max_cells!r}")

    def cell_count(self) -> int:
        return (
            self.prior_axis.count()
            * self.sensitivity_axis.count()
            * self.specificity_axis.count()
        )


@dataclass(frozen=True)
class SweepRow:
    """Projection of one full posterior report onto the export columns.

    ``ppv``/``npv`` are ``None`` at lattice points where the conditioning
    outcome has probability zero; such rows are kept, never dropped.
    """

    prior: Probability
    sensitivity: Probability
    specificity: Probability
    p_positive: Probability
    ppv: Probability | None
    npv: Probability | None


def run_sweep(grid: GridSpec) -> list[SweepRow]:
    """Evaluate every lattice point, in lexicographic row order."""
    n_cells = grid.cell_count()
    if n_cells > grid.max_cells:
        raise GridTooLarge(
            f"grid materializes to {n_cells} cells, exceeding the cap of {grid.max_cells}"
        )
    rows: list[SweepRow] = []
    for p in grid.prior_axis.materialize():
        prior = PriorBelief(Probability(p))
        for s in grid.sensitivity_axis.materialize():
            for spec in grid.specificity_axis.materialize():
                report = full_report(prior, TestCharacteristics(Probability(s), Probability(spec)))
                rows.append(
                    SweepRow(
                        prior=report.prior.p_guilty,
                        sensitivity=report.chars.sensitivity,
                        specificity=report.chars.specificity,
                        p_positive=report.p_positive,
                        ppv=report.ppv,
                        npv=report.npv,
                    )
                )
    return rows


@dataclass(frozen=True)
class BreakEvenPoint:
    """Required prior for one set of test characteristics, or an
    unreachable marker (``required_prior is None``)."""

    chars: TestCharacteristics
    required_prior: Probability | None

    @property
    def reachable(self) -> bool:
        return self.required_prior is not None


def break_even_curve(
    chars_axis: Iterable[TestCharacteristics], target_ppv: float
) -> list[BreakEvenPoint]:
    """Prior needed to reach ``target_ppv`` for each entry of the axis.

    Entries whose characteristics cannot reach the target carry an
    unreachable marker; the sweep itself never aborts.
    """
    t = float(Probability(target_ppv))
    if not 0.0 < t < 1.0:
        raise ValidationError(
            f"target PPV must lie strictly between 0 and 1, got {t!r}"
        )
    points: list[BreakEvenPoint] = []
    for chars in chars_axis:
        try:
            prior = required_prior(chars, t)
        except UnreachableTarget:
            prior = None
        points.append(BreakEvenPoint(chars=chars, required_prior=prior))
    return points


def write_csv(rows: Sequence[SweepRow], stream: TextIO) -> None:
    """Write rows as CSV with the canonical header and LF line endings.

    Floats are rendered in shortest round-trippable form; undefined
    posteriors become empty cells (zero is a meaningful probability,
    absence is not).
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                repr(float(row.prior)),
                repr(float(row.sensitivity)),
                repr(float(row.specificity)),
                repr(float(row.p_positive)),
                "" if row.ppv is None else repr(float(row.ppv)),
                "" if row.npv is None else repr(float(row.npv)),
            ]
        )
