"""Exception types shared across the package.

Every error a caller is expected to handle is a distinct class so that the
CLI can map error families onto its exit-code contract without string
matching.
"""

from __future__ import annotations


class LitigationGameError(Exception):
    """Base class for all domain errors raised by this package."""


class ValidationError(LitigationGameError, ValueError):
    """A numeric input is outside its legal range (e.g. a probability
    outside [0, 1], NaN, or a nonpositive trial count)."""


class UndefinedPosterior(LitigationGameError):
    """Conditioning on an outcome that has probability zero.

    Raised instead of returning NaN or 0 so that degenerate parameter
    corners cannot silently poison downstream sweeps.
    """


class UnreachableTarget(LitigationGameError):
    """No prior in (0, 1) can achieve the requested posterior target."""


class NoPositives(LitigationGameError):
    """A simulation drew zero positive verdicts, so the empirical PPV and
    any agreement verdict based on it are undefined."""


class GridTooLarge(LitigationGameError):
    """A sweep grid materializes to more cells than the configured cap."""


class ParseError(LitigationGameError):
    """A scenario document (or scenario name) is malformed."""


class AmbiguousScenario(LitigationGameError):
    """A scenario document mixes regime/profile tags with numeric
    overrides; the two styles are mutually exclusive."""
