"""The four built-in litigation-game scenarios and user-defined overrides.

The built-in catalog is the 2x2 matrix of adjudication regime (non-random
vs. random) against moving-party risk profile (risk-averse vs.
risk-loving).  The regime and profile numbers are frozen constants of the
model, not configuration: non-random means a 90%-sensitive, 90%-specific
process, random means 50/50; a risk-averse moving party files at prior
0.9, a risk-loving one at 0.6.  Exploration beyond those four cells goes
through custom overrides or the sweep module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import AmbiguousScenario, ParseError
from .inference import (
    PosteriorReport,
    PriorBelief,
    Probability,
    TestCharacteristics,
    full_report,
)

__all__ = [
    "AdjudicationRegime",
    "MovingPartyProfile",
    "Scenario",
    "catalog",
    "evaluate",
    "parse_scenario",
    "serialize_scenario",
]


class AdjudicationRegime(enum.Enum):
    """Reliability class of the adjudication process."""

    NON_RANDOM = "non-random"
    RANDOM = "random"

    @property
    def characteristics(self) -> TestCharacteristics:
        return _REGIME_CHARS[self]


_REGIME_CHARS = {
    AdjudicationRegime.NON_RANDOM: TestCharacteristics(Probability(0.9), Probability(0.9)),
    AdjudicationRegime.RANDOM: TestCharacteristics(Probability(0.5), Probability(0.5)),
}


class MovingPartyProfile(enum.Enum):
    """Filing threshold of the plaintiff or prosecutor."""

    RISK_AVERSE = "risk-averse"
    RISK_LOVING = "risk-loving"

    @property
    def prior(self) -> PriorBelief:
        return _PROFILE_PRIORS[self]


_PROFILE_PRIORS = {
    MovingPartyProfile.RISK_AVERSE: PriorBelief(Probability(0.9)),
    MovingPartyProfile.RISK_LOVING: PriorBelief(Probability(0.6)),
}


@dataclass(frozen=True)
class Scenario:
    """One litigation game: either a catalog cell or a custom override.

    A catalog scenario carries ``regime`` and ``profile`` tags; a custom
    one carries explicit ``chars`` and ``prior``.  The two styles are
    mutually exclusive and each must be complete (no half-custom
    scenarios).
    """

    name: str
    regime: AdjudicationRegime | None = None
    profile: MovingPartyProfile | None = None
    chars: TestCharacteristics | None = None
    prior: PriorBelief | None = None

    def __post_init__(self) -> None:
        tagged = self.regime is not None or self.profile is not None
        overridden = self.chars is not None or self.prior is not None
        if tagged and overridden:
            raise AmbiguousScenario(
                f"scenario {self.name!r} mixes regime/profile tags with numeric overrides"
            )
        if tagged and (self.regime is None or self.profile is None):
            raise ParseError(
                f"scenario {self.name!r} needs both a regime and a profile"
            )
        if overridden and (self.chars is None or self.prior is None):
            raise ParseError(
                f"scenario {self.name!r} needs both test characteristics and a prior"
            )
        if not tagged and not overridden:
            raise ParseError(f"scenario {self.name!r} specifies no parameters at all")

    @property
    def is_custom(self) -> bool:
        return self.chars is not None

    def resolve(self) -> tuple[PriorBelief, TestCharacteristics]:
        """The (prior, characteristics) pair this scenario denotes."""
        if self.chars is not None and self.prior is not None:
            return self.prior, self.chars
        assert self.regime is not None and self.profile is not None
        return self.profile.prior, self.regime.characteristics


def _slug(regime: AdjudicationRegime, profile: MovingPartyProfile) -> str:
    return f"{regime.value}/{profile.value}"


def catalog() -> list[Scenario]:
    """The four built-in scenarios, in fixed table order.

    Row order is part of the external contract: non-random before random,
    risk-averse before risk-loving.
    """
    return [
        Scenario(name=_slug(regime, profile), regime=regime, profile=profile)
        for regime in (AdjudicationRegime.NON_RANDOM, AdjudicationRegime.RANDOM)
        for profile in (MovingPartyProfile.RISK_AVERSE, MovingPartyProfile.RISK_LOVING)
    ]


def evaluate(scenario: Scenario) -> PosteriorReport:
    """Full posterior report for the scenario's resolved parameters."""
    prior, chars = scenario.resolve()
    return full_report(prior, chars)


_TAG_KEYS = frozenset({"regime", "profile"})
_NUMERIC_KEYS = frozenset({"sensitivity", "specificity", "prior"})
_ALL_KEYS = _TAG_KEYS | _NUMERIC_KEYS | {"name"}

_DEFAULT_CUSTOM_NAME = "custom"


def parse_scenario(text: str) -> Scenario:
    """Parse a scenario document.

    The grammar is one ``key: value`` pair per line; blank lines and
    ``#`` comments are ignored, keys are case-insensitive, and values may
    be quoted.  Legal documents carry either both tags::

        regime: non-random
        profile: risk-averse

    or all three numeric overrides::

        sensitivity: 0.8
        specificity: 0.7
        prior: 0.3

    plus an optional ``name``.  Mixing the two styles raises
    AmbiguousScenario; anything malformed raises ParseError; numbers out
    of [0, 1] raise ValidationError.
    """
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'key: value', got {raw.strip()!r}")
        key = key.strip().lower()
        value = value.strip()
        if len(value) >= 2 and value[0] == value[-1] and value[0] in "'\"":
            value = value[1:-1].strip()
        if key not in _ALL_KEYS:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
        if key in entries:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        if not value:
            raise ParseError(f"line {lineno}: key {key!r} has no value")
        entries[key] = value

    name = entries.pop("name", None)
    tags = _TAG_KEYS & entries.keys()
    numerics = _NUMERIC_KEYS & entries.keys()

    if tags and numerics:
        raise AmbiguousScenario(
            "document mixes regime/profile tags with numeric overrides; "
            "use one style or the other"
        )
    if tags:
        missing = _TAG_KEYS - tags
        if missing:
            raise ParseError(f"missing key(s): {', '.join(sorted(missing))}")
        regime = _parse_enum(AdjudicationRegime, entries["regime"], "regime")
        profile = _parse_enum(MovingPartyProfile, entries["profile"], "profile")
        return Scenario(
            name=name if name is not None else _slug(regime, profile),
            regime=regime,
            profile=profile,
        )
    if numerics:
        missing = _NUMERIC_KEYS - numerics
        if missing:
            raise ParseError(f"missing key(s): {', '.join(sorted(missing))}")
        return Scenario(
            name=name if name is not None else _DEFAULT_CUSTOM_NAME,
            chars=TestCharacteristics(
                _parse_probability(entries["sensitivity"], "sensitivity"),
                _parse_probability(entries["specificity"], "specificity"),
            ),
            prior=PriorBelief(_parse_probability(entries["prior"], "prior")),
        )
    raise ParseError("document defines neither regime/profile tags nor numeric overrides")


def serialize_scenario(scenario: Scenario) -> str:
    """Render a Scenario back into the document format.

    ``parse_scenario(serialize_scenario(s)) == s`` for every valid
    Scenario; floats are written in shortest round-trippable form.
    """
    lines: list[str] = []
    if scenario.is_custom:
        assert scenario.chars is not None and scenario.prior is not None
        if scenario.name != _DEFAULT_CUSTOM_NAME:
            lines.append(f"name: {scenario.name}")
        lines.append(f"sensitivity: {float(scenario.chars.sensitivity)!r}")
        lines.append(f"specificity: {float(scenario.chars.specificity)!r}")
        lines.append(f"prior: {float(scenario.prior.p_guilty)!r}")
    else:
        assert scenario.regime is not None and scenario.profile is not None
        if scenario.name != _slug(scenario.regime, scenario.profile):
            lines.append(f"name: {scenario.name}")
        lines.append(f"regime: {scenario.regime.value}")
        lines.append(f"profile: {scenario.profile.value}")
    return "\n".join(lines) + "\n"


def _parse_enum(enum_cls, value: str, key: str):
    try:
        return enum_cls(value.lower())
    except ValueError:
        legal = ", ".join(member.value for member in enum_cls)
        raise ParseError(f"unknown {key} {value!r}; expected one of: {legal}") from None


def _parse_probability(value: str, key: str) -> Probability:
    try:
        number = float(value)
    except ValueError:
        raise ParseError(f"key {key!r}: {value!r} is not a number") from None
    return Probability(number)
