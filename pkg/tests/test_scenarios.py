"""Tests for the built-in scenario catalog and the scenario document format."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from litgame.errors import AmbiguousScenario, ParseError, ValidationError
from litgame.inference import PriorBelief, Probability, TestCharacteristics
from litgame.scenarios import (
    AdjudicationRegime,
    MovingPartyProfile,
    Scenario,
    catalog,
    evaluate,
    parse_scenario,
    serialize_scenario,
)

# Exact rational PPVs of the four cells, in catalog order:
# 81/82, 54/58, 45/50, 30/50.
CATALOG_PPVS = [81 / 82, 54 / 58, 0.9, 0.6]
PRINTED_PPVS = [0.988, 0.931, 0.900, 0.600]


class TestCatalog:
    def test_has_four_cells_in_table_order(self):
        cells = catalog()
        assert len(cells) == 4
        assert [c.name for c in cells] == [
            "non-random/risk-averse",
            "non-random/risk-loving",
            "random/risk-averse",
            "random/risk-loving",
        ]
        assert cells[0].regime is AdjudicationRegime.NON_RANDOM
        assert cells[0].profile is MovingPartyProfile.RISK_AVERSE
        assert cells[3].regime is AdjudicationRegime.RANDOM
        assert cells[3].profile is MovingPartyProfile.RISK_LOVING

    def test_regime_and_profile_constants(self):
        prior, chars = catalog()[0].resolve()
        assert (float(prior.p_guilty), float(chars.sensitivity), float(chars.specificity)) == (
            0.9,
            0.9,
            0.9,
        )
        prior, chars = catalog()[3].resolve()
        assert (float(prior.p_guilty), float(chars.sensitivity), float(chars.specificity)) == (
            0.6,
            0.5,
            0.5,
        )

    def test_evaluations_reproduce_expected_ppvs(self):
        for cell, ppv, printed in zip(catalog(), CATALOG_PPVS, PRINTED_PPVS):
            report = evaluate(cell)
            assert report.ppv == pytest.approx(ppv, abs=1e-12)
            assert round(float(report.ppv), 3) == printed

    def test_random_cells_have_prior_equal_posterior(self):
        for cell in catalog()[2:]:
            report = evaluate(cell)
            assert report.ppv == pytest.approx(float(report.prior.p_guilty), abs=1e-12)


class TestScenarioType:
    def test_custom_scenario_resolves_to_overrides(self):
        chars = TestCharacteristics(Probability(0.8), Probability(0.7))
        prior = PriorBelief(Probability(0.3))
        scenario = Scenario(name="what-if", chars=chars, prior=prior)
        assert scenario.is_custom
        assert scenario.resolve() == (prior, chars)

    def test_half_custom_is_rejected(self):
        chars = TestCharacteristics(Probability(0.8), Probability(0.7))
        with pytest.raises(ParseError):
            Scenario(name="broken", chars=chars)
        with pytest.raises(ParseError):
            Scenario(name="broken", regime=AdjudicationRegime.RANDOM)

    def test_mixing_tags_and_overrides_is_ambiguous(self):
        with pytest.raises(AmbiguousScenario):
            Scenario(
                name="mixed",
                regime=AdjudicationRegime.RANDOM,
                profile=MovingPartyProfile.RISK_AVERSE,
                chars=TestCharacteristics(Probability(0.8), Probability(0.7)),
                prior=PriorBelief(Probability(0.3)),
            )

    def test_empty_scenario_is_rejected(self):
        with pytest.raises(ParseError):
            Scenario(name="empty")


class TestParseScenario:
    def test_tagged_document_hits_catalog_cell(self):
        scenario = parse_scenario('regime: "random"\nprofile: "risk-averse"\n')
        assert scenario == catalog()[2]

    def test_numeric_document(self):
        scenario = parse_scenario("sensitivity: 0.8\nspecificity: 0.7\nprior: 0.3\n")
        prior, chars = scenario.resolve()
        assert float(prior.p_guilty) == 0.3
        assert float(chars.sensitivity) == 0.8
        assert float(chars.specificity) == 0.7
        report = evaluate(scenario)
        assert report.ppv == pytest.approx(8 / 15, abs=1e-12)

    def test_comments_blank_lines_and_case(self):
        text = "# built-in cell\n\nREGIME: non-random  # trailing comment\nProfile: risk-loving\n"
        assert parse_scenario(text) == catalog()[1]

    def test_out_of_range_number(self):
        with pytest.raises(ValidationError):
            parse_scenario("sensitivity: 0.8\nspecificity: 0.7\nprior: 1.7\n")

    def test_mixed_styles(self):
        with pytest.raises(AmbiguousScenario):
            parse_scenario("regime: random\nsensitivity: 0.8\n")

    @pytest.mark.parametrize(
        "text",
        [
            "regime: random\n",  # missing profile
            "sensitivity: 0.8\nprior: 0.3\n",  # missing specificity
            "regime random\n",  # no separator
            "regime: random\nregime: random\n",  # duplicate
            "regime: sometimes\nprofile: risk-averse\n",  # unknown tag value
            "sensitivity: high\nspecificity: 0.7\nprior: 0.3\n",  # not a number
            "verdict: 1\n",  # unknown key
            "regime:\nprofile: risk-averse\n",  # empty value
            "",  # nothing at all
        ],
    )
    def test_malformed_documents(self, text):
        with pytest.raises(ParseError):
            parse_scenario(text)


names = st.text(
    alphabet=st.characters(whitelist_categories=("Ll", "Lu", "Nd"), whitelist_characters="-_/"),
    min_size=1,
    max_size=30,
)
unit_floats = st.floats(min_value=0.0, max_value=1.0, allow_nan=False, allow_infinity=False)


@st.composite
def scenarios(draw):
    if draw(st.booleans()):
        regime = draw(st.sampled_from(AdjudicationRegime))
        profile = draw(st.sampled_from(MovingPartyProfile))
        name = draw(st.one_of(st.just(f"{regime.value}/{profile.value}"), names))
        return Scenario(name=name, regime=regime, profile=profile)
    name = draw(st.one_of(st.just("custom"), names))
    return Scenario(
        name=name,
        chars=TestCharacteristics(
            Probability(draw(unit_floats)), Probability(draw(unit_floats))
        ),
        prior=PriorBelief(Probability(draw(unit_floats))),
    )


class TestSerializeScenario:
    @given(scenarios())
    def test_parse_inverts_serialize(self, scenario):
        assert parse_scenario(serialize_scenario(scenario)) == scenario

    def test_catalog_slug_names_are_omitted(self):
        assert serialize_scenario(catalog()[0]) == "regime: non-random\nprofile: risk-averse\n"

    def test_floats_round_trip_at_full_precision(self):
        scenario = Scenario(
            name="custom",
            chars=TestCharacteristics(Probability(1 / 3), Probability(2 / 7)),
            prior=PriorBelief(Probability(0.1 + 0.2)),
        )
        recovered = parse_scenario(serialize_scenario(scenario))
        _, chars = recovered.resolve()
        assert float(chars.sensitivity) == 1 / 3
        assert float(chars.specificity) == 2 / 7
