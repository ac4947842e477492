import json

import pytest
from hypothesis import given, settings

from andnot_bounds import (
    DOMINATING,
    EVEN_FVS,
    STRONG_EVEN_HIT,
    AnalyzeOptions,
    GeneratorConfig,
    InvalidConfig,
    analyze,
    generate_random,
    parse_network,
    serialize_network,
)
from andnot_bounds.report import CHECKS, MAX_STATES_ENV, check_network, default_max_states, verify_campaign

from .conftest import and_not_networks


def test_analyze_fig1(fig1):
    report = analyze(fig1, AnalyzeOptions(verify=True))
    assert report.bounds == {EVEN_FVS: 2, STRONG_EVEN_HIT: 1, DOMINATING: 1}
    assert report.attractor_count == 1 and report.fixed_point_count == 0
    assert report.cycle_stats == {"total": 3, "even": 1, "strong_even": 0, "consistent_even": 0}
    assert not report.violated
    text = report.to_text()
    assert "external delocalizing triple (c, a, b)" in text
    assert "cyclic: {000, 001, 010, 011, 100, 101}" in text


def test_analyze_fig2(fig2):
    report = analyze(fig2, AnalyzeOptions(verify=True))
    assert report.witnesses[STRONG_EVEN_HIT].members == ("a", "d")
    assert report.witnesses[DOMINATING].members == ("d",)
    assert report.fixed_points == [0]
    assert "pivot d:" in report.to_text()


def test_analyze_without_oracle(fig1):
    report = analyze(fig1)
    assert not report.oracle_ran and report.verdicts == {}
    assert report.to_json()["oracle"] is None


def test_oracle_skipped_over_cap(fig1):
    report = analyze(fig1, AnalyzeOptions(verify=True, max_states=4))
    assert not report.oracle_ran
    assert any("oracle skipped" in f for f in report.flags)


def test_greedy_mode_is_not_certified(fig2):
    report = analyze(fig2, AnalyzeOptions(verify=True, mode="greedy"))
    assert not report.certified(DOMINATING)
    assert report.verdicts == {}


def test_truncated_enumeration_is_flagged():
    bn = parse_network("a, !b & !c\nb, !a & !c\nc, !a & !b")
    report = analyze(bn, AnalyzeOptions(verify=True, max_cycles=1))
    assert report.to_json()["truncated"]
    assert report.verdicts == {}
    assert report.flags


def test_json_is_deterministic(fig2):
    a = analyze(fig2, AnalyzeOptions(verify=True)).to_json_text()
    b = analyze(fig2, AnalyzeOptions(verify=True)).to_json_text()
    assert a == b
    data = json.loads(a)
    assert data["bounds"] == {"evenFVS": 4, "strongEvenHit": 4, "dominating": 2, "fixedPoints": 2}


def test_default_max_states(monkeypatch):
    monkeypatch.delenv(MAX_STATES_ENV, raising=False)
    assert default_max_states() == 1 << 20
    monkeypatch.setenv(MAX_STATES_ENV, "64")
    assert default_max_states() == 64
    for bad in ("lots", "0"):
        monkeypatch.setenv(MAX_STATES_ENV, bad)
        with pytest.raises(InvalidConfig):
            default_max_states()


def test_generator_is_deterministic():
    cfg = GeneratorConfig(n=8, seed=3)
    assert generate_random(cfg) == generate_random(cfg)
    assert generate_random(cfg) != generate_random(GeneratorConfig(n=8, seed=4))
    bn = generate_random(GeneratorConfig(n=6, seed=1, min_lits=2, max_lits=2, const_prob=0.0))
    assert all(len(f.literals) == 2 for f in bn.functions)
    assert all(f.is_constant for f in generate_random(GeneratorConfig(n=5, const_prob=1.0)).functions)


@pytest.mark.parametrize(
    "kwargs",
    [dict(n=0), dict(n=3, min_lits=0), dict(n=3, min_lits=3, max_lits=2),
     dict(n=3, neg_prob=1.5), dict(n=3, const_prob=-0.1)],
)
def test_generator_rejects_bad_config(kwargs):
    with pytest.raises(InvalidConfig):
        GeneratorConfig(**kwargs).validate()


def test_max_lits_is_clipped():
    bn = generate_random(GeneratorConfig(n=2, min_lits=1, max_lits=5, const_prob=0.0))
    assert all(len(f.literals) <= 2 for f in bn.functions)


def test_all_constant_network_has_one_attractor():
    checked, violations = check_network(parse_network("a, 1\nb, 0\nc, 1"))
    assert not violations
    assert "unique_without_strong_even" in checked


def test_small_campaign():
    summary = verify_campaign(GeneratorConfig(n=5, seed=11), 40)
    assert summary.ok
    assert summary.checked["structural_equals_bruteforce"] == 40
    data = summary.to_json()
    assert set(data["violation_counts"]) == set(CHECKS)
    assert data == verify_campaign(GeneratorConfig(n=5, seed=11), 40).to_json()


@given(and_not_networks(max_n=7))
@settings(max_examples=40, deadline=None)
def test_check_network_finds_nothing(bn):
    _, violations = check_network(bn)
    assert violations == [], serialize_network(bn)
