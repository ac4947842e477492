import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from andnot_bounds import (
    DOMINATING,
    EVEN_FVS,
    STRONG_EVEN_HIT,
    ConstraintFamily,
    build_constraints,
    classify_cycles,
    min_hitting_set,
    structural_global_ig,
)
from andnot_bounds.covers import hits_all

from .conftest import and_not_networks


def exhaustive_min(family):
    """Smallest hitting set size by trying every subset in size order."""
    for k in range(len(family.universe) + 1):
        for combo in itertools.combinations(family.universe, k):
            if hits_all(combo, family):
                return k
    raise AssertionError("universe does not hit the family")


def family_of(kind, universe, *sets):
    return ConstraintFamily(kind, tuple(universe), tuple((f"C{i}", frozenset(s)) for i, s in enumerate(sets, 1)))


@st.composite
def families(draw, max_vars=12, max_constraints=20):
    n = draw(st.integers(1, max_vars))
    universe = tuple(f"x{i}" for i in range(n))
    sets = draw(st.lists(
        st.frozensets(st.sampled_from(universe), min_size=1, max_size=n),
        max_size=max_constraints,
    ))
    return family_of(EVEN_FVS, universe, *sets)


def witnesses(bn):
    cls = classify_cycles(structural_global_ig(bn))
    return {kind: min_hitting_set(build_constraints(cls, kind)) for kind in (EVEN_FVS, STRONG_EVEN_HIT, DOMINATING)}


def test_fig1_witnesses(fig1):
    w = witnesses(fig1)
    assert w[EVEN_FVS].members == ("a",)
    assert w[STRONG_EVEN_HIT].members == ()
    assert w[DOMINATING].members == ()
    assert [x.bound for x in w.values()] == [2, 1, 1]


def test_fig2_families(fig2):
    cls = classify_cycles(structural_global_ig(fig2))
    dom = build_constraints(cls, DOMINATING)
    assert sorted(sorted(s) for s in dom.sets) == [["a", "b", "d"], ["d"]]
    strong = build_constraints(cls, STRONG_EVEN_HIT)
    assert sorted(sorted(s) for s in strong.sets) == [["a", "b"], ["d"]]
    w = witnesses(fig2)
    assert w[STRONG_EVEN_HIT].members == ("a", "d")
    assert w[DOMINATING].members == ("d",)
    assert w[DOMINATING].certified_minimal


# even cycles of the ERBB regulatory graph as listed in the worked example;
# only the vertex sets matter for the hitting-set arithmetic
ERBB_UNIVERSE = (
    "EGF", "Akt1", "IGF1R", "ERa", "MEK1", "CDK2", "CDK4", "p21", "p27", "cMYC",
)
ERBB_EVEN = [
    {"EGF"},
    {"Akt1", "IGF1R"},
    {"Akt1", "ERa", "IGF1R"},
    {"ERa", "IGF1R", "MEK1"},
    {"CDK2", "p27"},
    {"CDK4", "p27"},
    {"CDK4", "p21"},
    {"CDK2", "p27", "CDK4", "p21"},
]


def test_erbb_hitting_set_sizes():
    fvs = family_of(EVEN_FVS, ERBB_UNIVERSE, *ERBB_EVEN)
    strong = family_of(STRONG_EVEN_HIT, ERBB_UNIVERSE, ERBB_EVEN[0], *ERBB_EVEN[4:])
    dom = family_of(DOMINATING, ERBB_UNIVERSE, ERBB_EVEN[0], *(s | {"cMYC"} for s in ERBB_EVEN[4:]))
    sizes = [len(min_hitting_set(f)) for f in (fvs, strong, dom)]
    assert sizes == [4, 3, 2]
    assert [2 ** k for k in sizes] == [16, 8, 4]
    assert set(min_hitting_set(dom).members) == {"EGF", "cMYC"}
    assert hits_all({"EGF", "IGF1R", "CDK2", "CDK4"}, fvs)
    assert hits_all({"EGF", "CDK2", "CDK4"}, strong)


def test_lexicographic_tie_break():
    f = family_of(EVEN_FVS, "abcd", "ab", "cd")
    assert min_hitting_set(f).members == ("a", "c")
    f = family_of(EVEN_FVS, "dcba", "ab", "cd")
    assert min_hitting_set(f).members == ("d", "b")


def test_empty_family():
    w = min_hitting_set(family_of(EVEN_FVS, "ab"))
    assert w.members == () and w.bound == 1 and w.certified_minimal


def test_family_validation():
    with pytest.raises(ValueError):
        family_of(EVEN_FVS, "ab", set())
    with pytest.raises(ValueError):
        family_of(EVEN_FVS, "ab", {"z"})
    with pytest.raises(ValueError):
        ConstraintFamily("other", ("a",), ())
    with pytest.raises(ValueError):
        min_hitting_set(family_of(EVEN_FVS, "a", "a"), mode="fast")


def test_uncertified_family_is_not_minimal():
    f = ConstraintFamily(EVEN_FVS, ("a",), (("C", frozenset("a")),), certified=False)
    assert not min_hitting_set(f).certified_minimal


def test_budget_falls_back_to_greedy():
    universe = [f"x{i}" for i in range(12)]
    sets = [set(c) for c in itertools.combinations(universe[:8], 3)]
    w = min_hitting_set(family_of(EVEN_FVS, universe, *sets), max_nodes=5)
    assert w.budget_exceeded and w.method == "greedy" and not w.certified_minimal
    assert hits_all(w.members, family_of(EVEN_FVS, universe, *sets))


@given(families())
@settings(max_examples=150, deadline=None)
def test_exact_matches_exhaustive(family):
    w = min_hitting_set(family)
    assert hits_all(w.members, family)
    assert len(w) == exhaustive_min(family)
    greedy = min_hitting_set(family, mode="greedy")
    assert hits_all(greedy.members, family)
    assert len(greedy) >= len(w)


@given(and_not_networks(max_n=7))
@settings(max_examples=60, deadline=None)
def test_witness_sizes_are_ordered(bn):
    w = witnesses(bn)
    assert len(w[DOMINATING]) <= len(w[STRONG_EVEN_HIT]) <= len(w[EVEN_FVS])
