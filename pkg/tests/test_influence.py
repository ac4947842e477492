import json

import pytest
from hypothesis import given, settings

from andnot_bounds import (
    SignedArc,
    SignedDigraph,
    StateSpaceTooLarge,
    bruteforce_global_ig,
    induced_subgraph,
    local_ig,
    parse_network,
    percolate_full,
    percolate_one_step,
    structural_global_ig,
)

from .conftest import and_not_networks


def arcs(*specs):
    return frozenset(SignedArc(*s.split()) for s in specs)


FIG1_ARCS = arcs("a b -", "a c -", "b a -", "c b -", "c a +")
FIG2_ARCS = arcs("b a +", "d a +", "a b +", "c b -", "d c +", "c d -", "d d +")

# local influence graphs of the first example, tabulated by evaluating the
# three update functions directly on both values of each input
FIG1_LOCAL = {
    "000": arcs("a b -", "a c -", "c a +", "c b -"),
    "001": arcs("a c -", "b a -", "c a +", "c b -"),
    "010": arcs("a b -", "a c -", "c b -"),
    "011": arcs("a c -", "b a -", "c b -"),
    "100": arcs("a b -", "a c -", "c a +"),
    "101": arcs("a c -", "b a -", "c a +"),
    "110": arcs("a b -", "a c -"),
    "111": arcs("a c -", "b a -"),
}


def test_structural_fig1(fig1):
    g = structural_global_ig(fig1)
    assert g.vertices == ("a", "b", "c")
    assert g.arcs == FIG1_ARCS


def test_structural_fig2(fig2):
    assert structural_global_ig(fig2).arcs == FIG2_ARCS


def test_structural_constants_have_no_arcs():
    assert not structural_global_ig(parse_network("a, 1\nb, 0")).arcs


@pytest.mark.parametrize("state", sorted(FIG1_LOCAL))
def test_local_fig1(fig1, state):
    assert local_ig(fig1, state).arcs == FIG1_LOCAL[state]


def test_local_constant_and_single_input():
    bn = parse_network("u, !u\nv, u\nw, 1")
    for x in range(8):
        g = local_ig(bn, x)
        assert SignedArc("u", "v", "+") in g.arcs
        assert not g.in_arcs("w")


def test_bruteforce_fig1(fig1):
    assert bruteforce_global_ig(fig1) == structural_global_ig(fig1)


def test_bruteforce_source():
    assert bruteforce_global_ig(parse_network("a, a")).arcs == arcs("a a +")


def test_bruteforce_cap():
    bn = parse_network("\n".join(f"x{i}, x{i}" for i in range(6)))
    with pytest.raises(StateSpaceTooLarge):
        bruteforce_global_ig(bn, max_states=32)


@given(and_not_networks(max_n=8))
@settings(max_examples=60, deadline=None)
def test_structural_equals_bruteforce(bn):
    assert bruteforce_global_ig(bn) == structural_global_ig(bn)


@given(and_not_networks(max_n=6))
@settings(max_examples=40, deadline=None)
def test_local_subset_of_global(bn):
    g = structural_global_ig(bn)
    for x in range(1 << bn.n):
        assert local_ig(bn, x).arcs <= g.arcs


@given(and_not_networks(max_n=8))
@settings(deadline=None)
def test_no_opposite_arcs_from_one_source(bn):
    g = structural_global_ig(bn)
    pairs = [(a.source, a.target) for a in g.arcs]
    assert len(pairs) == len(set(pairs))


@given(and_not_networks(max_n=8))
@settings(deadline=None)
def test_percolation_shrinks_ig(bn):
    g = structural_global_ig(bn)
    for p in (percolate_one_step(bn), percolate_full(bn)):
        gp = structural_global_ig(p)
        assert gp.vertices == g.vertices
        assert gp.arcs <= g.arcs


def test_induced_subgraph(fig1):
    g = structural_global_ig(fig1)
    assert induced_subgraph(g, {"a", "b"}).arcs == arcs("a b -", "b a -")
    assert induced_subgraph(g, g.vertices) == g
    empty = induced_subgraph(g, set())
    assert empty.vertices == () and not empty.arcs
    with pytest.raises(ValueError):
        induced_subgraph(g, {"z"})


def test_json_and_edgelist_round_trip(fig2):
    g = structural_global_ig(fig2)
    data = json.loads(json.dumps(g.to_json()))
    assert data["arcs"][0] == {"from": "a", "to": "b", "sign": "+"}
    assert SignedDigraph.from_json(data) == g
    text = g.to_edgelist()
    assert "d -> d +" in text.splitlines()
    assert SignedDigraph.from_edgelist(text, g.vertices) == g


def test_edgelist_rejects_garbage():
    with pytest.raises(ValueError):
        SignedDigraph.from_edgelist("a -> b ?")


def test_digraph_validates_arcs():
    with pytest.raises(ValueError):
        SignedDigraph(("a",), frozenset({SignedArc("a", "b", "+")}))
    with pytest.raises(ValueError):
        SignedDigraph(("a",), frozenset({SignedArc("a", "a", "0")}))
