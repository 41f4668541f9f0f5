import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affine_fc.coxeter import build_graph
from affine_fc.diagrams import identity_diagram, raw_product
from affine_fc.errors import InvalidParameter, NonPlanarInput
from affine_fc.model import DecoratedDiagram, Decoration, Edge, Endpoint, Face, Family, Loop
from affine_fc.rewriting import canonical_loop, canonicalize, is_planar
from strategies import fc_element

D4 = build_graph(Family.AFFINE_D, 2)
N, S = Face.NORTH, Face.SOUTH


def dec(word: str, height: int = 0) -> tuple[Decoration, ...]:
    return tuple(Decoration(symbol, height) for symbol in word)


def cup_and_cap(cup: tuple[Decoration, ...] = (), *loops: Loop) -> DecoratedDiagram:
    """Two nodes, one north cup and one south cap."""
    edges = (
        Edge(Endpoint(N, 1), Endpoint(N, 2), cup),
        Edge(Endpoint(S, 1), Endpoint(S, 2)),
    )
    return DecoratedDiagram(2, edges, tuple(loops))


def test_doubled_loop_becomes_delta():
    raw = DecoratedDiagram(2, identity_diagram(2).edges, (Loop(dec("bb")),))
    result = canonicalize(raw)
    assert result.loops == ()
    assert result.delta_exp == 1


def test_undecorated_loops_are_deleted():
    raw = DecoratedDiagram(2, identity_diagram(2).edges, (Loop(), Loop()), delta_exp=1)
    assert canonicalize(raw).delta_exp == 3


def test_mixed_loop_is_read_from_black():
    raw = DecoratedDiagram(2, identity_diagram(2).edges, (Loop(dec("wb")),))
    assert [loop.word for loop in canonicalize(raw).loops] == ["bw"]
    assert canonical_loop(dec("wbwb")).word == "bwbw"


def test_equal_neighbours_cancel_on_edges():
    edges = (
        Edge(Endpoint(N, 1), Endpoint(S, 1), dec("bbw")),
        Edge(Endpoint(N, 2), Endpoint(S, 2)),
    )
    result = canonicalize(DecoratedDiagram(2, edges))
    assert [e.word for e in result.edges] == ["w", ""]


def test_single_symbol_loop_absorbs_when_two_cups():
    edges = (
        Edge(Endpoint(N, 1), Endpoint(N, 2), dec("b")),
        Edge(Endpoint(N, 3), Endpoint(N, 4)),
        Edge(Endpoint(S, 1), Endpoint(S, 2)),
        Edge(Endpoint(S, 3), Endpoint(S, 4)),
    )
    result = canonicalize(DecoratedDiagram(4, edges, (Loop(dec("b")),)))
    assert [e.word for e in result.edges] == ["", "", "", ""]
    assert [loop.word for loop in result.loops] == ["b"]


def test_mixed_loop_does_not_absorb():
    raw = cup_and_cap(dec("b", 0), Loop(dec("bw", 1)))
    result = canonicalize(raw)
    assert result.edges[0].word == "b"


def test_strip_blocks_absorption_across_opposite_symbol():
    raw = cup_and_cap(dec("b", 2), Loop(dec("b", 0)), Loop(dec("w", 1)))
    assert raw.a_value == 1
    assert canonicalize(raw).edges[0].word == "b"


def test_absorption_inside_a_strip():
    raw = cup_and_cap(dec("b", 2), Loop(dec("b", 0)), Loop(dec("w", 5)))
    result = canonicalize(raw)
    assert result.edges[0].word == ""
    assert sorted(loop.word for loop in result.loops) == ["b", "w"]


def test_planarity():
    assert is_planar(identity_diagram(3).edges, 3)
    crossing = (Edge(Endpoint(N, 1), Endpoint(S, 2)), Edge(Endpoint(N, 2), Endpoint(S, 1)))
    assert not is_planar(crossing, 2)
    missing = (Edge(Endpoint(N, 1), Endpoint(S, 1)),)
    assert not is_planar(missing, 2)


def test_crossing_edges_are_rejected():
    crossing = (Edge(Endpoint(N, 1), Endpoint(S, 2)), Edge(Endpoint(N, 2), Endpoint(S, 1)))
    with pytest.raises(NonPlanarInput):
        canonicalize(DecoratedDiagram(2, crossing))


def test_unknown_symbol_is_rejected():
    edges = (Edge(Endpoint(N, 1), Endpoint(S, 1), dec("x")),)
    with pytest.raises(InvalidParameter):
        canonicalize(DecoratedDiagram(1, edges))


def test_canonical_form_is_a_fixed_point():
    raw = raw_product((0, 1, 2, 3, 4, 2, 0, 1), 2)
    once = canonicalize(raw)
    assert canonicalize(once) == once


@settings(max_examples=30, deadline=None)
@given(fc_element(D4, max_length=8), st.randoms(use_true_random=False))
def test_any_rule_order_reaches_the_same_form(fc, rng):
    raw = raw_product(fc.word, 2)
    assert canonicalize(raw, rng) == canonicalize(raw)


def test_seeded_orders_on_a_zigzag():
    raw = raw_product((0, 1, 2, 3, 4, 2, 0, 1), 2)
    expected = canonicalize(raw)
    for seed in range(50):
        assert canonicalize(raw, random.Random(seed)) == expected
