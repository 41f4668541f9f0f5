import pytest
from hypothesis import given, settings

from affine_fc.coxeter import (
    Verdict,
    build_graph,
    cfnf,
    drop_left,
    element,
    f_bullet,
    f_circ,
    generic_graph,
    has_complete_support,
    heap_of,
    identity,
    inverse,
    is_factor,
    is_fully_commutative,
    is_prefix,
    left_descents,
    make_word,
    n_value,
    prefixes,
    remainders,
    right_descents,
    support,
)
from affine_fc.errors import (
    IllegalMove,
    InvalidGenerator,
    InvalidParameter,
    NotFullyCommutative,
    NotReduced,
    WrongFamily,
)
from affine_fc.model import INFINITY, Family
from affine_fc.oracle import all_reduced_expressions, max_antichain_brute
from strategies import fc_element

D4 = build_graph(Family.AFFINE_D, 2)
B3 = build_graph(Family.AFFINE_B, 2)


def test_affine_d_bonds():
    assert D4.rank == 5
    assert D4.label == "D~4"
    assert D4.m(0, 2) == D4.m(1, 2) == D4.m(2, 3) == D4.m(2, 4) == 3
    assert D4.m(0, 1) == D4.m(3, 4) == D4.m(0, 3) == 2
    assert D4.neighbors(2) == {0, 1, 3, 4}


def test_affine_b_bonds():
    assert B3.rank == 4
    assert B3.label == "B~3"
    assert B3.m(2, 3) == 4
    assert B3.m(0, 2) == B3.m(1, 2) == 3
    assert B3.m(1, 3) == 2


def test_build_graph_rejects_bad_parameters():
    with pytest.raises(InvalidParameter):
        build_graph(Family.AFFINE_D, 1)
    with pytest.raises(WrongFamily):
        build_graph(Family.GENERIC, 3)


def test_generic_graph_checks_symmetry():
    with pytest.raises(InvalidParameter):
        generic_graph([[1, 3], [2, 1]])
    with pytest.raises(InvalidParameter):
        generic_graph([[1, 1], [1, 1]])


def test_make_word_rejects_unknown_generator():
    with pytest.raises(InvalidGenerator):
        make_word(D4, (0, 5))


@pytest.mark.parametrize(
    "graph, letters, reason",
    [
        (D4, (0, 0), Verdict.NOT_REDUCED),
        (D4, (0, 1, 0), Verdict.NOT_REDUCED),
        (D4, (2, 3, 2), Verdict.BRAID),
        (D4, (0, 2, 0), Verdict.BRAID),
        (D4, (0, 2, 1, 3, 4), Verdict.OK),
        (B3, (2, 3, 2), Verdict.OK),
        (B3, (2, 3, 2, 3), Verdict.BRAID),
        (D4, (), Verdict.OK),
    ],
)
def test_fc_verdicts(graph, letters, reason):
    verdict = is_fully_commutative(make_word(graph, letters))
    assert verdict.reason is reason
    assert bool(verdict) == (reason is Verdict.OK)


def test_infinite_bond_never_braids():
    graph = generic_graph([[1, INFINITY], [INFINITY, 1]])
    assert is_fully_commutative(make_word(graph, (0, 1, 0, 1, 0, 1)))


def test_cfnf_errors():
    with pytest.raises(NotReduced):
        cfnf(make_word(D4, (0, 0)))
    with pytest.raises(NotFullyCommutative):
        cfnf(make_word(D4, (2, 3, 2)))


def test_worked_normal_forms(w1, w2):
    assert w1.layers == ((0, 4), (3, 5), (2, 4, 6, 7), (1,))
    assert w2.layers == ((3,), (2, 4), (1, 3, 5), (2, 4, 6), (0, 3, 5), (2, 6))


def test_normal_form_ignores_commutations(d7, w1):
    assert element(d7, (4, 0, 5, 3, 7, 6, 4, 2, 1)) == w1


def test_descents(w1):
    assert left_descents(w1) == {0, 4}
    assert right_descents(w1) == {1, 4, 6, 7}
    assert left_descents(identity(D4)) == frozenset()


def test_drop_left_requires_descent(w1):
    with pytest.raises(IllegalMove):
        drop_left(w1, 3)
    assert drop_left(w1, 0).length == w1.length - 1


def test_support(w1):
    assert support(w1) == {0, 1, 2, 3, 4, 5, 6, 7}
    assert has_complete_support(w1)
    assert not has_complete_support(element(D4, (0, 1)))


def test_prefixes_and_factors(w1, d7):
    assert is_prefix(w1, (4, 0, 3))
    assert not is_prefix(w1, (3,))
    assert is_factor(element(d7, (1,)), w1)
    assert is_factor(element(d7, (3, 5, 4)), w1)
    assert not is_factor(element(d7, (0, 1)), w1)


def test_heap_covers():
    heap = heap_of(element(D4, (0, 2, 1)))
    assert heap.labels == (0, 2, 1)
    assert heap.covers == {(0, 1), (1, 2)}
    assert heap_of(element(D4, (0, 1))).covers == frozenset()


def test_heap_drops_transitive_relations():
    heap = heap_of(element(D4, (2, 3, 4, 2)))
    # the first 2 is below the last one only through 3 and 4
    assert (0, 3) not in heap.covers
    assert heap.covers == {(0, 1), (0, 2), (1, 3), (2, 3)}


def test_width_of_fork_pair():
    assert n_value(element(D4, (0, 1))) == 2
    assert n_value(identity(D4)) == 0
    assert n_value(element(D4, (0, 2, 3))) == 1


def test_f_statistics_worked_examples():
    d10 = build_graph(Family.AFFINE_D, 8)
    w = element(d10, (0, 3, 5, 9, 1, 2, 4, 6, 8, 3, 5, 7, 10))
    v = element(d10, (0, 5, 9, 1, 10))
    assert (f_bullet(w), f_circ(w)) == (1, 0)
    assert (f_bullet(v), f_circ(v)) == (1, 1)


def test_f_statistics_need_type_d():
    with pytest.raises(WrongFamily):
        f_bullet(element(B3, (0, 1)))


def test_f_bullet_counts_blocks_between_middle_letters():
    zigzag = element(D4, (0, 1, 2, 3, 4, 2, 0, 1))
    assert f_bullet(zigzag) == 2
    assert f_circ(zigzag) == 1


@settings(max_examples=60, deadline=None)
@given(fc_element(D4, max_length=9))
def test_inverse_is_an_involution(fc):
    assert inverse(inverse(fc)) == fc
    assert inverse(fc).layers == cfnf(make_word(D4, fc.word[::-1])).layers
    assert right_descents(fc) == left_descents(inverse(fc))


@settings(max_examples=40, deadline=None)
@given(fc_element(B3, max_length=7))
def test_every_reduced_expression_has_the_same_normal_form(fc):
    for word in all_reduced_expressions(fc):
        assert cfnf(word) == fc


@settings(max_examples=40, deadline=None)
@given(fc_element(D4, max_length=8))
def test_width_matches_brute_force_antichain(fc):
    assert n_value(fc) == max_antichain_brute(heap_of(fc))


def test_f_statistics_are_inverse_invariant(d4_elements):
    for fc in d4_elements:
        assert f_bullet(inverse(fc)) == f_bullet(fc)
        assert f_circ(inverse(fc)) == f_circ(fc)


def test_prefixes_are_order_ideals(w1):
    found = list(prefixes(w1))
    assert len(found) == len(set(found)) == len(list(remainders(w1)))
    for x in found:
        assert is_prefix(w1, x.word)
    assert identity(w1.graph) in found
    assert w1 in found
