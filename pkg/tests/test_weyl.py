import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from mvkit import cartan, linalg, weyl
from mvkit.errors import CapExceeded, IncompatiblePairs, NotFiniteType

B2 = cartan.preset("B2")


def brute_reduced_words(pair, w, length):
    # all words of the given length whose product is w
    out = []
    for word in itertools.product(range(pair.n), repeat=length):
        if weyl.from_word(pair, word).weight_matrix == w.weight_matrix:
            out.append(word)
    return sorted(out)


def test_simple_reflections_b2():
    assert weyl.simple_reflection(B2, 0).weight_matrix == ((-1, 0), (2, 1))
    assert weyl.simple_reflection(B2, 1).weight_matrix == ((1, 1), (0, -1))


@pytest.mark.parametrize("name", sorted(cartan.PRESETS))
def test_involution_and_intertwining(name):
    p = cartan.preset(name)
    for i in range(p.n):
        s = weyl.simple_reflection(p, i)
        assert weyl.multiply(s, s) == weyl.identity(p)
        assert linalg.matmul(s.weight_matrix, p.C) == linalg.matmul(p.C, s.rank_matrix)


def test_multiply_invert():
    s1, s2 = weyl.simple_reflection(B2, 0), weyl.simple_reflection(B2, 1)
    assert weyl.multiply(s1, s2).weight_matrix == ((-1, -1), (2, 1))
    assert weyl.invert(weyl.multiply(s1, s2)) == weyl.multiply(s2, s1)
    with pytest.raises(IncompatiblePairs):
        weyl.multiply(s1, weyl.simple_reflection(cartan.preset("A2"), 0))


@pytest.mark.parametrize("name,order", [("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("B2", 8), ("B3", 48), ("C3", 48), ("D4", 192), ("F4", 1152), ("G2", 12)])
def test_group_orders(name, order):
    assert len(weyl.weyl_group(cartan.preset(name))) == order


@pytest.mark.parametrize("name,l0", [("B2", 4), ("A3", 6), ("A2", 3), ("B3", 9), ("G2", 6)])
def test_longest_length(name, l0):
    p = cartan.preset(name)
    w0 = weyl.longest_element(p)
    assert weyl.length(w0) == l0
    assert descents_all(w0)


def descents_all(w):
    return weyl.descents_right(w) == set(range(w.pair.n))


def test_b2_longest_is_minus_identity():
    assert weyl.longest_element(B2).weight_matrix == ((-1, 0), (0, -1))


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A4", "D4"])
def test_length_equals_canonical_word(name):
    p = cartan.preset(name)
    G = weyl.weyl_group(p)
    for w in G.elements():
        word = weyl.canonical_reduced_word(w)
        assert weyl.length(w) == len(word) == G.length(w)
        assert weyl.from_word(p, word) == w
        for i in range(p.n):
            assert abs(G.length(G.times_s(w, i)) - G.length(w)) == 1


@pytest.mark.parametrize("name", ["A2", "B2", "A3", "G2"])
def test_all_reduced_words_brute_force(name):
    p = cartan.preset(name)
    w0 = weyl.longest_element(p)
    assert weyl.all_reduced_words(w0) == brute_reduced_words(p, w0, weyl.length(w0))


def test_reduced_words_examples():
    assert weyl.all_reduced_words(weyl.longest_element(B2)) == [(0, 1, 0, 1), (1, 0, 1, 0)]
    assert weyl.all_reduced_words(weyl.simple_reflection(B2, 0)) == [(0,)]
    assert weyl.all_reduced_words(weyl.longest_element(cartan.preset("A2"))) == [(0, 1, 0), (1, 0, 1)]
    assert len(weyl.all_reduced_words(weyl.longest_element(cartan.preset("A3")))) == 16
    with pytest.raises(CapExceeded):
        weyl.all_reduced_words(weyl.longest_element(cartan.preset("A3")), cap=10)


@pytest.mark.parametrize("name", ["A3", "B3", "C3"])
def test_canonical_word_is_lex_least(name):
    p = cartan.preset(name)
    G = weyl.weyl_group(p)
    for w in G.elements():
        assert weyl.canonical_reduced_word(w) == weyl.all_reduced_words(w)[0]


@pytest.mark.parametrize("name", ["A3", "B3"])
def test_every_reduced_word_evaluates(name):
    p = cartan.preset(name)
    for w in weyl.weyl_group(p).elements():
        for word in weyl.all_reduced_words(w):
            assert weyl.from_word(p, word) == w


def test_parabolic_longest():
    A3 = cartan.preset("A3")
    w = weyl.parabolic_longest(A3, {0, 2})
    assert weyl.length(w) == 2 and w == weyl.from_word(A3, (0, 2))
    assert weyl.parabolic_longest(A3, set()) == weyl.identity(A3)
    assert weyl.parabolic_longest(A3, {0, 1, 2}) == weyl.longest_element(A3)


def test_weak_order():
    e = weyl.identity(B2)
    G = weyl.weyl_group(B2)
    for w in G.elements():
        assert weyl.weak_order_leq(e, w)
        assert weyl.weak_order_leq(w, G.longest)
    s1 = weyl.simple_reflection(B2, 0)
    assert weyl.weak_order_leq(s1, weyl.from_word(B2, (0, 1)))
    assert not weyl.weak_order_leq(s1, weyl.from_word(B2, (1, 0)))


def test_chamber_weights():
    assert {c.vector for c in weyl.chamber_weights(cartan.preset("A1"))} == {(1,), (-1,)}
    assert len(weyl.chamber_weights(B2)) == 8
    assert len(weyl.chamber_weights(cartan.preset("A2"))) == 6
    for c in weyl.chamber_weights(B2):
        assert linalg.column(weyl.from_word(B2, c.w).weight_matrix, c.i) == c.vector


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4"])
def test_faithful(name):
    G = weyl.weyl_group(cartan.preset(name))
    assert len({w.weight_matrix for w in G.elements()}) == len(G)
    assert len({w.rank_matrix for w in G.elements()}) == len(G)


@settings(max_examples=100)
@given(st.sampled_from(["A3", "B3", "C3", "F4"]), st.integers(0, 10**6))
def test_associative(name, seed):
    p = cartan.preset(name)
    rng = random.Random(seed)
    els = weyl.weyl_group(p).elements()
    u, v, w = (rng.choice(els) for _ in range(3))
    assert weyl.multiply(weyl.multiply(u, v), w) == weyl.multiply(u, weyl.multiply(v, w))


def test_positive_roots_counts():
    assert len(weyl.positive_roots(B2)) == 4
    assert len(weyl.positive_roots(cartan.preset("A3"))) == 6
    assert len(weyl.positive_roots(cartan.preset("F4"))) == 24
    # roots of C^T in rank coordinates: B2 has (1,2) and not (2,1)
    assert (1, 2) in weyl.positive_roots(B2) and (2, 1) not in weyl.positive_roots(B2)


def test_not_finite():
    with pytest.raises(NotFiniteType):
        weyl.weyl_group(cartan.validate_gcm([[2, -2], [-2, 2]]))
