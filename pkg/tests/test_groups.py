import random

import networkx as nx
import pytest

from gridbraid.groups import (abelianization, as_raag, compose, knuth_bendix, raag_equal,
                              raag_normal_form, raag_presentation, tietze_simplify,
                              triangular_inverse, verify_hom)
from gridbraid.presentation import strip_presentation
from gridbraid.q2 import ra_graph
from gridbraid.words import Presentation, canonical, commutator, free_reduce, inverse


def test_normal_form_examples():
    g = ra_graph(5)
    assert raag_normal_form((1, 3, -1, -3), g) == ()
    assert len(raag_normal_form((1, 2, -1, -2), g)) == 4
    with pytest.raises(ValueError):
        raag_normal_form((9,), g)


def test_normal_form_shuffles():
    g = ra_graph(7)
    rng = random.Random(3)
    for _ in range(200):
        w = tuple(rng.choice([1, 2, 3, 4, 5, 6]) * rng.choice([1, -1]) for _ in range(10))
        a = raag_normal_form(w, g)
        # swap a random adjacent commuting pair; the element stays the same
        v = list(w)
        k = rng.randrange(9)
        if g.has_edge(abs(v[k]), abs(v[k + 1])):
            v[k], v[k + 1] = v[k + 1], v[k]
        b = raag_normal_form(tuple(v), g)
        assert len(a) == len(b)
        assert raag_equal(a, b, g)
        assert raag_normal_form(a + inverse(a), g) == ()


def test_free_group_limit():
    g = nx.empty_graph([1, 2, 3])
    w = (1, 2, -1, 3)
    assert raag_normal_form(w, g) == free_reduce(w)


def test_as_raag():
    ok, g = as_raag(strip_presentation(5))
    assert ok
    assert sorted(map(sorted, g.edges)) == [[1, 3], [1, 4], [2, 4]]
    ok, bad = as_raag(Presentation(["b", "a", "c"], [(1, 2, -1, -3)]))
    assert not ok and bad == (1, 2, -1, -3)


def test_tietze_script_two_hole_p3():
    # b2 a2 b2^-1 c2^-1 on (a2, b1, b2, c2)
    pres = Presentation(["a2", "b1", "b2", "c2"], [(3, 1, -3, -4)])
    out = tietze_simplify(pres, [("c2", "b2 a2 b2^-1 c2^-1")])
    assert out.generators == ["a2", "b1", "b2"]
    assert out.relators == []


def test_tietze_kills_single_letter():
    pres = Presentation(["a", "b"], [(2,), (1, 2, -1, -2)])
    out = tietze_simplify(pres, auto=True)
    assert out.ngens == 1 and out.relators == []


def test_tietze_keeps_abelianization():
    pres = Presentation(["a", "b", "c"], [(1, 2, -3), (1, 1, 2, 2)])
    before = abelianization(pres)
    after = abelianization(tietze_simplify(pres, auto=True))
    assert before == after == (1, [2])


def test_verify_hom():
    g = ra_graph(5)
    pres = raag_presentation(g)
    ident = {i: (i,) for i in range(1, 5)}
    assert verify_hom(pres, g, ident)[0]
    assert verify_hom(pres, g, {i: () for i in range(1, 5)})[0]
    ok, bad = verify_hom(Presentation(["x", "y"], [commutator((1,), (2,))]), g, {1: (1,), 2: (2,)})
    assert not ok and bad
    with pytest.raises(ValueError):
        verify_hom(pres, g, {1: (1,)})


def test_triangular_inverse():
    f = {i: tuple(range(2, i + 1)) if i > 1 else (1,) for i in range(1, 7)}
    # g_i -> h2 ... h_i, with g_1 -> h1
    inv = triangular_inverse(f)
    for i in range(3, 7):
        assert inv[i] == (-(i - 1), i)
    ident = {i: (i,) for i in f}
    assert compose(f, inv) == ident and compose(inv, f) == ident
    with pytest.raises(ValueError):
        triangular_inverse({1: (2,), 2: (1,)})


def test_abelianization():
    assert abelianization(raag_presentation(ra_graph(6))) == (5, [])
    assert abelianization(Presentation(["a"], [(1, 1, 1)])) == (0, [3])


def test_knuth_bendix_proves_consequence():
    # in Z^2, [a^2, b] is trivial
    sysm = knuth_bendix(2, [canonical(commutator((1,), (2,)))], max_len=6, max_rules=100, time_limit=5)
    assert sysm.proves_trivial(commutator((1, 1), (2,)))
    assert not sysm.proves_trivial((1,))
