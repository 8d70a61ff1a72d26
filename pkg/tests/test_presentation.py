import random

import pytest

from gridbraid.configspace import enumerate_config
from gridbraid.grid import build_grid
from gridbraid.groups import abelianization
from gridbraid.invariants import betti
from gridbraid.morse import CRITICAL, MorseField
from gridbraid.presentation import (MorsePresentation, Reducer, closed_form_relator,
                                    eps_word_to_generators, relator_case, strip_cell_counts,
                                    strip_presentation, ux_presentation)
from gridbraid.words import canonical


def test_square_2x2_is_z():
    pres = ux_presentation(2, 2, 2, include_squares=False)
    assert pres.ngens == 1 and pres.relators == []


def test_two_hole_p4_shape():
    pres = ux_presentation(6, 4, 2)
    assert pres.ngens == 7 and len(pres.relators) == 3
    for r in pres.relators:
        assert len(r) == 4 and len({abs(x) for x in r}) == 3


@pytest.mark.parametrize("p,q", [(2, 3), (3, 3), (4, 2)])
def test_almost_full_is_free(p, q):
    pres = ux_presentation(p * q - 1, p, q)
    assert pres.ngens == (p - 1) * (q - 1) and pres.relators == []


def test_single_letters():
    cx = enumerate_config(build_grid((3, 3)), 4)
    red = Reducer(cx)
    f = red.field
    g = cx.ambient
    for k, c in enumerate(cx.cells[1]):
        (e,) = [x for x in c if len(x) == 2]
        got = red.reduce_word((k + 1,))
        if g.is_tree_edge(e):
            assert got == ()
        else:
            assert len(got) == 1 and f.kind[1][abs(got[0]) - 1] == CRITICAL


def test_deleted_edge_cells_reduce_to_their_generator():
    # e_i(r,s,t) with vertices not packed still reduces to eps_i(r,s,t)
    cx = enumerate_config(build_grid((4, 2)), 4)
    mp = MorsePresentation(cx)
    g = cx.ambient
    for k, c in enumerate(cx.cells[1]):
        (e,) = [x for x in c if len(x) == 2]
        if not g.is_deleted_edge(e):
            continue
        i, j = e
        vs = [x[0] for x in c if len(x) == 1]
        r, s, t = sum(v < i for v in vs), sum(i < v < j for v in vs), sum(v > j for v in vs)
        want = (mp.gen_index(i, r, s, t),)
        assert mp.to_generators(mp.reducer.reduce_word((k + 1,))) == want


@pytest.mark.parametrize("p,q,n", [(3, 3, 4), (4, 2, 5), (3, 3, 6)])
def test_strategies_agree(p, q, n):
    cx = enumerate_config(build_grid((p, q)), n)
    mp = MorsePresentation(cx)
    rng = random.Random(1)
    for c in mp.rel_cells:
        a = mp.raw_relator(c, "leftmost")
        assert a == mp.raw_relator(c, "rightmost")
        assert a == mp.raw_relator(c, "random", seed=rng.randrange(1000))
        assert a == mp.raw_relator(c)
    # random words too, and reduction is idempotent
    red = mp.reducer
    m = len(cx.cells[1])
    for _ in range(30):
        w = tuple(rng.choice([1, -1]) * rng.randint(1, m) for _ in range(8))
        a = red.reduce_word(w, "leftmost")
        assert a == red.reduce_word(w, "rightmost") == red.reduce_fast(w)
        assert red.reduce_word(a) == a


def test_unknown_strategy():
    red = Reducer(enumerate_config(build_grid((2, 2)), 2, False))
    with pytest.raises(ValueError):
        red.reduce_word((1,), "middle")


@pytest.mark.parametrize("p,q,n", [(3, 3, 7), (3, 3, 4), (4, 2, 5), (4, 3, 6)])
def test_relators_follow_closed_forms(p, q, n):
    mp = MorsePresentation(enumerate_config(build_grid((p, q)), n))
    amb = mp.complex.ambient
    for c in mp.rel_cells:
        case, params = relator_case(mp.complex.cells[2][c], amb)
        want = eps_word_to_generators(closed_form_relator(case, params, amb), mp)
        assert canonical(mp.raw_relator(c)) == want


def test_closed_form_shapes():
    g = build_grid((4, 2))
    w1 = closed_form_relator(1, (1, 2, 0, 0, 1, 0, 0))
    assert [s for _, s in w1] == [1, 1, -1, -1] and w1[0][0] == w1[2][0]
    w3 = closed_form_relator(3, (1, 5, 0, 0, 0, 0, 0))
    assert w3[0][0] == w3[2][0] and w3[1][0] == w3[3][0]
    assert closed_form_relator(4, (3, 1, 0, 2), g) == [((3, 1, 0, 2), 1)]
    with pytest.raises(ValueError):
        closed_form_relator(4, (3, 1, 1, 1), g)
    with pytest.raises(ValueError):
        closed_form_relator(1, (1, 5, 0, 0, 0, 0, 0), g)


@pytest.mark.parametrize("p,q,n", [(3, 3, 4), (4, 2, 5), (3, 2, 3)])
def test_abelianization_matches_h1(p, q, n):
    cx = enumerate_config(build_grid((p, q)), n)
    rank, tors = abelianization(ux_presentation(n, p, q))
    h = betti(cx)
    assert rank == h["betti"][1]
    assert tors == h["torsion"][1]


def test_strip():
    pres = strip_presentation(4)
    assert pres.generators == ["x1", "x2", "x3"] and pres.relators == [(1, 3, -1, -3)]
    assert strip_cell_counts(4) == [1, 3, 1]
    assert strip_presentation(2).relators == []
    assert len(strip_presentation(6).relators) == 6


def test_strip_counts_by_strings():
    from itertools import product

    for n in range(2, 10):
        counts = {}
        for bits in product("01", repeat=n - 1):
            s = "".join(bits)
            if "00" not in s:
                counts[s.count("0")] = counts.get(s.count("0"), 0) + 1
        assert strip_cell_counts(n) == [counts[d] for d in range(len(counts))]
