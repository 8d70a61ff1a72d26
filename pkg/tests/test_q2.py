from itertools import product

import pytest

from gridbraid.groups import raag_is_identity, raag_normal_form, triangular_inverse, compose
from gridbraid.q2 import (A, E, O, Q2Params, all_eps, codified_relations, datum_words, ell,
                          eps_exists, eps_to_g, expand, family_check, g_triple, generation_check,
                          iota, lemma_bounds, normalized_data, normalized_relation, phi_check,
                          phi_compact, phi_generator, phi_images, ra_graph, rel_tuples, tuples_low,
                          tuples_odd)

CASES = [(4, 4), (5, 5), (6, 5), (7, 7), (8, 7), (8, 6), (9, 7)]


def test_small_params():
    q = Q2Params(8, 6)
    assert [q.m(j) for j in range(1, 8)] == [2, 1, 1, 0, 0, 0, 0]
    assert iota(0, 3) == 4 and iota(2, 2) == 3
    assert ell(3) == 4 and ell(4) == 4


def test_param_guards():
    with pytest.raises(ValueError):
        Q2Params(4, 5)
    with pytest.raises(ValueError):
        Q2Params(8, 5)
    assert Q2Params(7, 5).raag_range is False
    assert Q2Params(5, 5).raag_range and Q2Params(7, 6).raag_range
    assert not Q2Params(6, 5).raag_range
    with pytest.raises(ValueError):
        tuples_low(Q2Params(7, 5))


def test_g_triples_exist():
    q = Q2Params(8, 7)
    for j in range(1, 8):
        assert eps_exists(*g_triple(j, q), q)
        assert eps_to_g(*g_triple(j, q), q) == (j, 0)
    assert not eps_exists(0, 0, 7, q)


@pytest.mark.parametrize("n,p", CASES)
def test_no_low_triples(n, p):
    q = Q2Params(n, p)
    for r, s, t in all_eps(q):
        assert not (r <= q.phi and s < 2 * (q.phi - r))
        j, e = eps_to_g(r, s, t, q)
        assert j == s and e >= 0


def test_eps_to_g_example():
    assert eps_to_g(1, 2, 4, Q2Params(8, 7)) == (2, 1)
    with pytest.raises(ValueError):
        eps_to_g(0, 0, 7, Q2Params(8, 7))


@pytest.mark.parametrize("n,p", CASES)
def test_rel_tuples_brute_force(n, p):
    q = Q2Params(n, p)
    want = []
    for r, s, t, u, v in product(range(n), repeat=5):
        if r + s + t + u + v != n - 2 or t == 0 or r + v == 0:
            continue
        k = max(r, v) + max(s, u) + 2
        if k <= p - 1 and t <= 2 * (p - k):
            want.append((r, s, t, u, v))
    assert sorted(rel_tuples(q)) == sorted(want)


def test_prop_tuples_example():
    q = Q2Params(8, 7)
    low = {(i, j): tup for i, j, tup in tuples_low(q)}
    assert low[(1, 3)] == (1, 1, 1, 0, 3)
    assert sum(low[(1, 3)]) == 6
    assert datum_words(normalized_relation(low[(1, 3)], q), q) == ((1,), (-3, 7))
    assert tuples_odd(q) == [(1, (1, 0, 1, 0, 4))]
    assert datum_words(normalized_relation((1, 0, 1, 0, 4), q), q) == ((1,), (7, -2))


def test_r0s0_relation():
    q = Q2Params(7, 7)
    for tup in rel_tuples(q):
        r, s, t, u, v = tup
        if r == 0 and s == 0:
            assert datum_words(normalized_relation(tup, q), q) == ((t,), (-(q.n - v - 1), q.n - 1))


def test_codified_n_equals_p():
    q = Q2Params(6, 6)
    data = codified_relations(q)
    assert data == [((i,), (-j, 5)) for i in range(1, 5) for j in range(i + 1, 5)]


def test_codified_third_family():
    q = Q2Params(8, 7)
    odd = [d for d in codified_relations(q) if d[1][0] == 7]
    assert odd == [((1,), (7, -2))]


@pytest.mark.parametrize("n,p", [(n, p) for n, p in CASES if Q2Params(n, p).raag_range])
def test_family_and_generation(n, p):
    q = Q2Params(n, p)
    assert family_check(q)["ok"]
    assert generation_check(q)["ok"]
    norm = {datum_words(d, q) for d in normalized_data(q)}
    assert set(codified_relations(q)) <= norm


def test_phi_values():
    q = Q2Params(8, 7)
    assert phi_generator(1, q) == (1,)
    assert phi_generator(3, q) == (3, 2)
    assert phi_compact(3, q) == O(3, 3, 8) + E(2, 2, 8) == (3, 2)
    # phi(g_x^-1 g_{n-1}) = A(x+1, n-1) once x >= 2phi + 1
    g = ra_graph(8)
    for x in range(3, 7):
        img = tuple(-a for a in reversed(phi_generator(x, q))) + phi_generator(7, q)
        assert raag_is_identity(img + tuple(-a for a in reversed(A(x + 1, 7, 8))), g)


@pytest.mark.parametrize("n,p", [(8, 7), (9, 7), (8, 6), (7, 7)])
def test_phi_compact_agrees_in_raag(n, p):
    q = Q2Params(n, p)
    g = ra_graph(n)
    for i in range(1, n):
        a, b = phi_generator(i, q), phi_compact(i, q)
        assert raag_is_identity(a + tuple(-x for x in reversed(b)), g)


@pytest.mark.parametrize("n,p", [(8, 7), (9, 7), (7, 6), (6, 6)])
def test_phi_triangular(n, p):
    q = Q2Params(n, p)
    f = phi_images(q)
    inv = triangular_inverse(f)
    ident = {i: (i,) for i in f}
    assert compose(f, inv) == ident and compose(inv, f) == ident


@pytest.mark.parametrize("n,p", [(5, 5), (8, 7), (9, 7), (7, 6)])
def test_relations_die_in_raag(n, p):
    q = Q2Params(n, p)
    assert phi_check(q)["ok"]
    assert lemma_bounds(q)["ok"]


def test_relation_words_are_commutators():
    q = Q2Params(8, 7)
    for d in normalized_data(q):
        w = expand(d, q)
        assert len(w) % 2 == 0 and sum(1 if x > 0 else -1 for x in w) == 0


def test_ra_graph():
    g = ra_graph(5)
    assert sorted(map(sorted, g.edges)) == [[1, 3], [1, 4], [2, 4]]
