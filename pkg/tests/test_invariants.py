from itertools import combinations, product
from math import comb

import networkx as nx
import pytest

from gridbraid.configspace import enumerate_config
from gridbraid.grid import build_grid
from gridbraid.invariants import (add_isolated, b_graph, betti, build_graph, cat_of, check_dd_zero,
                                  clique_vector, cliques, parse_dot, tc_r, to_dot)
from gridbraid.q2 import ra_graph


def brute_tc(g, r):
    cs = cliques(g)
    best = 0
    for combo in product(cs, repeat=r):
        if not frozenset.intersection(*combo):
            best = max(best, sum(map(len, combo)))
    return best


def test_b_graph():
    assert b_graph(1).number_of_edges() == 1
    for k in range(6):
        g = b_graph(k)
        assert g.number_of_nodes() == 2 * k
        assert g.number_of_edges() == k * (k + 1) // 2
    assert add_isolated(3, b_graph(0)).number_of_nodes() == 3


def test_ra_graph_cliques_brute():
    for n in range(2, 11):
        want = [0] * n
        for k in range(n):
            for sub in combinations(range(1, n), k):
                if all(b - a >= 2 for a, b in zip(sub, sub[1:])):
                    want[k] += 1
        want = [x for x in want if x]
        assert clique_vector(ra_graph(n)) == want
        assert want == [comb(n - k, k) for k in range(len(want))]


def test_two_hole_cliques():
    for p in range(3, 9):
        v = clique_vector(add_isolated(3, b_graph(p - 3)))
        assert v[1] == 2 * p - 3
        assert (v + [0])[2] == (p - 3) * (p - 2) // 2
    assert clique_vector(nx.Graph()) == [1]


def test_cat_and_tc_examples():
    g = add_isolated(3, b_graph(1))
    assert cat_of(g) == 2
    assert tc_r(g, 2) == (3, True)
    assert tc_r(build_graph("ra:5"), 2) == (4, True)
    assert tc_r(add_isolated(1), 3) == (2, True)
    assert tc_r(add_isolated(4), 3) == (3, True)
    with pytest.raises(ValueError):
        tc_r(g, 1)


@pytest.mark.parametrize("spec", ["ra:5", "ra:6", "iso:3+B:2", "B:3", "iso:2"])
def test_tc_matches_brute_force(spec):
    g = build_graph(spec)
    for r in (2, 3):
        assert tc_r(g, r)[0] == brute_tc(g, r)


def test_tc_monotone():
    g = build_graph("ra:8")
    vals = [tc_r(g, r)[0] for r in range(2, 6)]
    assert all(b >= a + cat_of(g) - 1 for a, b in zip(vals, vals[1:]))


def test_tc_fallback_flagged():
    g = build_graph("ra:9")
    val, exact = tc_r(g, 2, limit=5)
    assert not exact and val <= tc_r(g, 2)[0]


def test_build_graph_and_dot(tmp_path):
    g = build_graph("iso:3+B:2")
    assert g.number_of_nodes() == 7 and g.number_of_edges() == 3
    f = tmp_path / "g.dot"
    f.write_text(to_dot(g))
    h = build_graph(str(f))
    assert nx.is_isomorphic(g, h)
    assert sorted(parse_dot("graph { a -- b -- c; d; }").edges) == [("a", "b"), ("b", "c")]
    with pytest.raises(ValueError):
        build_graph("tree:3")


@pytest.mark.parametrize("p,q,n,want", [
    (3, 2, 4, [1, 3]),
    (4, 2, 6, [1, 5, 1]),
    (5, 2, 5, [1, 4, 3]),
    (2, 2, 2, [1, 1]),
])
def test_betti_examples(p, q, n, want):
    cx = enumerate_config(build_grid((p, q)), n)
    b = betti(cx)
    assert b["betti"] == want
    assert not any(b["torsion"])
    assert sum((-1) ** k * x for k, x in enumerate(b["betti"])) == cx.euler_characteristic()


def test_betti_of_grid_graph():
    # one particle: the grid graph itself
    from gridbraid.configspace import graph_config

    cx = graph_config(build_grid((3, 3)), 1)
    assert betti(cx)["betti"] == [1, 4]


@pytest.mark.parametrize("p,q,n", [(3, 3, 3), (4, 3, 5), (3, 3, 5)])
def test_dd_zero(p, q, n):
    assert check_dd_zero(enumerate_config(build_grid((p, q)), n)) == []
