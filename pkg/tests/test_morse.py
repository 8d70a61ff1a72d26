import pytest

from gridbraid.configspace import enumerate_config
from gridbraid.grid import build_grid
from gridbraid.morse import (COLLAPSIBLE, CRITICAL, REDUNDANT, MorseField, classify, epsilon_cell,
                             epsilon_params, is_blocked)

E1 = (1, 4)

# every cell of UDConf(2x2 grid, 2), classified by hand
HAND = {
    ((1,), (2,)): (CRITICAL, None),
    ((1,), (3,)): (REDUNDANT, ((1,), (2, 3))),
    ((1,), (4,)): (REDUNDANT, ((1,), (3, 4))),
    ((2,), (3,)): (REDUNDANT, ((1, 2), (3,))),
    ((2,), (4,)): (REDUNDANT, ((1, 2), (4,))),
    ((3,), (4,)): (REDUNDANT, ((2, 3), (4,))),
    ((1, 2), (3,)): (COLLAPSIBLE, ((2,), (3,))),
    ((1, 2), (4,)): (COLLAPSIBLE, ((2,), (4,))),
    ((1,), (2, 3)): (COLLAPSIBLE, ((1,), (3,))),
    ((2, 3), (4,)): (COLLAPSIBLE, ((3,), (4,))),
    ((1,), (3, 4)): (COLLAPSIBLE, ((1,), (4,))),
    ((2,), (3, 4)): (REDUNDANT, ((1, 2), (3, 4))),
    (E1, (2,)): (CRITICAL, None),
    (E1, (3,)): (REDUNDANT, (E1, (2, 3))),
    ((1, 2), (3, 4)): (COLLAPSIBLE, ((2,), (3, 4))),
    (E1, (2, 3)): (COLLAPSIBLE, (E1, (3,))),
}


def test_hand_classification_2x2():
    cx = enumerate_config(build_grid((2, 2)), 2, False)
    cells = [c for cs in cx.cells for c in cs]
    assert len(cells) == 16
    for c in cells:
        got = classify(c)
        assert (got.kind, got.partner) == HAND[c], c
    f = MorseField(cx)
    assert f.critical_counts() == [1, 1, 0]
    assert f.validate()["ok"]


def test_blocking():
    assert is_blocked((E1, (2,)), 2)
    assert not is_blocked((E1, (3,)), 3)
    assert is_blocked(((1,), (2,), (3,)), 1)
    with pytest.raises(ValueError):
        is_blocked(((1,), (2,)), 3)


def test_square_cells_are_critical():
    assert classify(((1, 2, 5, 6), (7,))).kind == CRITICAL


@pytest.mark.parametrize("p,q,n,chi", [(3, 2, 4, -2), (4, 2, 6, -3)])
def test_morse_euler(p, q, n, chi):
    f = MorseField(enumerate_config(build_grid((p, q)), n))
    rep = f.validate()
    assert rep["ok"], rep["problems"]
    counts = rep["critical_counts"]
    assert sum((-1) ** d * x for d, x in enumerate(counts)) == chi


@pytest.mark.parametrize("p", [3, 4, 5, 6])
def test_two_hole_generator_count(p):
    f = MorseField(enumerate_config(build_grid((p, 2)), 2 * p - 2))
    assert len(f.critical(1)) == 3 * p - 5


@pytest.mark.parametrize("p,q,n", [(3, 3, 3), (4, 3, 5), (3, 2, 3)])
def test_lemma_shapes(p, q, n):
    g = build_grid((p, q))
    cx = enumerate_config(g, n)
    f = MorseField(cx)
    for k, c in enumerate(cx.cells[1]):
        (e,) = [x for x in c if len(x) == 2]
        if g.is_deleted_edge(e):
            assert f.kind[1][k] != COLLAPSIBLE
        else:
            assert f.kind[1][k] != CRITICAL
    # squareless critical d-cells: d deleted edges and blocked vertices
    for d in range(len(cx.cells)):
        for k in f.critical(d):
            c = cx.cells[d][k]
            if any(len(x) == 4 for x in c):
                continue
            edges = [x for x in c if len(x) == 2]
            assert len(edges) == d and all(g.is_deleted_edge(e) for e in edges)
            assert all(is_blocked(c, x[0]) for x in c if len(x) == 1)


def test_epsilon_cell_round_trip():
    g = build_grid((4, 2))
    c = epsilon_cell(g, 5, 2, 1, 2, 1)
    assert c == ((1,), (2, 7), (3,), (4,), (8,))
    assert epsilon_params(c, 4) == (2, 1, 2, 1)
    with pytest.raises(ValueError):
        epsilon_cell(g, 5, 4, 0, 0, 4)
