from itertools import combinations
from math import gcd
import random

from gridbraid.snf import rank_and_torsion, smith_diagonal


def det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(len(m)))


def determinantal_factors(rows):
    """Invariant factors from gcds of k x k minors."""
    m, n = len(rows), len(rows[0])
    d = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, det([[rows[i][j] for j in cs] for i in rs]))
        if g == 0:
            break
        d.append(g)
    return [d[k] // d[k - 1] for k in range(1, len(d))]


def as_sparse(rows):
    return {i: {j: x for j, x in enumerate(r) if x} for i, r in enumerate(rows)}


def test_examples():
    assert smith_diagonal({0: {0: 2}, 1: {1: 3}}) == [1, 6]
    assert smith_diagonal({0: {0: 1, 1: -1}, 1: {0: -1, 1: 1}}) == [1]
    assert rank_and_torsion({0: {0: 4, 1: 6}}) == (1, [2])
    assert smith_diagonal({}) == []


def test_against_minors():
    rng = random.Random(7)
    for _ in range(150):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.choice([0, 0, 1, -1, 2, 3, -4]) for _ in range(n)] for _ in range(m)]
        assert smith_diagonal(as_sparse(rows)) == determinantal_factors(rows)


def test_boundary_like_matrix():
    # boundary of a triangle's edges: rank 2, no torsion
    rows = [[-1, 1, 0], [0, -1, 1], [-1, 0, 1]]
    assert rank_and_torsion(as_sparse(rows)) == (2, [])
