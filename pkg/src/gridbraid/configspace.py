"""Discrete configuration spaces of n particles on the grid.

A cell is a tuple of pairwise-disjoint ambient cells sorted by smallest
vertex.  Its dimension is the sum of the ingredient dimensions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .grid import AmbientComplex, cell_dim, vertical_partner

Cell = tuple  # tuple of ingredient tuples


def cell_dimension(c: Cell) -> int:
    return sum(cell_dim(x) for x in c)


def cell_vertices(c: Cell) -> set:
    return {v for x in c for v in x}


def is_valid_cell(c: Cell) -> bool:
    seen = set()
    for x in c:
        for v in x:
            if v in seen:
                return False
            seen.add(v)
    return list(c) == sorted(c)


def _reorder_sign(items: list) -> tuple[Cell, int]:
    """Sort (ingredient, dim) pairs and return the Koszul sign of the sort."""
    order = sorted(range(len(items)), key=lambda k: items[k][0])
    sign = 1
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            if order[a] > order[b] and items[order[a]][1] % 2 and items[order[b]][1] % 2:
                sign = -sign
    return tuple(items[k][0] for k in order), sign


def _ingredient_faces(x: tuple) -> list[tuple[tuple, int, str]]:
    """Faces of a single ingredient with the coefficient of its own boundary.

    A square (i, i+1, j-1, j) is oriented as I x J with I running from the
    i side to the i+1 side and J from the bottom edge to the top edge.
    """
    if len(x) == 2:
        a, b = x
        return [((a,), -1, "low"), ((b,), 1, "high")]
    if len(x) == 4:
        i, i1, j1, j = x
        return [
            ((i, i1), 1, "bottom"),
            ((i1, j1), 1, "right"),
            ((j1, j), 1, "top"),
            ((i, j), -1, "left"),
        ]
    return []


@dataclass
class ConfigComplex:
    ambient: AmbientComplex
    n: int
    include_squares: bool
    cells: list = field(default_factory=list)  # cells[d] = list of Cell
    index: list = field(default_factory=list)  # index[d] = {Cell: id}

    @property
    def dim(self) -> int:
        return len(self.cells) - 1

    def counts(self) -> list[int]:
        return [len(x) for x in self.cells]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(x) for d, x in enumerate(self.cells))

    def id_of(self, c: Cell) -> int:
        return self.index[cell_dimension(c)][c]

    def __contains__(self, c) -> bool:
        d = cell_dimension(c)
        return d < len(self.index) and c in self.index[d]

    def signed_faces(self, c: Cell) -> list[tuple[Cell, int, int, str]]:
        """Codimension-one faces with boundary coefficients.

        Uses the graded product rule over positive-dimensional ingredients in
        cell order, then the sign of re-sorting the face's ingredients.
        Returns (face, coefficient, ingredient position, which face).
        """
        out = []
        before = 0
        for k, x in enumerate(c):
            d = cell_dim(x)
            if d == 0:
                continue
            for y, coef, which in _ingredient_faces(x):
                items = [(z, cell_dim(z)) for z in c[:k]] + [(y, d - 1)]
                items += [(z, cell_dim(z)) for z in c[k + 1:]]
                face, s = _reorder_sign(items)
                out.append((face, coef * s * (-1) ** before, k, which))
            before += d
        return out

    def codim1_faces(self, c: Cell) -> list[tuple[Cell, int, str]]:
        return [(f, k, w) for f, _, k, w in self.signed_faces(c)]

    def boundary_cycle(self, c: Cell) -> list[tuple[Cell, int]]:
        """Closed walk around a 2-cell as (face, sign) pairs.

        Starts at the lexicographically least face, walking in the
        direction that gives it sign +1.
        """
        if cell_dimension(c) != 2:
            raise ValueError("boundary_cycle needs a 2-cell")
        faces = {w: (f, s) for f, s, k, w in self.signed_faces(c)}
        if len(faces) == 4 and "bottom" in faces:
            cyc = [faces["bottom"], faces["right"], faces["top"], faces["left"]]
        else:
            sf = self.signed_faces(c)
            # two edge factors E1, E2: order E2-low, E1-high, E2-high, E1-low
            k1 = min(k for _, _, k, _ in sf)
            pick = {(k == k1, w): (f, s) for f, s, k, w in sf}
            cyc = [pick[(False, "low")], pick[(True, "high")], pick[(False, "high")], pick[(True, "low")]]
        return canonical_cycle(cyc)

    def to_dict(self, full: bool = False) -> dict:
        d = {
            "p": self.ambient.p,
            "q": self.ambient.q,
            "n": self.n,
            "squares": self.include_squares,
            "counts": self.counts(),
            "euler_characteristic": self.euler_characteristic(),
        }
        if full:
            d["cells"] = [[[list(x) for x in c] for c in cs] for cs in self.cells]
        return d

    def to_json(self, full: bool = False) -> str:
        return json.dumps(self.to_dict(full), indent=2)


def canonical_cycle(cyc: list) -> list:
    k = min(range(len(cyc)), key=lambda a: cyc[a][0])
    if cyc[k][1] < 0:
        cyc = [(f, -s) for f, s in reversed(cyc)]
        k = len(cyc) - 1 - k
    return cyc[k:] + cyc[:k]


def ambient_ingredients(ambient: AmbientComplex, include_squares: bool) -> dict:
    """Ambient cells grouped by their smallest vertex."""
    by_min: dict[int, list] = {}
    cells = list(ambient.vertices) + list(ambient.tree_edges) + list(ambient.deleted_edges)
    if include_squares:
        cells += list(ambient.squares)
    for x in cells:
        by_min.setdefault(x[0], []).append(x)
    for v in by_min:
        by_min[v].sort()
    return by_min


def enumerate_config(ambient: AmbientComplex, n: int, include_squares: bool = True) -> ConfigComplex:
    m = ambient.p * ambient.q
    if n < 2 or n >= m:
        raise ValueError(f"need 2 <= n < pq (got n={n}, pq={m})")
    return _enumerate(ambient, n, include_squares)


def graph_config(ambient: AmbientComplex, r: int) -> ConfigComplex:
    """UDConf(grid, r) for any 1 <= r < pq; the duality pairs r with pq - r."""
    m = ambient.p * ambient.q
    if not 1 <= r < m:
        raise ValueError(f"need 1 <= r < pq (got r={r}, pq={m})")
    return _enumerate(ambient, r, False)


def _enumerate(ambient: AmbientComplex, n: int, include_squares: bool) -> ConfigComplex:
    m = ambient.p * ambient.q
    by_min = ambient_ingredients(ambient, include_squares)
    found: dict[int, list] = {}
    used = [False] * (m + 2)
    chosen: list = []

    def rec(v: int, left: int, dim: int):
        if left == 0:
            found.setdefault(dim, []).append(tuple(chosen))
            return
        if v > m or m - v + 1 < left:
            return
        if not used[v]:
            for x in by_min.get(v, ()):
                if any(used[u] for u in x):
                    continue
                for u in x:
                    used[u] = True
                chosen.append(x)
                rec(v + 1, left - 1, dim + cell_dim(x))
                chosen.pop()
                for u in x:
                    used[u] = False
        rec(v + 1, left, dim)

    rec(1, n, 0)
    top = max(found)
    cells = [sorted(found.get(d, [])) for d in range(top + 1)]
    index = [{c: k for k, c in enumerate(cs)} for cs in cells]
    return ConfigComplex(ambient, n, include_squares, cells, index)


def duality(c: Cell, ambient: AmbientComplex) -> Cell:
    """Keep the edges of c and swap its vertices for the untouched ones."""
    if any(len(x) == 4 for x in c):
        raise ValueError("duality is defined for graph cells only")
    m = ambient.p * ambient.q
    touched = cell_vertices(c)
    edges = [x for x in c if len(x) == 2]
    free = [(v,) for v in range(1, m + 1) if v not in touched]
    return tuple(sorted(edges + free))


def square_corners(i: int, p: int) -> tuple:
    j = vertical_partner(i, p)
    return (i, i + 1, j - 1, j)
