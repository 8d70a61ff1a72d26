"""Grid graph on a p x q board with its zigzag spanning tree.

Vertices are numbered along the snake path: the bottom row runs left to
right, the next one right to left, and so on.  Every ambient cell is
stored as the sorted tuple of its vertex numbers:

    vertex  (v,)
    edge    (a, b)          a < b
    square  (i, i+1, j-1, j) with j the vertical partner of i
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class GridSpec:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValueError(f"grid needs p, q >= 2 (got p={self.p}, q={self.q})")


def vertex_number(col: int, row: int, p: int) -> int:
    """Snake number of the vertex at (col, row), both 1-based, row 1 at the bottom."""
    if row % 2 == 1:
        return (row - 1) * p + col
    return (row - 1) * p + (p - col + 1)


def vertex_position(v: int, p: int) -> tuple[int, int]:
    """Inverse of vertex_number: (col, row)."""
    row = (v - 1) // p + 1
    k = v - (row - 1) * p
    col = k if row % 2 == 1 else p - k + 1
    return col, row


def vertical_partner(i: int, p: int, q: int | None = None) -> int:
    """The vertex directly above i."""
    if i < 1 or (q is not None and i > p * (q - 1)):
        raise ValueError(f"vertex {i} has no vertex above it")
    return 2 * p * (-(-i // p)) - i + 1


def cell_dim(cell: tuple) -> int:
    return {1: 0, 2: 1, 4: 2}[len(cell)]


@dataclass(frozen=True)
class AmbientComplex:
    spec: GridSpec

    @property
    def p(self):
        return self.spec.p

    @property
    def q(self):
        return self.spec.q

    @cached_property
    def vertices(self) -> list[tuple]:
        return [(v,) for v in range(1, self.p * self.q + 1)]

    @cached_property
    def tree_edges(self) -> list[tuple]:
        return [(i, i + 1) for i in range(1, self.p * self.q)]

    @cached_property
    def deleted_edges(self) -> list[tuple]:
        p, q = self.p, self.q
        return [(i, vertical_partner(i, p)) for i in range(1, p * (q - 1) + 1) if i % p]

    @cached_property
    def squares(self) -> list[tuple]:
        return [(i, i + 1, j - 1, j) for i, j in self.deleted_edges]

    @cached_property
    def _deleted_index(self) -> dict:
        return {e: e[0] for e in self.deleted_edges}

    def is_tree_edge(self, e: tuple) -> bool:
        return len(e) == 2 and e[1] == e[0] + 1 and 1 <= e[0] < self.p * self.q

    def is_deleted_edge(self, e: tuple) -> bool:
        return e in self._deleted_index

    def deleted_index(self, e: tuple) -> int:
        """i for the deleted edge e_i = [i, j]."""
        return self._deleted_index[e]

    def square_edges(self, i: int) -> list[tuple]:
        """Bottom, right, top and left edges of the square keyed by i."""
        j = vertical_partner(i, self.p)
        return [(i, i + 1), (i + 1, j - 1), (j - 1, j), (i, j)]

    def edge_key(self, e: tuple) -> int:
        if not self.is_tree_edge(e):
            raise ValueError(f"{list(e)} is not a tree edge")
        return e[1]

    def to_dict(self) -> dict:
        edges = [{"edge": list(e), "kind": "tree"} for e in self.tree_edges]
        edges += [{"edge": list(e), "kind": "deleted", "index": e[0]} for e in self.deleted_edges]
        return {
            "p": self.p,
            "q": self.q,
            "vertices": [v for (v,) in self.vertices],
            "edges": edges,
            "squares": [list(s) for s in self.squares],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self) -> str:
        lines = [f"graph grid_{self.p}x{self.q} {{"]
        for (v,) in self.vertices:
            c, r = vertex_position(v, self.p)
            lines.append(f'  {v} [pos="{c},{r}!"];')
        for a, b in self.tree_edges:
            lines.append(f"  {a} -- {b};")
        for a, b in self.deleted_edges:
            lines.append(f"  {a} -- {b} [style=dashed];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_grid(spec: GridSpec | tuple) -> AmbientComplex:
    if not isinstance(spec, GridSpec):
        spec = GridSpec(*spec)
    return AmbientComplex(spec)
