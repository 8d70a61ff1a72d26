"""Discrete gradient field on the configuration complex.

A vertex ingredient v is blocked when v = 1 or the tree edge [v-1, v]
meets another ingredient.  The first unblocked vertex or tree edge (merged
order, tree edge [v-1, v] keyed by v) decides the cell's fate: a vertex
gets matched up, an edge gets matched down.  Cells with a square or with
nothing movable are critical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .configspace import Cell, ConfigComplex, cell_dimension, cell_vertices

CRITICAL, REDUNDANT, COLLAPSIBLE = "critical", "redundant", "collapsible"


@dataclass(frozen=True)
class MorseClass:
    kind: str
    partner: Cell | None = None
    moved: tuple | None = None  # moved vertex (v,) or moved edge (v-1, v)


def is_blocked(c: Cell, v: int) -> bool:
    if (v,) not in c:
        raise ValueError(f"{v} is not a vertex ingredient of {c}")
    if v == 1:
        return True
    others = cell_vertices(c) - {v}
    return (v - 1) in others


def movable(c: Cell) -> list[tuple[int, tuple]]:
    """N(c): unblocked vertices and tree-edge ingredients with their keys, sorted."""
    if any(len(x) == 4 for x in c):
        return []
    occupied = cell_vertices(c)
    out = []
    for x in c:
        if len(x) == 1:
            v = x[0]
            if v != 1 and (v - 1) not in occupied:
                out.append((v, x))
        elif x[1] == x[0] + 1:
            out.append((x[1], x))
    out.sort()
    keys = [k for k, _ in out]
    assert len(keys) == len(set(keys)), f"merged key collision in {c}"
    return out


def classify(c: Cell) -> MorseClass:
    n_ = movable(c)
    if not n_:
        return MorseClass(CRITICAL)
    _, x = n_[0]
    if len(x) == 1:
        v = x[0]
        partner = tuple(sorted([y for y in c if y != x] + [(v - 1, v)]))
        return MorseClass(REDUNDANT, partner, x)
    partner = tuple(sorted([y for y in c if y != x] + [(x[1],)]))
    return MorseClass(COLLAPSIBLE, partner, x)


class MorseField:
    """Classification of every cell of a complex, computed once."""

    def __init__(self, cx: ConfigComplex):
        self.complex = cx
        self.kind: list[list[str]] = []
        self.partner: list[list[int | None]] = []
        for d, cs in enumerate(cx.cells):
            ks, ps = [], []
            for c in cs:
                m = classify(c)
                ks.append(m.kind)
                if m.partner is None:
                    ps.append(None)
                else:
                    pd = d + 1 if m.kind == REDUNDANT else d - 1
                    ps.append(cx.index[pd][m.partner])
            self.kind.append(ks)
            self.partner.append(ps)

    def critical(self, d: int) -> list[int]:
        if d >= len(self.kind):
            return []
        return [k for k, t in enumerate(self.kind[d]) if t == CRITICAL]

    def critical_counts(self) -> list[int]:
        return [len(self.critical(d)) for d in range(len(self.kind))]

    def validate(self) -> dict:
        cx = self.complex
        problems = []
        # (a) matching is an involution pairing up non-critical cells
        for d, ks in enumerate(self.kind):
            for k, t in enumerate(ks):
                if t == CRITICAL:
                    continue
                pd = d + 1 if t == REDUNDANT else d - 1
                back = self.partner[pd][self.partner[d][k]]
                want = COLLAPSIBLE if t == REDUNDANT else REDUNDANT
                if back != k or self.kind[pd][self.partner[d][k]] != want:
                    problems.append(("matching", d, cx.cells[d][k]))
        # (b) unique critical vertex
        crit0 = [cx.cells[0][k] for k in self.critical(0)]
        base = tuple((v,) for v in range(1, cx.n + 1))
        if crit0 != [base]:
            problems.append(("critical_vertex", 0, crit0))
        # (c) no cycles among redundant cells
        for d in range(len(self.kind) - 1):
            cyc = self._find_cycle(d)
            if cyc:
                problems.append(("cycle", d, cyc))
        # (d) Morse-Euler
        counts = self.critical_counts()
        alt = sum((-1) ** d * x for d, x in enumerate(counts))
        chi = cx.euler_characteristic()
        if alt != chi:
            problems.append(("euler", alt, chi))
        return {"ok": not problems, "critical_counts": counts, "euler_characteristic": chi,
                "problems": [repr(x) for x in problems[:10]]}

    def _successors(self, d: int, k: int) -> list[int]:
        cx = self.complex
        up = cx.cells[d + 1][self.partner[d][k]]
        out = []
        for f, _, _ in cx.codim1_faces(up):
            fid = cx.index[d][f]
            if fid != k and self.kind[d][fid] == REDUNDANT:
                out.append(fid)
        return out

    def _find_cycle(self, d: int):
        state = {}
        for start, t in enumerate(self.kind[d]):
            if t != REDUNDANT or start in state:
                continue
            stack = [(start, iter(self._successors(d, start)))]
            state[start] = 1
            path = [start]
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    stack.pop()
                    path.pop()
                    state[node] = 2
                    continue
                s = state.get(nxt)
                if s == 1:
                    return [self.complex.cells[d][x] for x in path[path.index(nxt):]]
                if s is None:
                    state[nxt] = 1
                    path.append(nxt)
                    stack.append((nxt, iter(self._successors(d, nxt))))
        return None


def epsilon_cell(ambient, n: int, i: int, r: int, s: int, t: int) -> Cell:
    """The critical 1-cell with deleted edge e_i and vertices packed into its three gaps."""
    from .grid import vertical_partner

    m = ambient.p * ambient.q
    if i % ambient.p == 0 or i > ambient.p * (ambient.q - 1):
        raise ValueError(f"no deleted edge e_{i}")
    j = vertical_partner(i, ambient.p)
    if r + s + t != n - 1 or not (0 <= r < i and 0 <= s < j - i and 0 <= t <= m - j):
        raise ValueError(f"no critical cell eps_{i}({r},{s},{t}) for n={n}")
    vs = list(range(1, r + 1)) + list(range(i + 1, i + s + 1)) + list(range(j + 1, j + t + 1))
    return tuple(sorted([(v,) for v in vs] + [(i, j)]))


def epsilon_params(c: Cell, p: int) -> tuple[int, int, int, int]:
    """(i, r, s, t) for a 1-cell whose only edge is a deleted edge."""
    (i, j), = [x for x in c if len(x) == 2]
    vs = [x[0] for x in c if len(x) == 1]
    r = sum(v < i for v in vs)
    s = sum(i < v < j for v in vs)
    t = sum(v > j for v in vs)
    return i, r, s, t
