"""Clique invariants of graphs and integer homology of configuration complexes.

Graphs are networkx graphs.  The LS-category of the RAAG classifying space
is the largest clique size; TC_r is the largest total size of r cliques
(empty ones allowed) whose common intersection is empty.
"""

from __future__ import annotations

import re
from pathlib import Path

import networkx as nx

from .configspace import ConfigComplex
from .q2 import ra_graph
from .snf import smith_diagonal

CLIQUE_LIMIT = 10**5


# ---------------------------------------------------------------------------
# graph constructors


def b_graph(k: int) -> nx.Graph:
    """B(k): vertices u_1..u_k, v_1..v_k, an edge u_i v_j whenever i <= j."""
    if k < 0:
        raise ValueError("k >= 0 required")
    g = nx.Graph()
    g.add_nodes_from([f"u{i}" for i in range(1, k + 1)] + [f"v{i}" for i in range(1, k + 1)])
    g.add_edges_from((f"u{i}", f"v{j}") for i in range(1, k + 1) for j in range(i, k + 1))
    return g


def add_isolated(k: int, g: nx.Graph | None = None) -> nx.Graph:
    """k + g: disjoint union of g with k isolated vertices z1..zk."""
    if k < 0:
        raise ValueError("k >= 0 required")
    out = nx.Graph() if g is None else g.copy()
    names = []
    i = 1
    while len(names) < k:
        if f"z{i}" not in out:
            names.append(f"z{i}")
        i += 1
    out.add_nodes_from(names)
    return out


def labeled_ra_graph(n: int) -> nx.Graph:
    g = ra_graph(n)
    return nx.relabel_nodes(g, {i: f"x{i}" for i in g.nodes})


def parse_dot(text: str) -> nx.Graph:
    """Minimal reader for undirected DOT: `a -- b;` edges and `a;` nodes."""
    body = text
    m = re.search(r"\{(.*)\}", text, re.S)
    if m:
        body = m.group(1)
    body = re.sub(r"//[^\n]*|#[^\n]*", "", body)
    body = re.sub(r"\[[^\]]*\]", "", body)
    g = nx.Graph()
    for stmt in re.split(r"[;\n]", body):
        stmt = stmt.strip()
        if not stmt or "=" in stmt:
            continue
        parts = [s.strip().strip('"') for s in stmt.split("--")]
        if any(not s for s in parts):
            raise ValueError(f"cannot parse DOT statement {stmt!r}")
        g.add_nodes_from(parts)
        for a, b in zip(parts, parts[1:]):
            if a == b:
                raise ValueError(f"loop at {a!r}")
            g.add_edge(a, b)
    return g


def to_dot(g: nx.Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.nodes:
        lines.append(f'  "{v}";')
    for a, b in g.edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def build_graph(spec: str) -> nx.Graph:
    """Graph from a spec string.

    `ra:N` ra_graph(N); `B:K` B(K); `iso:K` K isolated vertices; specs can be
    joined with `+` for disjoint unions (`iso:3+B:2`); anything else is read
    as a DOT file path.
    """
    if Path(spec).is_file():
        return parse_dot(Path(spec).read_text())
    out = nx.Graph()
    for part in spec.split("+"):
        kind, _, arg = part.strip().partition(":")
        try:
            k = int(arg)
        except ValueError:
            raise ValueError(f"bad graph spec {part!r}") from None
        if kind == "ra":
            g = labeled_ra_graph(k)
        elif kind == "B":
            g = b_graph(k)
        elif kind == "iso":
            g = add_isolated(k)
        else:
            raise ValueError(f"unknown graph kind {kind!r}")
        out = nx.disjoint_union(out, g) if out and _clash(out, g) else nx.compose(out, g)
    return out


def _clash(a: nx.Graph, b: nx.Graph) -> bool:
    return any(v in a for v in b)


# ---------------------------------------------------------------------------
# cliques and clique invariants


def cliques(g: nx.Graph) -> list[frozenset]:
    """All cliques including the empty one, smallest first."""
    return [frozenset()] + [frozenset(c) for c in nx.enumerate_all_cliques(g)]


def clique_vector(g: nx.Graph) -> list[int]:
    counts = [1]
    for c in nx.enumerate_all_cliques(g):
        k = len(c)
        while len(counts) <= k:
            counts.append(0)
        counts[k] += 1
    return counts


def cat_of(g: nx.Graph) -> int:
    return len(clique_vector(g)) - 1


def tc_r(g: nx.Graph, r: int, limit: int = CLIQUE_LIMIT) -> tuple[int, bool]:
    """(TC_r value, exact flag).

    Exhaustive branch and bound over r-multisets of cliques.  Above `limit`
    cliques only maximal cliques and their one-vertex deletions are searched
    and the value is only a lower bound.
    """
    if r < 2:
        raise ValueError("r >= 2 required")
    exact = True
    count = sum(clique_vector(g))
    if count <= limit:
        pool = cliques(g)
    else:
        exact = False
        pool = {frozenset()}
        for c in nx.find_cliques(g):
            c = frozenset(c)
            pool.add(c)
            pool.update(c - {v} for v in c)
        pool = list(pool)
    pool.sort(key=lambda c: (-len(c), sorted(map(str, c))))
    top = len(pool[0])
    best = 0

    def last(inter):
        # biggest clique missing the current intersection entirely
        for c in pool:
            if not (c & inter):
                return len(c)
        return 0

    def search(start, k, inter, total):
        nonlocal best
        if k == r - 1:
            best = max(best, total + last(inter))
            return
        for idx in range(start, len(pool)):
            c = pool[idx]
            if total + len(c) * (r - 1 - k) + top <= best:
                break
            search(idx, k + 1, c if inter is None else inter & c, total + len(c))

    search(0, 0, None, 0)
    return best, exact


# ---------------------------------------------------------------------------
# cellular homology


def boundary_matrices(cx: ConfigComplex) -> dict[int, dict]:
    """d -> sparse boundary matrix {d-cell id: {(d-1)-cell id: coefficient}}."""
    mats = {}
    for d in range(1, len(cx.cells)):
        m = {}
        for k, c in enumerate(cx.cells[d]):
            row: dict[int, int] = {}
            for face, coef, *_ in cx.signed_faces(c):
                j = cx.index[d - 1][face]
                row[j] = row.get(j, 0) + coef
            m[k] = {j: x for j, x in row.items() if x}
        mats[d] = m
    return mats


def check_dd_zero(cx: ConfigComplex, mats: dict | None = None) -> list:
    """Cells c with a nonzero coefficient in the boundary of the boundary of c."""
    mats = mats or boundary_matrices(cx)
    bad = []
    for d in range(2, len(cx.cells)):
        for k, row in mats[d].items():
            acc: dict[int, int] = {}
            for j, a in row.items():
                for i, b in mats[d - 1][j].items():
                    acc[i] = acc.get(i, 0) + a * b
            if any(acc.values()):
                bad.append((d, cx.cells[d][k]))
    return bad


def betti(cx: ConfigComplex) -> dict:
    """Integral homology: Betti numbers and torsion coefficients per degree."""
    mats = boundary_matrices(cx)
    bad = check_dd_zero(cx, mats)
    if bad:
        raise ArithmeticError(f"boundary of boundary is nonzero at {bad[0]}")
    top = len(cx.cells) - 1
    diags = {d: smith_diagonal(mats[d]) for d in range(1, top + 1)}
    ranks = {d: len(v) for d, v in diags.items()}
    betti_numbers = []
    torsion = []
    for d in range(top + 1):
        b = len(cx.cells[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        betti_numbers.append(b)
        torsion.append(sorted(x for x in diags.get(d + 1, []) if x > 1))
    while len(betti_numbers) > 1 and betti_numbers[-1] == 0 and not torsion[-1]:
        betti_numbers.pop()
        torsion.pop()
    return {"betti": betti_numbers, "torsion": torsion}

