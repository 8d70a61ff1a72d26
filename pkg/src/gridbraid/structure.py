"""End-to-end pipelines from a grid complex to a recognized group structure.

* n = pq - 1: the presentation is already free.
* q = 2, n = 2p - 2: scripted elimination of the c generators and the change
  of basis onto x_i, y_i, giving the RAAG on 3 + B(p-3).
* q = 2, p <= n <= 2p - 3: reduction to g_1..g_{n-1}, then either the
  certificate for RAAG(ra_graph(n)) (homomorphism, triangular inverse,
  Betti numbers) or a prover-driven search for a RAAG presentation.
"""

from __future__ import annotations

import networkx as nx

from .configspace import enumerate_config
from .grid import build_grid
from .groups import (as_raag, compose, knuth_bendix, simplify_to_raag, tietze_simplify,
                     triangular_inverse, verify_hom)
from .invariants import add_isolated, b_graph, betti, clique_vector
from .presentation import MorsePresentation
from .q2 import Q2Params, composite_map, phi_images, ra_graph, reduce_to_g
from .words import Presentation, canonical, commutator, substitute

# bounded prover settings that finish in seconds on the example groups
QUICK_KB = {"max_len": 8, "max_rules": 300, "time_limit": 5}
KB = {"max_len": 10, "max_rules": 1000, "time_limit": 20}


def morse_presentation(p: int, q: int, n: int, include_squares: bool = True) -> MorsePresentation:
    return MorsePresentation(enumerate_config(build_grid((p, q)), n, include_squares))


# ---------------------------------------------------------------------------
# two empty squares: n = 2p - 2 on p x 2


def missing_vertex(cell, p: int) -> int:
    """The one vertex of the 2p-vertex board that a 1-cell leaves free."""
    used = {v for x in cell for v in x}
    free = [v for v in range(1, 2 * p + 1) if v not in used]
    if len(free) != 1:
        raise ValueError("cell does not leave exactly one vertex free")
    return free[0]


def two_hole_labels(mp: MorsePresentation) -> list[str]:
    """a_i, b_i, c_i names for the generators of UX(2p-2, p x 2)."""
    cx = mp.complex
    p = cx.ambient.p
    if cx.ambient.q != 2 or cx.n != 2 * p - 2:
        raise ValueError("labels apply to n = 2p - 2 on a p x 2 board")
    out = []
    for c in mp.gen_cells:
        cell = cx.cells[1][c]
        i = next(x for x in cell if len(x) == 2)[0]
        h = missing_vertex(cell, p)
        if i == 1 and h == 2 * p - 1:
            out.append("b1")
        elif h == i - 1:
            out.append(f"a{i}")
        elif h == 2 * p - i:
            out.append(f"b{i}")
        elif h == 2 * p:
            out.append(f"c{i}")
        else:
            raise ValueError(f"unexpected generator e_{i} missing vertex {h}")
    return out


def two_hole_graph(p: int) -> nx.Graph:
    """3 + B(p - 3)."""
    return add_isolated(3, b_graph(p - 3))


def two_hole_pipeline(p: int) -> dict:
    """Presentation of B_{2p-2}(p x 2) simplified to the RAAG on 3 + B(p-3)."""
    if p < 3:
        raise ValueError("needs p >= 3")
    mp = morse_presentation(p, 2, 2 * p - 2)
    labels = two_hole_labels(mp)
    raw = mp.presentation()
    raw = Presentation(labels, raw.relators)
    pos = {lab: k + 1 for k, lab in enumerate(labels)}
    a = lambda i: pos[f"a{i}"]
    b = lambda i: pos[f"b{i}"] if i > 1 else pos["b1"]
    c = lambda i: pos[f"c{i}"]
    expected = {canonical((b(i), a(j), -b(i), -c(j))) for i in range(1, p) for j in range(max(i + 1, 2), p)}
    shape_ok = set(raw.canonical_relators()) == expected
    # c_i = b_1 a_i b_1^-1
    script = [(f"c{i}", f"b1 a{i} b1^-1 c{i}^-1") for i in range(2, p)]
    reduced = tietze_simplify(raw, script)
    # x_i = a_i, y_1 = b_1, y_i = b_i^-1 b_1
    red_pos = {lab: k + 1 for k, lab in enumerate(reduced.generators)}
    new_labels = [f"x{i}" for i in range(2, p)] + [f"y{i}" for i in range(1, p)]
    npos = {lab: k + 1 for k, lab in enumerate(new_labels)}
    images = {}
    for lab, k in red_pos.items():
        i = int(lab[1:])
        if lab[0] == "a":
            images[k] = (npos[f"x{i}"],)
        elif lab == "b1":
            images[k] = (npos["y1"],)
        else:
            images[k] = (npos["y1"], -npos[f"y{i}"])
    final = Presentation(new_labels, [canonical(substitute(r, images)) for r in reduced.relators])
    ok, graph = as_raag(final)
    target = two_hole_graph(p)
    iso = ok and nx.is_isomorphic(graph, target)
    # the composite map raw -> RAAG is a homomorphism
    raw_map = {}
    for lab, k in pos.items():
        i = int(lab[1:])
        if lab[0] == "a":
            raw_map[k] = (npos[f"x{i}"],)
        elif lab == "b1":
            raw_map[k] = (npos["y1"],)
        elif lab[0] == "b":
            raw_map[k] = (npos["y1"], -npos[f"y{i}"])
        else:
            raw_map[k] = (npos["y1"], npos[f"x{i}"], -npos["y1"])
    hom_ok = ok and verify_hom(raw, graph, raw_map)[0]
    return {
        "p": p,
        "raw": raw,
        "raw_shape_ok": shape_ok,
        "reduced": reduced,
        "final": final,
        "raag": ok,
        "graph": graph if ok else None,
        "isomorphic": iso,
        "hom_ok": hom_ok,
        "complex": mp.complex,
    }


# ---------------------------------------------------------------------------
# q = 2 with p <= n <= 2p - 3


def q2_certificate(n: int, p: int, homology: bool = True) -> dict:
    """Evidence that B_n(p x 2) is RAAG(ra_graph(n)).

    Every relator of the Morse presentation dies under eps -> g -> h, the
    change of basis g -> h has a triangular inverse, and (optionally) the
    Betti numbers of the complex equal the clique counts of ra_graph(n).
    """
    q = Q2Params(n, p)
    q.require_raag_range()
    mp = morse_presentation(p, 2, n)
    pres = mp.presentation()
    graph = ra_graph(n)
    hom_ok, bad = verify_hom(pres, graph, composite_map(mp, q))
    phi = phi_images(q)
    try:
        inv = triangular_inverse(phi)
        ident = {i: (i,) for i in phi}
        inverse_ok = compose(phi, inv) == ident and compose(inv, phi) == ident
    except ValueError:
        inverse_ok = False
    out = {"n": n, "p": p, "generators": pres.ngens, "relators": len(pres.relators),
           "hom_ok": hom_ok, "failures": bad[:5], "inverse_ok": inverse_ok}
    if homology:
        b = betti(mp.complex)
        out["betti"] = b["betti"]
        out["torsion_free"] = not any(b["torsion"])
        out["betti_ok"] = b["betti"] == clique_vector(graph) and out["torsion_free"]
    out["ok"] = hom_ok and inverse_ok and out.get("betti_ok", True)
    return out


def g_presentation(n: int, p: int) -> Presentation:
    mp = morse_presentation(p, 2, n)
    return reduce_to_g(mp, Q2Params(n, p))["presentation"]


def h_presentation(n: int, p: int) -> Presentation:
    """The g presentation rewritten through phi onto h_1..h_{n-1}."""
    gp = g_presentation(n, p)
    imgs = phi_images(Q2Params(n, p))
    rels = [canonical(substitute(r, imgs)) for r in gp.relators]
    return Presentation([f"h{i}" for i in range(1, n)], [r for r in rels if r])


def raag_search(n: int, p: int, kb=None) -> dict:
    """Prover-driven search for a RAAG presentation of B_n(p x 2)."""
    return simplify_to_raag(h_presentation(n, p), **(kb or QUICK_KB))


def prune_to(pres: Presentation, target, kb=None) -> dict:
    """Drop relators outside `target`, each proven from the target relators.

    target is a list of relator words, all of which must occur in pres.
    Succeeds when every other relator is derived, so both presentations
    define the same group.
    """
    kb = kb or KB
    have = set(pres.canonical_relators())
    want = {canonical(r) for r in target}
    missing = sorted(want - have)
    extra = sorted(have - want)
    sysm = knuth_bendix(pres.ngens, sorted(want), **kb) if extra else None
    unproved = [r for r in extra if not sysm.proves_trivial(r)]
    return {"ok": not missing and not unproved, "missing": missing, "extra": extra, "unproved": unproved,
            "presentation": Presentation(list(pres.generators), sorted(want))}


# the commutations listed for B_7(5 x 2), as (U, W) with U & W in g-words
B7_COMMUTATIONS = [
    ((1,), (6, -2)), ((1,), (6, -4)),
    ((2,), (-3, 6)), ((2,), (-4, 6)), ((2,), (-5, 6)),
    ((3,), (6, -4)),
    ((4,), (-5, 6)),
]


def examples_b5() -> dict:
    res = raag_search(5, 4)
    edges = sorted(tuple(sorted(e)) for e in res["graph"].edges) if res["graph"] is not None else None
    return {"ok": res["ok"] and edges == [(1, 3), (2, 4)], "edges": edges, "steps": res["steps"]}


def examples_b6() -> dict:
    res = raag_search(6, 5)
    ok = res["ok"] and nx.utils.graphs_equal(res["graph"], ra_graph(6))
    edges = sorted(tuple(sorted(e)) for e in res["graph"].edges) if res["graph"] is not None else None
    return {"ok": ok, "edges": edges, "steps": res["steps"]}


def examples_b7() -> dict:
    gp = g_presentation(7, 5)
    target = [commutator(u, w) for u, w in B7_COMMUTATIONS]
    res = prune_to(gp, target)
    res["g_relators"] = len(gp.relators)
    return res


# ---------------------------------------------------------------------------
# generic entry point used by the command line


def simplify(p: int, q: int, n: int, include_squares: bool = True) -> dict:
    """Pick the strongest available route and report the result."""
    if include_squares and q == 2 and n == 2 * p - 2 and p >= 3:
        res = two_hole_pipeline(p)
        return {"method": "two-hole script", "presentation": res["final"], "raag": res["raag"],
                "graph": res["graph"], "certified": res["isomorphic"] and res["hom_ok"]}
    if include_squares and q == 2 and p >= 3 and p <= n <= 2 * p - 3:
        qp = Q2Params(n, p)
        if qp.raag_range:
            cert = q2_certificate(n, p)
            pres = Presentation([f"x{i}" for i in range(1, n)],
                                [canonical(commutator((a,), (b,))) for a, b in sorted(ra_graph(n).edges)])
            return {"method": "q2 certificate", "presentation": pres, "raag": cert["ok"],
                    "graph": ra_graph(n) if cert["ok"] else None, "certified": cert["ok"], "details": cert}
        res = raag_search(n, p)
        if res["ok"]:
            return {"method": "prover search", "presentation": res["presentation"], "raag": True,
                    "graph": res["graph"], "certified": True}
        return {"method": "g basis", "presentation": g_presentation(n, p), "raag": False,
                "graph": None, "certified": False}
    mp = morse_presentation(p, q, n, include_squares)
    pres = tietze_simplify(mp.presentation(), auto=True)
    ok, graph = as_raag(pres)
    return {"method": "tietze", "presentation": pres, "raag": ok, "graph": graph if ok else None,
            "certified": ok}
