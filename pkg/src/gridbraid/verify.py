"""Verification suites: reproducible pass/fail tables over desk-scale instances.

Each suite returns a report dict with one row per check.  Every complex a
suite builds is also run through the gradient-field validator and the
boundary-of-boundary test, so those two checks cover all instances.
"""

from __future__ import annotations

import random

from .configspace import cell_dimension, duality, enumerate_config, graph_config
from .grid import build_grid
from .groups import abelianization, raag_presentation
from .invariants import add_isolated, betti, cat_of, check_dd_zero, clique_vector, labeled_ra_graph, tc_r
from .morse import CRITICAL, MorseField, epsilon_params
from .presentation import (STRATEGIES, MorsePresentation, closed_form_relator, eps_word_to_generators,
                           relator_case, strip_cell_counts, strip_presentation)
from .q2 import Q2Params, family_check, generation_check, lemma_bounds, phi_check, ra_graph
from .structure import examples_b5, examples_b6, examples_b7, q2_certificate, two_hole_graph, two_hole_pipeline
from .words import canonical

SCHEMA_VERSION = 1
SUITES = ("thm1.2", "thm1.4", "thm1.6", "examples1.7", "cor2.2", "morse", "duality", "reduction")


class Run:
    """Collects check rows and the complexes built along the way."""

    def __init__(self, suite: str, seed: int = 0):
        self.suite = suite
        self.seed = seed
        self.rows: list[dict] = []
        self._complexes: dict = {}
        self._presentations: dict = {}

    def check(self, name: str, instance, ok: bool, detail=None):
        row = {"check": name, "instance": instance, "pass": bool(ok)}
        if detail is not None:
            row["detail"] = detail
        self.rows.append(row)
        return ok

    def complex(self, p: int, q: int, n: int, squares: bool = True):
        key = (p, q, n, squares)
        if key not in self._complexes:
            self._complexes[key] = enumerate_config(build_grid((p, q)), n, squares)
        return self._complexes[key]

    def morse(self, p: int, q: int, n: int, squares: bool = True) -> MorsePresentation:
        key = (p, q, n, squares)
        if key not in self._presentations:
            self._presentations[key] = MorsePresentation(self.complex(*key), validate=False)
        return self._presentations[key]

    def adopt(self, cx):
        key = (cx.ambient.p, cx.ambient.q, cx.n, cx.include_squares)
        self._complexes.setdefault(key, cx)

    def finish(self) -> dict:
        for (p, q, n, sq), cx in sorted(self._complexes.items()):
            inst = _inst(p, q, n, sq)
            field = self._presentations[(p, q, n, sq)].field if (p, q, n, sq) in self._presentations else None
            rep = (field or MorseField(cx)).validate()
            self.check("gradient field valid", inst, rep["ok"], rep["problems"] or None)
            bad = check_dd_zero(cx)
            self.check("boundary of boundary is zero", inst, not bad, [repr(b) for b in bad[:3]] or None)
        ok = all(r["pass"] for r in self.rows)
        return {"schema_version": SCHEMA_VERSION, "suite": self.suite, "seed": self.seed, "pass": ok,
                "checks": self.rows}


def _inst(p, q, n, squares=True):
    return f"{'UX' if squares else 'UDConf'}(n={n}, {p}x{q})"


# ---------------------------------------------------------------------------
# suites


def suite_thm12(run: Run, max_pq: int = 16):
    for p in range(2, max_pq // 2 + 1):
        for q in range(2, max_pq // p + 1):
            n = p * q - 1
            cx = run.complex(p, q, n)
            mp = run.morse(p, q, n)
            pres = mp.presentation()
            rank = (p - 1) * (q - 1)
            inst = _inst(p, q, n)
            run.check("complex is 1-dimensional", inst, cx.dim == 1, cx.counts())
            run.check("no relators", inst, not pres.relators, len(pres.relators))
            run.check("generators = (p-1)(q-1) = 1 - chi", inst,
                      pres.ngens == rank == 1 - cx.euler_characteristic(),
                      {"generators": pres.ngens, "chi": cx.euler_characteristic()})
            run.check("abelianization free of rank (p-1)(q-1)", inst, abelianization(pres) == (rank, []))


def suite_duality(run: Run, grids=((2, 2), (3, 2), (3, 3))):
    for p, q in grids:
        amb = build_grid((p, q))
        m = p * q
        cxs = {r: graph_config(amb, r) for r in range(1, m)}
        for r in range(1, m):
            cx, dual = cxs[r], cxs[m - r]
            inst = f"UDConf({p}x{q}, r={r})"
            problems = []
            for d, cells in enumerate(cx.cells):
                for c in cells:
                    e = duality(c, amb)
                    if cell_dimension(e) != d or e not in dual:
                        problems.append(("image", c))
                        continue
                    if duality(e, amb) != c:
                        problems.append(("involution", c))
                    faces = {duality(f, amb) for f, *_ in cx.codim1_faces(c)}
                    if faces != {f for f, *_ in dual.codim1_faces(e)}:
                        problems.append(("faces", c))
            run.check("duality is a face-preserving involution", inst, not problems, problems[:3] or None)
            run.check("cell counts match r <-> pq - r", inst, cx.counts() == dual.counts(),
                      {"r": cx.counts(), "pq-r": dual.counts()})


def suite_morse(run: Run, max_pq: int = 12):
    for p in range(2, max_pq // 2 + 1):
        for q in range(2, max_pq // p + 1):
            for n in range(2, p * q):
                for sq in (False, True):
                    run.complex(p, q, n, sq)
    # a few larger ones named in the examples
    run.complex(7, 2, 8)
    run.complex(4, 2, 6)


def _relator_matches(mp: MorsePresentation, squares_only: bool = False) -> tuple[int, list]:
    cx = mp.complex
    amb = cx.ambient
    bad = []
    count = 0
    for c in mp.rel_cells:
        cell = cx.cells[2][c]
        case, params = relator_case(cell, amb)
        if squares_only and case != 4:
            continue
        count += 1
        want = eps_word_to_generators(closed_form_relator(case, params, amb), mp)
        got = canonical(mp.raw_relator(c))
        if got != want:
            bad.append({"cell": repr(cell), "case": case})
    return count, bad


def suite_reduction(run: Run, n_random: int = 100):
    # relators in closed form
    for p in range(3, 7):
        res = two_hole_pipeline(p)
        run.adopt(res["complex"])
        run.check("relators are b_i a_j b_i^-1 c_j^-1", _inst(p, 2, 2 * p - 2), res["raw_shape_ok"],
                  {"relators": len(res["raw"].relators)})
    mp = run.morse(3, 3, 7)
    count, bad = _relator_matches(mp)
    run.check("relators match the two-edge closed forms", _inst(3, 3, 7), not bad and count > 0,
              {"relators": count, "mismatches": bad[:3]})
    for p, n in [(3, 3), (4, 4), (4, 5), (5, 5), (5, 6), (5, 7), (6, 7)]:
        mp = run.morse(p, 2, n)
        count, bad = _relator_matches(mp)
        kinds = {relator_case(mp.complex.cells[2][c], mp.complex.ambient)[0] for c in mp.rel_cells}
        single = any(relator_case(mp.complex.cells[2][c], mp.complex.ambient)[1][0] % p == p - 1
                     for c in mp.rel_cells if relator_case(mp.complex.cells[2][c], mp.complex.ambient)[0] == 4)
        run.check("relators match closed forms incl. squares", _inst(p, 2, n), not bad and 4 in kinds and single,
                  {"relators": count, "cases": sorted(kinds), "mismatches": bad[:3]})
    # reduced forms of non-critical 1-cells
    rng = random.Random(run.seed)
    for key in [(4, 2, 6), (7, 2, 8), (3, 3, 7), (3, 3, 4)]:
        mp = run.morse(*key)
        cx, red, field = mp.complex, mp.reducer, mp.field
        pool = [k for k, t in enumerate(field.kind[1]) if t != CRITICAL]
        picks = rng.sample(pool, min(n_random, len(pool)))
        bad = []
        for k in picks:
            cell = cx.cells[1][k]
            word = red.reduce_word((k + 1,), "leftmost")
            edge = next(x for x in cell if len(x) == 2)
            if amb_is_tree(cx, edge):
                ok = word == ()
            else:
                ok = len(word) == 1 and word[0] > 0 and \
                    epsilon_params(cx.cells[1][word[0] - 1], cx.ambient.p) == epsilon_params(cell, cx.ambient.p)
            if not ok:
                bad.append(repr(cell))
        run.check("non-critical 1-cells reduce to their closed form", _inst(*key),
                  not bad, {"sampled": len(picks), "seed": run.seed, "failures": bad[:3]})
    # the reduced word does not depend on the order of rewriting
    for key in [(4, 2, 6), (7, 2, 8)]:
        mp = run.morse(*key)
        diff = []
        for c in mp.rel_cells:
            words = {mp.raw_relator(c, strategy=s, seed=run.seed) for s in STRATEGIES}
            words.add(mp.raw_relator(c))
            if len(words) != 1:
                diff.append(c)
        run.check("leftmost, rightmost and random rewriting agree", _inst(*key), not diff,
                  {"relators": len(mp.rel_cells), "seed": run.seed})


def amb_is_tree(cx, edge) -> bool:
    return cx.ambient.is_tree_edge(edge)


def suite_thm14(run: Run, ps=range(3, 7)):
    for p in ps:
        res = two_hole_pipeline(p)
        run.adopt(res["complex"])
        inst = _inst(p, 2, 2 * p - 2)
        raw, final = res["raw"], res["final"]
        run.check("3p - 5 generators", inst, raw.ngens == 3 * p - 5, raw.ngens)
        run.check("Tietze moves keep the abelianization", inst,
                  abelianization(raw) == abelianization(res["reduced"]) == abelianization(final))
        run.check("simplified presentation is a RAAG on 3 + B(p-3)", inst, res["isomorphic"], final.to_text())
        run.check("a, b, c -> x, y map kills every relator", inst, res["hom_ok"])
        b = betti(res["complex"])
        want = clique_vector(two_hole_graph(p))
        run.check("Betti numbers = clique counts of 3 + B(p-3)", inst,
                  b["betti"] == want and not any(b["torsion"]), {"betti": b["betti"], "cliques": want})


STRIP_RANGE = range(2, 9)
THM16_CASES = ((4, 4), (5, 5), (6, 6), (6, 7), (7, 8), (7, 9))  # (p, n)


def suite_thm16(run: Run, cases=THM16_CASES, max_p: int = 9):
    for n in STRIP_RANGE:
        sp = strip_presentation(n)
        target = raag_presentation(ra_graph(n), sp.generators)
        run.check("strip presentation is RAAG(ra_graph(n))", f"strip(n={n})",
                  sp.generators == [f"x{i}" for i in range(1, n)]
                  and sp.canonical_relators() == target.canonical_relators())
        run.check("strip cell counts", f"strip(n={n})", strip_cell_counts(n) == _strip_counts_brute(n))
    for p, n in cases:
        cert = q2_certificate(n, p)
        inst = _inst(p, 2, n)
        run.check("Morse presentation maps into RAAG(ra_graph(n))", inst, cert["hom_ok"],
                  {"generators": cert["generators"], "relators": cert["relators"]})
        run.check("phi has a triangular inverse", inst, cert["inverse_ok"])
        run.check("Betti numbers = C(n-k, k)", inst, cert["betti_ok"],
                  {"betti": cert["betti"], "cliques": clique_vector(ra_graph(n))})
    for p in range(3, max_p + 1):
        for n in range(p, 2 * p - 4):
            q = Q2Params(n, p)
            inst = f"q2(n={n}, p={p})"
            for name, rep in (("explicit tuples give the stated commutations", family_check(q)),
                              ("generators and codified relations", generation_check(q)),
                              ("phi kills every normalized relation", phi_check(q)),
                              ("support bounds for phi images", lemma_bounds(q))):
                run.check(name, inst, rep["ok"], {"checked": rep["checked"], "failures": rep["failures"][:3]})


def _strip_counts_brute(n: int) -> list[int]:
    from itertools import product

    counts: dict[int, int] = {}
    for bits in product("01", repeat=n - 1):
        s = "".join(bits)
        if "00" not in s:
            counts[s.count("0")] = counts.get(s.count("0"), 0) + 1
    return [counts[d] for d in sorted(counts)]


def suite_examples(run: Run):
    b5 = examples_b5()
    run.check("B5(4x2) is the RAAG with edges x1x3, x2x4", "B5(4x2)", b5["ok"], {"edges": b5["edges"]})
    b6 = examples_b6()
    run.check("B6(5x2) is RAAG(ra_graph(6))", "B6(5x2)", b6["ok"], {"edges": b6["edges"]})
    b7 = examples_b7()
    run.check("B7(5x2) relators are the seven listed commutations", "B7(5x2)", b7["ok"],
              {"g_relators": b7["g_relators"], "derived": [list(r) for r in b7["extra"]],
               "missing": [list(r) for r in b7["missing"]]})
    run.check("B7(5x2) abelianizes to Z^6", "B7(5x2)", abelianization(b7["presentation"]) == (6, []))


def cor22_tables(rs=(2, 3, 4), max_p: int = 8, max_n: int = 12):
    """(part, instance, r, graph) rows with expected cat and TC_r."""
    rows = []
    for p in range(2, max_p + 1):
        for q in range(2, p + 1):
            k = (p - 1) * (q - 1)
            g = add_isolated(k)
            for r in rs:
                want = r - 1 if p == q == 2 else r
                rows.append((1, f"UC({p * q - 1}, {p}x{q})", r, g, 1, want))
    for p in range(2, max_p + 1):
        g = add_isolated(1) if p == 2 else two_hole_graph(p)
        cat = min(2, p // 2)
        for r in rs:
            want = {2: r - 1, 3: r, 4: 2 * r - 1}.get(p, 2 * r)
            rows.append((2, f"UC({2 * p - 2}, {p}x2)", r, g, cat, want))
    for n in range(2, max_n + 1):
        m, e = divmod(n, 2)
        g = labeled_ra_graph(n)
        for r in rs:
            rows.append((3, f"UC({n}, p x 2), p >= {n}", r, g, m, r * m - 1 + e))
    return rows


def suite_cor22(run: Run):
    for part, inst, r, g, cat, want in cor22_tables():
        got_cat = cat_of(g)
        got, exact = tc_r(g, r)
        run.check(f"part {part}: cat and TC_{r}", inst, exact and got_cat == cat and got == want,
                  {"cat": got_cat, "TC": got, "expected": [cat, want]})


_SUITES = {
    "thm1.2": suite_thm12,
    "thm1.4": suite_thm14,
    "thm1.6": suite_thm16,
    "examples1.7": suite_examples,
    "cor2.2": suite_cor22,
    "morse": suite_morse,
    "duality": suite_duality,
    "reduction": suite_reduction,
}


def run_suite(name: str, seed: int = 0, **kw) -> dict:
    if name not in _SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    run = Run(name, seed)
    _SUITES[name](run, **kw)
    return run.finish()
