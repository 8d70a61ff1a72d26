"""Group-theoretic tools on presentations: RAAG word problem, Tietze moves,
RAAG recognition, homomorphism checks, triangular inverses, abelianization
and a bounded rewriting prover for relator consequences."""

from __future__ import annotations

import time
from collections import deque

import networkx as nx

from .snf import rank_and_torsion
from .words import (Presentation, canonical, commutator, cyclic_reduce, exponent_sums,
                    free_reduce, inverse, parse_word, substitute)

# ---------------------------------------------------------------------------
# right-angled Artin groups
#
# A RAAG is described by a networkx graph whose nodes are 1..k, matching the
# generator indices of the words.


def ra_commutes(graph: nx.Graph, a: int, b: int) -> bool:
    return a != b and graph.has_edge(a, b)


def raag_normal_form(w, graph: nx.Graph) -> tuple:
    """Geodesic representative of w in RAAG(graph); empty iff w is trivial."""
    out: list[int] = []
    for x in w:
        g = abs(x)
        if g not in graph:
            raise ValueError(f"letter {x} is not a vertex of the graph")
        k = len(out) - 1
        while k >= 0:
            y = out[k]
            if y == -x:
                del out[k]
                break
            if not ra_commutes(graph, g, abs(y)):
                k = -1
                break
            k -= 1
        else:
            k = -1
        if k == -1:
            out.append(x)
    return tuple(out)


def raag_is_identity(w, graph: nx.Graph) -> bool:
    return not raag_normal_form(w, graph)


def raag_equal(u, v, graph: nx.Graph) -> bool:
    return raag_is_identity(tuple(u) + inverse(v), graph)


def raag_support(w, graph: nx.Graph) -> set[int]:
    return {abs(x) for x in raag_normal_form(w, graph)}


def raag_presentation(graph: nx.Graph, labels=None) -> Presentation:
    nodes = sorted(graph.nodes)
    if labels is None:
        labels = [f"x{v}" for v in nodes]
    rels = [canonical(commutator((a,), (b,))) for a, b in graph.edges]
    return Presentation(list(labels), sorted(rels))


# ---------------------------------------------------------------------------
# Tietze moves


def eliminate(pres: Presentation, gen: int, rel_index: int) -> Presentation:
    """Remove generator gen using relator rel_index, in which it occurs once."""
    r = cyclic_reduce(pres.relators[rel_index])
    hits = [k for k, x in enumerate(r) if abs(x) == gen]
    if len(hits) != 1:
        raise ValueError(f"generator {pres.generators[gen - 1]} occurs {len(hits)} times in the relator")
    k = hits[0]
    rot = r[k:] + r[:k]  # gen^e . rest = 1
    rest = rot[1:]
    value = inverse(rest) if rot[0] > 0 else rest
    images = {}
    for g in range(1, pres.ngens + 1):
        if g == gen:
            images[g] = value
        else:
            images[g] = (g,)
    # renumber so gen disappears
    renum = {g: (g if g < gen else g - 1) for g in range(1, pres.ngens + 1) if g != gen}
    def ren(w):
        return tuple(renum[abs(x)] * (1 if x > 0 else -1) for x in w)
    rels = []
    for idx, rr in enumerate(pres.relators):
        if idx == rel_index:
            continue
        rels.append(ren(cyclic_reduce(substitute(rr, images))))
    gens = [lab for g, lab in enumerate(pres.generators, 1) if g != gen]
    return Presentation(gens, rels)


def tietze_simplify(pres: Presentation, script=(), auto: bool = False, growth: int = 16) -> Presentation:
    """Free/cyclic reduction, empty-relator removal, scripted eliminations and
    an optional bounded pass eliminating generators that occur once somewhere.

    script items are (generator label, relator) pairs; the relator is given
    as text over the generator labels (matched up to canonical form) or as
    an index into the current relator list.
    """
    cur = Presentation(list(pres.generators), [cyclic_reduce(r) for r in pres.relators])
    cur = _drop_empty(cur)
    for lab, rel in script:
        if lab not in cur.generators:
            raise ValueError(f"no generator {lab!r} to eliminate")
        gen = cur.generators.index(lab) + 1
        if isinstance(rel, int):
            idx = rel
        else:
            want = canonical(parse_word(rel, cur.generators))
            idx = next((k for k, r in enumerate(cur.relators) if canonical(r) == want), None)
            if idx is None:
                raise ValueError(f"relator for {lab!r} not found")
        cur = _drop_empty(eliminate(cur, gen, idx))
    if auto:
        budget = growth * max(1, sum(len(r) for r in pres.relators))
        progress = True
        while progress:
            progress = False
            for idx, r in enumerate(cur.relators):
                for x in r:
                    if sum(abs(y) == abs(x) for y in r) == 1:
                        cand = _drop_empty(eliminate(cur, abs(x), idx))
                        if sum(len(s) for s in cand.relators) <= budget:
                            cur = cand
                            progress = True
                            break
                if progress:
                    break
    return Presentation(cur.generators, [canonical(r) for r in cur.relators])


def _drop_empty(pres: Presentation) -> Presentation:
    seen = set()
    rels = []
    for r in pres.relators:
        r = cyclic_reduce(r)
        c = canonical(r)
        if r and c not in seen:
            seen.add(c)
            rels.append(r)
    return Presentation(pres.generators, rels)


def change_basis(pres: Presentation, images: dict, new_labels) -> Presentation:
    """Rewrite relators through old generator -> word in new generators.

    The caller is responsible for the map being an automorphism of the free
    group (e.g. triangular with unit pivots)."""
    rels = [canonical(substitute(r, images)) for r in pres.relators]
    return Presentation(list(new_labels), [r for r in rels if r])


# ---------------------------------------------------------------------------
# recognizing RAAG presentations


def commutator_pair(r) -> tuple[int, int] | None:
    """(a, b) if r is cyclically a commutator of two distinct generator letters."""
    r = cyclic_reduce(r)
    if len(r) != 4:
        return None
    for k in range(4):
        w = r[k:] + r[:k]
        if w[2] == -w[0] and w[3] == -w[1] and abs(w[0]) != abs(w[1]):
            a, b = sorted((abs(w[0]), abs(w[1])))
            return a, b
    return None


def as_raag(pres: Presentation):
    """(True, graph) if every relator is a generator commutator, else (False, witness)."""
    g = nx.Graph()
    g.add_nodes_from(range(1, pres.ngens + 1))
    for r in pres.relators:
        if not cyclic_reduce(r):
            continue
        pair = commutator_pair(r)
        if pair is None:
            return False, r
        g.add_edge(*pair)
    return True, g


def labeled_graph(graph: nx.Graph, labels) -> nx.Graph:
    return nx.relabel_nodes(graph, {k: labels[k - 1] for k in graph.nodes})


# ---------------------------------------------------------------------------
# maps between groups


def verify_hom(pres: Presentation, graph: nx.Graph, images: dict) -> tuple[bool, list]:
    """Every relator must die in RAAG(graph) under generator -> word."""
    missing = [g for g in range(1, pres.ngens + 1) if g not in images]
    if missing:
        raise ValueError(f"map incomplete: generators {missing} have no image")
    bad = []
    for r in pres.relators:
        if not raag_is_identity(substitute(r, images), graph):
            bad.append(r)
    return not bad, bad


def triangular_inverse(images: dict) -> dict:
    """Inverse of g_i -> u h_i v with u, v in h_1..h_{i-1}."""
    inv: dict[int, tuple] = {}
    for i in sorted(images):
        w = tuple(images[i])
        hits = [k for k, x in enumerate(w) if abs(x) >= i]
        if len(hits) != 1 or w[hits[0]] != i:
            raise ValueError(f"image of generator {i} has no unit pivot h_{i}")
        k = hits[0]
        u, v = w[:k], w[k + 1:]
        inv[i] = free_reduce(inverse(substitute(u, inv)) + (i,) + inverse(substitute(v, inv)))
    return inv


def compose(f: dict, g: dict) -> dict:
    """(f after g): x -> f(g(x))."""
    return {k: substitute(w, f) for k, w in g.items()}


def abelianization(pres: Presentation) -> tuple[int, list[int]]:
    mat = {}
    for k, r in enumerate(pres.relators):
        row = {j: x for j, x in enumerate(exponent_sums(r, pres.ngens)) if x}
        if row:
            mat[k] = row
    rk, tors = rank_and_torsion(mat)
    return pres.ngens - rk, tors


# ---------------------------------------------------------------------------
# bounded Knuth-Bendix completion
#
# Used as a one-sided prover: if a word rewrites to the empty word then it
# is trivial in the group.  Failing to rewrite proves nothing.


def _shortlex_key(w, order):
    return (len(w), [order[x] for x in w])


class RewritingSystem:
    def __init__(self, rules: dict, order: dict):
        self.rules = rules
        self.order = order
        self.lengths = sorted({len(k) for k in rules})

    def reduce(self, w) -> tuple:
        """Leftmost rewriting with a stack: push letters, check rule suffixes."""
        rules, lengths = self.rules, self.lengths
        todo = list(reversed(free_reduce(w)))
        out: list[int] = []
        while todo:
            x = todo.pop()
            if out and out[-1] == -x:
                out.pop()
                continue
            out.append(x)
            for L in lengths:
                if L > len(out):
                    break
                rhs = rules.get(tuple(out[-L:]))
                if rhs is not None:
                    del out[-L:]
                    todo.extend(reversed(rhs))
                    break
        return tuple(out)

    def proves_trivial(self, w) -> bool:
        return not self.reduce(w)


def knuth_bendix(ngens: int, relators, max_len: int = 12, max_rules: int = 3000,
                 time_limit: float = 60.0, gen_order=None) -> RewritingSystem:
    """Bounded completion under shortlex.  Sound for word problem proofs."""
    if gen_order is None:
        gen_order = list(range(1, ngens + 1))
    order = {}
    for k, g in enumerate(gen_order):
        order[g] = 2 * k
        order[-g] = 2 * k + 1
    rules: dict[tuple, tuple] = {}
    sysm = RewritingSystem(rules, order)
    pending: deque = deque()

    def orient(a, b):
        if _shortlex_key(a, order) < _shortlex_key(b, order):
            a, b = b, a
        return a, b

    for r in relators:
        r = cyclic_reduce(r)
        if not r:
            continue
        for w in (r, inverse(r)):
            for k in range(len(w)):
                rot = w[k:] + w[:k]
                h = (len(rot) + 1) // 2
                pending.append((rot[:h], inverse(rot[h:])))

    start = time.monotonic()
    while pending:
        if time.monotonic() - start > time_limit or len(rules) >= max_rules:
            break
        a, b = pending.popleft()
        sysm.lengths = sorted({len(k) for k in rules})
        a, b = sysm.reduce(a), sysm.reduce(b)
        if a == b:
            continue
        lhs, rhs = orient(a, b)
        if len(lhs) > max_len:
            continue
        # drop rules made redundant by the new one
        for k in [k for k in rules if _contains(k, lhs)]:
            del rules[k]
        rules[lhs] = rhs
        # overlaps with the built-in cancellation x x^-1 -> 1
        pending.append((free_reduce(rhs + (-lhs[-1],)), lhs[:-1]))
        pending.append((free_reduce((-lhs[0],) + rhs), lhs[1:]))
        sysm.lengths = sorted({len(k) for k in rules})
        # critical pairs with every rule (both orders)
        for l2, r2 in list(rules.items()):
            pending.extend(_overlaps(lhs, rhs, l2, r2))
            if l2 != lhs:
                pending.extend(_overlaps(l2, r2, lhs, rhs))
    sysm.lengths = sorted({len(k) for k in rules})
    return sysm


def _contains(big, small) -> bool:
    if big == small or len(small) > len(big):
        return False
    L = len(small)
    return any(big[i:i + L] == small for i in range(len(big) - L + 1))


def _overlaps(l1, r1, l2, r2):
    out = []
    # suffix of l1 equal to prefix of l2
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            out.append((free_reduce(r1 + l2[k:]), free_reduce(l1[:-k] + r2)))
    # l2 inside l1
    L = len(l2)
    for i in range(1, len(l1) - L):
        if l1[i:i + L] == l2:
            out.append((r1, free_reduce(l1[:i] + r2 + l1[i + L:])))
    return out


def prune_redundant(pres: Presentation, order=None, **kb) -> tuple[Presentation, list]:
    """Drop relators that the rewriting prover derives from the remaining ones.

    Candidates are tried in the given order (default: longest first).  Each
    removal is justified by a completed proof, so the group is unchanged.
    """
    rels = [canonical(r) for r in pres.relators if cyclic_reduce(r)]
    rels = list(dict.fromkeys(rels))
    if order is None:
        order = sorted(range(len(rels)), key=lambda k: (-len(rels[k]), k))
    alive = set(range(len(rels)))
    removed = []
    for k in order:
        others = [rels[j] for j in sorted(alive) if j != k]
        sysm = knuth_bendix(pres.ngens, others, **kb)
        if sysm.proves_trivial(rels[k]):
            alive.discard(k)
            removed.append(rels[k])
    return Presentation(list(pres.generators), [rels[j] for j in sorted(alive)]), removed


def raag_by_proof(pres: Presentation, **kb):
    """Try to show pres defines RAAG(E) where E is the set of generator pairs
    the prover shows to commute.  Succeeds when every relator also dies in
    RAAG(E): then the identity on generators is an isomorphism both ways.
    Returns (ok, graph, leftover relators)."""
    sysm = knuth_bendix(pres.ngens, pres.relators, **kb)
    g = nx.Graph()
    g.add_nodes_from(range(1, pres.ngens + 1))
    for a in range(1, pres.ngens + 1):
        for b in range(a + 1, pres.ngens + 1):
            if sysm.proves_trivial(commutator((a,), (b,))):
                g.add_edge(a, b)
    left = [r for r in pres.relators if not raag_is_identity(r, g)]
    return not left, g, left


def rename_commutator_arguments(pres: Presentation, graph: nx.Graph):
    """Nielsen renaming for relators [a, W] where W mentions some generator x
    exactly once and x occurs nowhere else: introduce W as the new x.

    Returns (new presentation, images old gen -> new word) or None."""
    rels = [raag_normal_form(cyclic_reduce(r), graph) for r in pres.relators]
    rels = [cyclic_reduce(r) for r in rels]
    for idx, r in enumerate(rels):
        if not r or commutator_pair(r):
            continue
        split = _as_generator_commutator(r)
        if split is None:
            continue
        a, W = split
        for pos, x in enumerate(W):
            g = abs(x)
            if g == a or sum(abs(y) == g for y in W) != 1:
                continue
            elsewhere = any(abs(y) == g for j, s in enumerate(rels) if j != idx for y in s)
            if elsewhere or graph.degree(g):
                continue
            # new generator y := W (with x appearing with sign); solve for x
            u, v = W[:pos], W[pos + 1:]
            xval = free_reduce(inverse(u) + (g,) + inverse(v))
            if x < 0:
                xval = inverse(xval)
            images = {h: (h,) for h in range(1, pres.ngens + 1)}
            images[g] = xval
            new_rels = [canonical(substitute(s, images)) for s in pres.relators]
            return Presentation(list(pres.generators), new_rels), images, g, W
    return None


def _as_generator_commutator(r):
    """(a, W) with r cyclically equal to a W a^-1 W^-1 for a generator letter a > 0."""
    n = len(r)
    if n % 2:
        return None
    m = (n - 2) // 2
    for w in (r, inverse(r)):
        for k in range(n):
            rot = w[k:] + w[:k]
            a = rot[0]
            if a < 0:
                continue
            W = rot[1:1 + m]
            if rot[1 + m] == -a and rot[2 + m:] == inverse(W):
                return a, W
    return None


def simplify_to_raag(pres: Presentation, max_rounds: int = 5, **kb):
    """Alternate prover-found commutations with Nielsen renamings until the
    presentation is visibly a RAAG.

    Returns a dict with ok, graph, the final presentation and the accumulated
    change of basis (old generator -> word in new generators)."""
    images = {h: (h,) for h in range(1, pres.ngens + 1)}
    cur = pres
    steps = []
    for _ in range(max_rounds):
        ok, graph, left = raag_by_proof(cur, **kb)
        if ok:
            final = raag_presentation(graph, cur.generators)
            return {"ok": True, "graph": graph, "presentation": final, "basis": images, "steps": steps}
        nxt = rename_commutator_arguments(cur, graph)
        if nxt is None:
            return {"ok": False, "graph": graph, "presentation": cur, "basis": images,
                    "steps": steps, "leftover": left}
        cur, img, g, W = nxt
        images = {h: substitute(w, img) for h, w in images.items()}
        steps.append((g, W))
        cur = Presentation(cur.generators, [r for r in cur.relators if r])
    return {"ok": False, "graph": None, "presentation": cur, "basis": images, "steps": steps}
