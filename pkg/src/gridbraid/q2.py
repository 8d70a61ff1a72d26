"""Braid groups on a p x 2 grid with p <= n <= 2p-3.

Unified generators eps(r, s, t), reduced generators g_1..g_{n-1}, the
relation tuples and their normalized commutation data, the change of basis
phi onto h_1..h_{n-1}, and a scripted reduction of the raw Morse
presentation to the g basis.

Generator g_j is the integer j in words; h_j likewise in h-words.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .groups import raag_normal_form, raag_support
from .words import Presentation, canonical, commutator, conj, free_reduce, inverse, power, substitute


@dataclass(frozen=True)
class Q2Params:
    n: int
    p: int

    def __post_init__(self):
        if self.p < 3 or not (self.p <= self.n <= 2 * self.p - 3):
            raise ValueError(f"need 3 <= p <= n <= 2p-3 (got n={self.n}, p={self.p})")

    @property
    def phi(self) -> int:
        return self.n - self.p

    @property
    def raag_range(self) -> bool:
        """True when n <= 2p-5 or n = p, where the RAAG statements apply."""
        return self.n <= 2 * self.p - 5 or self.n == self.p

    def require_raag_range(self):
        if not self.raag_range:
            raise ValueError(f"needs n <= 2p-5 or n = p (got n={self.n}, p={self.p})")

    def m(self, j: int) -> int:
        return max(0, self.phi - j // 2)


def iota(a: int, b: int) -> int:
    return max(a, b) + 1


def ell(i: int) -> int:
    return 2 * ((i + 1) // 2)


def eps_exists(r: int, s: int, t: int, q: Q2Params) -> bool:
    if r < 0 or t < 0 or s <= 0 or r + s + t != q.n - 1:
        return False
    k = iota(r, t)
    return k <= q.p - 1 and s <= 2 * (q.p - k)


def all_eps(q: Q2Params) -> list[tuple[int, int, int]]:
    n = q.n
    return [(r, s, n - 1 - r - s) for r in range(n) for s in range(1, n - r)
            if eps_exists(r, s, n - 1 - r - s, q)]


def g_triple(j: int, q: Q2Params) -> tuple[int, int, int]:
    m = q.m(j)
    return (m, j, q.n - 1 - j - m)


def step_ok(s: int, t: int, u: int, q: Q2Params) -> bool:
    """Conditions under which eps(s+1, t, u) = eps(s, t, u+1)^{g_{n-1}}."""
    return (s >= 0 and u >= 0 and t > 0 and s + t + u == q.n - 2
            and iota(s, u) <= q.p - 2 and t <= 2 * (q.p - 1 - iota(s, u)))


def eps_to_g(r: int, s: int, t: int, q: Q2Params, replay: bool = True) -> tuple[int, int]:
    """(j, e) with eps(r, s, t) = g_j conjugated e times by g_{n-1}."""
    if not eps_exists(r, s, t, q):
        raise ValueError(f"eps({r},{s},{t}) does not exist for n={q.n}, p={q.p}")
    e = r - q.m(s)
    if e < 0:
        raise AssertionError(f"eps({r},{s},{t}) has r below m_s")
    if replay:
        a, c = r, t
        while a > q.m(s):
            if not step_ok(a - 1, s, c, q):
                raise AssertionError(f"conjugation step fails at eps({a},{s},{c})")
            a, c = a - 1, c + 1
        if (a, s, c) != g_triple(s, q):
            raise AssertionError(f"chain from eps({r},{s},{t}) ends at {(a, s, c)}")
    return s, e


def eps_word(r: int, s: int, t: int, q: Q2Params) -> tuple:
    """eps(r, s, t) as a g-word; trivial for s = 0."""
    if s == 0:
        return ()
    j, e = eps_to_g(r, s, t, q, replay=False)
    return conj((j,), power((q.n - 1,), e))


# ---------------------------------------------------------------------------
# relations


def rel_ok(r, s, t, u, v, q: Q2Params, need_rv: bool = True) -> bool:
    if min(r, s, u, v) < 0 or t <= 0 or r + s + t + u + v != q.n - 2:
        return False
    if need_rv and r + v <= 0:
        return False
    k = iota(r, v) + iota(s, u)
    return k <= q.p - 1 and t <= 2 * (q.p - k)


def rel_tuples(q: Q2Params, need_rv: bool = True) -> list[tuple]:
    n = q.n - 2
    out = []
    for r in range(n + 1):
        for s in range(n + 1 - r):
            for t in range(1, n + 1 - r - s):
                for u in range(n + 1 - r - s - t):
                    v = n - r - s - t - u
                    if rel_ok(r, s, t, u, v, q, need_rv):
                        out.append((r, s, t, u, v))
    return out


def unified_relator(tup, q: Q2Params) -> list:
    """The relation as a list of (unified eps triple, sign)."""
    r, s, t, u, v = tup
    a = (r, s + t + u + 1, v)
    return [(a, 1), ((r + s, t, u + v + 1), 1), (a, -1), ((r + s + 1, t, u + v), -1)]


def reduced_relator(tup, q: Q2Params) -> tuple:
    """Unified relation with every eps rewritten in the g basis."""
    out = []
    for trip, sgn in unified_relator(tup, q):
        w = eps_word(*trip, q)
        out.extend(w if sgn > 0 else inverse(w))
    return free_reduce(out)


def normalized_relation(tup, q: Q2Params) -> tuple[int, int, int]:
    """(t, J, shift): g_t commutes with conj(g_J^-1, g_{n-1}^shift) g_{n-1}."""
    if not rel_ok(*tup, q, need_rv=False):
        raise ValueError(f"{tup} is not a relation tuple")
    r, s, t, u, v = tup
    J = s + t + u + 1
    return t, J, q.m(t) - q.m(J) - s


def datum_words(datum, q: Q2Params) -> tuple[tuple, tuple]:
    """Commutation datum as the pair of g-words (U, W) with U & W."""
    t, J, shift = datum
    top = q.n - 1
    return (t,), free_reduce(conj((-J,), power((top,), shift)) + (top,))


def expand(datum, q: Q2Params) -> tuple:
    U, W = datum_words(datum, q)
    return commutator(U, W)


def normalized_data(q: Q2Params) -> list[tuple]:
    return sorted({normalized_relation(t, q) for t in rel_tuples(q)})


def ampersand_relator(x, y, z) -> tuple:
    """x y x^-1 (y^-1)^z, which holds iff y & x^-1 z."""
    return free_reduce(tuple(x) + tuple(y) + inverse(x) + conj(inverse(y), z))


# ---------------------------------------------------------------------------
# explicit tuples of the three relation families


def tuples_r0s0(q: Q2Params) -> list[tuple]:
    """(i, j, tuple) with g_i & g_j^-1 g_{n-1}, max(1, 2phi) <= i < j <= n-2."""
    n = q.n
    out = []
    for i in range(max(1, 2 * q.phi), n - 1):
        for j in range(i + 1, n - 1):
            out.append((i, j, (0, 0, i, j - 1 - i, n - 1 - j)))
    return out


def tuples_low(q: Q2Params) -> list[tuple]:
    """(i, j, tuple) for 1 <= i < 2phi, ell(i) < j <= n-2."""
    q.require_raag_range()
    phi, p, n = q.phi, q.p, q.n
    out = []
    for i in range(1, 2 * phi):
        li = ell(i)
        for j in range(li + 1, n - 1):
            if phi > (j + i - li - 1) // 2:
                tup = (phi + li - i - (j - 1) // 2, (j + li) // 2 - i, i,
                       (j - li - 1) // 2, p + i - li - 2 - j // 2)
            else:
                tup = (0, phi - i + (i + 1) // 2, i, j - phi - (i + 3) // 2, n - j - 1)
            out.append((i, j, tup))
    return out


def tuples_odd(q: Q2Params) -> list[tuple]:
    """(i, tuple) with g_i & g_{n-1} g_{i+1}^-1 for odd i < 2phi."""
    phi, p = q.phi, q.p
    return [(i, (phi - i // 2, 0, i, 0, p - 2 - (i + 1) // 2)) for i in range(1, 2 * phi, 2)]


def codified_relations(q: Q2Params) -> list[tuple]:
    """Commutation data (U, W) of the three families, as g-words."""
    q.require_raag_range()
    n, phi = q.n, q.phi
    top = n - 1
    out = []
    for i in range(max(1, 2 * phi), n - 1):
        for j in range(i + 1, n - 1):
            out.append(((i,), (-j, top)))
    for i in range(1, 2 * phi):
        e = i % 2
        for j in range(i + e + 1, n - 1):
            out.append(((i,), (-j, top)))
    for i in range(1, 2 * phi, 2):
        out.append(((i,), (top, -(i + 1))))
    return out


# ---------------------------------------------------------------------------
# change of basis g -> h


def _hpair(a, b):
    return (b, a)


def phi_generator(i: int, q: Q2Params) -> tuple:
    """phi(g_i) as a free-group word in h (the defining formula)."""
    n, f = q.n, q.phi
    if not 1 <= i <= n - 1:
        raise ValueError(f"g_{i} out of range")
    if i == 1:
        return (1,)
    out: list[int] = []
    if i <= 2 * f + 1:
        k = i // 2
        for a in range(2, 2 * k - 1, 2):
            out.extend(_hpair(a, a + 1))
        if i % 2 == 0:
            out.append(2 * k)
        else:
            out.extend(_hpair(2 * k, 2 * k + 1))
        return tuple(out)
    for a in range(2, 2 * f + 1, 2):
        out.extend(_hpair(a, a + 1))
    out.extend(range(2 * f + 2, i + 1))
    return tuple(out)


def phi_images(q: Q2Params) -> dict:
    return {i: phi_generator(i, q) for i in range(1, q.n)}


def phi_word(w, q: Q2Params) -> tuple:
    return substitute(w, phi_images(q))


def A(a1, a2, n):
    return tuple(range(max(1, a1), min(n - 1, a2) + 1))


def E(e1, e2, n):
    return tuple(range(max(2, e1), min(2 * ((n - 1) // 2), e2) + 1, 2))


def O(o1, o2, n):
    return tuple(range(max(1, o1), min(2 * (-(-(n - 1) // 2)) - 1, o2) + 1, 2))


def phi_compact(i: int, q: Q2Params) -> tuple:
    """phi(g_i) in the A/E/O form; equal to phi_generator in H_n, not letter for letter."""
    n, f = q.n, q.phi
    if i == 1:
        return (1,)
    if i <= 2 * f and i % 2 == 0:
        return O(3, i - 1, n) + E(2, i, n)
    if i <= 2 * f + 1:
        return O(3, i, n) + E(2, i - 1, n)
    return O(3, 2 * f + 1, n) + E(2, 2 * f, n) + A(2 * f + 2, i, n)


def ra_graph(n: int) -> nx.Graph:
    """x_i & x_j for |i - j| > 1 on x_1..x_{n-1} (nodes are 1..n-1)."""
    g = nx.Graph()
    g.add_nodes_from(range(1, n))
    g.add_edges_from((i, j) for i in range(1, n) for j in range(i + 2, n))
    return g


def phi_check(q: Q2Params) -> dict:
    """Every normalized relation, pushed through phi, dies in the RAAG."""
    g = ra_graph(q.n)
    imgs = phi_images(q)
    bad = []
    data = normalized_data(q)
    for d in data:
        if raag_normal_form(substitute(expand(d, q), imgs), g):
            bad.append(d)
    return {"ok": not bad, "checked": len(data), "failures": bad}


# ---------------------------------------------------------------------------
# support bounds


def lemma_bounds(q: Q2Params, ymax: int | None = None) -> dict:
    """Support bounds for phi-images of conjugated generators.

    w(m): support inside h_1..h_m;  W(m): support inside h_m..h_{n-1}.
    """
    q.require_raag_range()
    n, f = q.n, q.phi
    g = ra_graph(n)
    imgs = phi_images(q)
    top = n - 1
    ph_top = imgs[top]
    if ymax is None:
        ymax = n
    fails = []
    count = 0

    def low(word, m, tag):
        nonlocal count
        count += 1
        if not raag_support(word, g) <= set(range(1, m + 1)):
            fails.append((tag, m, raag_normal_form(word, g)))

    def high(word, m, tag):
        nonlocal count
        count += 1
        if not raag_support(word, g) <= set(range(max(1, m), n)):
            fails.append((tag, m, raag_normal_form(word, g)))

    def img(w):
        return substitute(w, imgs)

    for x in range(1, n):
        low(imgs[x], x, ("7.7.1", x))
        m = x + 1 if (x > 2 * f or x % 2 == 0) else x + 2
        for a in range(1, x + 1):
            low(conj((a,), ph_top), m, ("7.7.2", x, a))
        for y in range(ymax + 1):
            if x >= 2 * f:
                low(img(conj((x,), power((top,), y))), x + y, ("7.7.3", x, y))
    for z in range(1, 2 * f):
        for y in range(ymax + 1):
            low(img(conj((2 * f - z,), power((top,), y))), 2 * f + y - z // 2, ("7.7.4", z, y))
    for x in range(1, n):
        gx = (-x, top)
        m = x + 1 if (x >= max(2, 2 * f + 1) or (x % 2 == 1 and x >= 3)) else x
        high(img(gx), m, ("7.8.1", x))
        m2 = 2 * f - 1 if x >= 2 * f else 2 * (x // 2) - 1
        for a in range(x, n):
            high(conj((a,), ph_top), m2, ("7.8.2", x, a))
        if x >= 2 * f:
            m3 = 2 * f + 1
        elif x % 2:
            m3 = x
        else:
            m3 = x + 1
        high(img(conj(gx, (top,))), m3, ("7.8.3", x))
        if x >= 2 * f:
            for y in range(1, ymax + 1):
                high(img(conj(gx, power((top,), y))), 2 * f - 2 * y + 3, ("7.8.4", x, y))
    return {"ok": not fails, "checked": count, "failures": fails[:20]}


# ---------------------------------------------------------------------------
# from the Morse presentation to the g basis


def reduce_to_g(mp, q: Q2Params | None = None) -> dict:
    """Scripted Tietze reduction of a q=2 Morse presentation to g_1..g_{n-1}.

    Each eliminated generator is solved from one specific relator and the
    solution is checked against its expected value:
      eps_k(r,s,t) = eps_{k-1}(r,s,t)       square relator keyed k-1
      eps_{p-1}(r,0,t) = 1                  square relator keyed p-1
      eps(a,b,c) = eps(a-1,b,c+1)^{g_{n-1}}  two-edge relator with r = v = 0
    Returns the g presentation and the map raw generator -> g-word.
    """
    from .presentation import relator_case

    cx = mp.complex
    amb = cx.ambient
    if amb.q != 2:
        raise ValueError("reduction to g needs q = 2")
    if q is None:
        q = Q2Params(cx.n, amb.p)
    p = amb.p
    raw = [mp.raw_relator(c) for c in mp.rel_cells]
    cases = [relator_case(cx.cells[2][c], amb) for c in mp.rel_cells]
    ngen = len(mp.eps)
    idx = {e: k + 1 for k, e in enumerate(mp.eps)}

    by_key: dict = {}
    for k, (case, par) in enumerate(cases):
        if case == 4:
            by_key.setdefault(("sq", par), k)
        elif case == 1:
            i, i2, r, s, t, u, v = par
            if r == 0 and v == 0:
                by_key.setdefault(("conj", (s + 1, t, u)), k)

    images = {x: (x,) for x in range(1, ngen + 1)}
    used = set()

    def eliminate(x, k, expected):
        w = substitute(raw[k], {y: images[y] for y in images if y != x} | {x: (x,)})
        hits = [a for a, y in enumerate(w) if abs(y) == x]
        if len(hits) != 1:
            raise AssertionError(f"{mp.labels[x - 1]} occurs {len(hits)} times in its relator")
        a = hits[0]
        rot = w[a:] + w[:a]
        val = inverse(rot[1:]) if rot[0] > 0 else rot[1:]
        val = free_reduce(val)
        if val != free_reduce(expected):
            raise AssertionError(f"{mp.labels[x - 1]} solved as {val}, expected {expected}")
        for y in images:
            images[y] = substitute(images[y], {x: val} | {z: (z,) for z in images if z != x})
        images[x] = val
        used.add(k)

    # square relators: identify eps_k with the smallest available index
    for (i, r, s, t) in sorted(mp.eps):
        if (i - 1, r, s, t) in idx:
            k = by_key.get(("sq", (i - 1, r, s, t)))
            if k is None:
                raise AssertionError(f"no square relator linking eps{i - 1} and eps{i} at {(r, s, t)}")
            eliminate(idx[(i, r, s, t)], k, images[idx[(i - 1, r, s, t)]])
    reps = {}
    for (i, r, s, t) in sorted(mp.eps):
        reps.setdefault((r, s, t), idx[(i, r, s, t)])
    for (r, s, t), x in sorted(reps.items()):
        if s == 0:
            k = by_key.get(("sq", (p - 1, r, 0, t)))
            if k is None:
                raise AssertionError(f"no relator killing eps({r},0,{t})")
            eliminate(x, k, ())
    # g generators and conjugation steps
    top = reps[g_triple(q.n - 1, q)]
    gen_of = {reps[g_triple(j, q)]: j for j in range(1, q.n)}
    for (r, s, t) in sorted(reps, key=lambda e: (e[0], e)):
        if s == 0 or reps[(r, s, t)] in gen_of:
            continue
        k = by_key.get(("conj", (r, s, t)))
        if k is None:
            raise AssertionError(f"no conjugation relator for eps({r},{s},{t})")
        prev = images[reps[(r - 1, s, t + 1)]]
        eliminate(reps[(r, s, t)], k, conj(prev, images[top]))
    # translate to g indices
    tr = {x: j for x, j in gen_of.items()}
    def to_g(w):
        return tuple(tr[abs(y)] * (1 if y > 0 else -1) for y in w)
    gmap = {x: to_g(images[x]) for x in images}
    rels = []
    for k, r in enumerate(raw):
        if k in used:
            continue
        c = canonical(substitute(r, gmap))
        if c:
            rels.append(c)
    rels = sorted(set(rels), key=lambda w: (len(w), w))
    pres = Presentation([f"g{j}" for j in range(1, q.n)], rels)
    return {"presentation": pres, "gmap": gmap, "params": q, "eliminated": len(used)}


def composite_map(mp, q: Q2Params | None = None) -> dict:
    """Raw generator -> h-word: eps -> g-word (conjugation formula) -> phi."""
    cx = mp.complex
    if q is None:
        q = Q2Params(cx.n, cx.ambient.p)
    imgs = phi_images(q)
    out = {}
    for k, (i, r, s, t) in enumerate(mp.eps, 1):
        out[k] = substitute(eps_word(r, s, t, q), imgs)
    return out


def family_check(q: Q2Params) -> dict:
    """Each explicit tuple is a relation tuple whose normalized datum is the
    stated commutation: g_i & g_j^-1 g_{n-1} (first two families) or
    g_i & g_{n-1} g_{i+1}^-1 (odd family)."""
    top = q.n - 1
    rows = [(("r0s0", i, j), tup, (i,), (-j, top)) for i, j, tup in tuples_r0s0(q)]
    if q.raag_range:
        rows += [(("low", i, j), tup, (i,), (-j, top)) for i, j, tup in tuples_low(q)]
    rows += [(("odd", i), tup, (i,), (top, -(i + 1))) for i, tup in tuples_odd(q)]
    bad = []
    for tag, tup, U, W in rows:
        if not rel_ok(*tup, q):
            bad.append((tag, tup, "not a relation tuple"))
            continue
        got = datum_words(normalized_relation(tup, q), q)
        if got != (U, W):
            bad.append((tag, tup, got))
    return {"ok": not bad, "checked": len(rows), "failures": bad[:10]}


def generation_check(q: Q2Params) -> dict:
    """Every eps(r,s,t) is a g_{n-1}-conjugate of g_s (replayed step by step),
    no triple has r <= phi and s < 2(phi - r), and each codified relation is
    the normalized datum of some relation tuple."""
    bad = []
    triples = all_eps(q)
    for r, s, t in triples:
        try:
            eps_to_g(r, s, t, q)
        except AssertionError as e:
            bad.append(("generation", (r, s, t), str(e)))
        if r <= q.phi and s < 2 * (q.phi - r):
            bad.append(("low triple", (r, s, t)))
    for j in range(1, q.n):
        if not eps_exists(*g_triple(j, q), q):
            bad.append(("g missing", j))
    if q.raag_range:
        data = {datum_words(d, q) for d in normalized_data(q)}
        for U, W in codified_relations(q):
            if (U, W) not in data:
                bad.append(("codified", U, W))
    return {"ok": not bad, "checked": len(triples), "failures": bad[:10]}
