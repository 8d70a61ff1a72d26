"""Fundamental-group presentations read off the gradient field.

Generators are the critical 1-cells.  Each critical 2-cell contributes its
boundary word, rewritten until only critical letters remain:
collapsible letters are deleted, a redundant letter is traded for the rest
of the boundary of its partner 2-cell, and inverse pairs cancel.
"""

from __future__ import annotations

import random

from .configspace import ConfigComplex, enumerate_config
from .grid import AmbientComplex, build_grid, vertical_partner
from .morse import COLLAPSIBLE, CRITICAL, REDUNDANT, MorseField, epsilon_params
from .words import Presentation, canonical, commutator, free_reduce, inverse

STRATEGIES = ("leftmost", "rightmost", "random")


class StepLimitExceeded(RuntimeError):
    pass


def eps_label(i: int, r: int, s: int, t: int) -> str:
    return f"eps{i}({r},{s},{t})"


class Reducer:
    """Word rewriting over the oriented 1-cells of a classified complex.

    Letters are +-(id + 1) for 1-cell ids.
    """

    def __init__(self, cx: ConfigComplex, field: MorseField | None = None):
        self.complex = cx
        self.field = field or MorseField(cx)
        self._remainder: dict[int, tuple] = {}
        self._memo: dict[int, tuple] = {}

    def kind(self, letter: int) -> str:
        return self.field.kind[1][abs(letter) - 1]

    def boundary_word(self, two_cell_id: int) -> tuple:
        cx = self.complex
        cyc = cx.boundary_cycle(cx.cells[2][two_cell_id])
        return tuple(s * (cx.index[1][f] + 1) for f, s in cyc)

    def remainder(self, cell_id: int) -> tuple:
        """R with w.R the boundary word of partner(w), read from w with w positive."""
        if cell_id not in self._remainder:
            w = cell_id + 1
            bw = self.boundary_word(self.field.partner[1][cell_id])
            if w not in bw:
                bw = inverse(bw)
            k = bw.index(w)
            self._remainder[cell_id] = bw[k + 1:] + bw[:k]
        return self._remainder[cell_id]

    def rewrite(self, letter: int) -> tuple:
        """One rewriting step applied to a single letter."""
        t = self.kind(letter)
        if t == CRITICAL:
            return (letter,)
        if t == COLLAPSIBLE:
            return ()
        rest = self.remainder(abs(letter) - 1)
        return inverse(rest) if letter > 0 else rest

    def reduce_word(self, w, strategy: str = "leftmost", max_steps: int = 10**6, seed: int = 0) -> tuple:
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}")
        rng = random.Random(seed)
        word = list(free_reduce(w))
        steps = 0
        while True:
            todo = [k for k, x in enumerate(word) if self.kind(x) != CRITICAL]
            if not todo:
                return tuple(word)
            steps += 1
            if steps > max_steps:
                raise StepLimitExceeded(f"reduction exceeded {max_steps} steps")
            if strategy == "leftmost":
                k = todo[0]
            elif strategy == "rightmost":
                k = todo[-1]
            else:
                k = rng.choice(todo)
            word = list(free_reduce(word[:k] + list(self.rewrite(word[k])) + word[k + 1:]))

    def reduce_letter(self, letter: int) -> tuple:
        """Fully reduced form of a single letter, memoized.

        Rewriting commutes with concatenation and free reduction, so a word
        reduces to the product of its reduced letters.
        """
        cid = abs(letter) - 1
        if cid not in self._memo:
            stack = [cid]
            while stack:
                c = stack[-1]
                if c in self._memo:
                    stack.pop()
                    continue
                if self.field.kind[1][c] != REDUNDANT:
                    self._memo[c] = self.rewrite(c + 1)
                    stack.pop()
                    continue
                rest = inverse(self.remainder(c))
                missing = [abs(x) - 1 for x in rest if abs(x) - 1 not in self._memo]
                if missing:
                    if len(stack) > 10**6:
                        raise StepLimitExceeded("gradient path too long")
                    stack.extend(m for m in missing if m != c)
                    continue
                out = []
                for x in rest:
                    img = self._memo[abs(x) - 1]
                    out.extend(img if x > 0 else inverse(img))
                self._memo[c] = free_reduce(out)
                stack.pop()
        img = self._memo[cid]
        return img if letter > 0 else inverse(img)

    def reduce_fast(self, w) -> tuple:
        out = []
        for x in w:
            out.extend(self.reduce_letter(x))
        return free_reduce(out)


class MorsePresentation:
    """Presentation of a complex plus the bookkeeping linking it to cells."""

    def __init__(self, cx: ConfigComplex, field: MorseField | None = None, validate: bool = True):
        self.complex = cx
        self.field = field or MorseField(cx)
        if validate:
            rep = self.field.validate()
            if not rep["ok"]:
                raise ValueError(f"gradient field invalid: {rep['problems']}")
        self.reducer = Reducer(cx, self.field)
        self.gen_cells = self.field.critical(1)  # 1-cell ids
        self.gen_of = {c: k + 1 for k, c in enumerate(self.gen_cells)}
        self.rel_cells = self.field.critical(2)
        p = cx.ambient.p
        self.labels = []
        self.eps = []
        for c in self.gen_cells:
            i, r, s, t = epsilon_params(cx.cells[1][c], p)
            self.eps.append((i, r, s, t))
            self.labels.append(eps_label(i, r, s, t))

    def to_generators(self, w) -> tuple:
        """Translate a critical-letter word over 1-cells into generator indices."""
        return tuple(self.gen_of[abs(x) - 1] * (1 if x > 0 else -1) for x in w)

    def raw_relator(self, two_cell_id: int, strategy: str | None = None, seed: int = 0) -> tuple:
        bw = self.reducer.boundary_word(two_cell_id)
        if strategy is None:
            red = self.reducer.reduce_fast(bw)
        else:
            red = self.reducer.reduce_word(bw, strategy, seed=seed)
        return self.to_generators(red)

    def presentation(self, dedupe: bool = False) -> Presentation:
        rels = [canonical(self.raw_relator(c)) for c in self.rel_cells]
        pres = Presentation(list(self.labels), rels)
        return pres.normalized() if dedupe else pres

    def gen_index(self, i: int, r: int, s: int, t: int) -> int:
        return self.eps.index((i, r, s, t)) + 1


def presentation(cx: ConfigComplex, dedupe: bool = False) -> Presentation:
    return MorsePresentation(cx).presentation(dedupe)


def ux_presentation(n: int, p: int, q: int, include_squares: bool = True, dedupe: bool = False):
    return presentation(enumerate_config(build_grid((p, q)), n, include_squares), dedupe)


# ---------------------------------------------------------------------------
# closed forms of the relators


def _gap_counts(c, cuts: list[int]) -> list[int]:
    vs = [x[0] for x in c if len(x) == 1]
    bounds = [0] + cuts + [10**9]
    return [sum(bounds[k] < v < bounds[k + 1] for v in vs) for k in range(len(cuts) + 1)]


def relator_case(c, ambient: AmbientComplex) -> tuple[int, tuple]:
    """Which closed form a critical 2-cell obeys, with its parameters.

    Two deleted edges e_i=[i,j], e_i'=[i',j'] with i < i':
      case 1  i < i' < j' < j   (nested)
      case 2  i < i' < j < j'   (interleaved)
      case 3  i < j < i' < j'   (one after the other)
    Square ingredients give case 4 with parameters (i, r, s, t).
    """
    sq = [x for x in c if len(x) == 4]
    if sq:
        i = sq[0][0]
        j = vertical_partner(i, ambient.p)
        r, s, t = _gap_counts(c, [i, j])
        return 4, (i, r, s, t)
    (i, j), (i2, j2) = sorted(x for x in c if len(x) == 2)
    if j2 < j:
        case, cuts = 1, [i, i2, j2, j]
    elif j < i2:
        case, cuts = 3, [i, j, i2, j2]
    else:
        case, cuts = 2, [i, i2, j, j2]
    return case, (i, i2, *_gap_counts(c, cuts))


def closed_form_relator(case: int, params: tuple, ambient: AmbientComplex | None = None) -> list:
    """Relator as a list of ((i, r, s, t), sign) letters in epsilon generators.

    Case 1-3 params are (i, i', r, s, t, u, v), the vertex counts in the five
    gaps cut out by the four endpoints.  Case 4 params are (i, r, s, t).
    """
    if case == 4:
        i, r, s, t = params
        if ambient is None:
            raise ValueError("case 4 needs the ambient grid")
        p = ambient.p
        if i % p == 0 or i > p * (ambient.q - 1):
            raise ValueError(f"no square keyed by {i}")
        if (i + 1) % p == 0:
            if s != 0:
                raise ValueError("the single-letter case needs s = 0")
            return [((i, r, 0, t), 1)]
        return [((i, r, s, t), 1), ((i + 1, r, s, t), -1)]
    i, i2, r, s, t, u, v = params
    if min(r, s, t, u, v) < 0 or not i < i2:
        raise ValueError(f"bad parameters {params}")
    if ambient is not None:
        j, j2 = vertical_partner(i, ambient.p), vertical_partner(i2, ambient.p)
        shape = {1: i < i2 < j2 < j, 2: i < i2 < j < j2, 3: i < j < i2 < j2}[case]
        if not shape:
            raise ValueError(f"edges e_{i}, e_{i2} do not fit case {case}")
    if case == 1:
        a = (i, r, s + t + u + 1, v)
        word = [(a, 1), ((i2, r + s, t, u + v + 1), 1), (a, -1), ((i2, r + s + 1, t, u + v), -1)]
    elif case == 2:
        word = [((i, r, s + t + 1, u + v), 1), ((i2, r + s, t + u + 1, v), 1),
                ((i, r, s + t, u + v + 1), -1), ((i2, r + s + 1, t + u, v), -1)]
    elif case == 3:
        a, b = (i, r, s, t + u + v + 1), (i2, r + s + t + 1, u, v)
        word = [(a, 1), (b, 1), (a, -1), (b, -1)]
    else:
        raise ValueError(f"unknown case {case}")
    return word


def eps_word_to_generators(word: list, mp: MorsePresentation) -> tuple:
    out = []
    for lab, s in word:
        out.append(s * mp.gen_index(*lab))
    return canonical(tuple(out))


# ---------------------------------------------------------------------------
# strip model


def strip_presentation(n: int) -> Presentation:
    if n < 2:
        raise ValueError("n >= 2 required")
    gens = [f"x{i}" for i in range(1, n)]
    rels = [commutator((i,), (j,)) for i in range(1, n) for j in range(i + 2, n)]
    return Presentation(gens, [canonical(r) for r in rels])


def strip_cell_counts(n: int) -> list[int]:
    """#d-cells of the strip model: 0/1 strings of length n-1 with d zeros, no two adjacent."""
    from math import comb

    m = n - 1
    out = []
    d = 0
    while d <= m and comb(m - d + 1, d):
        out.append(comb(m - d + 1, d))
        d += 1
    return out
