"""Free-group words as tuples of nonzero ints (+k is generator k, -k its inverse)."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

Word = tuple


def inverse(w) -> Word:
    return tuple(-x for x in reversed(w))


def free_reduce(w) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w) -> Word:
    w = free_reduce(w)
    a, b = 0, len(w)
    while b - a > 1 and w[a] == -w[b - 1]:
        a += 1
        b -= 1
    return w[a:b]


def _letter_key(x: int) -> tuple:
    return (abs(x), 0 if x > 0 else 1)


def canonical(w) -> Word:
    """Least rotation of w or of its inverse, after cyclic reduction."""
    w = cyclic_reduce(w)
    if not w:
        return ()
    best = None
    for v in (w, inverse(w)):
        for k in range(len(v)):
            rot = v[k:] + v[:k]
            key = [_letter_key(x) for x in rot]
            if best is None or key < best[0]:
                best = (key, rot)
    return best[1]


def commutator(a, b) -> Word:
    """[a, b] = a b a^-1 b^-1 for words a, b."""
    a, b = tuple(a), tuple(b)
    return free_reduce(a + b + inverse(a) + inverse(b))


def conj(x, y) -> Word:
    """x^y = y x y^-1."""
    return free_reduce(tuple(y) + tuple(x) + inverse(y))


def power(w, e: int) -> Word:
    w = tuple(w)
    if e < 0:
        return free_reduce(inverse(w) * (-e))
    return free_reduce(w * e)


def substitute(w, images: dict) -> Word:
    """Apply a map generator -> word, extended to inverses."""
    out = []
    for x in w:
        img = images[abs(x)]
        out.extend(img if x > 0 else inverse(img))
    return free_reduce(out)


def exponent_sums(w, ngens: int) -> list[int]:
    v = [0] * ngens
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def format_word(w, labels) -> str:
    if not w:
        return "1"
    return " ".join(labels[abs(x) - 1] + ("" if x > 0 else "^-1") for x in w)


def parse_word(text: str, labels) -> Word:
    pos = {lab: k + 1 for k, lab in enumerate(labels)}
    out = []
    for tok in text.split():
        if tok == "1":
            continue
        m = re.fullmatch(r"(.+?)(\^-1)?", tok)
        name, inv = m.group(1), m.group(2)
        if name not in pos:
            raise ValueError(f"unknown generator {name!r}")
        out.append(-pos[name] if inv else pos[name])
    return tuple(out)


@dataclass
class Presentation:
    generators: list[str]
    relators: list[Word] = field(default_factory=list)

    def __post_init__(self):
        k = len(self.generators)
        for r in self.relators:
            for x in r:
                if not 1 <= abs(x) <= k:
                    raise ValueError(f"letter {x} outside generator range 1..{k}")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def canonical_relators(self) -> list[Word]:
        """Canonical, deduplicated, nonempty relators, sorted."""
        rs = {canonical(r) for r in self.relators}
        rs.discard(())
        return sorted(rs, key=lambda w: (len(w), [_letter_key(x) for x in w]))

    def normalized(self) -> "Presentation":
        return Presentation(list(self.generators), self.canonical_relators())

    def to_text(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(format_word(r, self.generators) for r in self.relators)
        return f"⟨ {gens} | {rels} ⟩"

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [format_word(r, self.generators) for r in self.relators],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)
