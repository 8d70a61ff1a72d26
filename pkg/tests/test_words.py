from hypothesis import given, strategies as st

import pytest

from gridbraid.words import (Presentation, canonical, commutator, conj, cyclic_reduce, exponent_sums,
                             format_word, free_reduce, inverse, parse_word, power, substitute)

letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=12)


def test_basic_ops():
    assert inverse((1, -2, 3)) == (-3, 2, -1)
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert cyclic_reduce((2, 1, 3, -2)) == (1, 3)
    assert commutator((1,), (2,)) == (1, 2, -1, -2)
    assert conj((1,), (2,)) == (2, 1, -2)
    assert power((1, 2), -2) == (-2, -1, -2, -1)
    assert substitute((1, -2), {1: (2, 3), 2: (3,)}) == (2,)
    assert exponent_sums((1, 1, -2), 3) == [2, -1, 0]


def test_canonical_rotation_and_inversion():
    assert canonical((2, 1, -2, -1)) == canonical((1, 2, -1, -2))
    assert canonical((3, 1)) == (1, 3)
    assert canonical((1, -1)) == ()


@given(letters, st.integers(0, 11))
def test_canonical_invariant(w, k):
    r = free_reduce(w)
    rot = r[k % len(r):] + r[:k % len(r)] if r else r
    assert canonical(rot) == canonical(r) == canonical(inverse(r))


@given(letters)
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert free_reduce(r + inverse(r)) == ()


def test_text_round_trip():
    labels = ["a", "b", "c"]
    w = (1, -3, 2)
    assert format_word(w, labels) == "a c^-1 b"
    assert parse_word("a c^-1 b", labels) == w
    assert format_word((), labels) == "1"
    with pytest.raises(ValueError):
        parse_word("d", labels)


def test_presentation():
    p = Presentation(["a", "b"], [(2, 1, -2, -1), (1, 2, -1, -2), (1, -1)])
    assert p.canonical_relators() == [(1, 2, -1, -2)]
    assert p.to_text() == "⟨ a, b | b a b^-1 a^-1, a b a^-1 b^-1, a a^-1 ⟩"
    with pytest.raises(ValueError):
        Presentation(["a"], [(2,)])
