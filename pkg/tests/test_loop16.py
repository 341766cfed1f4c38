import random
from itertools import product

import pytest

from octobelt.algebra import oct_mul
from octobelt.loop16 import (
    ELEMENTS,
    GENERATORS,
    ONE,
    SignedBasis,
    build_loop_table,
    eval_word,
    eval_word_right,
    from_octonion,
    loop_mul,
    predicates,
)

P = SignedBasis.parse


def test_sixteen_distinct_elements():
    assert len(set(ELEMENTS)) == 16
    assert len({x.to_octonion() for x in ELEMENTS}) == 16


def test_name_roundtrip():
    for x in ELEMENTS:
        assert P(x.name) == x
    assert P("-Li").name == "-Li"
    assert P("k").name == "k"
    with pytest.raises(ValueError):
        P("+i")
    with pytest.raises(ValueError):
        P("Lx")


def test_table_entries():
    t = build_loop_table()
    assert t[1, 2] == P("k")
    assert t[4, 4] == P("-1")
    assert t[1, 6] == P("-Lk")


def test_table_shape():
    t = build_loop_table()
    for n in range(8):
        assert t[0, n] == SignedBasis(1, n) == t[n, 0]
    for n in range(1, 8):
        assert t[n, n] == P("-1")
    for n in range(8):
        assert sorted(e.index for e in t[n]) == list(range(8))
        assert sorted(t[r, n].index for r in range(8)) == list(range(8))


def test_loop_mul_examples():
    assert loop_mul(P("-i"), P("j")) == P("-k")
    assert loop_mul(P("Li"), P("Li")) == P("-1")
    for x in ELEMENTS:
        assert loop_mul(x, ONE) == x


def test_sign_linearity_and_embedding():
    for x, y in product(ELEMENTS, repeat=2):
        xy = loop_mul(x, y)
        assert loop_mul(-x, y) == -xy == loop_mul(x, -y)
        assert xy.to_octonion() == oct_mul(x.to_octonion(), y.to_octonion())
        assert from_octonion(xy.to_octonion()) == xy


def test_eval_word_examples():
    assert eval_word([P("i"), P("j")]) == P("k")
    assert eval_word([P("Lj"), P("k")]) == P("-Li")
    assert eval_word([]) == ONE
    assert eval_word([P("i")] * 2) == P("-1")
    assert eval_word([P("i")] * 4) == ONE


def test_eval_word_left_normed_recursion():
    rng = random.Random(1)
    for _ in range(500):
        w = [rng.choice(ELEMENTS) for _ in range(rng.randint(0, 10))]
        g = rng.choice(ELEMENTS)
        assert eval_word(w + [g]) == loop_mul(eval_word(w), g)


def _bracketings(word):
    if len(word) == 1:
        yield word[0]
        return
    for cut in range(1, len(word)):
        for left in _bracketings(word[:cut]):
            for right in _bracketings(word[cut:]):
                yield loop_mul(left, right)


def test_diassociative():
    # any word in two generators has one value under every bracketing
    for a, b in product(GENERATORS, repeat=2):
        for n in range(1, 6):
            for w in product((a, b), repeat=n):
                left = eval_word(w)
                assert eval_word_right(w) == left
                if n <= 4:
                    assert set(_bracketings(list(w))) == {left}


def test_non_associativity_witness():
    assert eval_word([P("Lj"), P("k")]) == P("-Li")
    assert loop_mul(P("L"), loop_mul(P("j"), P("k"))) == P("Li")


def test_predicates():
    assert predicates(P("j")).pointing_up
    assert predicates(P("Lj")).pointing_up
    assert tuple(predicates(ONE)) == (False, False, False)
    assert predicates(P("Li")).flag_right
    for x in ELEMENTS:
        assert predicates(x).flag_right == (x.index >= 4)
        assert predicates(x) == predicates(-x)
