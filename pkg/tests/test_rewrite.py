import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ternalg.poly import Gen, Poly, UnknownGeneratorError, parse_poly, parse_word
from ternalg.presentation import AlgebraType, grade_of, make_presentation
from ternalg.rewrite import (RewriteUnsupportedError, canonical_rotation, multiply, normalize,
                             normalize_word, six_sum)
from ternalg.scalars import J, J2, ONE

LAMBDA3 = make_presentation(AlgebraType.Lambda, 3)
COMBINED = make_presentation(AlgebraType.CombinedZ6, 3, 2)


def nf(text, pres=COMBINED):
    return normalize(parse_poly(text), pres)


@pytest.mark.parametrize("pres,text,expected", [
    (LAMBDA3, "t2 t3 t1", "j^2 * t1 t2 t3"),
    (LAMBDA3, "t3 t1 t2", "j * t1 t2 t3"),
    (LAMBDA3, "t1 t2 t3 t1", "0"),
    (COMBINED, "x1 x1", "0"),
    (COMBINED, "t1 x1", "j^2 * x1 t1"),
    (COMBINED, "tb1 t1", "j^2 * t1 tb1"),
    (COMBINED, "x2 x1", "-x1 x2"),
    (COMBINED, "tb2 tb3 tb1", "j * tb1 tb2 tb3"),
])
def test_normalize_examples(pres, text, expected):
    assert nf(text, pres) == parse_poly(expected)


def test_rotation_fixed_and_long_blocks_vanish():
    for k in (1, 2, 3):
        assert not nf(f"t{k} t{k} t{k}", LAMBDA3)
    for w in itertools.product((1, 2, 3), repeat=4):
        assert not nf(" ".join(f"t{k}" for k in w), LAMBDA3)


def test_canonical_rotation():
    a, b, c = (Gen("theta", k) for k in (1, 2, 3))
    assert canonical_rotation((b, c, a), J) == (J2, (a, b, c))
    assert canonical_rotation((a, a, a), J) is None
    assert canonical_rotation((a, a, a), ONE) == (ONE, (a, a, a))
    assert canonical_rotation((a, b), J) == (ONE, (a, b))
    assert canonical_rotation((a, b, c, a), J) is None


def test_multiply_examples():
    t1, t2, t3 = (Gen("theta", k) for k in (1, 2, 3))
    x1, x2 = Gen("xi", 1), Gen("xi", 2)
    assert multiply((t1, t2), (t3,), COMBINED) == normalize(Poly.word((t1, t2, t3)), COMBINED)
    assert not multiply((x1,), (x2,), COMBINED) + multiply((x2,), (x1,), COMBINED)
    assert not multiply((t1, t2, t3), (t1,), COMBINED)


def test_six_sum_examples():
    t1, t2 = Gen("theta", 1), Gen("theta", 2)
    x1, x2 = Gen("xi", 1), Gen("xi", 2)
    assert not six_sum(t1, x1, t2, COMBINED)
    assert not six_sum(x1, t1, x2, COMBINED)
    assert not six_sum(t1, t1, t1, COMBINED)
    with pytest.raises(ValueError):
        six_sum((t1, t2), x1, x2, COMBINED)


def test_six_sum_two_kind_triples():
    pres = make_presentation(AlgebraType.CombinedZ6, 2, 2)
    for triple in itertools.combinations_with_replacement(pres.generators, 3):
        if len({g.kind for g in triple}) <= 2:
            assert not six_sum(*triple, pres), triple


def test_six_sum_three_kind_triples_survive():
    # xi theta theta-bar: no binary rule choice from the phase table kills these
    pres = make_presentation(AlgebraType.CombinedZ6, 2, 2)
    assert six_sum(Gen("xi", 1), Gen("theta", 1), Gen("theta_bar", 1), pres)


def test_unknown_generator():
    with pytest.raises(UnknownGeneratorError):
        normalize(parse_word("t4"), LAMBDA3)


def test_unsupported_presentation():
    with pytest.raises(RewriteUnsupportedError):
        normalize(parse_word("t1"), make_presentation(AlgebraType.S, 2))


words = st.lists(st.sampled_from(COMBINED.generators), min_size=0, max_size=6).map(tuple)


@given(words)
@settings(max_examples=200)
def test_idempotent(word):
    once = normalize(Poly.word(word), COMBINED)
    assert normalize(once, COMBINED) == once


@given(words)
@settings(max_examples=200)
def test_grade_preserved(word):
    g = grade_of(word)
    for w in normalize(Poly.word(word), COMBINED).words():
        assert grade_of(w) == g


@given(words, words, words)
@settings(max_examples=100)
def test_multiply_associative(a, b, c):
    left = multiply(multiply(a, b, COMBINED), Poly.word(c), COMBINED)
    right = multiply(Poly.word(a), multiply(b, c, COMBINED), COMBINED)
    assert left == right


@given(words)
@settings(max_examples=100)
def test_normalize_word_consistent(word):
    hit = normalize_word(word, COMBINED)
    p = normalize(Poly.word(word), COMBINED)
    assert (hit is None and not p) or p == Poly.word(hit[1], hit[0])
