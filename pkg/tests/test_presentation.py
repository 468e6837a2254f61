import itertools

import pytest

from ternalg.poly import Gen, Poly, parse_word
from ternalg.presentation import (AlgebraType, Grade, PresentationError, gen_grade, grade_of,
                                  make_presentation, relations_at, z6_iso, z6_iso_inverse)
from ternalg.scalars import J


def _has_relation(pres, target, lead):
    """Is ``target`` (with coefficient 1 on ``lead``) one of the relations, up to scale?"""
    return any(r.scale(r.coeff(lead).inverse()) == target for r in pres.relations if r.coeff(lead))


def test_lambda_relations():
    pres = make_presentation(AlgebraType.Lambda, 2, 0)
    rels = relations_at(pres, 3)
    assert len(rels) == 8
    t1, t2 = Gen("theta", 1), Gen("theta", 2)
    assert Poly([((t1, t1, t2), 1), ((t1, t2, t1), -J)]) in rels
    assert relations_at(pres, 4) == []


def test_relations_at_rejects_low_degree():
    with pytest.raises(PresentationError):
        relations_at(make_presentation("lambda", 2), 1)


def test_lambda0_six_sums():
    pres = make_presentation(AlgebraType.Lambda0, 3, 0)
    t = [Gen("theta", k) for k in (1, 2, 3)]
    six = Poly([(p, 1) for p in itertools.permutations(t)])
    assert _has_relation(pres, six, tuple(t))


def test_combined_has_xi_antisymmetry_and_mixed_rule():
    pres = make_presentation(AlgebraType.CombinedZ6, 2, 2)
    x1, x2, t1 = Gen("xi", 1), Gen("xi", 2), Gen("theta", 1)
    assert _has_relation(pres, Poly([((x1, x2), 1), ((x2, x1), 1)]), (x1, x2))
    assert _has_relation(pres, Poly([((x1, t1), 1), ((t1, x1), -J)]), (x1, t1))


def test_combined_needs_xi():
    with pytest.raises(PresentationError):
        make_presentation(AlgebraType.CombinedZ6, 2, 0)
    with pytest.raises(PresentationError):
        make_presentation(AlgebraType.Lambda, 0)
    with pytest.raises(PresentationError):
        AlgebraType.parse("nope")


@pytest.mark.parametrize("word,z6", [("t1 t2", 2), ("t1 tb1", 0), ("tb1 x1", 2), ("x1 x2", 0)])
def test_grade_of(word, z6):
    assert grade_of(parse_word(word)).z6 == z6


def test_grade_of_unknown_generator():
    pres = make_presentation("lambda", 2)
    with pytest.raises(ValueError):
        grade_of(parse_word("t3"), pres)


@pytest.mark.parametrize("pair,k", [((0, 0), 0), ((2, 1), 1), ((1, 0), 2), ((0, 1), 3), ((2, 0), 4), ((1, 1), 5)])
def test_z6_table(pair, k):
    assert z6_iso(pair) == k
    assert z6_iso_inverse(k) == pair


def test_z6_iso_is_homomorphism():
    pairs = [(a, b) for a in range(3) for b in range(2)]
    for p, q in itertools.product(pairs, repeat=2):
        s = Grade(p[0], p[1]) + Grade(q[0], q[1])
        assert z6_iso(s.pair) == (z6_iso(p) + z6_iso(q)) % 6
    assert (Grade(2, 1) + Grade(1, 1)).pair == (0, 0)


def test_grade_additive():
    pres = make_presentation("combined", 2, 2)
    for u, v in itertools.product(itertools.product(pres.generators, repeat=2), repeat=2):
        assert grade_of(u + v) == grade_of(u) + grade_of(v)


def test_generator_grades():
    assert gen_grade(Gen("theta", 1)).z6 == 1
    assert gen_grade(Gen("theta_bar", 1)).z6 == 5
    assert gen_grade(Gen("xi", 1)).z6 == 3
    assert gen_grade(Gen("dx", 1)).z3 == 1 and gen_grade(Gen("d2x", 1)).z3 == 2
