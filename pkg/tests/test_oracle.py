import random

import pytest

from ternalg.oracle import (AlphabetMismatchError, DegreeCapError, coords, ideal_contains,
                            nonhomogeneous_collapse_check, poly_coords, quotient_basis)
from ternalg.poly import Poly, parse_word
from ternalg.presentation import make_presentation
from ternalg.rewrite import normalize
from ternalg.scalars import J2, ONE, ZERO


def test_lambda_n2_degree3():
    qb = quotient_basis(make_presentation("lambda", 2), 3)
    assert qb.dimension == 2
    assert qb.basis == [parse_word("t1 t1 t2"), parse_word("t1 t2 t2")]
    assert quotient_basis(make_presentation("lambda", 2), 4).dimension == 0


def test_lambda_n3_dimensions():
    pres = make_presentation("lambda", 3)
    assert [quotient_basis(pres, d).dimension for d in range(4)] == [1, 3, 9, 8]


def test_s0_dimension_matches_symmetric_count():
    # fully symmetric cubic monomials in two letters
    assert quotient_basis(make_presentation("s0", 2), 3).dimension == 4


def test_coords():
    pres = make_presentation("lambda", 3)
    qb = quotient_basis(pres, 3)
    vec = coords(parse_word("t2 t3 t1"), qb)
    i = qb.index(parse_word("t1 t2 t3"))
    assert vec[i] == J2 and all(v == ZERO for k, v in enumerate(vec) if k != i)
    assert not any(coords(parse_word("t1 t1 t1"), qb))
    b = qb.basis[3]
    assert coords(b, qb) == [ONE if k == 3 else ZERO for k in range(qb.dimension)]
    with pytest.raises(ValueError):
        coords(parse_word("t1"), qb)


def test_degree_cap():
    with pytest.raises(DegreeCapError):
        quotient_basis(make_presentation("lambda", 2), 7)
    assert quotient_basis(make_presentation("lambda", 1), 7, cap=8).dimension == 0


@pytest.mark.parametrize("container,contained,expected", [
    ("lambda", "lambda1", True),
    ("lambda1", "lambda0", True),
    ("lambda1", "lambda", False),
])
def test_ideal_contains_examples(container, contained, expected):
    a, b = make_presentation(container, 2), make_presentation(contained, 2)
    assert ideal_contains(a, b, 3) is expected


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        ideal_contains(make_presentation("lambda", 2), make_presentation("lambda", 3), 3)


def test_nonhomogeneous_collapse():
    assert nonhomogeneous_collapse_check()
    assert nonhomogeneous_collapse_check(conjugate=True)
    assert not nonhomogeneous_collapse_check(rho={})


def test_order_independent_dimension():
    pres = make_presentation("combined", 1, 1)
    rng = random.Random(7)
    order = {g: rng.random() for g in pres.generators}
    shuffled = lambda w: (len(w), tuple(order[g] for g in w))  # noqa: E731
    for d in range(4):
        assert quotient_basis(pres, d).dimension == quotient_basis(pres, d, key=shuffled).dimension


@pytest.mark.parametrize("atype,N,n,dmax", [
    ("lambda", 3, 0, 4),
    ("lambdabar", 2, 0, 4),
    ("grassmann", 0, 3, 4),
    ("combined", 1, 1, 4),
])
def test_rewriter_matches_oracle(atype, N, n, dmax):
    pres = make_presentation(atype, N, n)
    for d in range(dmax + 1):
        qb = quotient_basis(pres, d)
        for w in qb.words:
            nf = normalize(Poly.word(w), pres)
            assert set(nf.words()) <= set(qb.basis)
            assert poly_coords(nf, qb) == coords(w, qb), w
