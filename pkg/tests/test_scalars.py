from fractions import Fraction

import pytest
from hypothesis import given

from ternalg.scalars import (I, J, J2, ONE, Q, ZERO, Cyclo, ScalarSyntaxError, arith, conj,
                             inv, parse_scalar, zeta_power)

from conftest import cyclos


@pytest.mark.parametrize("kind,a,b,expected", [
    ("add", J, J2, -ONE),
    ("add", Q, Q ** 4, ZERO),
    ("mul", Q, Q ** 5, ONE),
    ("sub", J, J, ZERO),
])
def test_arith_examples(kind, a, b, expected):
    assert arith(kind, a, b) == expected


def test_arith_rejects_unknown_kind():
    with pytest.raises(ValueError):
        arith("div", ONE, ONE)


def test_roots_of_unity():
    assert zeta_power(6) == -1
    assert zeta_power(0) == 1
    assert J ** 3 == 1 and J != 1
    assert zeta_power(12) == 1 and zeta_power(-1) == zeta_power(11)
    assert ONE + J + J2 == 0
    assert Q + Q ** 3 + Q ** 5 == 0
    assert Q ** 2 + Q ** 4 + Q ** 6 == 0
    for k in (1, 2, 3):
        assert Q ** k + Q ** (k + 3) == 0
    assert J == Q ** 2 and I == zeta_power(3) and I * I == -1


def test_conj_examples():
    assert conj(J) == J2
    assert conj(I) == -I
    assert conj(Fraction(3, 2)) == Fraction(3, 2)
    assert conj(Q) == Q ** 5


def test_inv_examples():
    assert inv(J) == J2
    assert inv(Q) == Q ** 5
    assert inv(2) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        inv(0)


def test_canonical_form():
    x = Cyclo(Fraction(2, 4), 0, 0, 0)
    assert x.coeffs[0] == Fraction(1, 2)
    assert not Cyclo(0, 0, 0, 0)
    # zeta^4 folds down to zeta^2 - 1
    assert zeta_power(4) == Cyclo(-1, 0, 1, 0)


@given(cyclos, cyclos, cyclos)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(cyclos)
def test_inverse_property(a):
    if a:
        assert a * a.inverse() == 1


@given(cyclos, cyclos)
def test_conj_is_involutive_automorphism(a, b):
    assert conj(conj(a)) == a
    assert conj(a * b) == conj(a) * conj(b)
    assert conj(a + b) == conj(a) + conj(b)
    assert (a * conj(a)).is_real()


@given(cyclos)
def test_complex_embedding(a):
    z = complex(a)
    assert abs(complex(conj(a)) - z.conjugate()) < 1e-9


@pytest.mark.parametrize("text,expected", [
    ("j", J),
    ("j^2", J2),
    ("-1/2 + i", Cyclo(Fraction(-1, 2)) + I),
    ("z^4", J),
    ("(1+j)*q", (ONE + J) * Q),
    ("3", Cyclo(3)),
    ("2*j^2 - 1", 2 * J2 - 1),
])
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["", "k", "1 +", "(j", "j^"])
def test_parse_scalar_errors(text):
    with pytest.raises(ScalarSyntaxError):
        parse_scalar(text)


@pytest.mark.parametrize("k", range(12))
def test_str_roundtrip(k):
    z = zeta_power(k)
    assert parse_scalar(str(z)) == z
