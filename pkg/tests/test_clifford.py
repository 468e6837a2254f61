import pytest

from ternalg.clifford import (ETA, ETA_BAR, Q, Q_DAGGER, TRIPLES, eta, eta_dotted,
                              literal_conjugate_failures, similarity_check, symmetric_triple,
                              ternary_bracket, verify_clifford)
from ternalg.linalg import Matrix, SingularMatrixError
from ternalg.scalars import I, J, J2, ONE

from conftest import random_int_matrix, random_matrix

ONE3 = Matrix.identity(3)
ZERO3 = Matrix.zeros(3, 3)


def test_daggers_are_hermitian_conjugates():
    for q, qd in zip(Q, Q_DAGGER):
        assert q.dagger() == qd


@pytest.mark.parametrize("phase", [J, J2])
@pytest.mark.parametrize("order", [(0, 1, 2), (1, 0, 2)])
def test_skew_brackets_vanish(phase, order):
    assert ternary_bracket(*(Q[k] for k in order), phase) == ZERO3


def test_bracket_examples():
    assert ternary_bracket(Q[0], Q[0], Q[0], 1) == ONE3.scale(3)
    with pytest.raises(ValueError):
        ternary_bracket(Q[0], Q[1], Q[2], I)


def test_eta_support():
    nonzero = {t for t in TRIPLES if eta(*t)}
    assert len(nonzero) == 9 and nonzero == set(ETA)
    assert eta(1, 2, 3) == ONE and eta(2, 1, 3) == J2 and eta(1, 1, 2) == 0
    assert all(ETA_BAR[t] == ETA[t].conjugate() for t in ETA)


@pytest.mark.parametrize("triple", TRIPLES)
def test_anticommutator(triple):
    assert symmetric_triple(Q, *triple) == ONE3.scale(3 * eta(*triple))


def test_example_triples():
    assert symmetric_triple(Q, 1, 2, 3) == ONE3.scale(3)
    assert symmetric_triple(Q, 2, 1, 3) == ONE3.scale(3 * J2)


@pytest.mark.parametrize("triple", TRIPLES)
def test_conjugate_anticommutator(triple):
    # daggering reverses products, so the dotted constants are conj(eta) with reversed indices
    assert symmetric_triple(Q_DAGGER, *triple) == ONE3.scale(3 * eta_dotted(*triple))


def test_conjugate_with_unreversed_eta_fails_on_mixed_triples():
    assert set(literal_conjugate_failures()) == {(1, 2, 3), (2, 3, 1), (3, 1, 2),
                                                 (2, 1, 3), (3, 2, 1), (1, 3, 2)}
    assert symmetric_triple(Q_DAGGER, 1, 2, 3) == ONE3.scale(3 * J)
    assert symmetric_triple(Q_DAGGER, 2, 1, 3) == ONE3.scale(3)


def test_verify_report():
    report = verify_clifford()
    assert report.passed and len(report.checks) == 27 * 2 + 4
    assert report.to_json()["passed"] is True


@pytest.mark.parametrize("P", [
    Matrix.identity(3),
    Matrix.diag(1, 1, J),
    Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
])
def test_similarity_examples(P):
    assert similarity_check(P).passed


def test_similarity_random_integer(rng):
    for _ in range(20):
        assert similarity_check(random_int_matrix(rng)).passed


def test_similarity_cyclotomic_entries(rng):
    for _ in range(2):
        assert similarity_check(random_matrix(rng, 3)).passed


def test_similarity_singular():
    with pytest.raises(SingularMatrixError):
        similarity_check(Matrix([[1, 1, 0], [1, 1, 0], [0, 0, 1]]))
