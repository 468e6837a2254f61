from fractions import Fraction
from math import comb

import pytest

from ternalg.hilbert import (HilbertSeries, hilbert_coeffs, hilbert_report, lambda_closed_form,
                             lambda_total_dimension)
from ternalg.oracle import DegreeCapError
from ternalg.presentation import make_presentation


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_lambda_matches_closed_form(N):
    assert hilbert_coeffs(make_presentation("lambda", N), 4).as_list() == lambda_closed_form(N, 4).as_list()


@pytest.mark.parametrize("N,expected", [(1, [1, 1, 1, 0]), (2, [1, 2, 4, 2]), (3, [1, 3, 9, 8])])
def test_closed_form_examples(N, expected):
    assert lambda_closed_form(N).as_list() == expected


def test_lambda_bar_same_table():
    assert hilbert_coeffs(make_presentation("lambdabar", 2), 4).as_list() == [1, 2, 4, 2, 0]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_grassmann_binomials(n):
    series = hilbert_coeffs(make_presentation("grassmann", 0, n), n + 1)
    assert series.as_list() == [comb(n, d) for d in range(n + 2)]
    assert series.total() == 2 ** n


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_total_dimension_summand_form(N):
    series = lambda_closed_form(N)
    assert sum(series.as_list()[1:]) == lambda_total_dimension(N)


def test_simplified_total_disagrees_at_two():
    # the closed simplification (N^3 + N^2 + 2N)/3 is not even an integer at N = 2
    assert lambda_total_dimension(2) == 8
    assert Fraction(2 ** 3 + 2 ** 2 + 2 * 2, 3) == Fraction(16, 3)


def test_invariants():
    with pytest.raises(ValueError):
        HilbertSeries("lambda", 1, 0, (2, 1))
    with pytest.raises(ValueError):
        lambda_closed_form(0)
    with pytest.raises(DegreeCapError):
        hilbert_coeffs(make_presentation("lambda", 2), 9)


def test_report_shape():
    rep = hilbert_report("lambda", 2, 4)
    assert rep == {"algebra": "lambda", "N": 2, "n": 0, "coefficients": [1, 2, 4, 2, 0],
                   "closed_form": [1, 2, 4, 2, 0], "match": True}
    assert hilbert_report("s", 2, 3)["closed_form"] is None
