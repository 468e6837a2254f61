"""Hilbert series (per-degree dimensions) of the quotient algebras."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .oracle import DEFAULT_DEGREE_CAP, DegreeCapError, quotient_basis
from .presentation import AlgebraType, Presentation, make_presentation

__all__ = [
    "HilbertSeries",
    "hilbert_coeffs",
    "lambda_closed_form",
    "grassmann_closed_form",
    "lambda_total_dimension",
    "hilbert_report",
]


@dataclass(frozen=True)
class HilbertSeries:
    algebra: str
    N: int
    n: int
    coefficients: tuple

    def __post_init__(self):
        if self.coefficients and self.coefficients[0] != 1:
            raise ValueError("degree-0 coefficient must be 1")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("dimensions are non-negative")

    def __getitem__(self, d):
        return self.coefficients[d]

    def __len__(self):
        return len(self.coefficients)

    def as_list(self) -> list:
        return list(self.coefficients)

    def total(self) -> int:
        return sum(self.coefficients)


def hilbert_coeffs(pres: Presentation, dmax: int, *, cap: int = DEFAULT_DEGREE_CAP) -> HilbertSeries:
    """Oracle dimensions of degrees 0..dmax."""
    if dmax > cap:
        raise DegreeCapError(f"dmax {dmax} exceeds the cap {cap}")
    dims = tuple(quotient_basis(pres, d, cap=cap).dimension for d in range(dmax + 1))
    return HilbertSeries(pres.algebra_type.value, pres.N, pres.n, dims)


def lambda_closed_form(N: int, dmax: int = 3) -> HilbertSeries:
    """1 + N t + N^2 t^2 + (N^3 - N)/3 t^3, padded with zeros up to dmax."""
    if N < 1:
        raise ValueError("N must be at least 1")
    coeffs = [1, N, N * N, (N ** 3 - N) // 3]
    coeffs = (coeffs + [0] * max(0, dmax + 1 - len(coeffs)))[: dmax + 1]
    return HilbertSeries(AlgebraType.Lambda.value, N, 0, tuple(coeffs))


def grassmann_closed_form(n: int, dmax: int) -> HilbertSeries:
    return HilbertSeries(AlgebraType.Grassmann.value, 0, n, tuple(comb(n, d) for d in range(dmax + 1)))


def lambda_total_dimension(N: int) -> int:
    """Dimension of the positive-degree part: N + N^2 + (N^3 - N)/3."""
    return N + N * N + (N ** 3 - N) // 3


def hilbert_report(algebra, N: int, dmax: int, n: int = 0) -> dict:
    """JSON-ready comparison against the closed form, where one is known."""
    atype = AlgebraType.parse(algebra) if isinstance(algebra, str) else algebra
    pres = make_presentation(atype, N, n)
    series = hilbert_coeffs(pres, dmax)
    if atype in (AlgebraType.Lambda, AlgebraType.Lambda_bar):
        closed = lambda_closed_form(N, dmax).as_list()
    elif atype is AlgebraType.Grassmann:
        closed = grassmann_closed_form(n, dmax).as_list()
    else:
        closed = None
    return {
        "algebra": atype.value,
        "N": N,
        "n": n,
        "coefficients": series.as_list(),
        "closed_form": closed,
        "match": closed is not None and closed == series.as_list(),
    }
