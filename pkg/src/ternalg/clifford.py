"""The three-generator ternary Clifford algebra realised by 3x3 matrices.

The generators Q_a satisfy Q_a Q_b Q_c + Q_b Q_c Q_a + Q_c Q_a Q_b = 3 eta_abc * 1.
Taking the hermitian conjugate of that identity reverses every product, so the
conjugate generators Q_a^dagger satisfy it with conj(eta_cba): the two cyclic
classes 123 and 213 trade their phases.  ``literal_conjugate_failures`` lists
the triples where the unreversed conj(eta_abc) would be wrong.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .linalg import Matrix, SingularMatrixError
from .scalars import J, J2, ONE, ZERO, Cyclo

__all__ = [
    "Q",
    "Q_DAGGER",
    "ETA",
    "ETA_BAR",
    "eta",
    "eta_dotted",
    "ETA_DOTTED",
    "literal_conjugate_failures",
    "ternary_bracket",
    "symmetric_triple",
    "verify_clifford",
    "similarity_check",
    "CliffordReport",
    "SingularMatrixError",
]

Q = (
    Matrix([[0, 1, 0], [0, 0, J], [J2, 0, 0]]),
    Matrix([[0, J, 0], [0, 0, 1], [J2, 0, 0]]),
    Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
)

Q_DAGGER = (
    Matrix([[0, 0, J], [1, 0, 0], [0, J2, 0]]),
    Matrix([[0, 0, J], [J2, 0, 0], [0, 1, 0]]),
    Matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
)

ETA = {
    (1, 1, 1): ONE, (2, 2, 2): ONE, (3, 3, 3): ONE,
    (1, 2, 3): ONE, (2, 3, 1): ONE, (3, 1, 2): ONE,
    (2, 1, 3): J2, (3, 2, 1): J2, (1, 3, 2): J2,
}
ETA_BAR = {k: v.conjugate() for k, v in ETA.items()}
# structure constants of the dagger generators
ETA_DOTTED = {(a, b, c): v.conjugate() for (c, b, a), v in ETA.items()}

_PHASES = (ONE, J, J2)
TRIPLES = list(itertools.product((1, 2, 3), repeat=3))


def eta(a, b, c, *, conjugate=False) -> Cyclo:
    return (ETA_BAR if conjugate else ETA).get((a, b, c), ZERO)


def eta_dotted(a, b, c) -> Cyclo:
    return ETA_DOTTED.get((a, b, c), ZERO)


def ternary_bracket(a: Matrix, b: Matrix, c: Matrix, phase) -> Matrix:
    """abc + phase * bca + phase^2 * cab, for phase in {1, j, j^2}."""
    phase = Cyclo.coerce(phase)
    if phase not in _PHASES:
        raise ValueError(f"bracket phase must be 1, j or j^2, got {phase}")
    return a @ b @ c + (b @ c @ a).scale(phase) + (c @ a @ b).scale(phase * phase)


def symmetric_triple(gens, a, b, c) -> Matrix:
    """Q_a Q_b Q_c + Q_b Q_c Q_a + Q_c Q_a Q_b with 1-based labels."""
    return ternary_bracket(gens[a - 1], gens[b - 1], gens[c - 1], ONE)


@dataclass
class CliffordReport:
    checks: list = field(default_factory=list)  # (name, passed)

    def add(self, name, passed):
        self.checks.append((name, bool(passed)))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def failures(self):
        return [name for name, ok in self.checks if not ok]

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": [{"name": n, "passed": ok} for n, ok in self.checks]}


def _check_generators(report, gens, table=ETA, prefix=""):
    one = Matrix.identity(3)
    for a, b, c in TRIPLES:
        expect = one.scale(3 * table.get((a, b, c), ZERO))
        report.add(f"{prefix}triple {a}{b}{c}", symmetric_triple(gens, a, b, c) == expect)


def literal_conjugate_failures():
    """Triples where the dagger generators do not give 3 conj(eta_abc) * 1."""
    one = Matrix.identity(3)
    return [t for t in TRIPLES
            if symmetric_triple(Q_DAGGER, *t) != one.scale(3 * eta(*t, conjugate=True))]


def verify_clifford() -> CliffordReport:
    report = CliffordReport()
    _check_generators(report, Q)
    _check_generators(report, Q_DAGGER, ETA_DOTTED, prefix="conjugate ")
    zero = Matrix.zeros(3, 3)
    for order in ((1, 2, 3), (2, 1, 3)):
        mats = [Q[k - 1] for k in order]
        label = "".join(map(str, order))
        for name, ph in (("j", J), ("j^2", J2)):
            report.add(f"{name}-bracket {label}", ternary_bracket(*mats, ph) == zero)
    return report


def similarity_check(P: Matrix) -> CliffordReport:
    """Conjugating every Q_a by P keeps the ternary identity with the same eta."""
    if not P.det():
        raise SingularMatrixError("similarity transform needs an invertible P")
    Pinv = P.inverse()
    gens = tuple(Pinv @ q @ P for q in Q)
    report = CliffordReport()
    _check_generators(report, gens)
    return report
