"""Invariance under simultaneous change of basis.

Index conventions: a 2x2 matrix ``U`` acting as theta^{A'} = U^{A'}_A theta^A is
stored with ``U[A', A]`` (row = primed index), 0-based internally; tensors are
addressed with the 1-based indices used in the formulas.

``rho`` maps theta cubes to xi components, ``eps`` is the spinor metric, and the
``pi`` tensors map theta * theta-bar pairs to four-vectors.  ``induced_S`` and
``spin_to_lorentz`` produce the matrices forced on the xi generators and on
four-vectors by a change of the theta basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, SingularMatrixError
from .scalars import I, J, J2, ONE, ZERO, Cyclo

__all__ = [
    "RhoTensor",
    "PiTensor",
    "EPSILON",
    "SIGMA",
    "rho_canonical",
    "induced_S",
    "rho_pullback",
    "rho_covariance_check",
    "CovarianceResult",
    "epsilon_preserved",
    "u_from_spinor",
    "spin_to_lorentz",
    "lorentz_component_equations",
    "minkowski_metric",
    "binary_invariance_check",
    "raise_index",
    "lower_index",
]

IDX = (1, 2)

# eps_{12} = -eps_{21} = 1; the raised and dotted forms use the same numbers
EPSILON = Matrix([[0, 1], [-1, 0]])

SIGMA = (
    Matrix([[1, 0], [0, 1]]),
    Matrix([[0, 1], [1, 0]]),
    Matrix([[0, -I], [I, 0]]),
    Matrix([[1, 0], [0, -1]]),
)


def raise_index(v):
    """v^a = eps^{ab} v_b."""
    return [sum((EPSILON[a, b] * v[b] for b in range(2)), ZERO) for a in range(2)]


def lower_index(v):
    """v_a = v^b eps_{ba}; inverse of :func:`raise_index`."""
    return [sum((v[b] * EPSILON[b, a] for b in range(2)), ZERO) for a in range(2)]


# -- rho tensors ---------------------------------------------------------------


@dataclass(frozen=True)
class RhoTensor:
    """Trilinear form rho^alpha_{ABC} (``variance='lower'``) or rho^{ABC}_alpha
    (``variance='upper'``).  Components are keyed ``(alpha, A, B, C)``, 1-based."""

    variance: str
    components: tuple  # ((alpha, A, B, C), value) pairs, nonzero only

    def __getitem__(self, key) -> Cyclo:
        return dict(self.components).get(tuple(key), ZERO)

    def as_dict(self) -> dict:
        """``(A, B, C, alpha) -> value``, the layout the presentations expect."""
        return {(a, b, c, al): v for (al, a, b, c), v in self.components}

    def conjugate(self) -> "RhoTensor":
        return RhoTensor(self.variance, tuple((k, v.conjugate()) for k, v in self.components))

    def cyclic_phase(self):
        """The phase c with rho_{ABC} = c * rho_{BCA} for every component, or None."""
        found = None
        for al, a, b, c in itertools.product(IDX, repeat=4):
            x, y = self[al, a, b, c], self[al, b, c, a]
            if not x and not y:
                continue
            if not x or not y:
                return None
            ratio = x / y
            if found is None:
                found = ratio
            elif ratio != found:
                return None
        return found


def rho_canonical(variance: str = "lower") -> RhoTensor:
    """The two-generator rho with rho^1_{121} = 1, rho^1_{211} = j^2, rho^1_{112} = j
    and rho^2_{212} = 1, rho^2_{122} = j^2, rho^2_{221} = j.

    These values satisfy rho_{ABC} = j rho_{BCA}, the rule obeyed by theta
    cubes; the rotation-fixed components 111 and 222 vanish.
    """
    if variance not in ("lower", "upper"):
        raise ValueError("variance is 'lower' or 'upper'")
    comps = (
        ((1, 1, 2, 1), ONE), ((1, 2, 1, 1), J2), ((1, 1, 1, 2), J),
        ((2, 2, 1, 2), ONE), ((2, 1, 2, 2), J2), ((2, 2, 2, 1), J),
    )
    return RhoTensor(variance, comps)


def induced_S(U: Matrix) -> Matrix:
    """xi-basis matrix S forced by theta -> U theta, from the four component equations.

    Each entry is the literal cubic expression (before simplifying with
    j + j^2 = -1), so the closed form S = +-U det U is a checked consequence.
    """
    u = lambda a, b: U[a - 1, b - 1]  # noqa: E731  u(A', A)
    s11 = u(1, 1) * u(2, 2) * u(1, 1) + J2 * u(2, 1) * u(1, 2) * u(1, 1) + J * u(1, 1) * u(1, 2) * u(2, 1)
    s21 = u(2, 1) * u(1, 2) * u(2, 1) + J2 * u(1, 1) * u(2, 2) * u(2, 1) + J * u(2, 1) * u(2, 2) * u(1, 1)
    s12 = u(1, 2) * u(2, 1) * u(1, 2) + J2 * u(2, 2) * u(1, 1) * u(1, 2) + J * u(1, 2) * u(1, 1) * u(2, 2)
    s22 = u(2, 2) * u(1, 1) * u(2, 2) + J2 * u(1, 2) * u(2, 1) * u(2, 2) + J * u(2, 2) * u(2, 1) * u(1, 2)
    return Matrix([[s11, s12], [s21, s22]])


def rho_pullback(rho: RhoTensor, U: Matrix) -> dict:
    """T^{alpha'}_{ABC} = U^{A'}_A U^{B'}_B U^{C'}_C rho^{alpha'}_{A'B'C'}."""
    out = {}
    for al, a, b, c in itertools.product(IDX, repeat=4):
        acc = ZERO
        for a2, b2, c2 in itertools.product(IDX, repeat=3):
            r = rho[al, a2, b2, c2]
            if r:
                acc = acc + U[a2 - 1, a - 1] * U[b2 - 1, b - 1] * U[c2 - 1, c - 1] * r
        out[al, a, b, c] = acc
    return out


def epsilon_preserved(S: Matrix) -> bool:
    """eps_{a'b'} = S^a_{a'} S^b_{b'} eps_{ab}, with S^a_{a'} the inverse of S."""
    Sinv = S.inverse()
    # (Sinv^T eps Sinv)_{a'b'}
    return Sinv.T @ EPSILON @ Sinv == EPSILON


@dataclass(frozen=True)
class CovarianceResult:
    rho_covariant: bool
    epsilon_preserved: bool
    det_S: Cyclo

    @property
    def ok(self) -> bool:
        # eps must be preserved exactly when det S = 1
        return self.rho_covariant and self.epsilon_preserved == (self.det_S == 1)

    def __bool__(self):
        return self.ok


def rho_covariance_check(U: Matrix, *, conjugate: bool = False, S: Matrix | None = None) -> CovarianceResult:
    """Check S rho = U U U rho on all 16 index combinations.

    With ``conjugate`` the conjugate tensor and the conjugate matrix U-bar are
    used (and S defaults to the conjugate of ``induced_S(U)``).
    """
    rho = rho_canonical("lower")
    if conjugate:
        rho = rho.conjugate()
        if S is None:
            S = induced_S(U).conj()
        U = U.conj()
    elif S is None:
        S = induced_S(U)
    pulled = rho_pullback(rho, U)
    rho_ok = True
    for al, a, b, c in itertools.product(IDX, repeat=4):
        lhs = sum((S[al - 1, be - 1] * rho[be, a, b, c] for be in IDX), ZERO)
        if lhs != pulled[al, a, b, c]:
            rho_ok = False
            break
    det_s = S.det()
    eps_ok = bool(det_s) and epsilon_preserved(S)
    return CovarianceResult(rho_ok, eps_ok, det_s)


def u_from_spinor(L: Matrix) -> Matrix:
    """U^{1'}_1 = j L, U^{1'}_2 = -j L, U^{2'}_1 = -j L, U^{2'}_2 = j L (entrywise)."""
    return Matrix([[J * L[0, 0], -J * L[0, 1]], [-J * L[1, 0], J * L[1, 1]]])


# -- pi tensors and the vector representation ---------------------------------


@dataclass(frozen=True)
class PiTensor:
    """pi^mu_{A Bdot} = pi_coeff * sigma^mu and pibar^mu_{Bdot A} = pibar_coeff * sigma^mu.

    ``sigma^mu_{Bdot A}`` carries the same number as ``sigma^mu_{A Bdot}``:
    the index order only records which generator stands first.
    """

    pi_coeff: Cyclo = J2 * I
    pibar_coeff: Cyclo = -J * I

    def pi(self, mu, a, b) -> Cyclo:
        return self.pi_coeff * SIGMA[mu][a - 1, b - 1]

    def pibar(self, mu, b, a) -> Cyclo:
        return self.pibar_coeff * SIGMA[mu][a - 1, b - 1]

    def pi_matrix(self, mu) -> Matrix:
        return SIGMA[mu].scale(self.pi_coeff)


def spin_to_lorentz(U: Matrix, pi: PiTensor | None = None) -> Matrix:
    """Solve Lambda^{mu'}_nu pi^nu_{A Bdot} = U^{A'}_A Ubar^{B'}_B pi^{mu'}_{A'B'} for Lambda.

    Returned with rows indexed by mu' and columns by nu.
    """
    if pi is None:
        pi = PiTensor()
    if not U.det():
        raise SingularMatrixError("U must be nonsingular")
    Ub = U.conj()
    pairs = [(a, b) for a in IDX for b in IDX]
    coeff = Matrix([[pi.pi(nu, a, b) for nu in range(4)] for a, b in pairs])
    rhs_cols = []
    for mu in range(4):
        col = []
        for a, b in pairs:
            acc = ZERO
            for a2, b2 in itertools.product(IDX, repeat=2):
                p = pi.pi(mu, a2, b2)
                if p:
                    acc = acc + U[a2 - 1, a - 1] * Ub[b2 - 1, b - 1] * p
            col.append(acc)
        rhs_cols.append(col)
    rhs = Matrix([list(r) for r in zip(*rhs_cols)])
    X = coeff.solve(rhs)  # X[nu, mu'] = Lambda^{mu'}_nu
    return X.T


def lorentz_component_equations(U: Matrix, Lam: Matrix, *, as_listed: bool = False):
    """The eight listed component relations between Lambda and U, U-bar.

    Returns ``[(label, lhs, rhs)]``.  In the mu' = 0 group the listed form has
    Lambda^{0'}_2 in the third and fourth relations where the pattern of the
    mu' = 1 group (and the identity matrix) require Lambda^{0'}_1; that
    correction is applied unless ``as_listed`` is set.
    """
    u = lambda a, b: U[a - 1, b - 1]  # noqa: E731
    ub = lambda a, b: U[a - 1, b - 1].conjugate()  # noqa: E731
    L = lambda m, n: Lam[m, n]  # noqa: E731
    first = 2 if as_listed else 1
    return [
        ("L00 - L03", L(0, 0) - L(0, 3), u(1, 2) * ub(1, 2) + u(2, 2) * ub(2, 2)),
        ("L00 + L03", L(0, 0) + L(0, 3), u(1, 1) * ub(1, 1) + u(2, 1) * ub(2, 1)),
        (f"L0{first} - i L02", L(0, first) - I * L(0, 2), u(1, 1) * ub(1, 2) + u(2, 1) * ub(2, 2)),
        (f"L0{first} + i L02", L(0, first) + I * L(0, 2), u(1, 2) * ub(1, 1) + u(2, 2) * ub(2, 1)),
        ("L10 - L13", L(1, 0) - L(1, 3), u(1, 2) * ub(2, 2) + u(2, 2) * ub(1, 2)),
        ("L10 + L13", L(1, 0) + L(1, 3), u(1, 1) * ub(2, 1) + u(2, 1) * ub(1, 1)),
        ("L11 - i L12", L(1, 1) - I * L(1, 2), u(1, 1) * ub(2, 2) + u(2, 1) * ub(1, 2)),
        ("L11 + i L12", L(1, 1) + I * L(1, 2), u(1, 2) * ub(2, 1) + u(2, 2) * ub(1, 1)),
    ]


def minkowski_metric(pi: PiTensor | None = None) -> Matrix:
    """g^{mu nu} = 1/2 pi^mu_{A Bdot} pibar^{nu Bdot A}, both pibar indices raised with eps."""
    if pi is None:
        pi = PiTensor()
    rows = []
    for mu in range(4):
        row = []
        for nu in range(4):
            acc = ZERO
            for a, b in itertools.product(IDX, repeat=2):
                # pibar^{nu Bdot A} = eps^{BD} eps^{AC} pibar^nu_{Ddot C}
                raised = ZERO
                for c, d in itertools.product(IDX, repeat=2):
                    e = EPSILON[b - 1, d - 1] * EPSILON[a - 1, c - 1]
                    if e:
                        raised = raised + e * pi.pibar(nu, d, c)
                acc = acc + pi.pi(mu, a, b) * raised
            row.append(acc * Fraction(1, 2))
        rows.append(row)
    return Matrix(rows)


def binary_invariance_check(pi: PiTensor | None = None, *, theta_theta_bar=None, mus=(0, 1, 2, 3)) -> bool:
    """Does pi^mu_{A Bdot} theta^A thetabar^B equal pibar^mu_{Bdot A} thetabar^B theta^A
    in the algebra with theta thetabar = phase * thetabar theta (default phase -j)?

    This holds exactly when pibar = phase * pi.  The default tensors have
    pibar = j * (-j pi), so they fail it by the factor j (they are the pair that
    reproduces the Minkowski metric).
    """
    from .poly import Gen, Poly
    from .presentation import AlgebraType, make_presentation
    from .rewrite import normalize

    if pi is None:
        pi = PiTensor()
    phase = -J if theta_theta_bar is None else Cyclo.coerce(theta_theta_bar)
    pres = make_presentation(AlgebraType.CombinedZ6, 2, 1, theta_theta_bar=phase)
    for mu in mus:
        terms = []
        for a, b in itertools.product(IDX, repeat=2):
            t, tb = Gen("theta", a), Gen("theta_bar", b)
            terms.append(((t, tb), pi.pi(mu, a, b)))
            terms.append(((tb, t), -pi.pibar(mu, b, a)))
        if normalize(Poly(terms), pres):
            return False
    return True
