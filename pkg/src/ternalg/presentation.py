"""Graded generator alphabets and the relation sets of every algebra type.

The single-family cubic algebras (S, S-bar, S1, S0, Lambda0, Lambda1, Lambda,
Lambda-bar) live on N generators of one kind.  The combined algebra mixes
cubic theta generators with anticommuting xi generators through binary phase
commutation rules; all such rules are kept in one phase table so that they can
be swapped out (the omega scan and the two theta/theta-bar conventions rely on
this).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from types import MappingProxyType

from .poly import Gen, Poly, UnknownGeneratorError
from .scalars import J, J2, ONE, Cyclo

__all__ = [
    "AlgebraType",
    "Grade",
    "Presentation",
    "make_presentation",
    "grade_of",
    "gen_grade",
    "z6_iso",
    "z6_iso_inverse",
    "relations_at",
    "default_phases",
    "PresentationError",
]


class PresentationError(ValueError):
    pass


class AlgebraType(enum.Enum):
    S = "s"
    S_bar = "sbar"
    S1 = "s1"
    S0 = "s0"
    Lambda0 = "lambda0"
    Lambda1 = "lambda1"
    Lambda = "lambda"
    Lambda_bar = "lambdabar"
    Grassmann = "grassmann"
    CombinedZ6 = "combined"
    CombinedZ6NonHomogeneous = "combined-nonhom"

    @classmethod
    def parse(cls, text: str) -> "AlgebraType":
        key = text.strip().lower().replace("_", "").replace("-", "")
        for member in cls:
            if key in (member.value.replace("-", ""), member.name.lower().replace("_", "")):
                return member
        raise PresentationError(f"unknown algebra type {text!r}")

    @property
    def combined(self) -> bool:
        return self in (AlgebraType.CombinedZ6, AlgebraType.CombinedZ6NonHomogeneous)


SINGLE_FAMILY = (
    AlgebraType.S, AlgebraType.S_bar, AlgebraType.S1, AlgebraType.S0,
    AlgebraType.Lambda0, AlgebraType.Lambda1, AlgebraType.Lambda, AlgebraType.Lambda_bar,
)


# -- gradings ----------------------------------------------------------------

_Z3 = {"theta": 1, "theta_bar": 2, "xi": 0, "xi_bar": 0, "dx": 1, "d2x": 2}
_Z2 = {"theta": 0, "theta_bar": 0, "xi": 1, "xi_bar": 1, "dx": 0, "d2x": 0}
_Z6 = {"theta": 1, "theta_bar": 5, "xi": 3, "xi_bar": 3, "dx": 1, "d2x": 2}

# (z3, z2) pair -> exponent of q
_PAIR_TO_Q = {(0, 0): 0, (2, 1): 1, (1, 0): 2, (0, 1): 3, (2, 0): 4, (1, 1): 5}
_Q_TO_PAIR = {v: k for k, v in _PAIR_TO_Q.items()}


@dataclass(frozen=True)
class Grade:
    """Combined grade. ``z6`` is carried separately: the generator assignment
    theta -> 1, theta_bar -> 5, xi -> 3 is not the image of (z3, z2) under the
    pair table, so the two are tracked side by side."""

    z3: int = 0
    z2: int = 0
    z6: int = 0

    def __post_init__(self):
        object.__setattr__(self, "z3", self.z3 % 3)
        object.__setattr__(self, "z2", self.z2 % 2)
        object.__setattr__(self, "z6", self.z6 % 6)

    def __add__(self, other):
        return Grade(self.z3 + other.z3, self.z2 + other.z2, self.z6 + other.z6)

    @property
    def pair(self):
        return self.z3, self.z2


def z6_iso(pair) -> int:
    """Exponent k with the pair (z3, z2) identified with q^k."""
    a, lam = pair
    try:
        return _PAIR_TO_Q[(a % 3, lam % 2)]
    except KeyError:  # pragma: no cover - unreachable after the mods
        raise PresentationError(f"invalid grade pair {pair!r}")


def z6_iso_inverse(k: int):
    return _Q_TO_PAIR[k % 6]


def gen_grade(g: Gen) -> Grade:
    return Grade(_Z3[g.kind], _Z2[g.kind], _Z6[g.kind])


# -- phase table ---------------------------------------------------------------


def default_phases(omega=J, theta_theta_bar=J) -> dict:
    """Binary commutation phases keyed by (earlier kind, later kind) in the
    canonical order xi < xi_bar < theta < theta_bar, meaning

        earlier * later = phase * later * earlier.
    """
    return {
        ("xi", "xi"): -ONE,
        ("xi_bar", "xi_bar"): -ONE,
        ("xi", "xi_bar"): -ONE,
        ("xi", "theta"): Cyclo.coerce(omega),
        ("xi", "theta_bar"): J2,
        ("theta", "theta_bar"): Cyclo.coerce(theta_theta_bar),
        # theta xi_bar = j^2 xi_bar theta, i.e. xi_bar theta = j theta xi_bar
        ("xi_bar", "theta"): J,
        # theta_bar xi_bar = j xi_bar theta_bar, i.e. xi_bar theta_bar = j^2 theta_bar xi_bar
        ("xi_bar", "theta_bar"): J2,
    }


# -- presentations -------------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    algebra_type: AlgebraType
    N: int
    n: int = 0
    phases: MappingProxyType = field(default_factory=lambda: MappingProxyType({}))
    cyclic_phases: MappingProxyType = field(default_factory=lambda: MappingProxyType({}))
    include_conjugates: bool = True
    generators: tuple = ()
    relations: tuple = ()
    rho: MappingProxyType | None = None

    def __hash__(self):
        return hash((self.algebra_type, self.N, self.n, self.generators, self.relations))

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (self.algebra_type, self.N, self.n, self.generators, self.relations) == (
            other.algebra_type, other.N, other.n, other.generators, other.relations)

    def check_word(self, word):
        gens = set(self.generators)
        for g in word:
            if g not in gens:
                raise UnknownGeneratorError(f"generator {g} is not part of this presentation")

    @property
    def is_homogeneous(self) -> bool:
        return all(r.is_homogeneous() for r in self.relations)

    def describe(self) -> dict:
        return {
            "algebra": self.algebra_type.value,
            "N": self.N,
            "n": self.n,
            "generators": [str(g) for g in self.generators],
        }


def _cube_relations(gens, atype):
    """Cubic relation polynomials for one of the eight single-family types."""
    rels = []
    for a, b, c in itertools.product(gens, repeat=3):
        abc, bca, cab = (a, b, c), (b, c, a), (c, a, b)
        if atype is AlgebraType.S:
            p = Poly([(abc, ONE), (bca, J), (cab, J2)])
        elif atype is AlgebraType.S_bar:
            p = Poly([(abc, ONE), (bca, J2), (cab, J)])
        elif atype is AlgebraType.S1:
            p = Poly([(abc, ONE), (bca, -ONE)])
        elif atype is AlgebraType.S0:
            rels.append(Poly([(abc, ONE), (bca, -ONE)]))
            p = Poly([(abc, ONE), ((b, a, c), -ONE)])
        elif atype is AlgebraType.Lambda0:
            p = Poly([(perm, ONE) for perm in itertools.permutations((a, b, c))])
        elif atype is AlgebraType.Lambda1:
            p = Poly([(abc, ONE), (bca, ONE), (cab, ONE)])
        elif atype is AlgebraType.Lambda:
            p = Poly([(abc, ONE), (bca, -J)])
        elif atype is AlgebraType.Lambda_bar:
            p = Poly([(abc, ONE), (bca, -J2)])
        else:  # pragma: no cover
            raise PresentationError(f"{atype} has no cubic template")
        rels.append(p)
    return rels


def _j_skew(gens, phase):
    return [Poly([((a, b, c), ONE), ((b, c, a), -phase)]) for a, b, c in itertools.product(gens, repeat=3)]


def _binary_relations(gens_by_kind, phases):
    rels = []
    for (k1, k2), c in phases.items():
        g1s, g2s = gens_by_kind.get(k1, ()), gens_by_kind.get(k2, ())
        if k1 == k2:
            pairs = [(a, b) for a in g1s for b in g1s if a.index <= b.index]
        else:
            pairs = [(a, b) for a in g1s for b in g2s]
        for a, b in pairs:
            rels.append(Poly([((a, b), ONE), ((b, a), -c)]))
    return rels


def _nonhom_relations(thetas, xis, rho):
    rels = []
    for a, b, c in itertools.product(thetas, repeat=3):
        terms = [((a, b, c), ONE)]
        for x in xis:
            coeff = rho.get((a.index, b.index, c.index, x.index))
            if coeff:
                terms.append(((x,), -coeff))
        rels.append(Poly(terms))
    return rels


def _dedupe(polys):
    seen, out = set(), []
    for p in polys:
        if p and p not in seen:
            seen.add(p)
            out.append(p)
    return tuple(out)


def make_presentation(
    algebra_type,
    N: int,
    n: int = 0,
    *,
    omega=None,
    theta_theta_bar=None,
    phases=None,
    include_conjugates: bool = True,
    bar_alphabet: bool = False,
    rho=None,
) -> Presentation:
    """Instantiate the relation set of ``algebra_type``.

    ``omega`` is the xi/theta phase (xi theta = omega theta xi, default j) and
    ``theta_theta_bar`` the theta/theta-bar phase (default j; pass ``-J`` for the
    modified rule used with the pi tensors).  ``phases`` overrides any entry of
    :func:`default_phases`.  ``bar_alphabet`` writes the single-family types on
    theta-bar letters instead of theta letters.  ``rho`` maps
    ``(A, B, C, alpha)`` to the coefficient of xi^alpha in theta^A theta^B theta^C;
    it defaults to the canonical two-generator tensor.
    """
    if isinstance(algebra_type, str):
        algebra_type = AlgebraType.parse(algebra_type)
    if algebra_type is not AlgebraType.Grassmann and N < 1:
        raise PresentationError("N must be at least 1")
    if n < 0:
        raise PresentationError("n must be non-negative")
    if algebra_type.combined and n == 0:
        raise PresentationError(f"{algebra_type.name} needs n >= 1 xi generators")

    cyclic = {}
    rho_map = None
    if algebra_type in SINGLE_FAMILY:
        kind = "theta_bar" if bar_alphabet else "theta"
        gens = tuple(Gen(kind, i) for i in range(1, N + 1))
        relations = _cube_relations(gens, algebra_type)
        if algebra_type is AlgebraType.Lambda:
            cyclic[kind] = J
        elif algebra_type is AlgebraType.Lambda_bar:
            cyclic[kind] = J2
        table = {}
    elif algebra_type is AlgebraType.Grassmann:
        if n < 1:
            raise PresentationError("the Grassmann presentation needs n >= 1")
        gens = tuple(Gen("xi", i) for i in range(1, n + 1))
        table = {("xi", "xi"): -ONE}
        relations = _binary_relations({"xi": gens}, table)
    else:
        table = default_phases(omega if omega is not None else J,
                               theta_theta_bar if theta_theta_bar is not None else J)
        if phases:
            table.update({k: Cyclo.coerce(v) for k, v in phases.items()})
        kinds = ["xi", "theta"] + (["xi_bar", "theta_bar"] if include_conjugates else [])
        by_kind = {}
        for k in kinds:
            count = n if k.startswith("xi") else N
            by_kind[k] = tuple(Gen(k, i) for i in range(1, count + 1))
        table = {k: v for k, v in table.items() if k[0] in by_kind and k[1] in by_kind}
        gens = tuple(g for k in ("xi", "xi_bar", "theta", "theta_bar") for g in by_kind.get(k, ()))
        relations = _binary_relations(by_kind, table)
        relations += _j_skew(by_kind["theta"], J)
        cyclic["theta"] = J
        if include_conjugates:
            relations += _j_skew(by_kind["theta_bar"], J2)
            cyclic["theta_bar"] = J2
        if algebra_type is AlgebraType.CombinedZ6NonHomogeneous:
            if rho is None:
                from .covariance import rho_canonical

                rho = rho_canonical("upper").as_dict()
            rho_map = {k: Cyclo.coerce(v) for k, v in rho.items()}
            relations += _nonhom_relations(by_kind["theta"], by_kind["xi"], rho_map)
            if include_conjugates:
                rho_bar = {k: v.conjugate() for k, v in rho_map.items()}
                relations += _nonhom_relations(by_kind["theta_bar"], by_kind["xi_bar"], rho_bar)

    return Presentation(
        algebra_type=algebra_type,
        N=N,
        n=n,
        phases=MappingProxyType(dict(table)),
        cyclic_phases=MappingProxyType(cyclic),
        include_conjugates=include_conjugates,
        generators=gens,
        relations=_dedupe(relations),
        rho=MappingProxyType(rho_map) if rho_map is not None else None,
    )


def grade_of(word, pres: Presentation | None = None) -> Grade:
    """Sum of generator grades (z3 mod 3, z2 mod 2, z6 mod 6)."""
    if pres is not None:
        pres.check_word(word)
    total = Grade()
    for g in word:
        total = total + gen_grade(g)
    return total


def relations_at(pres: Presentation, degree: int) -> list:
    """All relation polynomials whose terms are words of exactly ``degree`` letters."""
    if degree < 2:
        raise PresentationError("relations start in degree 2")
    return [r for r in pres.relations if r.degrees() == {degree}]
