"""Z3-graded exterior forms over polynomial coefficients, with d^3 = 0.

Form words are built from dx^i (grade 1) and d2x^i (grade 2).  The normal form
keeps every d2x to the right of all dx letters, so a word is a block of at most
three dx letters followed by at most one d2x:

* dx^i dx^k dx^m = j dx^k dx^m dx^i  (the same cyclic rule as theta cubes),
* d2x^k dx^i = j^2 dx^i d2x^k,
* d2x^i d2x^k = 0 and any four dx letters give 0.

Coefficient functions have grade 0 and commute with everything.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .poly import Gen
from .rewrite import canonical_rotation
from .scalars import J, J2, ONE, Cyclo

__all__ = [
    "PolyFn",
    "GradedForm",
    "dx",
    "d2x",
    "d",
    "normalize_form",
    "d3_check",
    "random_poly",
    "parse_polyfn",
    "PolySyntaxError",
]


class PolySyntaxError(ValueError):
    pass


def _trim(exps):
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _add_exps(a, b):
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return tuple(x + y for x, y in zip(a, b))


class PolyFn:
    """Polynomial in x1, x2, ... with rational coefficients.

    Monomials are exponent tuples with trailing zeros stripped, so the number of
    variables never has to be declared.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc = {}
        for exps, c in (terms.items() if isinstance(terms, dict) else terms or ()):
            e = _trim(exps)
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def const(cls, c) -> "PolyFn":
        return cls({(): c})

    @classmethod
    def var(cls, i: int) -> "PolyFn":
        if i < 1:
            raise ValueError("variables are numbered from 1")
        return cls({(0,) * (i - 1) + (1,): 1})

    def as_dict(self):
        return dict(self._terms)

    @property
    def nvars(self) -> int:
        return max((len(e) for e in self._terms), default=0)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def diff(self, i: int) -> "PolyFn":
        k = i - 1
        out = {}
        for e, c in self._terms.items():
            if k < len(e) and e[k]:
                ne = list(e)
                ne[k] -= 1
                out[tuple(ne)] = c * e[k]
        return PolyFn(out)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, PolyFn):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        return PolyFn(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return PolyFn({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PolyFn):
            return PolyFn({e: c * Fraction(other) for e, c in self._terms.items()})
        out = []
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out.append((_add_exps(e1, e2), c1 * c2))
        return PolyFn(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"PolyFn({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self._terms[e]
            factors = [f"x{i + 1}" + (f"^{p}" if p > 1 else "") for i, p in enumerate(e) if p]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append("*".join([str(c)] + factors))
        return " + ".join(parts).replace("+ -", "- ")


_VAR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_polyfn(text: str) -> PolyFn:
    """Parse ``"x1^2*x2 + 3*x3 - 1/2"``."""
    src = text.replace(" ", "")
    if not src:
        raise PolySyntaxError("empty polynomial")
    terms = re.findall(r"[+-]?[^+-]+", src)
    if "".join(terms) != src:
        raise PolySyntaxError(f"cannot parse polynomial {text!r}")
    out = []
    for term in terms:
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        coeff, exps = Fraction(sign), {}
        for factor in body.split("*"):
            m = _VAR.match(factor)
            if m:
                i = int(m.group(1))
                if i < 1:
                    raise PolySyntaxError(f"variables start at x1: {factor!r}")
                exps[i] = exps.get(i, 0) + int(m.group(2) or 1)
                continue
            try:
                coeff *= Fraction(factor)
            except (ValueError, ZeroDivisionError) as exc:
                raise PolySyntaxError(f"bad factor {factor!r} in {text!r}") from exc
        n = max(exps, default=0)
        out.append((tuple(exps.get(i, 0) for i in range(1, n + 1)), coeff))
    return PolyFn(out)


def random_poly(rng: random.Random, nvars: int, degree: int, terms: int = 6) -> PolyFn:
    """Random polynomial in x1..x_nvars of total degree <= degree, small integer coefficients."""
    out = []
    for _ in range(terms):
        total = rng.randint(0, degree)
        exps = [0] * nvars
        for _ in range(total):
            exps[rng.randrange(nvars)] += 1
        out.append((tuple(exps), rng.choice([-3, -2, -1, 1, 2, 3])))
    return PolyFn(out)


# -- forms ---------------------------------------------------------------------

_GRADE = {"dx": 1, "d2x": 2}


def _norm_word(word):
    """(factor, normal word) or None when the word vanishes."""
    w = list(word)
    coeff = ONE
    # bubble every d2x to the right past dx letters: d2x dx = j^2 dx d2x
    for i in range(1, len(w)):
        k = i
        while k > 0 and w[k - 1].kind == "d2x" and w[k].kind == "dx":
            w[k - 1], w[k] = w[k], w[k - 1]
            coeff = coeff * J2
            k -= 1
    dxs = tuple(g for g in w if g.kind == "dx")
    d2s = tuple(g for g in w if g.kind == "d2x")
    if len(d2s) > 1:
        return None
    hit = canonical_rotation(dxs, J)
    if hit is None:
        return None
    factor, dxs = hit
    return coeff * factor, dxs + d2s


@dataclass(frozen=True)
class GradedForm:
    """Finite sum of PolyFn coefficients times form words, kept normalized.

    Stored as ``{(monomial exponents, word): Cyclo}``.
    """

    terms: tuple

    @classmethod
    def build(cls, items) -> "GradedForm":
        acc = {}
        for (exps, word), c in items:
            c = Cyclo.coerce(c)
            if not c:
                continue
            hit = _norm_word(word)
            if hit is None:
                continue
            factor, nw = hit
            key = (_trim(exps), nw)
            acc[key] = acc.get(key, Cyclo(0)) + c * factor
        return cls(tuple(sorted(((k, v) for k, v in acc.items() if v), key=_term_key)))

    @classmethod
    def function(cls, f: PolyFn) -> "GradedForm":
        return cls.build(((e, ()), c) for e, c in f.as_dict().items())

    @classmethod
    def zero(cls) -> "GradedForm":
        return cls(())

    def items(self):
        return self.terms

    def as_dict(self):
        return dict(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        return GradedForm.build(self.terms + other.terms)

    def __neg__(self):
        return GradedForm(tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GradedForm":
        c = Cyclo.coerce(c)
        return GradedForm.build(((k, v * c) for k, v in self.terms))

    def times_function(self, f: PolyFn) -> "GradedForm":
        out = []
        for (e, w), c in self.terms:
            for fe, fc in f.as_dict().items():
                out.append(((_add_exps(e, fe), w), c * fc))
        return GradedForm.build(out)

    def __mul__(self, other):
        if isinstance(other, PolyFn):
            return self.times_function(other)
        out = []
        for (e1, w1), c1 in self.terms:
            for (e2, w2), c2 in other.terms:
                out.append(((_add_exps(e1, e2), w1 + w2), c1 * c2))
        return GradedForm.build(out)

    def grades(self) -> set:
        return {sum(_GRADE[g.kind] for g in w) % 3 for (_, w), _ in self.terms}

    def grade(self):
        """Z3 grade of a homogeneous form (0 for the zero form)."""
        gs = self.grades()
        if len(gs) > 1:
            raise ValueError("form is not homogeneous")
        return gs.pop() if gs else 0

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (e, w), c in self.terms:
            fn = str(PolyFn({e: 1}))
            word = " ".join(("d" if g.kind == "dx" else "dd") + f"x{g.index}" for g in w)
            bits = [b for b in (f"({c})" if c != 1 else "", "" if fn == "1" and w else fn, word) if b]
            parts.append(" * ".join(bits))
        return " + ".join(parts)


def _term_key(item):
    (e, w), _ = item
    return len(w), tuple((g.kind, g.index) for g in w), e


def dx(i: int) -> GradedForm:
    return GradedForm.build([(((), (Gen("dx", i),)), ONE)])


def d2x(i: int) -> GradedForm:
    return GradedForm.build([(((), (Gen("d2x", i),)), ONE)])


def normalize_form(form) -> GradedForm:
    """Normal form; accepts a GradedForm or an iterable of ((exps, word), coeff)."""
    items = form.terms if isinstance(form, GradedForm) else form
    return GradedForm.build(items)


def _d_word(word):
    """d of a bare form word as a list of (coeff, word)."""
    out = []
    sign = ONE
    for k, g in enumerate(word):
        if g.kind == "dx":
            out.append((sign, word[:k] + (Gen("d2x", g.index),) + word[k + 1:]))
        # d(d2x) = 0
        sign = sign * (J if _GRADE[g.kind] == 1 else J2)
    return out


def d(form) -> GradedForm:
    """Exterior differential with d(w v) = (dw) v + j^grade(w) w dv."""
    if isinstance(form, PolyFn):
        form = GradedForm.function(form)
    out = []
    for (e, w), c in form.terms:
        f = PolyFn({e: 1})
        # d of the coefficient function sits in front of the word
        for i in range(1, len(e) + 1):
            df = f.diff(i)
            for fe, fc in df.as_dict().items():
                out.append(((fe, (Gen("dx", i),) + w), c * fc))
        for s, nw in _d_word(w):
            out.append(((e, nw), c * s))
    return GradedForm.build(out)


def d3_check(f: PolyFn) -> bool:
    return not d(d(d(f)))
