"""Generators, words and polynomials of the free algebra.

A word is a plain tuple of :class:`Gen`; the empty tuple is the unit. A
:class:`Poly` is a finite linear combination of words with :class:`Cyclo`
coefficients, kept canonical (no zero terms, terms sorted by word order).
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .scalars import ONE, ZERO, Cyclo, parse_scalar

__all__ = [
    "Gen",
    "Word",
    "Poly",
    "KINDS",
    "word_key",
    "parse_gen",
    "parse_word",
    "parse_poly",
    "format_word",
    "UnknownGeneratorError",
]

# canonical kind order used for sorting words: xi < xi_bar < theta < theta_bar
KINDS = ("xi", "xi_bar", "theta", "theta_bar", "dx", "d2x")
KIND_RANK = {k: r for r, k in enumerate(KINDS)}
_PREFIX = {"xi": "x", "xi_bar": "xb", "theta": "t", "theta_bar": "tb", "dx": "dx", "d2x": "ddx"}
_FROM_PREFIX = {v: k for k, v in _PREFIX.items()}
_TOKEN = re.compile(r"^(ddx|dx|tb|t|xb|x)(\d+)$")


class UnknownGeneratorError(ValueError):
    pass


class Gen(NamedTuple):
    kind: str
    index: int

    def __str__(self):
        return f"{_PREFIX[self.kind]}{self.index}"

    @property
    def key(self):
        return KIND_RANK[self.kind], self.index


Word = tuple  # tuple[Gen, ...]


def word_key(word):
    """Degree-lexicographic order on words."""
    return len(word), tuple(KIND_RANK[g.kind] * 1000 + g.index for g in word)


def parse_gen(token: str) -> Gen:
    m = _TOKEN.match(token.strip())
    if m is None:
        raise UnknownGeneratorError(f"not a generator token: {token!r}")
    index = int(m.group(2))
    if index < 1:
        raise UnknownGeneratorError(f"generator indices start at 1: {token!r}")
    return Gen(_FROM_PREFIX[m.group(1)], index)


def parse_word(text: str) -> tuple:
    return tuple(parse_gen(t) for t in text.split())


def format_word(word) -> str:
    return " ".join(str(g) for g in word) if word else "1"


class Poly:
    """Sparse linear combination of words."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for word, coeff in items:
                word = tuple(word)
                c = acc.get(word)
                coeff = Cyclo.coerce(coeff)
                acc[word] = coeff if c is None else c + coeff
        object.__setattr__(self, "_terms", {w: c for w, c in acc.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def word(cls, word, coeff=ONE) -> "Poly":
        return cls([(tuple(word), coeff)])

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    def terms(self):
        """(word, coeff) pairs in word order."""
        return sorted(self._terms.items(), key=lambda t: word_key(t[0]))

    def as_dict(self) -> dict:
        return dict(self._terms)

    def coeff(self, word) -> Cyclo:
        return self._terms.get(tuple(word), ZERO)

    def words(self):
        return [w for w, _ in self.terms()]

    def degrees(self) -> set:
        return {len(w) for w in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        return Poly(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return Poly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Poly":
        c = Cyclo.coerce(c)
        return Poly({w: c * v for w, v in self._terms.items()})

    def concat(self, other) -> "Poly":
        """Free (unreduced) product: concatenate words bilinearly."""
        out = []
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                out.append((w1 + w2, c1 * c2))
        return Poly(out)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.terms():
            if not w:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(format_word(w))
            else:
                parts.append(f"({c}) * {format_word(w)}")
        return " + ".join(parts)


def _split_terms(text):
    terms, depth, start = [], 0, 0
    prev = ""
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0 and prev not in "^*/(+-":
            terms.append(text[start:i])
            start = i
        if not ch.isspace():
            prev = ch
    terms.append(text[start:])
    return [t.strip() for t in terms if t.strip()]


def _is_word(text):
    toks = text.split()
    return bool(toks) and all(_TOKEN.match(t) for t in toks)


def parse_poly(text: str) -> Poly:
    """Parse sums like ``"t1 t2 t3 - j^2 * t2 t3 t1 + (1+i) * x1"``."""
    out = []
    for term in _split_terms(text):
        sign = ONE
        body = term
        if body[0] in "+-":
            sign = ONE if body[0] == "+" else -ONE
            body = body[1:].strip()
        if _is_word(body):
            out.append((parse_word(body), sign))
            continue
        depth, cut = 0, -1
        for i, ch in enumerate(body):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "*" and depth == 0 and _is_word(body[i + 1:]):
                cut = i
                break
        if cut >= 0:
            out.append((parse_word(body[cut + 1:]), sign * parse_scalar(body[:cut])))
        else:
            out.append(((), sign * parse_scalar(body)))
    return Poly(out)
