"""Ground truth by exact linear algebra.

The degree-d slice of the two-sided ideal is spanned by the framed relations
u*r*v.  Reducing those rows over Q(z12) gives the quotient directly: words that
end up as pivots are expressible through smaller words, the rest form a basis.
Nothing here uses the rewrite module.

Rows only ever couple words that share a row, so elimination runs separately on
each connected block of words; for the permutation-type relations of the
homogeneous algebras these blocks are tiny.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .poly import Poly, format_word, word_key
from .presentation import AlgebraType, Presentation, make_presentation
from .scalars import ONE, ZERO

__all__ = [
    "QuotientBasis",
    "Reducer",
    "quotient_basis",
    "coords",
    "poly_coords",
    "ideal_contains",
    "framed_rows",
    "nonhomogeneous_collapse_check",
    "DegreeCapError",
    "AlphabetMismatchError",
    "DEFAULT_DEGREE_CAP",
]

DEFAULT_DEGREE_CAP = 6


class DegreeCapError(ValueError):
    pass


class AlphabetMismatchError(ValueError):
    pass


def all_words(gens, degree):
    return [tuple(w) for w in itertools.product(gens, repeat=degree)]


def framed_rows(pres: Presentation, degree: int, *, max_degree: int | None = None):
    """Yield u*r*v for every relation r and framing words u, v.

    With ``max_degree`` unset only homogeneous relations of length <= degree are
    framed to total length exactly ``degree``.  With ``max_degree`` set, every
    relation is framed by all u, v whose lengths keep the longest term within
    ``max_degree`` (used for non-homogeneous presentations).
    """
    gens = pres.generators
    for rel in pres.relations:
        top = max(rel.degrees())
        if max_degree is None:
            if rel.degrees() != {top} or top > degree:
                continue
            extras = [degree - top]
        else:
            if top > max_degree:
                continue
            extras = range(0, max_degree - top + 1)
        terms = list(rel.as_dict().items())
        for extra in extras:
            for left in range(extra + 1):
                us = all_words(gens, left)
                vs = all_words(gens, extra - left)
                for u in us:
                    for v in vs:
                        yield {u + w + v: c for w, c in terms}


class Reducer:
    """Incremental row echelon form with a chosen total order on words.

    The leading word of a row is its largest word under ``key``; pivots are
    therefore as large as possible and surviving (basis) words as small as
    possible.
    """

    def __init__(self, key=word_key):
        self.key = key
        self.pivots = {}  # leading word -> row dict, leading coeff 1
        self._reduced = False

    def _lead(self, row):
        return max(row, key=self.key)

    def reduce(self, row):
        """Reduce a row (dict word -> Cyclo) by the current pivots, in place order."""
        row = {w: c for w, c in row.items() if c}
        done = {}
        key = self.key
        while row:
            lead = max(row, key=key)
            c = row.pop(lead)
            piv = self.pivots.get(lead)
            if piv is None:
                done[lead] = c
                continue
            for w, v in piv.items():
                if w == lead:
                    continue
                nv = row.get(w, ZERO) - c * v
                if nv:
                    row[w] = nv
                else:
                    row.pop(w, None)
        return done

    def add(self, row) -> bool:
        """Insert a row; returns True if it increased the rank."""
        red = self.reduce(row)
        if not red:
            return False
        lead = self._lead(red)
        inv = red[lead].inverse()
        self.pivots[lead] = {w: c * inv for w, c in red.items()}
        self._reduced = False
        return True

    def finish(self):
        """Back-substitute so pivot rows only mention non-pivot words."""
        if self._reduced:
            return
        for lead in sorted(self.pivots, key=self.key):
            row = self.pivots[lead]
            tail = {w: c for w, c in row.items() if w != lead}
            tail = self.reduce(tail)
            tail[lead] = ONE
            self.pivots[lead] = tail
        self._reduced = True

    @property
    def rank(self):
        return len(self.pivots)

    def residue(self, word_or_row):
        """Fully reduced representative as a dict over non-pivot words."""
        self.finish()
        row = word_or_row if isinstance(word_or_row, dict) else {tuple(word_or_row): ONE}
        return self.reduce(row)


def _components(rows):
    parent = {}

    def find(x):
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for row in rows:
        ws = list(row)
        a = find(ws[0])
        for w in ws[1:]:
            b = find(w)
            if a != b:
                parent[b] = a
    groups = {}
    for i, row in enumerate(rows):
        groups.setdefault(find(next(iter(row))), []).append(i)
    return groups, find


@dataclass
class QuotientBasis:
    degree: int
    words: list
    basis: list
    reductions: dict = field(repr=False)  # pivot word -> {basis word: coeff}
    rank: int = 0

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def pivot_words(self):
        return list(self.reductions)

    def index(self, word) -> int:
        return self._index[word]

    def __post_init__(self):
        self._index = {w: i for i, w in enumerate(self.basis)}

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "dimension": self.dimension,
            "basis": [format_word(w) for w in self.basis],
        }


def quotient_basis(pres: Presentation, degree: int, *, cap: int = DEFAULT_DEGREE_CAP,
                   key=word_key) -> QuotientBasis:
    """Basis of the degree-``degree`` slice of the quotient algebra."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree > cap:
        raise DegreeCapError(f"degree {degree} exceeds the cap {cap}")
    if not pres.is_homogeneous:
        raise ValueError("quotient_basis needs homogeneous relations; "
                         "use nonhomogeneous_collapse_check for the extended algebra")
    words = all_words(pres.generators, degree)
    rows = [r for r in (dict((w, c) for w, c in row.items() if c) for row in framed_rows(pres, degree)) if r]
    reductions = {}
    rank = 0
    if rows:
        groups, _ = _components(rows)
        for idx in groups.values():
            red = Reducer(key)
            for i in idx:
                red.add(rows[i])
            red.finish()
            rank += red.rank
            for lead, row in red.pivots.items():
                reductions[lead] = {w: -c for w, c in row.items() if w != lead}
    basis = sorted((w for w in words if w not in reductions), key=key)
    return QuotientBasis(degree=degree, words=sorted(words, key=key), basis=basis,
                         reductions=reductions, rank=rank)


def coords(word, qb: QuotientBasis) -> list:
    """Coordinates of the class of ``word`` on ``qb.basis``."""
    word = tuple(word)
    if len(word) != qb.degree:
        raise ValueError(f"word of degree {len(word)} against a degree-{qb.degree} basis")
    vec = [ZERO] * qb.dimension
    if word in qb.reductions:
        for w, c in qb.reductions[word].items():
            vec[qb.index(w)] = c
    else:
        vec[qb.index(word)] = ONE
    return vec


def poly_coords(p: Poly, qb: QuotientBasis) -> list:
    vec = [ZERO] * qb.dimension
    for w, c in p.as_dict().items():
        for k, v in enumerate(coords(w, qb)):
            if v:
                vec[k] = vec[k] + c * v
    return vec


def _ideal_reducer(pres, degree, key=word_key):
    red = Reducer(key)
    for row in framed_rows(pres, degree):
        red.add(row)
    red.finish()
    return red


def ideal_contains(container: Presentation, contained: Presentation, degree: int) -> bool:
    """True iff every framed relation of ``contained`` in this degree lies in
    the ideal slice generated by ``container``."""
    if set(container.generators) != set(contained.generators):
        raise AlphabetMismatchError("presentations use different generator alphabets")
    red = _ideal_reducer(container, degree)
    for row in framed_rows(contained, degree):
        if red.residue(row):
            return False
    return True


def nonhomogeneous_collapse_check(pres: Presentation | None = None, *, N: int = 2, n: int = 2,
                                  rho=None, conjugate: bool = False, max_degree: int = 4) -> bool:
    """Do all theta*xi and xi*theta products vanish once cubes are tied to xi?

    The ideal is truncated to words of length <= ``max_degree``; every row used
    is a genuine ideal element, so a zero residue proves the product vanishes.
    With ``conjugate`` the theta-bar/xi-bar sector is checked instead.
    """
    if pres is None:
        pres = make_presentation(AlgebraType.CombinedZ6NonHomogeneous, N, n, rho=rho,
                                 include_conjugates=True)
    if conjugate:
        thetas = [g for g in pres.generators if g.kind == "theta_bar"]
        xis = [g for g in pres.generators if g.kind == "xi_bar"]
    else:
        thetas = [g for g in pres.generators if g.kind == "theta"]
        xis = [g for g in pres.generators if g.kind == "xi"]
    targets = [(t, x) for t in thetas for x in xis] + [(x, t) for t in thetas for x in xis]

    rows = [r for r in framed_rows(pres, max_degree, max_degree=max_degree) if r]
    groups, find = _components(rows)
    reducers = {}
    for target in targets:
        root = find(target)
        if root not in groups:
            return False
        red = reducers.get(root)
        if red is None:
            red = reducers[root] = Reducer()
            for i in groups[root]:
                red.add(rows[i])
        if red.residue(target):
            return False
    return True
