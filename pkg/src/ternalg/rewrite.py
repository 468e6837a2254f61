"""Normal forms in the quotient algebra by deterministic rewriting.

Two moves suffice for the Lambda-type and combined algebras:

* binary phase commutations sort every word into the kind order
  xi < xi_bar < theta < theta_bar (xi blocks also sorted by index, picking up
  a sign per swap; a repeated xi letter kills the word);
* every contiguous block of cubic generators is either killed (length >= 4,
  or a rotation-fixed triple) or replaced by its lexicographically least
  cyclic rotation times the matching power of the block phase.

Whether these moves are confluent is not argued here; the oracle module
checks the result against exact linear algebra instead.
"""

from __future__ import annotations

import itertools

from .poly import KIND_RANK, Gen, Poly, UnknownGeneratorError
from .presentation import AlgebraType, Presentation
from .scalars import ONE

__all__ = [
    "Gen",
    "Poly",
    "normalize",
    "normalize_word",
    "multiply",
    "six_sum",
    "canonical_rotation",
    "RewriteUnsupportedError",
]

_ANTI = ("xi", "xi_bar")

_SUPPORTED = (
    AlgebraType.Lambda,
    AlgebraType.Lambda_bar,
    AlgebraType.Grassmann,
    AlgebraType.CombinedZ6,
)


class RewriteUnsupportedError(ValueError):
    """Raised for presentations whose relations are not covered by the two rewrite moves."""


def canonical_rotation(block, phase):
    """Rewrite a cubic block ``abc`` using ``abc = phase * bca``.

    Returns ``(factor, rotated)`` with ``block == factor * rotated`` and
    ``rotated`` the least rotation, or ``None`` when the block vanishes.
    Blocks shorter than three letters are returned unchanged.
    """
    block = tuple(block)
    if len(block) < 3:
        return ONE, block
    if len(block) > 3:
        return None
    rotations = [block[r:] + block[:r] for r in range(3)]
    if rotations[0] == rotations[1]:
        # a b c = phase * b c a with both sides equal: (1 - phase) abc = 0
        return None if phase != ONE else (ONE, block)
    r = min(range(3), key=lambda k: rotations[k])
    return phase ** r, rotations[r]


def _sort_key(g):
    return KIND_RANK[g.kind], (g.index if g.kind in _ANTI else 0)


class _Rewriter:
    def __init__(self, pres: Presentation):
        if pres.algebra_type not in _SUPPORTED:
            raise RewriteUnsupportedError(
                f"no rewriting normal form for {pres.algebra_type.name}; use the oracle")
        self.pres = pres
        self.gens = frozenset(pres.generators)
        # swapping an out-of-order pair (later, earlier) -> (earlier, later)
        self.swap = {}
        for (k1, k2), c in pres.phases.items():
            self.swap[(k2, k1)] = c.inverse()
        self.cyclic = dict(pres.cyclic_phases)
        self.cache = {}

    def word(self, word):
        """Normal form of a single word as (coeff, word) or None for zero."""
        hit = self.cache.get(word)
        if hit is not None or word in self.cache:
            return hit
        for g in word:
            if g not in self.gens:
                raise UnknownGeneratorError(f"generator {g} is not part of this presentation")
        result = self._reduce(word)
        self.cache[word] = result
        return result

    def _reduce(self, word):
        w = list(word)
        coeff = ONE
        # insertion sort; each adjacent swap contributes its phase
        for i in range(1, len(w)):
            k = i
            while k > 0 and _sort_key(w[k - 1]) > _sort_key(w[k]):
                left, right = w[k - 1], w[k]
                if left.kind == right.kind:
                    coeff = coeff * self.swap[(left.kind, left.kind)]
                else:
                    coeff = coeff * self.swap[(left.kind, right.kind)]
                w[k - 1], w[k] = right, left
                k -= 1
        for a, b in zip(w, w[1:]):
            if a == b and a.kind in _ANTI:
                return None
        out = []
        for kind, block in itertools.groupby(w, key=lambda g: g.kind):
            block = tuple(block)
            phase = self.cyclic.get(kind)
            if phase is not None:
                hit = canonical_rotation(block, phase)
                if hit is None:
                    return None
                factor, block = hit
                coeff = coeff * factor
            out.extend(block)
        return coeff, tuple(out)

    def poly(self, p: Poly) -> Poly:
        acc = []
        for w, c in p.as_dict().items():
            hit = self.word(w)
            if hit is not None:
                acc.append((hit[1], c * hit[0]))
        return Poly(acc)


_REWRITERS: dict = {}


def _rewriter(pres):
    rw = _REWRITERS.get(id(pres))
    if rw is None or rw.pres is not pres:
        rw = _Rewriter(pres)
        _REWRITERS[id(pres)] = rw
    return rw


def normalize(p, pres: Presentation) -> Poly:
    """Canonical representative of ``p`` in the quotient by ``pres``."""
    if not isinstance(p, Poly):
        p = Poly.word(p)
    return _rewriter(pres).poly(p)


def normalize_word(word, pres: Presentation):
    """``(coeff, word)`` with ``word == coeff * normal word``, or ``None`` if the word vanishes."""
    return _rewriter(pres).word(tuple(word))


def multiply(p, q, pres: Presentation) -> Poly:
    if not isinstance(p, Poly):
        p = Poly.word(p)
    if not isinstance(q, Poly):
        q = Poly.word(q)
    return normalize(p.concat(q), pres)


def six_sum(a, b, c, pres: Presentation) -> Poly:
    """Normalized sum of all six orderings of three degree-one factors."""
    factors = []
    for x in (a, b, c):
        if isinstance(x, Gen):
            x = (x,)
        x = tuple(x)
        if len(x) != 1:
            raise ValueError("six_sum takes three single generators")
        factors.append(x[0])
    total = Poly([(perm, ONE) for perm in itertools.permutations(factors)])
    return normalize(total, pres)
