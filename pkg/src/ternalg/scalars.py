"""Exact arithmetic in the cyclotomic field Q(z), z = exp(i*pi/6).

Every phase the algebras need lives here: j = z^4, q = z^2, i = z^3 and -1 = z^6.
Elements are stored on the power basis {1, z, z^2, z^3} modulo the minimal
polynomial x^4 - x^2 + 1, with Fraction coefficients, so nothing is ever rounded.

    >>> J + J * J
    Cyclo(-1)
    >>> parse_scalar("q*q^5")
    Cyclo(1)
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "Cyclo",
    "zeta_power",
    "arith",
    "conj",
    "inv",
    "parse_scalar",
    "ScalarSyntaxError",
    "ZERO",
    "ONE",
    "J",
    "J2",
    "Q",
    "I",
]

_ZERO4 = (Fraction(0),) * 4


def _reduce(p):
    """Fold a coefficient list of degree <= 6 back onto the basis, using z^k = z^(k-2) - z^(k-4)."""
    p = list(p) + [Fraction(0)] * (7 - len(p))
    for k in (6, 5, 4):
        c = p[k]
        if c:
            p[k] = Fraction(0)
            p[k - 2] += c
            p[k - 4] -= c
    return tuple(p[:4])


class Cyclo:
    """An element c0 + c1 z + c2 z^2 + c3 z^3 of Q(z12). Immutable and hashable."""

    __slots__ = ("_c",)

    def __init__(self, *coeffs):
        if len(coeffs) > 4:
            raise ValueError("at most four power-basis coefficients")
        c = [Fraction(x) for x in coeffs] + [Fraction(0)] * (4 - len(coeffs))
        object.__setattr__(self, "_c", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclo is immutable")

    @classmethod
    def _raw(cls, c):
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_c", c)
        return obj

    @classmethod
    def coerce(cls, x) -> "Cyclo":
        if isinstance(x, Cyclo):
            return x
        if isinstance(x, (int, Fraction, Rational)):
            return cls(x)
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Cyclo")

    @property
    def coeffs(self) -> tuple:
        return self._c

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        try:
            other = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclo._raw(tuple(a + b for a, b in zip(self._c, other._c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._raw(tuple(-a for a in self._c))

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclo._raw(tuple(a - b for a, b in zip(self._c, other._c)))

    def __rsub__(self, other):
        return Cyclo.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo._raw(tuple(a * other for a in self._c))
        try:
            other = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._c, other._c
        p = [Fraction(0)] * 7
        for i, x in enumerate(a):
            if x:
                for k, y in enumerate(b):
                    if y:
                        p[i + k] += x * y
        return Cyclo._raw(_reduce(p))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(z12)")
            return Cyclo._raw(tuple(a / other for a in self._c))
        try:
            other = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclo.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- field structure ---------------------------------------------------

    def galois(self, k: int) -> "Cyclo":
        """Apply the automorphism z -> z^k (k coprime to 12)."""
        if k % 2 == 0 or k % 3 == 0:
            raise ValueError(f"z -> z^{k} is not an automorphism")
        out = ZERO
        for i, c in enumerate(self._c):
            if c:
                out = out + zeta_power(i * k) * c
        return out

    def conjugate(self) -> "Cyclo":
        return self.galois(11)

    def norm(self) -> Fraction:
        """Field norm down to Q: the product of the four Galois conjugates."""
        return (self * self.galois(5) * self.galois(7) * self.galois(11))._c[0]

    def inverse(self) -> "Cyclo":
        if not self:
            raise ZeroDivisionError("division by zero in Q(z12)")
        others = self.galois(5) * self.galois(7) * self.galois(11)
        n = (self * others)._c[0]
        return Cyclo._raw(tuple(c / n for c in others._c))

    # -- predicates and conversions ---------------------------------------

    def __bool__(self):
        return any(self._c)

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == (Fraction(other),) + _ZERO4[1:]
        return NotImplemented

    def __hash__(self):
        if not any(self._c[1:]):
            return hash(self._c[0])
        return hash(self._c)

    def is_rational(self) -> bool:
        return not any(self._c[1:])

    def is_real(self) -> bool:
        return self.conjugate() == self

    def real_part(self) -> "Cyclo":
        return (self + self.conjugate()) / 2

    def imag_part(self) -> "Cyclo":
        """Imaginary part as an element of the field (so x = re + i*im)."""
        return (self - self.conjugate()) / (2 * I)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._c[0]

    def __complex__(self):
        z = cmath.exp(1j * cmath.pi / 6)
        return complex(sum(float(c) * z**k for k, c in enumerate(self._c)))

    def unit_phase(self):
        """Return (r, k) with self == r * z^k for rational r, or None if no such pair."""
        if not self:
            return None
        # z^k and -z^(k+6) coincide; try the conventional names first
        for k in (0, 4, 8, 3, 1, 5):
            t = self * zeta_power(-k)
            if t.is_rational():
                return t._c[0], k
        return None

    def __repr__(self):
        if self.is_rational():
            return f"Cyclo({self._c[0]})"
        return f"Cyclo({', '.join(str(c) for c in self._c)})"

    def __str__(self):
        if not self:
            return "0"
        hit = self.unit_phase()
        if hit is not None:
            r, k = hit
            sign, name = _PHASE_NAMES[k]
            return _scaled(r * sign, name)
        parts = []
        for k, c in enumerate(self._c):
            if c:
                parts.append(_scaled(c, ("1", "z", "z^2", "z^3")[k]))
        return " + ".join(parts).replace("+ -", "- ")


def _scaled(r: Fraction, name: str) -> str:
    if name == "1":
        return str(r)
    if r == 1:
        return name
    if r == -1:
        return f"-{name}"
    return f"{r}*{name}"


# z^k written as sign * name, e.g. z^10 = -j
_PHASE_NAMES = {
    0: (1, "1"), 1: (1, "z"), 2: (1, "q"), 3: (1, "i"), 4: (1, "j"), 5: (1, "z^5"),
    6: (-1, "1"), 7: (-1, "z"), 8: (1, "j^2"), 9: (-1, "i"), 10: (-1, "j"), 11: (-1, "z^5"),
}


_ZETA = []


def zeta_power(k: int) -> Cyclo:
    """z^k for any integer k (reduced mod 12)."""
    return _ZETA[k % 12]


def _build_zeta_table():
    one = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))
    cur = one
    for _ in range(12):
        _ZETA.append(Cyclo._raw(cur))
        # multiply by z: shift up one degree then fold
        cur = _reduce((Fraction(0),) + cur)


_build_zeta_table()

ZERO = Cyclo(0)
ONE = Cyclo(1)
Q = zeta_power(2)
I = zeta_power(3)
J = zeta_power(4)
J2 = zeta_power(8)


def arith(kind: str, a, b) -> Cyclo:
    a, b = Cyclo.coerce(a), Cyclo.coerce(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def conj(a) -> Cyclo:
    return Cyclo.coerce(a).conjugate()


def inv(a) -> Cyclo:
    return Cyclo.coerce(a).inverse()


# -- text syntax -----------------------------------------------------------


class ScalarSyntaxError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(\S))")
_NAMED = {"j": J, "q": Q, "i": I, "z": zeta_power(1)}


def _tokenize(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, sym = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            if name not in _NAMED:
                raise ScalarSyntaxError(f"unknown scalar symbol {name!r} in {text!r}")
            out.append(("name", name))
        elif sym in "+-*/^()":
            out.append(("op", sym))
        else:
            raise ScalarSyntaxError(f"unexpected character {sym!r} in {text!r}")
        pos = m.end()
    return out


class _Parser:
    # expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)*
    # unary := '-' unary | power ; power := atom ('^' ['-'] num)?
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, sym):
        tok = self.take()
        if tok != ("op", sym):
            raise ScalarSyntaxError(f"expected {sym!r} in {self.text!r}")

    def parse(self):
        if not self.toks:
            raise ScalarSyntaxError("empty scalar")
        val = self.expr()
        if self.i != len(self.toks):
            raise ScalarSyntaxError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, n = self.take()
            if kind != "num":
                raise ScalarSyntaxError(f"exponent must be an integer in {self.text!r}")
            return base ** (sign * n)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Cyclo(val)
        if kind == "name":
            return _NAMED[val]
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise ScalarSyntaxError(f"unexpected token in {self.text!r}")


def parse_scalar(text: str) -> Cyclo:
    """Parse e.g. ``"3/2"``, ``"z^5"``, ``"-j^2"``, ``"(1+i)*q"``."""
    try:
        return _Parser(text).parse()
    except ZeroDivisionError as exc:
        raise ScalarSyntaxError(f"division by zero in {text!r}") from exc
