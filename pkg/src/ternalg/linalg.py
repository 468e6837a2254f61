"""Small dense matrices over Q(z12).

Used for the 2x2 spinor matrices, the 3x3 ternary Clifford generators and the
4x4 Lorentz matrices. Everything is exact; elimination pivots on the first
nonzero entry.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, Cyclo, ScalarSyntaxError, parse_scalar

__all__ = ["Matrix", "SingularMatrixError", "parse_matrix"]


class SingularMatrixError(ArithmeticError):
    pass


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(Cyclo.coerce(x) for x in row) for row in rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must be non-empty and of equal length")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == k else ZERO for k in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        return cls([[ZERO] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def diag(cls, *entries) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == k else ZERO for k in range(n)] for i in range(n)])

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, idx):
        i, k = idx
        return self.rows[i][k]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        c = Cyclo.coerce(c)
        return Matrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = ZERO
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __pow__(self, n: int):
        result = Matrix.identity(self.shape[0])
        for _ in range(n):
            result = result @ self
        return result

    @property
    def T(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def conj(self) -> "Matrix":
        """Entrywise complex conjugate (no transpose)."""
        return Matrix([[a.conjugate() for a in r] for r in self.rows])

    def dagger(self) -> "Matrix":
        return self.conj().T

    def is_zero(self) -> bool:
        return not any(a for r in self.rows for a in r)

    def is_real(self) -> bool:
        return all(a.is_real() for r in self.rows for a in r)

    def trace(self) -> Cyclo:
        return sum((self.rows[i][i] for i in range(self.shape[0])), ZERO)

    def det(self) -> Cyclo:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self.rows]
        det = ONE
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                return ZERO
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            p = a[col][col]
            det = det * p
            inv_p = p.inverse()
            for r in range(col + 1, n):
                f = a[r][col]
                if f:
                    f = f * inv_p
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det

    def solve(self, rhs: "Matrix") -> "Matrix":
        """Return X with self @ X == rhs (self square and nonsingular)."""
        n, m = self.shape
        if n != m or rhs.shape[0] != n:
            raise ValueError("solve needs a square system")
        k = rhs.shape[1]
        a = [list(r) + list(s) for r, s in zip(self.rows, rhs.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise SingularMatrixError("singular linear system")
            a[col], a[piv] = a[piv], a[col]
            inv_p = a[col][col].inverse()
            a[col] = [x * inv_p for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return Matrix([row[n:n + k] for row in a])

    def inverse(self) -> "Matrix":
        return self.solve(Matrix.identity(self.shape[0]))

    def to_strings(self):
        return [[str(x) for x in r] for r in self.rows]


def parse_matrix(text: str) -> Matrix:
    """Parse ``"a,b;c,d"``: rows separated by ';', entries by ',' in scalar syntax."""
    rows = [[parse_scalar(x) for x in r.split(",")] for r in text.split(";")]
    if any(len(r) != len(rows[0]) for r in rows):
        raise ScalarSyntaxError(f"rows of unequal length in {text!r}")
    return Matrix(rows)
