"""Exact integer and rational linear algebra.

Everything in this module is exact: entries are Python ints or
``fractions.Fraction``, determinants of integer matrices are computed by
fraction-free (Bareiss) elimination, and no floating point is used anywhere.
Empty (0 x 0) matrices are legal and meaningful throughout; by the usual
empty-product convention their determinant is 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb


class ShapeError(ValueError):
    """Matrix dimensions do not fit the requested operation."""


class SingularMatrixError(ZeroDivisionError):
    """Inversion of a matrix with determinant zero."""


def _as_exact(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"matrix entries must be int or Fraction, got {type(x).__name__}")


class Matrix:
    """Immutable dense matrix with int or Fraction entries.

    `rows` is stored as a tuple of row tuples.  The column count is kept
    explicitly so that r x 0 and 0 x c matrices round-trip correctly.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int | None = None):
        rows = tuple(tuple(_as_exact(x) for x in row) for row in rows)
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ShapeError("ragged rows")
            if ncols is not None and ncols != width:
                raise ShapeError(f"ncols={ncols} does not match row length {width}")
            ncols = width
        else:
            ncols = 0 if ncols is None else ncols
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_integral(self) -> bool:
        return all(isinstance(x, int) for row in self.rows for x in row)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        if self.nrows == 0 or self.ncols == 0:
            return f"Matrix(<empty {self.nrows}x{self.ncols}>)"
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix([{body}])"

    def transpose(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.nrows)]
                       for j in range(self.ncols)], ncols=self.nrows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)], ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        return Matrix([[c * x for x in row] for row in self.rows], ncols=self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        bt = other.transpose().rows
        return Matrix([[sum(a * b for a, b in zip(row, col)) for col in bt]
                       for row in self.rows], ncols=other.ncols)

    def apply(self, vector):
        """Matrix times column vector (a sequence), returned as a tuple."""
        if len(vector) != self.ncols:
            raise ShapeError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.rows)

    def submatrix(self, row_indices, col_indices) -> "Matrix":
        ri, ci = list(row_indices), list(col_indices)
        return Matrix([[self.rows[i][j] for j in ci] for i in ri], ncols=len(ci))

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def entries_mod(self, n: int) -> "Matrix":
        return Matrix([[x % n for x in row] for row in self.rows], ncols=self.ncols)


def det(m: Matrix):
    """Exact determinant; int for integral input, Fraction otherwise.

    The 0 x 0 determinant is 1 (empty product).
    """
    if not m.is_square:
        raise ShapeError(f"determinant of non-square {m.shape} matrix")
    n = m.nrows
    if n == 0:
        return 1
    if m.is_integral:
        return _det_bareiss([list(row) for row in m.rows])
    a = [[Fraction(x) for x in row] for row in m.rows]
    detval = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            detval = -detval
        detval *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return int(detval) if detval.denominator == 1 else detval


def _det_bareiss(a: list[list[int]]) -> int:
    # Fraction-free Gaussian elimination; all divisions are exact.
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            aik = row_i[k]
            akk = a[k][k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(m: Matrix) -> Matrix:
    """Exact inverse over the rationals; raises SingularMatrixError."""
    if not m.is_square:
        raise ShapeError(f"inverse of non-square {m.shape} matrix")
    n = m.nrows
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(m.rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return Matrix([row[n:] for row in a], ncols=n)


def kronecker(m: Matrix, n: Matrix) -> Matrix:
    """Kronecker (tensor) product, blocks m[i][j] * n."""
    rows = []
    for mi in range(m.nrows):
        for ni in range(n.nrows):
            row = []
            for mj in range(m.ncols):
                c = m.rows[mi][mj]
                row.extend(c * x for x in n.rows[ni])
            rows.append(row)
    return Matrix(rows, ncols=m.ncols * n.ncols)


def smith_normal_form(m: Matrix) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix, all >= 0.

    Returns min(nrows, ncols) factors; trailing zeros encode rank deficiency.
    """
    if not m.is_integral:
        raise TypeError("Smith normal form requires integer entries")
    a = [list(row) for row in m.rows]
    factors = _snf_inplace(a, m.nrows, m.ncols)
    return tuple(factors)


def _snf_inplace(a: list[list[int]], nrows: int, ncols: int,
                 row_ops: list | None = None, col_ops: list | None = None) -> list[int]:
    # Classical pivot-and-reduce; optional op logs record (kind, i, j, c)
    # elementary moves so callers can rebuild the transform matrices.
    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if row_ops is not None:
            row_ops.append(("swap", i, j, 0))

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if col_ops is not None:
            col_ops.append(("swap", i, j, 0))

    def add_row(i, j, c):
        # row_i += c * row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        if row_ops is not None:
            row_ops.append(("add", i, j, c))

    def add_col(i, j, c):
        for row in a:
            row[i] += c * row[j]
        if col_ops is not None:
            col_ops.append(("add", i, j, c))

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if row_ops is not None:
            row_ops.append(("neg", i, i, 0))

    k = min(nrows, ncols)
    for t in range(k):
        # locate smallest-magnitude nonzero entry in the trailing block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        while True:
            i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            done = True
            for r in range(t + 1, nrows):
                if a[r][t] != 0:
                    qq = a[r][t] // a[t][t]
                    add_row(r, t, -qq)
                    if a[r][t] != 0:
                        done = False
            for c in range(t + 1, ncols):
                if a[t][c] != 0:
                    qq = a[t][c] // a[t][t]
                    add_col(c, t, -qq)
                    if a[t][c] != 0:
                        done = False
            if done:
                # pivot must divide the whole trailing block
                offender = None
                for r in range(t + 1, nrows):
                    for c in range(t + 1, ncols):
                        if a[r][c] % a[t][t] != 0:
                            offender = r
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                add_row(t, offender, 1)
                done = False
            best = min(((i, j) for i in range(t, nrows) for j in range(t, ncols)
                        if a[i][j] != 0), key=lambda ij: abs(a[ij[0]][ij[1]]))
        if a[t][t] < 0:
            negate_row(t)
    return [a[i][i] if i < nrows and i < ncols else 0 for i in range(k)]


def smith_normal_form_with_transforms(m: Matrix) -> tuple[tuple[int, ...], Matrix, Matrix]:
    """Invariant factors plus unimodular U, V with U @ m @ V diagonal."""
    if not m.is_integral:
        raise TypeError("Smith normal form requires integer entries")
    a = [list(row) for row in m.rows]
    row_ops: list = []
    col_ops: list = []
    factors = _snf_inplace(a, m.nrows, m.ncols, row_ops, col_ops)
    u = [[1 if i == j else 0 for j in range(m.nrows)] for i in range(m.nrows)]
    for kind, i, j, c in row_ops:
        if kind == "swap":
            u[i], u[j] = u[j], u[i]
        elif kind == "add":
            u[i] = [x + c * y for x, y in zip(u[i], u[j])]
        else:
            u[i] = [-x for x in u[i]]
    v = [[1 if i == j else 0 for j in range(m.ncols)] for i in range(m.ncols)]
    for kind, i, j, c in col_ops:
        if kind == "swap":
            for row in v:
                row[i], row[j] = row[j], row[i]
        else:
            for row in v:
                row[i] += c * row[j]
    return tuple(factors), Matrix(u, ncols=m.nrows), Matrix(v, ncols=m.ncols)


@lru_cache(maxsize=None)
def _bernoulli_signed(n: int) -> Fraction:
    # Standard signed Bernoulli numbers (B_1 = -1/2) via the binomial
    # recurrence sum_{j<=n} C(n+1, j) B_j = 0.
    if n == 0:
        return Fraction(1)
    s = Fraction(0)
    for j in range(n):
        s += comb(n + 1, j) * _bernoulli_signed(j)
    return -s / (n + 1)


def bernoulli(k: int) -> Fraction:
    """k-th Bernoulli number in Hirzebruch's all-positive indexing.

    B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ...; equals the absolute value of
    the standard even-index Bernoulli number at index 2k.  (To convert:
    standard B_{2k} = (-1)^{k+1} * bernoulli(k).)  k = 0 is undefined in
    this indexing and rejected.
    """
    if k < 1:
        raise ValueError(f"Bernoulli index must be >= 1, got {k}")
    return abs(_bernoulli_signed(2 * k))


def von_staudt_denominator(k: int) -> int:
    """Product of primes p with (p-1) | 2k.

    By the von Staudt-Clausen theorem this is the denominator of the
    standard Bernoulli number B_{2k}, hence of bernoulli(k).
    """
    if k < 1:
        raise ValueError(f"index must be >= 1, got {k}")
    n = 2 * k
    product = 1
    for p in range(2, n + 2):
        if (n % (p - 1) == 0 if p > 1 else False) and _is_prime(p):
            product *= p
    return product


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True

