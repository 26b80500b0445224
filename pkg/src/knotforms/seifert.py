"""Seifert-matrix calculus for odd-dimensional knots and fibered links.

A Seifert matrix is a square integer matrix A of linking numbers together
with the middle dimension q (the link lives in S^(2q+1)); eps = (-1)^q is
the symmetry sign.  Fixed sign conventions (matching Kauffman-Neumann
linking rules) give:

    intersection form   I = (-1)^q (A + (-1)^q A^T)
    monodromy           h = (-1)^(q+1) (A^T)^(-1) A      (det A != 0)
    Alexander pencil    P(t) = det(tA + (-1)^q A^T)

The 0 x 0 matrix is the unknot: every invariant is trivial.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import Matrix, ShapeError, det, inverse
from .laurent import (Laurent, conway_normalize, det_pencil, elementary_divisors,
                      is_product_of_cyclotomics, pencil)


class NonFiberedError(ValueError):
    """Monodromy requested for a Seifert matrix with det A = 0."""


@dataclass(frozen=True)
class SeifertMatrix:
    matrix: Matrix
    q: int

    def __post_init__(self):
        if not isinstance(self.matrix, Matrix):
            object.__setattr__(self, "matrix", Matrix(self.matrix))
        if not self.matrix.is_square:
            raise ShapeError(f"Seifert matrix must be square, got {self.matrix.shape}")
        if not self.matrix.is_integral:
            raise TypeError("Seifert matrix entries must be integers")
        if self.q < 0:
            raise ValueError("middle dimension q must be >= 0")

    @property
    def rank(self) -> int:
        return self.matrix.nrows

    @property
    def epsilon(self) -> int:
        """(-1)^q: +1 for even q, -1 for odd q."""
        return -1 if self.q % 2 else 1

    @property
    def ambient_sphere_dim(self) -> int:
        return 2 * self.q + 1

    @property
    def link_dim(self) -> int:
        return 2 * self.q - 1


def intersection_form(s: SeifertMatrix) -> Matrix:
    """I = (-1)^q (A + (-1)^q A^T); symmetric for q even, antisymmetric odd."""
    a = s.matrix
    return (a + a.transpose().scale(s.epsilon)).scale(s.epsilon)


def is_unimodular(s: SeifertMatrix) -> bool:
    """det(I) = +-1; for q >= 3 the boundary is then a homotopy sphere."""
    return det(intersection_form(s)) in (1, -1)


def is_fibered_form(s: SeifertMatrix) -> bool:
    """det(A) = +-1, the Seifert-form criterion for simple fibered links."""
    return det(s.matrix) in (1, -1)


def monodromy(s: SeifertMatrix) -> Matrix:
    """h = (-1)^(q+1) (A^T)^(-1) A; integral whenever det A = +-1."""
    a = s.matrix
    d = det(a)
    if d == 0:
        raise NonFiberedError("det A = 0: no open-book monodromy")
    h = inverse(a.transpose()) @ a
    return h.scale(-s.epsilon)


def alexander_polynomial(s: SeifertMatrix, normalize: str = "raw") -> Laurent:
    """det(tA + (-1)^q A^T), either verbatim ("raw") or Conway-normalized.

    Conway normalization rescales by a unit +-t^k so that the result is
    symmetric under t <-> 1/t and equals 1 at t = 1; it exists exactly when
    the value at 1 is +-1 (guaranteed for unimodular Seifert matrices) and
    raises NormalizationError otherwise.
    """
    a = s.matrix
    raw = det_pencil(a, a.transpose().scale(s.epsilon))
    if normalize == "raw":
        return raw
    if normalize == "conway":
        return conway_normalize(raw)
    raise ValueError(f"unknown normalization {normalize!r}")


def characteristic_polynomial(m: Matrix) -> Laurent:
    """det(tI - m), exact, monic of degree = size."""
    if not m.is_square:
        raise ShapeError("characteristic polynomial of a non-square matrix")
    if m.is_integral:
        return det_pencil(Matrix.identity(m.nrows), -m)
    # rational entries: evaluate det(xI - m) exactly at n+1 points and
    # interpolate over Q
    n = m.nrows
    xs = list(range(n + 1))
    ys = [det(Matrix.identity(n).scale(x) - m) for x in xs]
    return Laurent(dict(enumerate(_interpolate_fractions(xs, ys))))


def _interpolate_fractions(xs, ys):
    from fractions import Fraction
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        poly = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            poly = [Fraction(0)] + poly
            for k in range(len(poly) - 1):
                poly[k] -= xs[j] * poly[k + 1]
            denom *= xs[i] - xs[j]
        term = Fraction(ys[i]) / denom
        for k in range(len(poly)):
            coeffs[k] += term * poly[k]
    return coeffs


def is_quasi_unipotent(h: Matrix) -> bool:
    """True iff every eigenvalue of h is a root of unity.

    Equivalent to the characteristic polynomial being a product of
    cyclotomic polynomials, which is decided exactly by degree-bounded
    cyclotomic matching.  A non-integral characteristic polynomial means
    some eigenvalue is not an algebraic integer, hence not a root of unity.
    """
    if not h.is_square:
        raise ShapeError("quasi-unipotence is defined for square matrices")
    if h.nrows == 0:
        return True
    chi = characteristic_polynomial(h)
    if not chi.is_integral:
        return False
    return is_product_of_cyclotomics(chi)


@dataclass(frozen=True)
class KnotModulePresentation:
    """Presentation tA + (-1)^q A^T of the middle knot module over Z[t,1/t]."""

    seifert: SeifertMatrix
    presentation: tuple = field(repr=False)
    divisors: tuple[Laurent, ...] = ()

    @property
    def is_torsion_over_qt(self) -> bool:
        """True iff the module is Q[t,1/t]-torsion (no zero divisors)."""
        return all(not d.is_zero for d in self.divisors)

    @property
    def free_rank_over_qt(self) -> int:
        return sum(1 for d in self.divisors if d.is_zero)


def knot_module(s: SeifertMatrix) -> KnotModulePresentation:
    """Elementary divisors over Q[t, 1/t] of the presentation tA + (-1)^q A^T."""
    rows = pencil(s.matrix, s.matrix.transpose().scale(s.epsilon))
    divisors = elementary_divisors(rows)
    return KnotModulePresentation(
        seifert=s,
        presentation=tuple(tuple(row) for row in rows),
        divisors=tuple(divisors),
    )


def is_type_k(s: SeifertMatrix) -> bool:
    """Finite generation with (t-1) acting invertibly, read off the
    presentation: |det(A + (-1)^q A^T)| = 1, i.e. evaluation of the
    presentation at t = 1 is unimodular.  Coincides with is_unimodular.
    """
    a = s.matrix
    return det(a + a.transpose().scale(s.epsilon)) in (1, -1)
