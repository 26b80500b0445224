"""Knot-module presentations for even-dimensional knots.

The middle module of a 2q-knot has a square presentation
(x_1..x_alpha ; sum_j (t a_ij - b_ij) x_j, d_j x_j) whose matrices must
satisfy the compatibility relation

    d_i a_ij + (-1)^(q+1) d_j b_ji = 0        for all i, j

(vacuous when d_i = d_j = 0; those indices carry the free part).  The
torsion pairings behind this relation live in Q/Z, represented here as
reduced fractions in [0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (Matrix, ShapeError, smith_normal_form,
                    smith_normal_form_with_transforms)
from .laurent import Laurent, elementary_divisors, pencil


@dataclass(frozen=True)
class TorsionPresentation:
    orders: tuple[int, ...]  # d_k >= 0; 0 encodes a free generator
    a: Matrix
    b: Matrix
    q: int

    def __post_init__(self):
        alpha = len(self.orders)
        if self.a.shape != (alpha, alpha) or self.b.shape != (alpha, alpha):
            raise ShapeError("presentation matrices must be alpha x alpha")
        if any(d < 0 for d in self.orders):
            raise ValueError("orders must be nonnegative (0 = infinite order)")

    @property
    def alpha(self) -> int:
        return len(self.orders)


@dataclass(frozen=True)
class ValidationResult:
    relation_ok: bool
    type_k_ok: bool
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.relation_ok and self.type_k_ok

    def __bool__(self):
        return self.ok


def validate_presentation(p: TorsionPresentation) -> ValidationResult:
    """Check the compatibility relation and that (1 - t) acts invertibly.

    The two checks are reported separately: a presentation can satisfy the
    relation without presenting a knot module (the type-K condition).  The
    latter is read off the presentation: evaluating the relations at t = 1
    (rows of A - B together with the order relations d_k x_k) must present
    the trivial abelian group, i.e. all Smith invariant factors 1.
    """
    violations = []
    sign = 1 if p.q % 2 else -1  # (-1)^(q+1)
    for i in range(p.alpha):
        for j in range(p.alpha):
            lhs = p.orders[i] * p.a.rows[i][j] + sign * p.orders[j] * p.b.rows[j][i]
            if lhs != 0:
                violations.append(
                    f"relation fails at ({i + 1}, {j + 1}): "
                    f"d_{i + 1} a = {p.orders[i] * p.a.rows[i][j]}, "
                    f"(-1)^(q+1) d_{j + 1} b = {sign * p.orders[j] * p.b.rows[j][i]}")
    relation_ok = not violations
    at_one_rows = [list(row) for row in (p.a - p.b).rows]
    at_one_rows += [[p.orders[k] if k == j else 0 for j in range(p.alpha)]
                    for k in range(p.alpha)]
    stacked = Matrix(at_one_rows, ncols=p.alpha)
    factors = smith_normal_form(stacked)
    type_k_ok = all(f == 1 for f in factors)
    if not type_k_ok:
        violations.append(
            f"(1 - t) is not invertible on the presented module: "
            f"evaluation at t = 1 presents invariant factors {factors}")
    return ValidationResult(relation_ok=relation_ok, type_k_ok=type_k_ok,
                            violations=tuple(violations))


def torsion_symmetry_check(ta_plus: list[list[Fraction]],
                           ta_minus: list[list[Fraction]],
                           q: int) -> bool:
    """Verify the torsion Seifert-form symmetry TA+ = (-1)^q (TA-)^T in Q/Z,
    entrywise mod 1.

    The companion identity TA+ + (-1)^(q+1) (TA+)^T = -TI then produces the
    torsion intersection form; its required (-1)^(q+1)-symmetry holds by
    construction, so the displayed identity is the whole check.
    """
    tp = [[Fraction(x) for x in row] for row in ta_plus]
    tm = [[Fraction(x) for x in row] for row in ta_minus]
    n = len(tp)
    if any(len(r) != n for r in tp) or len(tm) != n or any(len(r) != n for r in tm):
        raise ShapeError("torsion forms must be square matrices of equal size")
    s = 1 if q % 2 == 0 else -1
    for i in range(n):
        for j in range(n):
            if (tp[i][j] - s * tm[j][i]) % 1 != 0:
                return False
    return True


def derived_torsion_intersection(ta_plus: list[list[Fraction]], q: int) -> list[list[Fraction]]:
    """-(TA+ + (-1)^(q+1) (TA+)^T) reduced into [0, 1): the torsion
    intersection form determined by the torsion Seifert form."""
    tp = [[Fraction(x) for x in row] for row in ta_plus]
    n = len(tp)
    sign = -1 if q % 2 == 0 else 1  # (-1)^(q+1)
    return [[(-(tp[i][j] + sign * tp[j][i])) % 1 for j in range(n)]
            for i in range(n)]


@dataclass(frozen=True)
class ModuleStructure:
    torsion_invariant_factors: tuple[int, ...]
    torsion_order: int
    t_action: Matrix | None  # on the torsion part; None if underdetermined
    free_divisors: tuple[Laurent, ...]
    notes: tuple[str, ...] = ()


def presented_module_structure(p: TorsionPresentation) -> ModuleStructure:
    """Structure of the presented module, split into torsion and free parts.

    The underlying abelian group of the torsion part is the direct sum of
    Z/d_k over the nonzero orders (reported through its Smith invariant
    factors); the action of t on it solves A . (t x) = B . x in that group.
    The free part is the square sub-presentation on the zero orders,
    handled by elementary divisors over Q[t, 1/t].  Cross-relations between
    the two blocks are not imposed by the compatibility relation and are
    reported as a note when present.
    """
    check = validate_presentation(p)
    if not check.ok:
        raise ValueError("invalid presentation: " + "; ".join(check.violations))
    torsion_idx = [k for k, d in enumerate(p.orders) if d != 0]
    free_idx = [k for k, d in enumerate(p.orders) if d == 0]
    notes = []

    torsion_order = 1
    for k in torsion_idx:
        torsion_order *= p.orders[k]
    diag = Matrix.diagonal([p.orders[k] for k in torsion_idx])
    invariant_factors = tuple(d for d in smith_normal_form(diag) if d != 1)

    t_action = None
    if torsion_idx:
        a_t = p.a.submatrix(torsion_idx, torsion_idx)
        b_t = p.b.submatrix(torsion_idx, torsion_idx)
        orders_t = [p.orders[k] for k in torsion_idx]
        t_action = _solve_t_action(a_t, b_t, orders_t)
        if t_action is None:
            notes.append("t-action on the torsion part is not determined "
                         "by the presentation data")

    free_divisors: tuple[Laurent, ...] = ()
    if free_idx:
        a_f = p.a.submatrix(free_idx, free_idx)
        b_f = p.b.submatrix(free_idx, free_idx)
        rows = pencil(a_f, -b_f)  # t*a_ij - b_ij
        free_divisors = tuple(elementary_divisors(rows))

    if torsion_idx and free_idx:
        cross = [p.a.rows[i][j] != 0 or p.b.rows[i][j] != 0
                 for i in torsion_idx for j in free_idx]
        cross += [p.a.rows[i][j] != 0 or p.b.rows[i][j] != 0
                  for i in free_idx for j in torsion_idx]
        if any(cross):
            notes.append("mixed torsion/free cross-relations present; the "
                         "reported structure is computed blockwise")

    return ModuleStructure(torsion_invariant_factors=invariant_factors,
                           torsion_order=torsion_order,
                           t_action=t_action,
                           free_divisors=free_divisors,
                           notes=tuple(notes))


def _solve_t_action(a: Matrix, b: Matrix, orders: list[int]) -> Matrix | None:
    """Find X with t . x_j = sum_k X[k][j] x_k in the group (+)_k Z/d_k.

    Substituting into the presentation relation A . (t x) = B . x shows that
    row k of X must solve A y = (column k of B) modulo d_k.  Each such
    system is solved through the Smith transforms of A; None is returned
    when some congruence is unsolvable or the result is not a well-defined
    endomorphism of the group.
    """
    n = a.nrows
    factors, u, v = smith_normal_form_with_transforms(a)
    from math import gcd
    rows = []
    for k in range(n):
        d = orders[k]
        target = u.apply([b.rows[i][k] for i in range(n)])
        z = []
        for i in range(n):
            di = factors[i] if i < len(factors) else 0
            c = target[i] % d
            g = gcd(di, d)
            if c % g != 0:
                return None
            if di % d == 0:
                z.append(0)  # any value solves 0*z = 0; c = 0 was checked
            else:
                dd = d // g
                z.append(((c // g) * pow((di // g) % dd, -1, dd)) % d)
        y = v.apply(z)
        rows.append([val % d for val in y])
    candidate = Matrix(rows, ncols=n)
    # direct verification: sum_j a_ij X_kj = b_ik (mod d_k) for all i, k
    for k in range(n):
        d = orders[k]
        for i in range(n):
            lhs = sum(a.rows[i][j] * candidate.rows[k][j] for j in range(n))
            if (lhs - b.rows[i][k]) % d != 0:
                return None
    # well-definedness: d_j (t . x_j) must vanish, i.e. d_j X_kj = 0 mod d_k
    for j in range(n):
        for k in range(n):
            if (orders[j] * candidate.rows[k][j]) % orders[k] != 0:
                return None
    return candidate
