import random
from fractions import Fraction

import pytest

from knotforms.exact import (Matrix, ShapeError, SingularMatrixError, bernoulli,
                             det, inverse, kronecker, smith_normal_form,
                             smith_normal_form_with_transforms,
                             von_staudt_denominator)

from oracles import bernoulli_akiyama_tanigawa, det_cofactor, snf_via_minor_gcds


def random_matrix(rng, n, m=None, lo=-5, hi=5):
    m = n if m is None else m
    return Matrix([[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)], ncols=m)


class TestBernoulli:
    def test_first_values_match_recurrence_oracle(self):
        for k, expected in [(1, Fraction(1, 6)), (2, Fraction(1, 30)), (3, Fraction(1, 42))]:
            assert bernoulli(k) == expected
            assert bernoulli(k) == abs(bernoulli_akiyama_tanigawa(2 * k))

    def test_oracle_agreement_range(self):
        for k in range(1, 25):
            assert bernoulli(k) == abs(bernoulli_akiyama_tanigawa(2 * k))

    def test_all_positive(self):
        assert all(bernoulli(k) > 0 for k in range(1, 20))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            bernoulli(0)

    def test_von_staudt_clausen(self):
        # denominator of the standard signed B_2k = product of primes p
        # with (p-1) | 2k
        for k in range(1, 20):
            assert bernoulli(k).denominator == von_staudt_denominator(k)


class TestDet:
    def test_triangular(self):
        assert det(Matrix([[1, 0], [-1, 1]])) == 1

    def test_empty(self):
        assert det(Matrix([], ncols=0)) == 1

    def test_symplectic_block(self):
        assert det(Matrix([[0, 1], [-1, 0]])) == 1

    def test_non_square_rejected(self):
        with pytest.raises(ShapeError):
            det(Matrix([[1, 2, 3], [4, 5, 6]]))

    def test_matches_cofactor_oracle(self):
        rng = random.Random(20240811)
        for _ in range(200):
            n = rng.randint(0, 5)
            m = random_matrix(rng, n)
            assert det(m) == det_cofactor(m)

    def test_rational_entries(self):
        m = Matrix([[Fraction(1, 2), 1], [0, Fraction(2, 3)]])
        assert det(m) == Fraction(1, 3)


class TestInverse:
    def test_identity(self):
        assert inverse(Matrix.identity(3)) == Matrix.identity(3)

    def test_unipotent(self):
        m = Matrix([[-1, 1], [0, -1]])
        assert inverse(m) == Matrix([[-1, -1], [0, -1]])
        assert m @ inverse(m) == Matrix.identity(2)

    def test_scalar(self):
        assert inverse(Matrix([[2]])) == Matrix([[Fraction(1, 2)]])

    def test_singular_rejected(self):
        with pytest.raises(SingularMatrixError):
            inverse(Matrix([[1, 2], [2, 4]]))

    def test_det_of_inverse(self):
        rng = random.Random(7)
        found = 0
        while found < 50:
            m = random_matrix(rng, rng.randint(1, 4))
            d = det(m)
            if d == 0:
                continue
            found += 1
            assert d * det(inverse(m)) == 1
            assert m @ inverse(m) == Matrix.identity(m.nrows)


class TestKronecker:
    def test_scalars(self):
        assert kronecker(Matrix([[1]]), Matrix([[1]])) == Matrix([[1]])

    def test_identity_factor(self):
        a = Matrix([[1, 0], [-1, 1]])
        assert kronecker(a, Matrix([[1]])) == a

    def test_signed_tensor_with_scalar(self):
        a = Matrix([[1, 0], [-1, 1]])
        assert kronecker(Matrix([[1]]), a).scale(-1) == Matrix([[-1, 0], [1, -1]])

    def test_dimensions_multiply(self):
        rng = random.Random(99)
        for _ in range(20):
            a = random_matrix(rng, rng.randint(0, 3), rng.randint(0, 3))
            b = random_matrix(rng, rng.randint(0, 3), rng.randint(0, 3))
            k = kronecker(a, b)
            assert k.shape == (a.nrows * b.nrows, a.ncols * b.ncols)

    def test_associative(self):
        rng = random.Random(100)
        for _ in range(20):
            a = random_matrix(rng, 2)
            b = random_matrix(rng, rng.randint(1, 2))
            c = random_matrix(rng, rng.randint(1, 2))
            assert kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c))


class TestSmithNormalForm:
    def test_diag_2_3(self):
        assert smith_normal_form(Matrix([[2, 0], [0, 3]])) == (1, 6)

    def test_identity(self):
        assert smith_normal_form(Matrix.identity(2)) == (1, 1)

    def test_zero(self):
        assert smith_normal_form(Matrix.zero(2, 2)) == (0, 0)

    def test_matches_minor_gcd_oracle(self):
        rng = random.Random(31337)
        for _ in range(150):
            n = rng.randint(1, 4)
            m = random_matrix(rng, n, rng.randint(1, 4))
            assert smith_normal_form(m) == snf_via_minor_gcds(m)

    def test_divisibility_chain(self):
        rng = random.Random(4242)
        for _ in range(100):
            m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
            factors = smith_normal_form(m)
            for a, b in zip(factors, factors[1:]):
                assert a >= 0 and b >= 0
                if b != 0:
                    assert a != 0 and b % a == 0

    def test_product_equals_abs_det(self):
        rng = random.Random(5150)
        for _ in range(100):
            m = random_matrix(rng, rng.randint(1, 4))
            d = det(m)
            factors = smith_normal_form(m)
            if d != 0:
                product = 1
                for f in factors:
                    product *= f
                assert product == abs(d)
            else:
                assert 0 in factors

    def test_transforms(self):
        rng = random.Random(6021)
        for _ in range(60):
            m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
            factors, u, v = smith_normal_form_with_transforms(m)
            assert det(u) in (1, -1) and det(v) in (1, -1)
            product = u @ m @ v
            for i in range(product.nrows):
                for j in range(product.ncols):
                    expected = factors[i] if i == j and i < len(factors) else 0
                    assert product.rows[i][j] == expected


class TestMatrixBasics:
    def test_empty_shapes(self):
        m = Matrix([], ncols=3)
        assert m.shape == (0, 3)
        assert m.transpose().shape == (3, 0)

    def test_immutability(self):
        m = Matrix([[1]])
        with pytest.raises(AttributeError):
            m.rows = ()

    def test_ragged_rejected(self):
        with pytest.raises(ShapeError):
            Matrix([[1, 2], [3]])

    def test_apply(self):
        m = Matrix([[1, 2], [3, 4]])
        assert m.apply((1, 1)) == (3, 7)
