from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from tdpair.linalg import (
    Matrix,
    Poly,
    char_poly,
    generated_algebra_dim,
    kernel_basis,
    kron,
    min_poly,
    rational_roots,
    subspace_intersection,
)

fractions = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def square(n):
    return st.lists(st.lists(fractions, min_size=n, max_size=n), min_size=n, max_size=n).map(Matrix)


def sym_charpoly(m: Matrix):
    lam = sympy.Symbol("x")
    sm = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.rows])
    coeffs = sm.charpoly(lam).all_coeffs()[::-1]
    return [F(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in coeffs]


def test_matrix_arithmetic_basics():
    a = Matrix([[1, 2], [3, 4]])
    assert a @ Matrix.identity(2) == a
    assert a.det() == -2
    assert a @ a.inverse() == Matrix.identity(2)
    assert a.inverse()[0, 0] == -2 and a.inverse()[1, 0] == F(3, 2)
    assert a.T == Matrix([[1, 3], [2, 4]])
    assert a.trace() == 5


def test_float_entries_rejected():
    with pytest.raises(TypeError):
        Matrix([[0.5, 1], [1, 0]])


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


def test_kernel_of_rank_one():
    ker = kernel_basis([[F(1), F(2), F(3)]], 3)
    assert len(ker) == 2
    for v in ker:
        assert v[0] + 2 * v[1] + 3 * v[2] == 0


def test_char_poly_hand_values():
    assert list(char_poly(Matrix([[0, 1], [1, 0]])).coeffs) == [-1, 0, 1]
    assert list(char_poly(Matrix([[2, 1], [0, 2]])).coeffs) == [4, -4, 1]


def test_min_poly_of_jordan_block_and_scalar():
    assert list(min_poly(Matrix([[2, 1], [0, 2]])).coeffs) == [4, -4, 1]
    assert list(min_poly(Matrix.identity(3) * 5).coeffs) == [-5, 1]


def test_rational_roots_are_distinct():
    p = Poly.from_roots([F(1, 2), F(1, 2), -3])
    assert sorted(rational_roots(p)) == [-3, F(1, 2)]
    assert rational_roots(Poly([-2, 0, 1])) == []


def test_kron_dimensions_and_mixed_product():
    a = Matrix([[1, 2], [0, 1]])
    b = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    c = Matrix([[3, 0], [1, 1]])
    d = Matrix.identity(3) * 2
    assert kron(a, b).n == 6
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


def test_subspace_intersection_of_planes():
    u = [(F(1), F(0), F(0)), (F(0), F(1), F(0))]
    w = [(F(0), F(1), F(0)), (F(0), F(0), F(1))]
    inter = subspace_intersection(u, w, 3)
    assert len(inter) == 1
    assert inter[0][0] == 0 and inter[0][2] == 0


def test_algebra_dim_of_commuting_diagonals():
    a = Matrix.diag([1, 2, 3])
    b = Matrix.diag([0, 0, 1])
    assert generated_algebra_dim(a, b) == 3


@settings(max_examples=40, deadline=None)
@given(square(4))
def test_char_poly_matches_sympy(m):
    assert list(char_poly(m).coeffs) == sym_charpoly(m)


@settings(max_examples=40, deadline=None)
@given(square(3))
def test_cayley_hamilton(m):
    assert char_poly(m)(m).is_zero()
    mp = min_poly(m)
    assert mp(m).is_zero()
    assert mp.divides(char_poly(m))


@settings(max_examples=25, deadline=None)
@given(square(3), square(3), square(3))
def test_algebra_dim_conjugation_invariant(a, b, p):
    if not p.is_invertible():
        return
    pi = p.inverse()
    assert generated_algebra_dim(a, b) == generated_algebra_dim(pi @ a @ p, pi @ b @ p)


@settings(max_examples=40, deadline=None)
@given(square(3))
def test_rank_matches_sympy(m):
    sm = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.rows])
    assert m.rank() == sm.rank()
