from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tdpair import (
    Matrix,
    NotAPath,
    NotDiagonalizable,
    NotTDPair,
    TDPair,
    default_orderings,
    eigen_analyze,
    krawtchouk_type,
    parameter_array,
    shape,
    shape_factorization,
    split_decomposition,
    split_sequence,
    standard_orderings,
)
from tdpair.errors import InternalInvariantViolation

from conftest import SMALL, build


def test_eigen_analyze_projectors_resolve_identity():
    eig = eigen_analyze(Matrix([[0, 1], [1, 0]]))
    assert eig.eigenvalues == (1, -1)
    total = eig.projectors[0] + eig.projectors[1]
    assert total == Matrix.identity(2)
    assert eig.projectors[0] @ eig.projectors[1] == Matrix.zeros(2)
    assert eig.projector(1) == Matrix([[F(1, 2), F(1, 2)], [F(1, 2), F(1, 2)]])


def test_eigen_analyze_rejects_jordan_block():
    with pytest.raises(NotDiagonalizable):
        eigen_analyze(Matrix([[1, 1], [0, 1]]))


def test_k12_by_hand(k12):
    # A = [[0,1],[1,0]], A* = [[0,2],[1/2,0]]
    assert k12.A == Matrix([[0, 1], [1, 0]])
    assert k12.Astar == Matrix([[0, 2], [F(1, 2), 0]])
    assert k12.verification.passed
    assert k12.verification.algebra_dim == 4


def test_a_equals_astar_fails_only_irreducibility(negatives):
    rep = negatives["A=A*"].verification
    assert rep.failed_axioms() == ["iv"]
    basis = rep.witnesses["iv"]["invariant_subspace_basis"]
    assert len(basis) == 1


def test_require_verified_raises(negatives):
    with pytest.raises(NotTDPair):
        negatives["A=A*"].require_verified()


def test_non_tridiagonal_action_detected():
    # A* couples every pair of A-eigenspaces: the support graph is a triangle
    a = Matrix.diag([1, 0, -1])
    b = Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    rep = TDPair(a, b).verification
    assert "ii" in rep.failed_axioms()


def test_standard_orderings_are_reversal_pair(k12):
    a_ord, s_ord = standard_orderings(k12)
    assert a_ord[1] == tuple(reversed(a_ord[0]))
    assert s_ord[1] == tuple(reversed(s_ord[0]))


def test_standard_orderings_need_a_path(negatives):
    with pytest.raises((NotAPath, NotTDPair)):
        standard_orderings(negatives["A=A*"])


@pytest.mark.parametrize("spec", SMALL)
def test_krawtchouk_orderings(spec):
    pair = build(spec)
    info = krawtchouk_type(pair)
    d = pair.diameter
    assert info.is_krawtchouk
    assert info.theta == tuple(F(d - 2 * i) for i in range(d + 1))
    assert info.theta_star == tuple(F(2 * i - d) for i in range(d + 1))


def test_non_krawtchouk_spectrum():
    # A scaled by 2 keeps the axioms but moves the eigenvalues off d-2i
    k = build("1:2")
    scaled = TDPair(k.A * 2, k.Astar)
    assert scaled.verification.passed
    assert not krawtchouk_type(scaled)


def test_shape_of_tensor_product():
    sh = shape(build("1:2,1:3"))
    assert sh.rho == (1, 2, 1)
    assert sh.is_symmetric() and sh.is_unimodal()


def test_shape_factorization_lists_all_multisets():
    assert shape_factorization((1, 2, 2, 1)) == [(1, 2)]
    assert shape_factorization((1, 3, 3, 1)) == [(1, 1, 1)]
    assert shape_factorization((1, 1, 1)) == [(2,)]
    assert shape_factorization((2, 1)) == []


def test_split_decomposition_k12(k12):
    sd = split_decomposition(k12, *default_orderings(k12))
    assert sd.dims == (1, 1)
    u0 = sd.U_bases[0][0]
    # U_0 is spanned by (-2, 1)
    assert u0[0] * 1 - u0[1] * (-2) == 0


def test_split_sequence_and_parameter_array_k12(k12):
    assert split_sequence(k12, (1, -1), (-1, 1)) == (1, F(9, 2))
    pa = parameter_array(k12)
    assert (pa.theta, pa.theta_star, pa.zeta) == ((1, -1), (-1, 1), (1, F(9, 2)))


def test_split_rejects_nonstandard_ordering():
    pair = build("2:2")
    with pytest.raises((ValueError, InternalInvariantViolation, NotTDPair)):
        split_decomposition(pair, (2, -2, 0), (-2, 0, 2))


@pytest.mark.parametrize("spec", SMALL)
def test_split_zeta0_is_one(spec):
    pair = build(spec)
    assert split_sequence(pair, *default_orderings(pair))[0] == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=4))
def test_shape_factorization_recovers_multiset(ds):
    rho = [1]
    for d in ds:
        nxt = [0] * (len(rho) + d)
        for i, r in enumerate(rho):
            for j in range(d + 1):
                nxt[i + j] += r
        rho = nxt
    assert shape_factorization(tuple(rho)) == [tuple(sorted(ds))]
