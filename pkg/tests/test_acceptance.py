"""Acceptance criteria, checked with exact rational equality over the corpus.

Each test prints one PASS/FAIL line; the lines are also collected into the
pytest terminal summary.  Run directly with ``python3 tests/test_acceptance.py``.
"""

import random
from contextlib import contextmanager
from fractions import Fraction as F

import pytest

from tdpair import (
    Matrix,
    dagger_apply,
    drinfeld_poly,
    dual_iso_check,
    eigen_analyze,
    form_space,
    four_iso_report,
    invariant_form,
    iso_solver,
    krawtchouk_type,
    leonard_krawtchouk,
    onsager_tensor,
    parameter_array,
    parse_spec,
    shape,
    shape_factorization,
    split_sequence,
    standard_orderings,
)
from tdpair.conjectures import HOLDS, idempotent_E0, run_harness, trace_ratio_report
from tdpair.core import default_orderings
from tdpair.forms import self_intertwiners
from tdpair.linalg import Poly, commutator

from conftest import CORPUS, build

RESULTS: list[str] = []


@contextmanager
def criterion(number: int, title: str):
    try:
        yield
    except BaseException:
        line = f"[FAIL] criterion {number:2d}: {title}"
        RESULTS.append(line)
        print(line)
        raise
    line = f"[PASS] criterion {number:2d}: {title}"
    RESULTS.append(line)
    print(line)


def _multiple(x: Matrix, y: Matrix) -> bool:
    fx, fy = x.flatten(), y.flatten()
    k = next(i for i, v in enumerate(fy) if v)
    c = fx[k] / fy[k]
    return c != 0 and all(a == c * b for a, b in zip(fx, fy))


def _invariant(basis, m: Matrix) -> bool:
    from tdpair.linalg import in_span
    return all(in_span(m.apply(v), basis) for v in basis)


def _random_matrix(rng: random.Random, n: int) -> Matrix:
    return Matrix([[F(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(n)] for _ in range(n)])


@pytest.fixture(scope="module")
def harness():
    return {s: {r.conjecture: r for r in run_harness(build(s), s)} for s in CORPUS}


def test_criterion_01_axioms(corpus, negatives):
    with criterion(1, "axiom suite on corpus; negatives fail exactly axiom (iv) with a witness"):
        for spec, pair in corpus.items():
            assert pair.verification.passed, spec
        for name, pair in negatives.items():
            rep = pair.verification
            assert rep.failed_axioms() == ["iv"], name
            basis = [tuple(F(x) for x in v) for v in rep.witnesses["iv"]["invariant_subspace_basis"]]
            assert 0 < len(basis) < pair.n
            assert _invariant(basis, pair.A) and _invariant(basis, pair.Astar), name


def test_criterion_02_krawtchouk_spectra(corpus):
    with criterion(2, "eigenvalues d-2i for A and A*, with (d-2i) a standard ordering of both"):
        for spec, pair in corpus.items():
            d = pair.diameter
            target = tuple(F(d - 2 * i) for i in range(d + 1))
            assert eigen_analyze(pair.A).eigenvalues == target, spec
            assert eigen_analyze(pair.Astar).eigenvalues == target, spec
            a_ord, s_ord = standard_orderings(pair)
            assert target in a_ord and target in s_ord, spec
            assert krawtchouk_type(pair).is_krawtchouk


def test_criterion_03_shape_factorization(corpus):
    with criterion(3, "shape polynomial is a product of 1+...+x^dj and contains the generator multiset"):
        for spec, pair in corpus.items():
            cs = parse_spec(spec)
            sh = shape(pair)
            assert sh.rho[0] == 1
            expected = Poly([1])
            for d, _ in cs.factors:
                expected = expected * Poly([1] * (d + 1))
            assert sh.generating_poly() == expected, spec
            facts = shape_factorization(sh)
            assert tuple(sorted(d for d, _ in cs.factors)) in facts, spec


def test_criterion_04_split_data(corpus):
    with criterion(4, "K(1,2) split sequence (1, 9/2) and parameter array; zeta_0 = 1 everywhere"):
        k12 = corpus["1:2"]
        assert split_sequence(k12, (1, -1), (-1, 1)) == (1, F(9, 2))
        pa = parameter_array(k12)
        assert (pa.theta, pa.theta_star, pa.zeta) == ((1, -1), (-1, 1), (1, F(9, 2)))
        # 2x2 hand oracle: zeta_1 = (1 + a)^2 / a for the diameter-one pair with parameter a
        for a in (F(2), F(3), F(-5, 2), F(1, 7)):
            assert split_sequence(leonard_krawtchouk(1, a), (1, -1), (-1, 1)) == (1, (1 + a) ** 2 / a)
        for spec, pair in corpus.items():
            assert split_sequence(pair, *default_orderings(pair))[0] == 1, spec


def test_criterion_05_invariant_form(corpus):
    with criterion(5, "form system has a one-dimensional solution space, symmetric and invertible"):
        for spec, pair in corpus.items():
            space = form_space(pair)
            assert len(space) == 1, spec
            m = space[0]
            assert m.T == m and m.is_invertible()
            assert pair.A.T @ m == m @ pair.A and pair.Astar.T @ m == m @ pair.Astar
        assert invariant_form(corpus["1:2"]).M == Matrix([[0, 1], [1, 0]])


def test_criterion_06_dagger(corpus):
    with criterion(6, "dagger fixes A and A*, is an involution and reverses products (20 random draws)"):
        for spec, pair in corpus.items():
            rng = random.Random(spec)
            form = invariant_form(pair)
            assert dagger_apply(pair, pair.A, form) == pair.A
            assert dagger_apply(pair, pair.Astar, form) == pair.Astar
            for _ in range(20):
                x = _random_matrix(rng, pair.n)
                assert dagger_apply(pair, dagger_apply(pair, x, form), form) == x, spec
            for _ in range(20):
                x, y = _random_matrix(rng, pair.n), _random_matrix(rng, pair.n)
                lhs = dagger_apply(pair, x @ y, form)
                assert lhs == dagger_apply(pair, y, form) @ dagger_apply(pair, x, form), spec


def test_criterion_07_four_isomorphisms(corpus):
    with criterion(7, "negate, swap and negate-swap isomorphisms certified; K(1,2) certificates match"):
        for spec, pair in corpus.items():
            rep = four_iso_report(pair)
            assert rep["all_certified"], spec
        certs = four_iso_report(corpus["1:2"])["certificates"]
        assert _multiple(certs["negate"].gamma, Matrix.diag([1, -1]))
        assert _multiple(certs["swap"].gamma, Matrix([[0, 2], [1, 0]]))


def test_criterion_08_dual_isomorphism(corpus):
    with criterion(8, "pair isomorphic to its transpose, with the form matrix as certificate"):
        for spec, pair in corpus.items():
            rep = dual_iso_check(pair)
            assert rep["certified"] and rep["form_is_certificate"], spec


def test_criterion_09_drinfeld(corpus):
    with criterion(9, "P(0) = 1, P(1) != 0; K(1,2), K(1,3) values; P separates isomorphism classes"):
        for spec, pair in corpus.items():
            p = drinfeld_poly(pair).P
            assert p(0) == 1 and p(1) != 0, spec
        p12 = drinfeld_poly(corpus["1:2"]).P
        assert p12 == Poly([1, F(-9, 8)])
        assert drinfeld_poly(corpus["1:3"]).P == Poly([1, F(-4, 3)])
        inv = onsager_tensor("1:1/2")
        assert drinfeld_poly(inv).P == p12
        cert = iso_solver(corpus["1:2"], inv)
        assert cert is not None and cert.holds()
        assert drinfeld_poly(corpus["1:3"]).P != p12
        assert iso_solver(corpus["1:2"], corpus["1:3"]) is None


def test_criterion_10_dolan_grady(corpus):
    with criterion(10, "[A,[A,[A,A*]]] = 4[A,A*] and the starred companion"):
        for spec, pair in corpus.items():
            for x, y in ((pair.A, pair.Astar), (pair.Astar, pair.A)):
                c = commutator(x, y)
                assert commutator(x, commutator(x, c)) == c * 4, spec


def test_criterion_11_conjecture_harness(corpus, harness):
    with criterion(11, "trace formulas, trace ratio, split-sequence swap and parameter-array conditions hold"):
        ids = ("zeta_trace_formula", "trace_ratio_formula", "split_sequence_swap", "parameter_array_conditions")
        for spec, reports in harness.items():
            for cid in ids:
                assert reports[cid].verdict == HOLDS, (spec, cid)
            assert reports["trace_ratio_formula"].witness["tr(E0 E0*)"] != "0"
            for i in ("i", "ii", "iii"):
                assert reports["parameter_array_conditions"].witness[i]["verdict"] == HOLDS
        k12 = corpus["1:2"]
        e0, e0s = idempotent_E0(k12)
        assert (e0 @ e0s).trace() == F(-1, 8)
        assert trace_ratio_report(k12).witness["per_i"][1]["ratio"] == "9/2"


def test_criterion_12_schur(corpus):
    with criterion(12, "self-intertwiners of every instance are exactly the scalars"):
        for spec, pair in corpus.items():
            space = self_intertwiners(pair)
            assert len(space) == 1, spec
            assert _multiple(space[0], Matrix.identity(pair.n))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
