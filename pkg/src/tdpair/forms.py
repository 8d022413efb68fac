"""Intertwiners, the invariant bilinear form, the map X -> X^dagger, isomorphism certificates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constructions import dual, negate, swap
from .core import TDPair, eigen_analyze
from .errors import (
    FormSpaceDimension,
    InternalInvariantViolation,
    IrrationalSpectrum,
    NotDiagonalizable,
    SolutionSpaceDimension,
)
from .linalg import (
    EchelonBasis,
    Matrix,
    format_fraction,
    kernel_basis,
    normalize_first_nonzero,
    vec_to_matrix,
    word_basis,
)


def _dense_intertwiner_rows(a1: Matrix, b1: Matrix, a2: Matrix, b2: Matrix) -> list[list[Fraction]]:
    # unknown G (row-major); equations G X1 - X2 G = 0 for (X1, X2) in ((a1, a2), (b1, b2))
    n = a1.n
    rows = []
    for x1, x2 in ((a1, a2), (b1, b2)):
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    c = x1[k, j]
                    if c:
                        row[i * n + k] += c
                    c = x2[i, k]
                    if c:
                        row[k * n + j] -= c
                rows.append(row)
    return rows


def _eigenbasis(m: Matrix):
    eig = eigen_analyze(m)
    cols = []
    labels = []
    for t, basis in zip(eig.eigenvalues, eig.eigenspace_bases):
        cols.extend(basis)
        labels.extend([t] * len(basis))
    return Matrix.from_columns(cols), labels


def intertwiner_space(a1: Matrix, b1: Matrix, a2: Matrix, b2: Matrix) -> list[Matrix]:
    """Basis of {G : G a1 = a2 G and G b1 = b2 G}.

    When a1 and a2 are diagonalizable over the rationals the system is solved
    in eigenbasis coordinates, where G is block diagonal by eigenvalue; this
    leaves sum(rho_i^2) unknowns instead of n^2.  Otherwise the full
    vectorised n^2 system is used.
    """
    n = a1.n
    if a2.n != n or b1.n != n or b2.n != n:
        return []
    try:
        p1, lab1 = _eigenbasis(a1)
        p2, lab2 = _eigenbasis(a2)
    except (NotDiagonalizable, IrrationalSpectrum):
        rows = _dense_intertwiner_rows(a1, b1, a2, b2)
        return [vec_to_matrix(v, n) for v in kernel_basis(rows, n * n)]
    # G' = P2^-1 G P1 is supported on the positions where eigenvalues agree
    free = [(r, c) for r in range(n) for c in range(n) if lab2[r] == lab1[c]]
    if not free:
        return []
    index = {pos: k for k, pos in enumerate(free)}
    p1_inv = p1.inverse()
    c1 = p1_inv @ b1 @ p1
    c2 = p2.inverse() @ b2 @ p2
    rows = []
    m = len(free)
    for i in range(n):
        for j in range(n):
            # (G' c1 - c2 G')_{ij}
            row = [Fraction(0)] * m
            for k in range(n):
                if (i, k) in index and c1[k, j]:
                    row[index[(i, k)]] += c1[k, j]
                if (k, j) in index and c2[i, k]:
                    row[index[(k, j)]] -= c2[i, k]
            if any(row):
                rows.append(row)
    ker = kernel_basis(rows, m) if rows else [
        tuple(Fraction(int(i == j)) for j in range(m)) for i in range(m)]
    out = []
    for v in ker:
        g = [[Fraction(0)] * n for _ in range(n)]
        for (r, c), x in zip(free, v):
            g[r][c] = x
        out.append(p2 @ Matrix(g) @ p1_inv)
    return out


def _normalized(m: Matrix) -> Matrix:
    return vec_to_matrix(normalize_first_nonzero(m.flatten()), m.n)


@dataclass(frozen=True)
class FormMatrix:
    """Gram matrix of the invariant symmetric bilinear form."""

    M: Matrix

    def check(self, pair: TDPair) -> dict:
        M = self.M
        return {
            "symmetric": M.T == M,
            "nondegenerate": M.is_invertible(),
            "A_selfadjoint": pair.A.T @ M == M @ pair.A,
            "Astar_selfadjoint": pair.Astar.T @ M == M @ pair.Astar,
        }


def form_space(pair: TDPair) -> list[Matrix]:
    """All M with A^T M = M A and A*^T M = M A*."""
    return intertwiner_space(pair.A, pair.Astar, pair.A.T, pair.Astar.T)


def invariant_form(pair: TDPair) -> FormMatrix:
    space = form_space(pair)
    if len(space) != 1:
        raise FormSpaceDimension(len(space))
    form = FormMatrix(_normalized(space[0]))
    bad = [k for k, ok in form.check(pair).items() if not ok]
    if bad:
        raise InternalInvariantViolation(f"invariant form fails {bad}")
    return form


def dagger_apply(pair: TDPair, X: Matrix, form: FormMatrix | None = None) -> Matrix:
    """X^dagger = M^-1 X^T M, the adjoint for the invariant form."""
    if form is None:
        form = invariant_form(pair)
    M = form.M
    return _inverse(M) @ X.T @ M


_inv_cache: dict = {}


def _inverse(m: Matrix) -> Matrix:
    inv = _inv_cache.get(m)
    if inv is None:
        if len(_inv_cache) > 64:
            _inv_cache.clear()
        inv = _inv_cache[m] = m.inverse()
    return inv


@dataclass(frozen=True)
class Intertwiner:
    """Certificate that gamma sends the source pair to the target pair."""

    gamma: Matrix
    source: TDPair
    target: TDPair

    def identities(self) -> dict:
        g = self.gamma
        return {
            "gamma A = B gamma": g @ self.source.A == self.target.A @ g,
            "gamma A* = B* gamma": g @ self.source.Astar == self.target.Astar @ g,
            "gamma invertible": g.is_invertible(),
        }

    def holds(self) -> bool:
        return all(self.identities().values())

    def to_dict(self) -> dict:
        return {
            "gamma": self.gamma.to_strings(),
            "source": {"A": self.source.A.to_strings(), "Astar": self.source.Astar.to_strings()},
            "target": {"A": self.target.A.to_strings(), "Astar": self.target.Astar.to_strings()},
            "identities": self.identities(),
        }


def iso_solver(p1: TDPair, p2: TDPair) -> Intertwiner | None:
    """Isomorphism certificate from p1 to p2, or None when they are not isomorphic."""
    if p1.n != p2.n:
        return None
    space = intertwiner_space(p1.A, p1.Astar, p2.A, p2.Astar)
    if not space:
        return None
    if len(space) > 1:
        raise SolutionSpaceDimension(len(space))
    cert = Intertwiner(_normalized(space[0]), p1, p2)
    if not cert.gamma.is_invertible():
        raise InternalInvariantViolation("nonzero intertwiner between TD pairs is singular")
    return cert


def self_intertwiners(pair: TDPair) -> list[Matrix]:
    return intertwiner_space(pair.A, pair.Astar, pair.A, pair.Astar)


def four_iso_report(pair: TDPair) -> dict:
    """Certificates from (A, A*) to (-A, -A*), (A*, A) and (-A*, -A)."""
    targets = {
        "negate": negate(pair),
        "swap": swap(pair),
        "negate_swap": negate(swap(pair)),
    }
    certs = {name: iso_solver(pair, t) for name, t in targets.items()}
    return {
        "certificates": certs,
        "all_certified": all(c is not None and c.holds() for c in certs.values()),
    }


def dual_iso_check(pair: TDPair, form: FormMatrix | None = None) -> dict:
    target = dual(pair)
    cert = iso_solver(pair, target)
    if form is None:
        form = invariant_form(pair)
    form_cert = Intertwiner(form.M, pair, target)
    return {
        "certificate": cert,
        "form_certificate": form_cert,
        "certified": cert is not None and cert.holds(),
        "form_is_certificate": form_cert.holds(),
    }


def express_in_pair_algebra(pair: TDPair, X: Matrix) -> dict:
    """Coefficients of X over the independent words in A, A*.

    Word ``"A*A"`` stands for the product A* @ A; ``""`` is the identity.
    Only nonzero coefficients are returned, in word-basis order.
    """
    words, mats = word_basis([pair.A, pair.Astar], ["A", "A*"])
    n = pair.n
    k = len(mats)
    cols = [m.flatten() for m in mats]
    # augmented system [words | X]
    rows = [[cols[w][r] for w in range(k)] + [X.flatten()[r]] for r in range(n * n)]
    ech = EchelonBasis(k + 1)
    for row in rows:
        ech.add(row)
    if k in ech.pivots:
        raise ValueError("X is not in the algebra generated by A and A*")
    coeffs = [Fraction(0)] * k
    for row, p in zip(ech.rows, ech.pivots):
        coeffs[p] = row[k]
    return {w: c for w, c in zip(words, coeffs) if c}


def format_word_expansion(coeffs: dict) -> str:
    parts = []
    for w, c in coeffs.items():
        parts.append(f"{format_fraction(c)}*{w or 'I'}")
    return " + ".join(parts) if parts else "0"
