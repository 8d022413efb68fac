"""TD-pair axioms, standard orderings, shape and the split decomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import (
    InternalInvariantViolation,
    IrrationalSpectrum,
    NotAPath,
    NotDiagonalizable,
    NotTDPair,
    Rho0NotOne,
)
from .linalg import (
    Matrix,
    Poly,
    Vector,
    cyclic_span,
    format_fraction,
    generated_algebra_dim,
    in_span,
    is_parallel,
    is_squarefree,
    kernel_basis,
    matrix_kernel,
    min_poly,
    orthogonal_complement,
    rational_roots,
    span_basis,
    subspace_dim,
    subspace_intersection,
    subspace_sum,
    to_fraction,
)


@dataclass(frozen=True)
class EigenData:
    """Spectral data of a diagonalizable matrix; eigenvalues in decreasing order."""

    eigenvalues: tuple
    projectors: tuple
    eigenspace_bases: tuple

    @property
    def diameter(self) -> int:
        return len(self.eigenvalues) - 1

    def index(self, theta) -> int:
        return self.eigenvalues.index(to_fraction(theta))

    def projector(self, theta) -> Matrix:
        return self.projectors[self.index(theta)]

    def basis(self, theta) -> tuple:
        return self.eigenspace_bases[self.index(theta)]

    def multiplicities(self) -> dict:
        return {t: len(b) for t, b in zip(self.eigenvalues, self.eigenspace_bases)}


def eigen_analyze(m: Matrix) -> EigenData:
    mp = min_poly(m)
    if not is_squarefree(mp):
        raise NotDiagonalizable(f"minimal polynomial {mp} is not squarefree")
    roots = rational_roots(mp)
    if len(roots) != mp.degree:
        raise IrrationalSpectrum(f"minimal polynomial {mp} does not split over the rationals")
    roots = sorted(roots, reverse=True)
    projectors = []
    bases = []
    for i, t in enumerate(roots):
        e = Matrix.identity(m.n)
        for j, s in enumerate(roots):
            if j != i:
                e = (e @ m.shift(s)) * (1 / (t - s))
        projectors.append(e)
        bases.append(tuple(matrix_kernel(m.shift(t))))
    return EigenData(tuple(roots), tuple(projectors), tuple(bases))


@dataclass
class VerificationReport:
    """Outcome of the four TD-pair axiom checks."""

    dim: int
    diagonalizable: bool
    a_tridiagonal: bool
    astar_tridiagonal: bool
    irreducible: bool
    algebra_dim: int
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.diagonalizable and self.a_tridiagonal and self.astar_tridiagonal and self.irreducible

    def failed_axioms(self) -> list[str]:
        names = [("i", self.diagonalizable), ("ii", self.a_tridiagonal),
                 ("iii", self.astar_tridiagonal), ("iv", self.irreducible)]
        return [k for k, ok in names if not ok]

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "passed": self.passed,
            "axioms": {
                "i_diagonalizable": self.diagonalizable,
                "ii_astar_tridiagonal_on_A_eigenspaces": self.a_tridiagonal,
                "iii_a_tridiagonal_on_Astar_eigenspaces": self.astar_tridiagonal,
                "iv_irreducible": self.irreducible,
            },
            "generated_algebra_dim": self.algebra_dim,
            "failed": self.failed_axioms(),
            "witnesses": self.witnesses,
        }


def _support_edges(eig: EigenData, other: Matrix) -> set:
    k = len(eig.eigenvalues)
    right = [other @ e for e in eig.projectors]
    edges = set()
    for i in range(k):
        for j in range(i + 1, k):
            if not (eig.projectors[i] @ right[j]).is_zero() or not (eig.projectors[j] @ right[i]).is_zero():
                edges.add((i, j))
    return edges


def _degrees(k: int, edges: set) -> list[int]:
    deg = [0] * k
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    return deg


def _components(k: int, edges: set) -> int:
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        parent[find(i)] = find(j)
    return len({find(x) for x in range(k)})


def _is_linear_forest(k: int, edges: set) -> bool:
    # some ordering makes every edge join neighbours
    return max(_degrees(k, edges), default=0) <= 2 and len(edges) == k - _components(k, edges)


def _path_orderings(eig: EigenData, edges: set) -> list[tuple]:
    k = len(eig.eigenvalues)
    vals = eig.eigenvalues
    if k == 1:
        return [(vals[0],)]
    if not (_is_linear_forest(k, edges) and _components(k, edges) == 1):
        raise NotAPath(f"support graph on eigenvalues {[format_fraction(v) for v in vals]} "
                       f"has edges {sorted(edges)}, not a path")
    adj = {i: [] for i in range(k)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    ends = [i for i in range(k) if len(adj[i]) == 1]
    start = min(ends)  # eigenvalues are stored decreasing, so this end has the larger value
    order = [start]
    prev = None
    while len(order) < k:
        cur = order[-1]
        nxt = next(x for x in adj[cur] if x != prev)
        prev = cur
        order.append(nxt)
    forward = tuple(vals[i] for i in order)
    return [forward, tuple(reversed(forward))]


def _proper_invariant_subspace(a: Matrix, b: Matrix, hints: Sequence[Sequence] = ()) -> list[Vector] | None:
    n = a.n
    std = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    candidates = list(hints) + std
    for v in candidates:
        s = cyclic_span([a, b], v)
        if 0 < len(s) < n:
            return s
    for v in std:
        s = cyclic_span([a.T, b.T], v)
        if 0 < len(s) < n:
            return span_basis(orthogonal_complement(s, n))
    if n <= 8:
        # nonscalar commuting maps with a rational eigenvalue give an eigenspace witness
        rows = _commutant_rows(a, b)
        for vec in kernel_basis(rows, n * n):
            g = Matrix._trusted(tuple(tuple(vec[i * n:(i + 1) * n]) for i in range(n)))
            try:
                roots = rational_roots(min_poly(g))
            except Exception:
                continue
            for r in roots:
                ker = matrix_kernel(g.shift(r))
                if 0 < len(ker) < n:
                    return span_basis(ker)
    return None


def _commutant_rows(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    n = a.n
    rows = []
    for m in (a, b):
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                # (G M - M G)_{ij} = sum_k G_ik M_kj - M_ik G_kj
                for k in range(n):
                    row[i * n + k] += m[k, j]
                    row[k * n + j] -= m[i, k]
                rows.append(row)
    return rows


def _invariant(basis: Sequence[Sequence], m: Matrix) -> bool:
    return all(in_span(m.apply(v), basis) for v in basis)


class TDPair:
    """An ordered pair of square matrices with lazily cached analysis.

    The pair is not required to satisfy the axioms; ``verification`` reports
    whether it does.
    """

    def __init__(self, A: Matrix, Astar: Matrix, provenance: str | None = None):
        if not isinstance(A, Matrix):
            A = Matrix(A)
        if not isinstance(Astar, Matrix):
            Astar = Matrix(Astar)
        if A.n != Astar.n:
            raise ValueError(f"A is {A.n}x{A.n} but A* is {Astar.n}x{Astar.n}")
        self.A = A
        self.Astar = Astar
        self.provenance = provenance

    def __repr__(self) -> str:
        tag = f", provenance={self.provenance!r}" if self.provenance else ""
        return f"TDPair(n={self.n}{tag})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TDPair):
            return NotImplemented
        return self.A == other.A and self.Astar == other.Astar

    def __hash__(self) -> int:
        return hash((self.A, self.Astar))

    @property
    def n(self) -> int:
        return self.A.n

    @cached_property
    def eigA(self) -> EigenData:
        return eigen_analyze(self.A)

    @cached_property
    def eigAstar(self) -> EigenData:
        return eigen_analyze(self.Astar)

    @property
    def diameter(self) -> int:
        return self.eigA.diameter

    @cached_property
    def verification(self) -> VerificationReport:
        return _verify(self)

    def require_verified(self) -> None:
        if not self.verification.passed:
            raise NotTDPair(f"axioms {self.verification.failed_axioms()} fail")


def _verify(pair: TDPair) -> VerificationReport:
    A, As = pair.A, pair.Astar
    n = pair.n
    witnesses: dict = {}
    diag = True
    eig = {}
    for name, attr in (("A", "eigA"), ("Astar", "eigAstar")):
        try:
            eig[name] = getattr(pair, attr)
        except NotDiagonalizable:
            diag = False
            witnesses[f"i_{name}"] = {"min_poly": min_poly(getattr(pair, name)).to_strings()}
    a_tri = as_tri = False
    if diag:
        ea, es = eig["A"], eig["Astar"]
        edges = _support_edges(ea, As)
        a_tri = _is_linear_forest(len(ea.eigenvalues), edges)
        if not a_tri:
            witnesses["ii"] = _edge_witness(ea, edges)
        edges = _support_edges(es, A)
        as_tri = _is_linear_forest(len(es.eigenvalues), edges)
        if not as_tri:
            witnesses["iii"] = _edge_witness(es, edges)
    alg = generated_algebra_dim(A, As)
    irreducible = alg == n * n
    if not irreducible:
        hints = []
        for e in eig.values():
            hints.extend(v for b in e.eigenspace_bases for v in b)
        w = _proper_invariant_subspace(A, As, hints)
        if w is not None:
            if not (_invariant(w, A) and _invariant(w, As)):
                raise InternalInvariantViolation("invariant subspace witness is not invariant")
            witnesses["iv"] = {
                "invariant_subspace_basis": [[format_fraction(x) for x in v] for v in w],
                "subspace_dim": len(w),
            }
        else:
            witnesses["iv"] = {"generated_algebra_dim": alg}
    return VerificationReport(n, diag, a_tri, as_tri, irreducible, alg, witnesses)


def _edge_witness(eig: EigenData, edges: set) -> dict:
    return {
        "eigenvalues": [format_fraction(v) for v in eig.eigenvalues],
        "support_edges": [[format_fraction(eig.eigenvalues[i]), format_fraction(eig.eigenvalues[j])]
                          for i, j in sorted(edges)],
    }


def verify_td_pair(A: Matrix, Astar: Matrix) -> VerificationReport:
    return TDPair(A, Astar).verification


def standard_orderings(pair: TDPair) -> tuple[list[tuple], list[tuple]]:
    """Standard orderings of the eigenvalues of A and of A*.

    Each list holds the two end-to-end traversals of the support graph (a
    single ordering when the diameter is 0).
    """
    a = _path_orderings(pair.eigA, _support_edges(pair.eigA, pair.Astar))
    s = _path_orderings(pair.eigAstar, _support_edges(pair.eigAstar, pair.A))
    return a, s


@dataclass(frozen=True)
class KrawtchoukInfo:
    is_krawtchouk: bool
    diameter: int
    theta: tuple | None = None
    theta_star: tuple | None = None

    def __bool__(self) -> bool:
        return self.is_krawtchouk


def krawtchouk_type(pair: TDPair) -> KrawtchoukInfo:
    """Check whether (d, d-2, ..., -d) is standard for both A and A*.

    When it is, returns the orderings (d-2i) for A and (2i-d) for A*.
    """
    pair.require_verified()
    d = pair.diameter
    target = tuple(Fraction(d - 2 * i) for i in range(d + 1))
    a_ord, s_ord = standard_orderings(pair)
    if target in a_ord and target in s_ord:
        return KrawtchoukInfo(True, d, target, tuple(reversed(target)))
    return KrawtchoukInfo(False, d)


@dataclass(frozen=True)
class Shape:
    rho: tuple

    def __post_init__(self):
        if not self.rho or any(int(r) != r or r <= 0 for r in self.rho):
            raise ValueError("shape entries must be positive integers")

    @property
    def diameter(self) -> int:
        return len(self.rho) - 1

    def is_symmetric(self) -> bool:
        return self.rho == self.rho[::-1]

    def is_unimodal(self) -> bool:
        d = self.diameter
        return all(self.rho[i - 1] <= self.rho[i] for i in range(1, d // 2 + 1))

    def generating_poly(self) -> Poly:
        return Poly(self.rho)


def shape(pair: TDPair) -> Shape:
    a_ord, s_ord = standard_orderings(pair)
    rho = tuple(len(pair.eigA.basis(t)) for t in a_ord[0])
    rho_star = tuple(len(pair.eigAstar.basis(t)) for t in s_ord[0])
    if rho != rho_star and rho != rho_star[::-1]:
        raise InternalInvariantViolation(f"eigenspace dimensions disagree: {rho} vs {rho_star}")
    return Shape(rho)


def _check_standard(pair: TDPair, theta, theta_star) -> tuple[tuple, tuple]:
    theta = tuple(to_fraction(t) for t in theta)
    theta_star = tuple(to_fraction(t) for t in theta_star)
    a_ord, s_ord = standard_orderings(pair)
    if theta not in a_ord:
        raise ValueError(f"{[format_fraction(t) for t in theta]} is not a standard ordering for A")
    if theta_star not in s_ord:
        raise ValueError(f"{[format_fraction(t) for t in theta_star]} is not a standard ordering for A*")
    return theta, theta_star


@dataclass(frozen=True)
class SplitData:
    theta: tuple
    theta_star: tuple
    U_bases: tuple
    zeta: tuple | None = None

    @property
    def dims(self) -> tuple:
        return tuple(len(u) for u in self.U_bases)


def split_decomposition(pair: TDPair, theta, theta_star) -> SplitData:
    theta, theta_star = _check_standard(pair, theta, theta_star)
    n = pair.n
    d = len(theta) - 1
    V = [pair.eigA.basis(t) for t in theta]
    Vs = [pair.eigAstar.basis(t) for t in theta_star]
    U = []
    for i in range(d + 1):
        low = subspace_sum(*Vs[: i + 1])
        high = subspace_sum(*V[i:])
        U.append(tuple(subspace_intersection(low, high, n)))

    def fail(msg):
        raise InternalInvariantViolation(msg)

    if sum(len(u) for u in U) != n or subspace_dim([v for u in U for v in u]) != n:
        fail("split spaces do not form a direct sum decomposition")
    for i in range(d + 1):
        if len(U[i]) != len(V[i]) or len(U[i]) != len(Vs[i]):
            fail(f"dim U_{i} = {len(U[i])} differs from the shape entry")
        up = U[i + 1] if i < d else ()
        down = U[i - 1] if i > 0 else ()
        for u in U[i]:
            if not in_span(pair.A.shift(theta[i]).apply(u), up):
                fail(f"(A - theta_{i} I) U_{i} is not inside U_{i + 1}")
            if not in_span(pair.Astar.shift(theta_star[i]).apply(u), down):
                fail(f"(A* - theta*_{i} I) U_{i} is not inside U_{i - 1}")
        if span_basis([v for u in U[: i + 1] for v in u]) != subspace_sum(*Vs[: i + 1]):
            fail(f"U_0 + ... + U_{i} differs from V*_0 + ... + V*_{i}")
        if span_basis([v for u in U[i:] for v in u]) != subspace_sum(*V[i:]):
            fail(f"U_{i} + ... + U_d differs from V_{i} + ... + V_d")
    return SplitData(theta, theta_star, tuple(U))


def split_sequence(pair: TDPair, theta, theta_star) -> tuple:
    """Scalars by which the alternating operator strings act on the line U_0."""
    sd = split_decomposition(pair, theta, theta_star)
    return _zeta_from_split(pair, sd)


def _zeta_from_split(pair: TDPair, sd: SplitData) -> tuple:
    if len(sd.U_bases[0]) != 1:
        raise Rho0NotOne(f"U_0 has dimension {len(sd.U_bases[0])}")
    u = sd.U_bases[0][0]
    theta, theta_star = sd.theta, sd.theta_star
    d = len(theta) - 1
    zeta = []
    w = u  # (A - theta_{i-1}) ... (A - theta_0) u
    for i in range(d + 1):
        v = w
        for j in range(i, 0, -1):
            v = pair.Astar.shift(theta_star[j]).apply(v)
        c = is_parallel(v, u)
        if c is None:
            raise InternalInvariantViolation(f"U_0 is not invariant under the length-{i} operator string")
        zeta.append(c)
        w = pair.A.shift(theta[i]).apply(w)
    return tuple(zeta)


@dataclass(frozen=True)
class ParameterArray:
    theta: tuple
    theta_star: tuple
    zeta: tuple

    @property
    def diameter(self) -> int:
        return len(self.theta) - 1

    def to_dict(self) -> dict:
        return {
            "theta": [format_fraction(x) for x in self.theta],
            "theta_star": [format_fraction(x) for x in self.theta_star],
            "zeta": [format_fraction(x) for x in self.zeta],
        }


def default_orderings(pair: TDPair) -> tuple[tuple, tuple]:
    """Orderings (d-2i) / (2i-d) for Krawtchouk pairs, else the first standard ones."""
    info = krawtchouk_type(pair)
    if info:
        return info.theta, info.theta_star
    a_ord, s_ord = standard_orderings(pair)
    return a_ord[0], s_ord[0]


def parameter_array(pair: TDPair, theta=None, theta_star=None) -> ParameterArray:
    if theta is None or theta_star is None:
        t, ts = default_orderings(pair)
        theta = t if theta is None else theta
        theta_star = ts if theta_star is None else theta_star
    sd = split_decomposition(pair, theta, theta_star)
    return ParameterArray(sd.theta, sd.theta_star, _zeta_from_split(pair, sd))


def _ones(k: int) -> list[int]:
    return [1] * (k + 1)


def _int_divmod(num: list[int], den: list[int]) -> tuple[list[int], bool]:
    # den is monic with constant 1 (a run of ones), so integer division is exact
    rem = list(num)
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return [], False
    q = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1 - dd, -1, -1):
        c = rem[k + dd]
        q[k] = c
        if c:
            for j, y in enumerate(den):
                rem[k + j] -= c * y
    return q, not any(rem)


def shape_factorization(rho) -> list[tuple]:
    """All multisets {d_j} with sum(rho_i x^i) = prod_j (1 + x + ... + x^{d_j}).

    Returned as sorted tuples; an empty list means no such factorisation.
    """
    if isinstance(rho, Shape):
        rho = rho.rho
    rho = [int(r) for r in rho]
    if not rho or rho[0] != 1:
        return []
    results: list[tuple] = []

    def search(p: list[int], smallest: int, acc: list[int]):
        deg = len(p) - 1
        if deg == 0:
            if p == [1]:
                results.append(tuple(acc))
            return
        for k in range(smallest, deg + 1):
            q, exact = _int_divmod(p, _ones(k))
            if exact:
                search(q, k, acc + [k])

    search(rho, 1, [])
    return results
