"""Generators for Krawtchouk-type TD pairs and the derived-pair operations.

Each tensor factor is the irreducible sl2-module V(d) on a basis w_0..w_d with

    e.w_i = i(d - i + 1) w_{i-1},    f.w_i = w_{i+1},

acting through A = e + f and A* = a e + a^{-1} f.  A tensor product acts by
the sum of the slot copies.  Nothing about the output is taken on trust: the
verifier is run on every generated pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import TDPair, krawtchouk_type, shape
from .errors import BadParameter, ConstructionRejected
from .linalg import Matrix, Poly, format_fraction, kron, to_fraction


@dataclass(frozen=True)
class ConstructionSpec:
    factors: tuple  # of (d, a)

    def __post_init__(self):
        cleaned = []
        for d, a in self.factors:
            if isinstance(d, bool) or int(d) != d or d < 1:
                raise BadParameter(f"factor diameter must be a positive integer, got {d!r}")
            cleaned.append((int(d), to_fraction(a)))
        object.__setattr__(self, "factors", tuple(cleaned))
        validate_parameters([a for _, a in cleaned])

    @property
    def diameter(self) -> int:
        return sum(d for d, _ in self.factors)

    @property
    def dim(self) -> int:
        out = 1
        for d, _ in self.factors:
            out *= d + 1
        return out

    def shape_poly(self) -> Poly:
        p = Poly([1])
        for d, _ in self.factors:
            p = p * Poly([1] * (d + 1))
        return p

    def multiset(self) -> tuple:
        return tuple(sorted(d for d, _ in self.factors))

    def __str__(self) -> str:
        return ",".join(f"{d}:{format_fraction(a)}" for d, a in self.factors)


def validate_parameters(params) -> None:
    for a in params:
        if a in (0, 1, -1):
            raise BadParameter(f"evaluation parameter {format_fraction(a)} is not allowed (must avoid 0, 1, -1)")
    for i in range(len(params)):
        for j in range(i + 1, len(params)):
            ai, aj = params[i], params[j]
            if ai == aj:
                raise BadParameter(f"repeated evaluation parameter {format_fraction(ai)}")
            if ai * aj == 1:
                raise BadParameter(
                    f"parameters {format_fraction(ai)} and {format_fraction(aj)} are mutually inverse")


def parse_spec(text: str) -> ConstructionSpec:
    """Parse ``"d1:a1,d2:a2,..."`` with each a an integer or p/q."""
    factors = []
    tokens = [t.strip() for t in text.split(",")]
    if not text.strip() or any(not t for t in tokens):
        raise BadParameter(f"empty factor in spec {text!r}")
    for tok in tokens:
        parts = tok.split(":")
        if len(parts) != 2:
            raise BadParameter(f"cannot parse factor {tok!r}; expected d:a")
        try:
            d = int(parts[0])
            a = Fraction(parts[1].strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise BadParameter(f"cannot parse factor {tok!r}: {exc}") from None
        if "." in parts[1] or "e" in parts[1].lower():
            raise BadParameter(f"parameter {parts[1]!r} must be an integer or p/q")
        factors.append((d, a))
    return ConstructionSpec(tuple(factors))


def sl2_module(d: int) -> tuple[Matrix, Matrix]:
    """Matrices of e and f on V(d), columns indexed by w_0..w_d."""
    n = d + 1
    e = [[0] * n for _ in range(n)]
    f = [[0] * n for _ in range(n)]
    for i in range(n):
        if i >= 1:
            e[i - 1][i] = i * (d - i + 1)
        if i + 1 < n:
            f[i + 1][i] = 1
    return Matrix(e), Matrix(f)


def _factor_pair(d: int, a: Fraction) -> tuple[Matrix, Matrix]:
    e, f = sl2_module(d)
    return e + f, e * a + f * (1 / a)


def leonard_krawtchouk(d: int, a) -> TDPair:
    a = to_fraction(a)
    if int(d) != d or d < 0:
        raise BadParameter(f"diameter must be a nonnegative integer, got {d!r}")
    validate_parameters([a])
    if d == 0:
        return TDPair(Matrix([[0]]), Matrix([[0]]), provenance=f"0:{format_fraction(a)}")
    A, As = _factor_pair(int(d), a)
    return TDPair(A, As, provenance=f"{d}:{format_fraction(a)}")


def tensor_pair(factors) -> TDPair:
    """Unchecked tensor construction; parameters are not validated."""
    A = As = None
    for d, a in factors:
        fa, fs = _factor_pair(int(d), to_fraction(a))
        if A is None:
            A, As = fa, fs
        else:
            ia, ib = Matrix.identity(A.n), Matrix.identity(fa.n)
            A = kron(A, ib) + kron(ia, fa)
            As = kron(As, ib) + kron(ia, fs)
    label = ",".join(f"{d}:{format_fraction(to_fraction(a))}" for d, a in factors)
    return TDPair(A, As, provenance=label)


def onsager_tensor(spec) -> TDPair:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    elif not isinstance(spec, ConstructionSpec):
        spec = ConstructionSpec(tuple(spec))
    pair = tensor_pair(spec.factors)
    report = pair.verification
    if not report.passed:
        raise ConstructionRejected(f"spec {spec} failed axioms {report.failed_axioms()}", report)
    if not krawtchouk_type(pair):
        raise ConstructionRejected(f"spec {spec} is not of Krawtchouk type", report)
    if pair.diameter != spec.diameter:
        raise ConstructionRejected(f"spec {spec}: diameter {pair.diameter} != {spec.diameter}", report)
    if shape(pair).generating_poly() != spec.shape_poly():
        raise ConstructionRejected(f"spec {spec}: shape {shape(pair).rho} does not match", report)
    return pair


def transform(pair: TDPair, alpha, beta, alpha_star, beta_star) -> TDPair:
    alpha, beta, alpha_star, beta_star = map(to_fraction, (alpha, beta, alpha_star, beta_star))
    if alpha == 0 or alpha_star == 0:
        raise BadParameter("alpha and alpha* must be nonzero")
    return TDPair((pair.A * alpha).shift(-beta), (pair.Astar * alpha_star).shift(-beta_star))


def swap(pair: TDPair) -> TDPair:
    return TDPair(pair.Astar, pair.A)


def negate(pair: TDPair) -> TDPair:
    return TDPair(-pair.A, -pair.Astar)


def dual(pair: TDPair) -> TDPair:
    """Images under the canonical anti-isomorphism onto the dual space (transposes)."""
    return TDPair(pair.A.T, pair.Astar.T)
