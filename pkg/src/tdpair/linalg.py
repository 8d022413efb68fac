"""Exact rational dense linear algebra.

Everything here works over :class:`fractions.Fraction`.  Matrices are
immutable and square; rectangular systems are passed around as plain lists
of rows.  Products are computed on a common-denominator integer form, which
keeps the cost dominated by machine-sized integer multiplication rather than
by ``Fraction`` normalisation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property, reduce
from math import gcd
from typing import Iterable, Sequence

import numpy as np

Vector = tuple  # tuple of Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted; pass a Fraction or 'p/q' string")
    return Fraction(x)


def format_fraction(x: Fraction) -> str:
    """Canonical string form: ``"p"`` when the denominator is 1, else ``"p/q"``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class Matrix:
    """Immutable square matrix with exact rational entries."""

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have dimension at least 1")
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self._rows = rows

    @classmethod
    def _trusted(cls, rows: tuple) -> "Matrix":
        m = cls.__new__(cls)
        m._rows = rows
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._trusted(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "Matrix":
        return cls._trusted(tuple((ZERO,) * n for _ in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        vals = [to_fraction(v) for v in values]
        n = len(vals)
        return cls._trusted(tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        cols = [tuple(to_fraction(x) for x in c) for c in columns]
        return cls(zip(*cols))

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_fraction(x) for x in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"

    @cached_property
    def _scaled(self) -> tuple[int, tuple]:
        den = 1
        for row in self._rows:
            for x in row:
                if x.denominator != 1:
                    den = _lcm(den, x.denominator)
        ints = tuple(tuple((x * den).numerator for x in row) for row in self._rows)
        return den, ints

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix._trusted(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows))
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix._trusted(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows))
        )

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(tuple(tuple(-a for a in r) for r in self._rows))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        c = to_fraction(other)
        return Matrix._trusted(tuple(tuple(c * a for a in r) for r in self._rows))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self.matmul(other)

    def _check(self, other: "Matrix") -> None:
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def matmul(self, other: "Matrix") -> "Matrix":
        self._check(other)
        da, ia = self._scaled
        db, ib = other._scaled
        den = da * db
        cols = tuple(zip(*ib))
        out = []
        for row in ia:
            out.append(tuple(Fraction(sum(x * y for x, y in zip(row, col) if x), den) for col in cols))
        return Matrix._trusted(tuple(out))

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product ``M v``."""
        return tuple(sum((a * b for a, b in zip(row, v) if a), ZERO) for row in self._rows)

    def shift(self, c) -> "Matrix":
        """Return ``M - c I``."""
        c = to_fraction(c)
        if c == 0:
            return self
        return Matrix._trusted(
            tuple(tuple(x - c if i == j else x for j, x in enumerate(r)) for i, r in enumerate(self._rows))
        )

    @property
    def T(self) -> "Matrix":
        return Matrix._trusted(tuple(zip(*self._rows)))

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(self.n)), ZERO)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def flatten(self) -> Vector:
        """Row-major vectorisation."""
        return tuple(x for r in self._rows for x in r)

    def power(self, k: int) -> "Matrix":
        result = Matrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def rank(self) -> int:
        return rank(self._rows)

    def det(self) -> Fraction:
        rows = [list(r) for r in self._rows]
        n = self.n
        sign = 1
        d = ONE
        for c in range(n):
            p = next((r for r in range(c, n) if rows[r][c] != 0), None)
            if p is None:
                return ZERO
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                sign = -sign
            piv = rows[c][c]
            d *= piv
            for r in range(c + 1, n):
                f = rows[r][c]
                if f:
                    f /= piv
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
        return sign * d

    def inverse(self) -> "Matrix":
        n = self.n
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self._rows)]
        red, pivots = rref(aug)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix._trusted(tuple(tuple(red[i][n:]) for i in range(n)))

    def is_invertible(self) -> bool:
        return self.rank() == self.n

    def to_strings(self) -> list[list[str]]:
        return [[format_fraction(x) for x in r] for r in self._rows]

    @classmethod
    def from_strings(cls, rows) -> "Matrix":
        return cls([[Fraction(str(x)) for x in r] for r in rows])


def commutator(x: Matrix, y: Matrix) -> Matrix:
    return x @ y - y @ x


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; the row index is ``i_a * n_b + i_b``."""
    nb = b.n
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            rows.append(tuple(x * y for x in ra for y in rb))
    m = Matrix._trusted(tuple(rows))
    assert m.n == a.n * nb
    return m


# ---------------------------------------------------------------------------
# row reduction, kernels, subspaces


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    mat = [[to_fraction(x) for x in r] for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        piv = mat[r][c]
        if piv != 1:
            mat[r] = [x / piv for x in mat[r]]
        prow = mat[r]
        nz = [j for j in range(c, ncols) if prow[j] != 0]
        for i in range(len(mat)):
            if i != r:
                f = mat[i][c]
                if f:
                    row = mat[i]
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of ``{x : R x = 0}`` for the (possibly rectangular) row stack R.

    One basis vector per free column; the free coordinate is set to 1.
    """
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty row stack")
        ncols = len(rows[0])
    if isinstance(rows[0] if rows else None, Matrix):
        raise TypeError("pass rows, not a Matrix")
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(tuple(v))
    return basis


def matrix_kernel(m: Matrix) -> list[Vector]:
    return kernel_basis(m.rows, m.n)


def span_basis(vectors: Sequence[Sequence]) -> list[Vector]:
    """Canonical (RREF) basis for the span of the given vectors."""
    vectors = [v for v in vectors]
    if not vectors:
        return []
    red, _ = rref(vectors)
    return [tuple(r) for r in red]


def subspace_dim(vectors: Sequence[Sequence]) -> int:
    return rank(vectors) if vectors else 0


def subspace_sum(*spaces: Sequence[Sequence]) -> list[Vector]:
    vecs = [v for s in spaces for v in s]
    return span_basis(vecs)


def subspace_intersection(u: Sequence[Sequence], w: Sequence[Sequence], dim: int) -> list[Vector]:
    """Intersection of span(u) and span(w) in a space of dimension ``dim``.

    Solves ``sum a_i u_i - sum b_j w_j = 0`` and maps the kernel back through u.
    """
    u = span_basis(u)
    w = span_basis(w)
    if not u or not w:
        return []
    k = len(u)
    # columns: u_1..u_k, -w_1..-w_m ; rows: coordinates
    rows = [[u[i][c] for i in range(k)] + [-x[c] for x in w] for c in range(dim)]
    ker = kernel_basis(rows, k + len(w))
    vecs = [tuple(sum((coef[i] * u[i][c] for i in range(k)), ZERO) for c in range(dim)) for coef in ker]
    return span_basis(vecs)


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    if all(x == 0 for x in v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(v)]) == rank(basis)


def is_parallel(v: Sequence, u: Sequence) -> Fraction | None:
    """Return c with v = c u, or None if v is not a multiple of u (u nonzero)."""
    k = next(i for i, x in enumerate(u) if x != 0)
    c = Fraction(v[k]) / u[k]
    if all(a == c * b for a, b in zip(v, u)):
        return c
    return None


def vec_to_matrix(v: Sequence, n: int) -> Matrix:
    return Matrix._trusted(tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n)))


def normalize_first_nonzero(v: Sequence) -> Vector:
    """Scale so that the first nonzero entry equals 1."""
    k = next(i for i, x in enumerate(v) if x != 0)
    c = v[k]
    return tuple(x / c for x in v)


class EchelonBasis:
    """Incrementally maintained RREF basis of a subspace of ``F^dim``."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list[Fraction]:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                for j, x in enumerate(row):
                    if x:
                        v[j] -= f * x
        return v

    def add(self, v: Sequence) -> bool:
        """Insert v; return True when it enlarged the span."""
        v = self.reduce(v)
        p = next((i for i, x in enumerate(v) if x != 0), None)
        if p is None:
            return False
        piv = v[p]
        if piv != 1:
            v = [x / piv for x in v]
        for row in self.rows:
            f = row[p]
            if f:
                for j, x in enumerate(v):
                    if x:
                        row[j] -= f * x
        self.rows.append(v)
        self.pivots.append(p)
        return True


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Polynomial with rational coefficients, stored in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple = tuple(c)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        p = cls([1])
        for r in roots:
            p = p * cls([-to_fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return Poly((a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(m))

    def __neg__(self) -> "Poly":
        return Poly(-x for x in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = to_fraction(other)
            return Poly(c * x for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.lead()
        if len(rem) - 1 < db:
            return Poly(), Poly(rem)
        quot = [ZERO] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lead
            quot[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= c * y
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lead())

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        if isinstance(x, Matrix):
            return self.eval_matrix(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m: Matrix) -> Matrix:
        acc = Matrix.zeros(m.n)
        for c in reversed(self.coeffs):
            acc = (acc @ m).shift(-c)
        return acc

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    def __repr__(self) -> str:
        return f"Poly({[format_fraction(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = format_fraction(abs(c))
            if i == 0:
                body = mag
            else:
                var = "λ" if i == 1 else f"λ^{i}"
                body = var if mag == "1" else f"{mag} {var}"
            terms.append(("-" if c < 0 else "+", body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def to_strings(self) -> list[str]:
        return [format_fraction(c) for c in self.coeffs]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_squarefree(p: Poly) -> bool:
    return poly_gcd(p, p.derivative()).degree <= 0


def char_poly(m: Matrix) -> Poly:
    """Characteristic polynomial det(λI - M) by Berkowitz's division-free recurrence."""
    rows = m.rows
    n = m.n
    c = [ONE]  # descending coefficients for the leading k x k block
    for k in range(n):
        a = rows[k][k]
        r = rows[k][:k]
        v = [rows[i][k] for i in range(k)]
        t = [ONE, -a]
        for _ in range(k):
            t.append(-sum((x * y for x, y in zip(r, v)), ZERO))
            v = [sum((rows[i][j] * v[j] for j in range(k)), ZERO) for i in range(k)]
        c = [
            sum((t[i - j] * c[j] for j in range(len(c)) if 0 <= i - j < len(t)), ZERO)
            for i in range(k + 2)
        ]
    return Poly(reversed(c))


def min_poly(m: Matrix) -> Poly:
    """Minimal polynomial via the first linear dependency among I, M, M^2, ..."""
    n = m.n
    basis = EchelonBasis(n * n)
    powers = [Matrix.identity(n)]
    # track combinations: keep raw flattened powers and solve once dependent
    basis.add(powers[0].flatten())
    while True:
        nxt = powers[-1] @ m
        if not basis.add(nxt.flatten()):
            k = len(powers)
            cols = [p.flatten() for p in powers] + [nxt.flatten()]
            rows = [[col[r] for col in cols] for r in range(n * n)]
            ker = kernel_basis(rows, k + 1)
            assert len(ker) == 1
            coef = ker[0]
            return Poly(coef).monic()
        powers.append(nxt)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return []
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for p, e in factors.items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def rational_roots(p: Poly) -> list[Fraction]:
    """Distinct rational roots, via the rational root theorem on the primitive integer form."""
    if p.degree <= 0:
        return []
    den = reduce(_lcm, (c.denominator for c in p.coeffs), 1)
    ints = [int(c * den) for c in p.coeffs]
    g = reduce(gcd, ints)
    ints = [x // g for x in ints]
    roots: list[Fraction] = []
    k = 0
    while ints[k] == 0:
        k += 1
    if k:
        roots.append(ZERO)
    ints = ints[k:]
    work = Poly(ints)
    if work.degree <= 0:
        return sorted(roots)
    for q in _divisors(ints[-1]):
        for a in _divisors(ints[0]):
            for cand in (Fraction(a, q), Fraction(-a, q)):
                if cand in roots:
                    continue
                if work(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


# ---------------------------------------------------------------------------
# generated algebra

# 2^24 - 3; keeps rank * p^2 inside int64 for spans up to ~3e4 dimensions
_PRIMES = (16777213, 16777199, 16777183)


def _mod_p(m: Matrix, p: int) -> np.ndarray | None:
    out = np.empty((m.n, m.n), dtype=np.int64)
    for i, row in enumerate(m.rows):
        for j, x in enumerate(row):
            if x.denominator % p == 0:
                return None
            out[i, j] = (x.numerator % p) * pow(x.denominator, -1, p) % p
    return out


def _algebra_dim_mod_p(gens: Sequence[Matrix], p: int) -> int | None:
    n = gens[0].n
    gm = [_mod_p(g, p) for g in gens]
    if any(g is None for g in gm):
        return None
    size = n * n
    basis = np.zeros((0, size), dtype=np.int64)
    pivots: list[int] = []

    def insert(v: np.ndarray) -> bool:
        nonlocal basis
        v = v.reshape(-1) % p
        if pivots:
            v = (v - (v[pivots] @ basis) % p) % p
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        piv = int(nz[0])
        v = v * pow(int(v[piv]), -1, p) % p
        if pivots:
            basis = (basis - np.outer(basis[:, piv], v) % p) % p
        basis = np.vstack([basis, v])
        pivots.append(piv)
        return True

    queue = [np.eye(n, dtype=np.int64)]
    insert(queue[0])
    head = 0
    while head < len(queue) and len(pivots) < size:
        w = queue[head]
        head += 1
        for g in gm:
            cand = (g @ w) % p
            if insert(cand):
                queue.append(cand)
                if len(pivots) == size:
                    break
    return len(pivots)


def word_basis(gens: Sequence[Matrix], names: Sequence[str]) -> tuple[list[str], list[Matrix]]:
    """Independent words spanning the unital algebra generated by ``gens``.

    Words are discovered breadth-first by left multiplication, so the returned
    list is in length-lex order with independent prefixes retained.  A word is
    written as the product read left to right, e.g. ``"A*A"`` is ``A* @ A``.
    """
    n = gens[0].n
    ident = Matrix.identity(n)
    ech = EchelonBasis(n * n)
    ech.add(ident.flatten())
    words = [""]
    mats = [ident]
    head = 0
    while head < len(mats) and len(mats) < n * n:
        w, wm = words[head], mats[head]
        head += 1
        for g, name in zip(gens, names):
            cand = g @ wm
            if ech.add(cand.flatten()):
                words.append(name + w)
                mats.append(cand)
                if len(mats) == n * n:
                    break
    return words, mats


# below this size the exact span computation is cheap enough to always run
_EXACT_ALGEBRA_LIMIT = 6


def generated_algebra_dim(a: Matrix, b: Matrix) -> int:
    """Dimension of the unital associative algebra generated by ``a`` and ``b``.

    For larger matrices a span computation modulo a prime is tried first: if it
    reaches n^2 the matrices found are independent over the rationals too, so
    the value n^2 is certified.  Anything short of n^2 is recomputed exactly.
    """
    if a.n != b.n:
        raise ValueError("generators must have equal dimension")
    n = a.n
    if n > _EXACT_ALGEBRA_LIMIT:
        for p in _PRIMES:
            dim = _algebra_dim_mod_p([a, b], p)
            if dim is None:
                continue
            if dim == n * n:
                return dim
            break
    return len(word_basis([a, b], ["A", "B"])[0])


def cyclic_span(gens: Sequence[Matrix], v: Sequence) -> list[Vector]:
    """Smallest subspace containing v and invariant under every generator."""
    n = gens[0].n
    ech = EchelonBasis(n)
    queue = [tuple(v)]
    if not ech.add(queue[0]):
        return []
    head = 0
    while head < len(queue) and len(ech) < n:
        w = queue[head]
        head += 1
        for g in gens:
            gw = g.apply(w)
            if ech.add(gw):
                queue.append(gw)
    return [tuple(r) for r in ech.rows]


def orthogonal_complement(basis: Sequence[Sequence], dim: int) -> list[Vector]:
    if not basis:
        return [tuple(ONE if i == j else ZERO for j in range(dim)) for i in range(dim)]
    return kernel_basis(basis, dim)
