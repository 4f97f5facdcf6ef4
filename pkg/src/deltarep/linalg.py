"""Exact rational linear algebra on dense matrices.

Entries are :class:`fractions.Fraction`. Pivoting is deterministic
(leftmost column, topmost row) so reduced forms are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import ParameterError

Rational = Fraction
Vector = tuple[Fraction, ...]


def to_vector(values: Iterable) -> Vector:
    return tuple(Fraction(x) for x in values)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ParameterError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RationalMatrix:
        rows = [to_vector(r) for r in rows]
        if cols is None:
            if not rows:
                raise ParameterError("column count required for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ParameterError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ParameterError("shape mismatch in matrix product")
        ot = other.transpose()
        return RationalMatrix.from_rows(
            [[dot(self.row(i), ot.row(j)) for j in range(other.cols)] for i in range(self.rows)],
            other.cols)

    def apply(self, v: Sequence) -> Vector:
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))


@dataclass(frozen=True)
class RrefResult:
    rref: RationalMatrix
    pivot_cols: tuple[int, ...]
    free_cols: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)


def rref(m: RationalMatrix) -> RrefResult:
    """Gauss-Jordan elimination over the rationals."""
    a = m.to_rows()
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = tuple(c for c in range(m.cols) if c not in pivots)
    return RrefResult(RationalMatrix.from_rows(a, m.cols), tuple(pivots), free)


@dataclass(frozen=True)
class ParametricSolution:
    """Nullspace of a matrix: ``basis[k]`` is the generator for ``free_cols[k]``.

    Each generator has a 1 in its own free column and 0 in the other free
    columns, so the parameters of a solution are read off its free entries.
    """
    cols: int
    pivot_cols: tuple[int, ...]
    free_cols: tuple[int, ...]
    basis: tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def evaluate(self, params: Sequence) -> Vector:
        out = [Fraction(0)] * self.cols
        for t, b in zip(params, self.basis, strict=True):
            if t:
                for k, x in enumerate(b):
                    if x:
                        out[k] += t * x
        return tuple(out)


def solve_parametric(m: RationalMatrix) -> ParametricSolution:
    """Basis of ``{w : m @ w = 0}``, one generator per free column."""
    res = rref(m)
    basis = []
    for f in res.free_cols:
        w = [Fraction(0)] * m.cols
        w[f] = Fraction(1)
        for r, p in enumerate(res.pivot_cols):
            w[p] = -res.rref[r, f]
        basis.append(tuple(w))
    return ParametricSolution(m.cols, res.pivot_cols, res.free_cols, tuple(basis))


def rank(m: RationalMatrix) -> int:
    return rref(m).rank


def gram_matrix(vectors: Sequence[Sequence]) -> RationalMatrix:
    vecs = [to_vector(v) for v in vectors]
    dims = {len(v) for v in vecs}
    if len(dims) > 1:
        raise ParameterError(f"vectors have mixed dimensions {sorted(dims)}")
    n = len(vecs)
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g[i][j] = g[j][i] = dot(vecs[i], vecs[j])
    return RationalMatrix.from_rows(g, n)


def vectors_as_matrix(vectors: Sequence[Sequence]) -> RationalMatrix:
    """Stack vectors as the rows of a matrix."""
    if not vectors:
        raise ParameterError("no vectors")
    return RationalMatrix.from_rows(vectors)


@dataclass(frozen=True)
class PsdResult:
    is_psd: bool
    pivots: tuple[Fraction, ...]     # LDL^T diagonal, in elimination order
    pivot_order: tuple[int, ...]     # matrix index eliminated at each step
    witness: Vector | None = None    # x with x^T M x < 0 when not PSD
    witness_value: Fraction | None = None

    @property
    def positive_pivots(self) -> int:
        return sum(1 for p in self.pivots if p > 0)


def psd_pivots(m: RationalMatrix) -> PsdResult:
    """Exact LDL^T with diagonal pivoting.

    Eliminates positive diagonal entries of the running Schur complement
    one at a time. The matrix is PSD iff the complement left when no
    positive diagonal remains is identically zero; otherwise a vector with
    negative quadratic form is constructed and returned.
    """
    if not m.is_symmetric():
        raise ParameterError("psd_pivots needs a symmetric matrix")
    n = m.rows
    s = m.to_rows()
    remaining = list(range(n))
    pivots: list[Fraction] = []
    order: list[int] = []

    while remaining:
        p = next((i for i in remaining if s[i][i] > 0), None)
        if p is None:
            break
        d = s[p][p]
        remaining.remove(p)
        col = {i: s[i][p] for i in remaining}
        for i in remaining:
            if col[i]:
                f = col[i] / d
                for j in remaining:
                    if col[j]:
                        s[i][j] -= f * col[j]
        pivots.append(d)
        order.append(p)

    y = None
    neg = next((i for i in remaining if s[i][i] < 0), None)
    if neg is not None:
        y = {neg: Fraction(1)}
    else:
        pair = next(((i, j) for i in remaining for j in remaining
                     if i < j and s[i][j] != 0), None)
        if pair is not None:
            i, j = pair
            y = {i: Fraction(1), j: Fraction(-1 if s[i][j] > 0 else 1)}

    if y is None:
        pivots.extend([Fraction(0)] * len(remaining))
        order.extend(remaining)
        return PsdResult(True, tuple(pivots), tuple(order))

    x = _simple_witness(m)
    if x is None:
        x = _lift_witness(m, order, remaining, y)
    value = dot(x, m.apply(x))
    assert value < 0
    return PsdResult(False, tuple(pivots), tuple(order), x, value)


def _simple_witness(m: RationalMatrix) -> Vector | None:
    # a unit vector or e_i -/+ e_j, when one of those already shows negativity
    n = m.rows
    for i in range(n):
        if m[i, i] < 0:
            return tuple(Fraction(int(k == i)) for k in range(n))
    for i in range(n):
        for j in range(i + 1, n):
            if m[i, i] + m[j, j] < 2 * abs(m[i, j]):
                x = [Fraction(0)] * n
                x[i], x[j] = Fraction(1), Fraction(-1 if m[i, j] > 0 else 1)
                return tuple(x)
    return None


def _lift_witness(m: RationalMatrix, eliminated: list[int], remaining: list[int],
                  y: dict[int, Fraction]) -> Vector:
    # x_R = y, x_P = -A_PP^{-1} A_PR y  gives  x^T A x = y^T S y.
    x = [Fraction(0)] * m.rows
    for i, val in y.items():
        x[i] = val
    if eliminated:
        k = len(eliminated)
        rhs = [-sum((m[p, i] * val for i, val in y.items()), Fraction(0)) for p in eliminated]
        aug = [[m[p, q] for q in eliminated] + [rhs[a]] for a, p in enumerate(eliminated)]
        red = rref(RationalMatrix.from_rows(aug, k + 1)).rref
        for a, p in enumerate(eliminated):
            x[p] = red[a, k]
    return tuple(x)


@dataclass(frozen=True)
class IndependenceResult:
    ok: bool
    pair: tuple[int, int] | None = None  # 1-based; (i, i) flags a zero vector


def _direction(v: Vector) -> Vector | None:
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        return None
    return tuple(x / lead for x in v)


def pairwise_independent(vectors: Sequence[Sequence]) -> IndependenceResult:
    """True iff every vector is nonzero and no two are rational multiples."""
    seen: dict[Vector, int] = {}
    for i, v in enumerate(vectors, start=1):
        key = _direction(to_vector(v))
        if key is None:
            return IndependenceResult(False, (i, i))
        if key in seen:
            return IndependenceResult(False, (seen[key], i))
        seen[key] = i
    return IndependenceResult(True)


def parallel(u: Sequence, v: Sequence) -> bool:
    """Cross-multiplication test: u and v span the same line (zero is parallel to all)."""
    n = len(u)
    return all(u[a] * v[b] == u[b] * v[a] for a in range(n) for b in range(a + 1, n))


def primitive_integer(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to integers with gcd 1 (sign kept)."""
    v = to_vector(v)
    den = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * den) for x in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)
