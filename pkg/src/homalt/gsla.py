"""Exact graded linear algebra: scalars, super vector spaces, even/odd maps.

Everything here works over the rationals with :class:`fractions.Fraction`,
so equality is exact and no tolerance appears anywhere in the package.

Conventions fixed for the whole package:

* basis order is even-before-odd: index ``i`` has degree 0 iff ``i < p``;
* map matrices use the column convention, ``matrix[r][c]`` is the
  ``r``-th coordinate of the image of basis vector ``c``;
* vectors and matrices are tuples (immutable) of ``Fraction``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, GradingError, SingularMatrix

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[tuple[Fraction, ...], ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact Fraction.

    Floats are rejected: they would silently smuggle rounding into exact code.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def koszul_sign(d1: int, d2: int) -> int:
    """(-1)**(d1*d2) for degrees in {0, 1}."""
    return -1 if (d1 & 1) and (d2 & 1) else 1


# ---------------------------------------------------------------- spaces


@dataclass(frozen=True)
class SuperSpace:
    even_dim: int
    odd_dim: int
    names: tuple = field(default=())

    def __post_init__(self):
        if self.even_dim < 0 or self.odd_dim < 0:
            raise ValueError("dimensions must be non-negative")
        names = tuple(self.names) if self.names else tuple(f"e{i}" for i in range(self.dim))
        if len(names) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} basis names, got {len(names)}")
        if len(set(names)) != len(names):
            raise ValueError("basis names must be pairwise distinct")
        object.__setattr__(self, "names", names)

    @property
    def dim(self) -> int:
        return self.even_dim + self.odd_dim

    def degree(self, i: int) -> int:
        return 0 if i < self.even_dim else 1

    @property
    def degrees(self) -> tuple:
        return tuple(self.degree(i) for i in range(self.dim))

    def same_shape(self, other: "SuperSpace") -> bool:
        return self.even_dim == other.even_dim and self.odd_dim == other.odd_dim


# ---------------------------------------------------------------- vectors


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def vec_sum(vectors: Iterable[Vector], n: int) -> Vector:
    acc = [ZERO] * n
    for v in vectors:
        for k, a in enumerate(v):
            if a:
                acc[k] += a
    return tuple(acc)


def is_zero(u) -> bool:
    return all(not a for a in u)


# ---------------------------------------------------------------- matrices


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(to_scalar(a) for a in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if r == c else ZERO for c in range(n)) for r in range(n))


def zeros(rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return tuple((ZERO,) * cols for _ in range(rows))


def diag(entries: Sequence) -> Matrix:
    n = len(entries)
    return tuple(
        tuple(to_scalar(entries[r]) if r == c else ZERO for c in range(n)) for r in range(n)
    )


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise DimensionMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x?")
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in bt) for row in a)


def matvec(m: Matrix, v: Vector) -> Vector:
    if m and len(m[0]) != len(v):
        raise DimensionMismatch("matrix/vector size mismatch")
    return tuple(sum((x * y for x, y in zip(row, v) if y), ZERO) for row in m)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_add(r, s) for r, s in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_sub(r, s) for r, s in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    c = to_scalar(c)
    return tuple(vec_scale(c, r) for r in a)


def column(m: Matrix, j: int) -> Vector:
    return tuple(row[j] for row in m)


def from_columns(cols: Sequence[Vector]) -> Matrix:
    return transpose(tuple(tuple(c) for c in cols))


# ---------------------------------------------------------------- fraction-free elimination


def _integer_rows(rows: Sequence[Sequence]) -> list:
    """Scale each row by the lcm of its denominators; row space is unchanged."""
    out = []
    for row in rows:
        row = [to_scalar(a) for a in row]
        d = lcm(*(a.denominator for a in row)) if row else 1
        out.append([int(a * d) for a in row])
    return out


def _bareiss(m: list, ncols: int):
    """In-place Bareiss elimination on the first ``ncols`` columns.

    Works on integer rows of any width (extra columns are carried along as an
    augmented block). Returns the pivot columns. Every division is exact.
    """
    prev = 1
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        pr = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            for j in range(c + 1, len(row)):
                row[j] = (p * row[j] - f * pr[j]) // prev
            row[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return pivots


def rank(m: Sequence[Sequence]) -> int:
    """Exact rank via fraction-free (Bareiss) elimination."""
    if not m or not m[0]:
        return 0
    rows = _integer_rows(m)
    return len(_bareiss(rows, len(rows[0])))


def _back_substitute(m: list, pivots: list, n: int, rhs_col: int | None, free: dict) -> list:
    """Solve the echelon system for the pivot variables.

    ``free`` fixes values of non-pivot variables; ``rhs_col`` is the index of
    the augmented column (``None`` means homogeneous).
    """
    x = [Fraction(free.get(j, 0)) for j in range(n)]
    for t in range(len(pivots) - 1, -1, -1):
        c = pivots[t]
        row = m[t]
        acc = Fraction(row[rhs_col]) if rhs_col is not None else ZERO
        for j in range(c + 1, n):
            if row[j] and x[j]:
                acc -= row[j] * x[j]
        x[c] = acc / row[c]
    return x


def solve_many(h: Sequence[Sequence], rhs: Sequence[Vector]) -> list:
    """Solve ``h @ v = r`` for each ``r`` in ``rhs`` with one elimination."""
    n = len(h)
    if any(len(row) != n for row in h):
        raise DimensionMismatch("solve requires a square matrix")
    if any(len(r) != n for r in rhs):
        raise DimensionMismatch("right-hand side has the wrong length")
    if n == 0:
        return [() for _ in rhs]
    aug = [list(h[i]) + [r[i] for r in rhs] for i in range(n)]
    m = _integer_rows(aug)
    pivots = _bareiss(m, n)
    if len(pivots) < n:
        raise SingularMatrix(f"matrix has rank {len(pivots)} < {n}")
    return [tuple(_back_substitute(m, pivots, n, n + s, {})) for s in range(len(rhs))]


def solve_square(h: Sequence[Sequence], r: Vector) -> Vector:
    return solve_many(h, [r])[0]


def inverse_matrix(m: Matrix) -> Matrix:
    n = len(m)
    cols = solve_many(m, [tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)])
    return from_columns(cols)


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> list:
    """Basis of ``{x : m x = 0}`` as a list of Fraction vectors.

    ``ncols`` is needed when ``m`` has no rows.
    """
    if ncols is None:
        ncols = len(m[0])
    if not m:
        return [tuple(ONE if i == j else ZERO for i in range(ncols)) for j in range(ncols)]
    rows = _integer_rows(m)
    pivots = _bareiss(rows, ncols)
    free_cols = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free_cols:
        basis.append(tuple(_back_substitute(rows, pivots, ncols, None, {f: 1})))
    return basis


def determinant(m: Matrix) -> Fraction:
    """Exact determinant; used by tests and diagnostics only."""
    n = len(m)
    if n == 0:
        return ONE
    rows = [list(map(Fraction, r)) for r in m]
    det = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


# ---------------------------------------------------------------- graded maps


def block_degree(space: SuperSpace, matrix: Matrix):
    """Return 0 or 1 if ``matrix`` is homogeneous, ``None`` if it mixes parities.

    The zero matrix is reported as even.
    """
    p = space.even_dim
    even_ok = odd_ok = True
    for r, row in enumerate(matrix):
        for c, a in enumerate(row):
            if not a:
                continue
            if (r < p) == (c < p):
                odd_ok = False
            else:
                even_ok = False
    if even_ok:
        return 0
    if odd_ok:
        return 1
    return None


@dataclass(frozen=True)
class GradedMap:
    """A homogeneous linear endomorphism of a super vector space."""

    space: SuperSpace
    matrix: Matrix
    degree: int = 0

    def __post_init__(self):
        m = as_matrix(self.matrix)
        n = self.space.dim
        if len(m) != n or any(len(row) != n for row in m):
            raise DimensionMismatch(f"map matrix must be {n}x{n}")
        if self.degree not in (0, 1):
            raise ValueError("degree must be 0 or 1")
        p = self.space.even_dim
        for r, row in enumerate(m):
            for c, a in enumerate(row):
                if a and ((r < p) != (c < p)) != bool(self.degree):
                    kind = "even" if self.degree == 0 else "odd"
                    raise GradingError(
                        f"{kind} map has a nonzero entry at ({r}, {c}) crossing the parity blocks"
                    )
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.space.dim

    def __call__(self, v: Vector) -> Vector:
        return apply(self, v)

    def image(self, j: int) -> Vector:
        return column(self.matrix, j)

    def is_zero(self) -> bool:
        return all(is_zero(row) for row in self.matrix)


def identity_map(space: SuperSpace) -> GradedMap:
    return GradedMap(space, identity(space.dim), 0)


def zero_map(space: SuperSpace, degree: int = 0) -> GradedMap:
    return GradedMap(space, zeros(space.dim), degree)


def scalar_map(space: SuperSpace, c) -> GradedMap:
    return GradedMap(space, mat_scale(c, identity(space.dim)), 0)


def apply(f: GradedMap, v: Vector) -> Vector:
    if len(v) != f.dim:
        raise DimensionMismatch(f"vector of length {len(v)} for a map on dim {f.dim}")
    return matvec(f.matrix, v)


def compose(f: GradedMap, g: GradedMap) -> GradedMap:
    """f after g; degrees add mod 2."""
    if not f.space.same_shape(g.space):
        raise DimensionMismatch("cannot compose maps on different spaces")
    return GradedMap(f.space, matmul(f.matrix, g.matrix), (f.degree + g.degree) % 2)


def map_add(f: GradedMap, g: GradedMap) -> GradedMap:
    if not f.space.same_shape(g.space):
        raise DimensionMismatch("cannot add maps on different spaces")
    if f.degree != g.degree and not (f.is_zero() or g.is_zero()):
        raise GradingError("sum of an even and an odd map is not homogeneous")
    deg = g.degree if f.is_zero() else f.degree
    return GradedMap(f.space, mat_add(f.matrix, g.matrix), deg)


def map_scale(c, f: GradedMap) -> GradedMap:
    return GradedMap(f.space, mat_scale(c, f.matrix), f.degree)


def power(f: GradedMap, k: int) -> GradedMap:
    if k < 0:
        return power(invert(f), -k)
    out = identity_map(f.space)
    for _ in range(k):
        out = compose(f, out)
    return out


def invert(f: GradedMap) -> GradedMap:
    """Inverse of a bijective homogeneous map; raises SingularMatrix otherwise."""
    return GradedMap(f.space, inverse_matrix(f.matrix), f.degree)


def is_invertible(f: GradedMap) -> bool:
    return rank(f.matrix) == f.dim
