"""
Exact linear algebra over the rationals.

Everything here works on ``fractions.Fraction`` scalars and sparse
dict-of-dict storage.  There are no tolerances: a value is zero or it is not.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

import sympy

Rational = Fraction

# trial-division style bound for factorization inputs
FACTOR_BOUND = 1 << 64


class FactorizationOverflow(ArithmeticError):
    """Raised when a rational is too large to factor under FACTOR_BOUND."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact scalars")
    return Fraction(x)


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


# ---------------------------------------------------------------------------
# sparse vectors are plain dicts {index: Fraction} without stored zeros


def vec_clean(v: Mapping[int, Fraction]) -> dict[int, Fraction]:
    return {i: c for i, c in v.items() if c != 0}


def vec_axpy(y: dict, a, x: Mapping) -> None:
    """In place ``y += a*x``, dropping entries that cancel."""
    for i, c in x.items():
        s = y.get(i, 0) + a * c
        if s:
            y[i] = s
        else:
            y.pop(i, None)


@dataclass(frozen=True)
class SparseMatrix:
    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), c in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError("entry (%d, %d) out of range" % (i, j))
            c = as_rational(c)
            if c:
                clean[i, j] = c
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, data) -> "SparseMatrix":
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        ent = {(i, j): c for i, r in enumerate(data) for j, c in enumerate(r) if c}
        return cls(rows, cols, ent)

    @classmethod
    def from_rows(cls, rows: Iterable[Mapping[int, Fraction]], cols: int) -> "SparseMatrix":
        ent = {}
        nrows = 0
        for i, r in enumerate(rows):
            nrows = i + 1
            for j, c in r.items():
                ent[i, j] = c
        return cls(nrows, cols, ent)

    @classmethod
    def from_columns(cls, columns: Iterable[Mapping[int, Fraction]], rows: int) -> "SparseMatrix":
        ent = {}
        ncols = 0
        for j, col in enumerate(columns):
            ncols = j + 1
            for i, c in col.items():
                ent[i, j] = c
        return cls(rows, ncols, ent)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out = [dict() for _ in range(self.rows)]
        for (i, j), c in self.entries.items():
            out[i][j] = c
        return out

    def col_dicts(self) -> list[dict[int, Fraction]]:
        out = [dict() for _ in range(self.cols)]
        for (i, j), c in self.entries.items():
            out[j][i] = c
        return out

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), c in self.entries.items():
            out[i][j] = c
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(j, i): c for (i, j), c in self.entries.items()})

    def matvec(self, v: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for (i, j), c in self.entries.items():
            x = v.get(j)
            if x:
                out[i] = out.get(i, 0) + c * x
        return vec_clean(out)

    def __getitem__(self, ij) -> Fraction:
        return self.entries.get(ij, Fraction(0))


@dataclass(frozen=True)
class LinearSubspace:
    """Subspace of Q^ambient stored by its reduced row-echelon basis."""

    ambient: int
    basis: tuple = ()

    @classmethod
    def span(cls, ambient: int, vectors: Iterable[Mapping[int, Fraction]]) -> "LinearSubspace":
        _, pivots, rows = _reduce_rows([dict(v) for v in vectors], full=True)
        return cls(ambient, tuple(rows))

    @classmethod
    def zero(cls, ambient: int) -> "LinearSubspace":
        return cls(ambient, ())

    @classmethod
    def whole(cls, ambient: int) -> "LinearSubspace":
        return cls(ambient, tuple({i: Fraction(1)} for i in range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [min(v) for v in self.basis]

    def contains(self, v: Mapping[int, Fraction]) -> bool:
        return not self.reduce(v)

    def reduce(self, v: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Remainder of ``v`` after eliminating the pivot coordinates."""
        r = vec_clean(dict(v))
        for b in self.basis:
            p = min(b)
            c = r.get(p)
            if c:
                vec_axpy(r, -c, b)
        return r

    def contains_subspace(self, other: "LinearSubspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, LinearSubspace):
            return NotImplemented
        return self.ambient == other.ambient and list(self.basis) == list(other.basis)

    def __hash__(self):
        return hash((self.ambient, tuple(tuple(sorted(b.items())) for b in self.basis)))


def _leading(row: dict) -> int:
    return min(row)


def _reduce_rows(rows: list[dict], full: bool = True):
    """Gaussian elimination on sparse rows.

    Returns ``(rank, pivots, reduced_rows)``.  Pivot rows are normalized to a
    leading 1; with ``full`` the result is the reduced row-echelon form,
    sorted by pivot column.
    """
    pivot_rows: dict[int, dict] = {}
    for r in rows:
        r = vec_clean(r)
        while r:
            p = _leading(r)
            prow = pivot_rows.get(p)
            if prow is None:
                inv = 1 / r[p]
                if inv != 1:
                    r = {j: c * inv for j, c in r.items()}
                pivot_rows[p] = r
                break
            vec_axpy(r, -r[p], prow)
    pivots = sorted(pivot_rows)
    if full:
        # back substitution, highest pivot first so every used row is final
        for p in reversed(pivots):
            row = pivot_rows[p]
            for q in [j for j in row if j != p and j in pivot_rows]:
                c = row.get(q)
                if c:
                    vec_axpy(row, -c, pivot_rows[q])
    return len(pivots), pivots, [pivot_rows[p] for p in pivots]


def rref(m: SparseMatrix) -> tuple[int, list[int], SparseMatrix]:
    """Reduced row-echelon form of ``m``: ``(rank, pivots, reduced)``."""
    rank, pivots, rows = _reduce_rows(m.row_dicts(), full=True)
    reduced = SparseMatrix.from_rows(rows + [{}] * (m.rows - rank), m.cols)
    if m.rows == 0:
        reduced = SparseMatrix(0, m.cols, {})
    return rank, pivots, reduced


def rank(m: SparseMatrix) -> int:
    # rank of the transpose is cheaper when there are fewer columns
    rows = m.col_dicts() if m.cols < m.rows else m.row_dicts()
    return _reduce_rows(rows, full=False)[0]


def rank_of_vectors(vectors: Iterable[Mapping[int, Fraction]]) -> int:
    return _reduce_rows([dict(v) for v in vectors], full=False)[0]


def kernel_vectors(m: SparseMatrix) -> list[dict[int, Fraction]]:
    """One kernel vector per free column, in increasing free-column order."""
    _, pivots, rows = _reduce_rows(m.row_dicts(), full=True)
    pivset = set(pivots)
    out = []
    # column view of the reduced rows restricted to free columns
    free_entries: dict[int, list] = {}
    for p, row in zip(pivots, rows):
        for j, c in row.items():
            if j not in pivset:
                free_entries.setdefault(j, []).append((p, c))
    for f in range(m.cols):
        if f in pivset:
            continue
        v = {f: Fraction(1)}
        for p, c in free_entries.get(f, ()):
            v[p] = -c
        out.append(v)
    return out


def kernel_basis(m: SparseMatrix) -> LinearSubspace:
    return LinearSubspace.span(m.cols, kernel_vectors(m))


def solve(m: SparseMatrix, rhs: Mapping[int, Fraction]) -> dict[int, Fraction] | None:
    """Some ``v`` with ``m v = rhs`` (free variables zero), or None."""
    for i in rhs:
        if not 0 <= i < m.rows:
            raise IndexError("rhs index %d out of range" % i)
    aug = m.cols
    rows = m.row_dicts()
    for i, c in rhs.items():
        if c:
            rows[i][aug] = as_rational(c)
    _, pivots, red = _reduce_rows(rows, full=True)
    if pivots and pivots[-1] == aug:
        return None
    return {p: row[aug] for p, row in zip(pivots, red) if row.get(aug)}


def _is_skew(m: SparseMatrix) -> bool:
    for (i, j), c in m.entries.items():
        if i == j or m[j, i] != -c:
            return False
    return True


def determinant(m: SparseMatrix) -> Fraction:
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    rows = m.row_dicts()
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if rows[r].get(col):
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        prow = rows[col]
        a = prow[col]
        det *= a
        for r in range(col + 1, n):
            c = rows[r].get(col)
            if c:
                vec_axpy(rows[r], -c / a, prow)
    return det


def skew_determinant(m: SparseMatrix) -> Fraction:
    """Exact determinant of a skew-symmetric matrix (zero for odd size)."""
    if m.rows != m.cols:
        raise ValueError("matrix is not square")
    if not _is_skew(m):
        raise ValueError("matrix is not skew-symmetric")
    if m.rows % 2:
        return Fraction(0)
    return determinant(m)


def pfaffian(m: SparseMatrix) -> Fraction:
    """Pfaffian by skew-symmetric elimination; pf(m)**2 == det(m)."""
    if m.rows != m.cols or not _is_skew(m):
        raise ValueError("pfaffian needs a square skew-symmetric matrix")
    n = m.rows
    if n % 2:
        return Fraction(0)
    a = m.to_dense()
    pf = Fraction(1)
    for k in range(0, n - 1, 2):
        piv = next((j for j in range(k + 1, n) if a[k][j]), None)
        if piv is None:
            return Fraction(0)
        if piv != k + 1:
            # simultaneous row/column swap flips the sign
            a[k + 1], a[piv] = a[piv], a[k + 1]
            for row in a:
                row[k + 1], row[piv] = row[piv], row[k + 1]
            pf = -pf
        pivot = a[k][k + 1]
        pf *= pivot
        for i in range(k + 2, n):
            # congruence: clear entries (k, i) and (k+1, i)
            s = a[k][i] / pivot
            t = a[k + 1][i] / pivot
            if s:
                for r in range(n):
                    a[r][i] -= s * a[r][k + 1]
                for c in range(n):
                    a[i][c] -= s * a[k + 1][c]
            if t:
                for r in range(n):
                    a[r][i] += t * a[r][k]
                for c in range(n):
                    a[i][c] += t * a[k][c]
    return pf


# ---------------------------------------------------------------------------
# rational roots


def _factor(k: int) -> dict[int, int]:
    if k < 1:
        raise ValueError("factor expects a positive integer")
    if k >= FACTOR_BOUND:
        raise FactorizationOverflow("%d exceeds the 64-bit factorization bound" % k)
    return {int(p): int(e) for p, e in sympy.factorint(k).items()}


def factor_rational(q) -> tuple[int, dict[int, int]]:
    """``q = sign * prod(p**e)`` with possibly negative exponents."""
    q = as_rational(q)
    if q == 0:
        raise ValueError("cannot factor zero")
    exps = dict(_factor(abs(q.numerator)))
    for p, e in _factor(q.denominator).items():
        exps[p] = exps.get(p, 0) - e
    return (1 if q > 0 else -1), exps


def rational_roots(q, w: int) -> set[Fraction]:
    """All rational ``a`` with ``a**w == q``."""
    if w < 1:
        raise ValueError("root degree must be positive")
    q = as_rational(q)
    if q == 0:
        return {Fraction(0)}
    sign, exps = factor_rational(q)
    if any(e % w for e in exps.values()):
        return set()
    base = Fraction(1)
    for p, e in exps.items():
        base *= Fraction(p) ** (e // w)
    if w % 2:
        return {base * sign}
    if sign < 0:
        return set()
    return {base, -base}
