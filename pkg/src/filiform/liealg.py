"""
Finite-dimensional Lie algebras given by structure constants.

Basis vectors are numbered ``1..n``.  Only brackets ``[e_i, e_j]`` with
``i < j`` are stored; antisymmetry is structural.  Vectors are sparse dicts
``{index: Fraction}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .exactla import LinearSubspace, as_rational, vec_axpy, vec_clean

GRADED = "graded"
FILTERED = "filtered"
PLAIN = "plain"
FLAVORS = (GRADED, FILTERED, PLAIN)


class LieAlgebraError(ValueError):
    pass


def _to0(v: Mapping[int, Fraction]) -> dict[int, Fraction]:
    return {i - 1: c for i, c in v.items()}


def _to1(v: Mapping[int, Fraction]) -> dict[int, Fraction]:
    return {i + 1: c for i, c in v.items()}


@dataclass(frozen=True)
class LieAlgebra:
    n: int
    brackets: dict = field(default_factory=dict)
    weights: tuple = ()
    flavor: str = PLAIN
    name: str = ""

    def __post_init__(self):
        n = self.n
        if n < 0:
            raise LieAlgebraError("negative dimension")
        weights = tuple(self.weights) if self.weights else tuple(range(1, n + 1))
        if len(weights) != n:
            raise LieAlgebraError("need one weight per basis vector")
        if self.flavor not in FLAVORS:
            raise LieAlgebraError("unknown flavor %r" % self.flavor)
        clean = {}
        for (i, j), terms in self.brackets.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise LieAlgebraError("bracket index out of range: (%d, %d)" % (i, j))
            terms = vec_clean({int(k): as_rational(c) for k, c in terms.items()})
            if any(not 1 <= k <= n for k in terms):
                raise LieAlgebraError("bracket target out of range in [e%d, e%d]" % (i, j))
            if i == j:
                if terms:
                    raise LieAlgebraError("[e%d, e%d] must vanish" % (i, i))
                continue
            if i > j:
                i, j = j, i
                terms = {k: -c for k, c in terms.items()}
            if (i, j) in clean:
                raise LieAlgebraError("bracket (%d, %d) given twice" % (i, j))
            if terms:
                clean[i, j] = terms
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "brackets", clean)
        object.__setattr__(self, "_cache", {})
        for (i, j), terms in clean.items():
            wij = weights[i - 1] + weights[j - 1]
            for k in terms:
                wk = weights[k - 1]
                if self.flavor == GRADED and wk != wij:
                    raise LieAlgebraError(
                        "graded flavor violated: [e%d, e%d] has e%d" % (i, j, k))
                if self.flavor == FILTERED and wk < wij:
                    raise LieAlgebraError(
                        "filtered flavor violated: [e%d, e%d] has e%d" % (i, j, k))

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.n, self.weights, self.brackets) == (other.n, other.weights, other.brackets)

    def __hash__(self):
        return hash((self.n, self.weights, len(self.brackets)))

    def basis_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def weight(self, i: int) -> int:
        return self.weights[i - 1]

    def with_flavor(self, flavor: str, name: str | None = None) -> "LieAlgebra":
        return LieAlgebra(self.n, self.brackets, self.weights, flavor,
                          self.name if name is None else name)

    def relabel(self, name: str) -> "LieAlgebra":
        return LieAlgebra(self.n, self.brackets, self.weights, self.flavor, name)


def e(i: int, c=1) -> dict[int, Fraction]:
    return {i: Fraction(c)}


def bracket(g: LieAlgebra, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> dict[int, Fraction]:
    for v in (x, y):
        if any(not 1 <= i <= g.n for i in v):
            raise LieAlgebraError("vector does not live in a %d-dimensional algebra" % g.n)
    out: dict[int, Fraction] = {}
    for i, a in x.items():
        if not a:
            continue
        for j, b in y.items():
            if not b or i == j:
                continue
            if i < j:
                terms, s = g.brackets.get((i, j)), a * b
            else:
                terms, s = g.brackets.get((j, i)), -a * b
            if terms:
                vec_axpy(out, s, terms)
    return out


def jacobi_residual(g: LieAlgebra) -> list[tuple[tuple[int, int, int], dict[int, Fraction]]]:
    """Nonzero ``[[e_i,e_j],e_k] + cyclic`` for all ``i<j<k``."""
    out = []
    for i, j, k in combinations(range(1, g.n + 1), 3):
        ei, ej, ek = e(i), e(j), e(k)
        r: dict[int, Fraction] = {}
        vec_axpy(r, 1, bracket(g, g.basis_bracket(i, j), ek))
        vec_axpy(r, 1, bracket(g, g.basis_bracket(j, k), ei))
        vec_axpy(r, 1, bracket(g, g.basis_bracket(k, i), ej))
        if r:
            out.append(((i, j, k), r))
    return out


def is_lie_algebra(g: LieAlgebra) -> bool:
    return not jacobi_residual(g)


# ---------------------------------------------------------------------------
# flags and central series


@dataclass(frozen=True)
class Flag:
    """Nested subspaces ``F^1 ⊇ F^2 ⊇ ...`` of ``Q^n`` in 1-based coordinates.

    Subspaces are stored as LinearSubspace objects over 0-based coordinates.
    """

    subspaces: tuple
    levels: tuple = ()

    def __post_init__(self):
        subs = tuple(self.subspaces)
        for a, b in zip(subs, subs[1:]):
            if b.dim >= a.dim or not a.contains_subspace(b):
                raise LieAlgebraError("flag is not strictly decreasing")
        levels = tuple(self.levels) if self.levels else tuple(range(1, len(subs) + 1))
        if len(levels) != len(subs) or any(b <= a for a, b in zip(levels, levels[1:])):
            raise LieAlgebraError("flag levels must increase strictly")
        object.__setattr__(self, "subspaces", subs)
        object.__setattr__(self, "levels", levels)

    @property
    def dims(self) -> list[int]:
        return [s.dim for s in self.subspaces]

    def __len__(self):
        return len(self.subspaces)

    def __getitem__(self, k):
        return self.subspaces[k]


def span(n: int, vectors) -> LinearSubspace:
    return LinearSubspace.span(n, [_to0(v) for v in vectors])


def subspace_vectors(s: LinearSubspace) -> list[dict[int, Fraction]]:
    return [_to1(v) for v in s.basis]


def basis_tail_flag(n: int) -> Flag:
    """The filtration ``L^j = span(e_j, ..., e_n)``."""
    return Flag(tuple(span(n, [e(i) for i in range(j, n + 1)]) for j in range(1, n + 1)))


def weight_flag(g: LieAlgebra) -> Flag:
    """``F^w = span(e_i : weight(e_i) >= w)`` for every weight level."""
    levels = sorted(set(g.weights))
    subs = [span(g.n, [e(i) for i in range(1, g.n + 1) if g.weight(i) >= w]) for w in levels]
    return Flag(tuple(subs), tuple(levels))


def lower_central_series(g: LieAlgebra) -> Flag:
    """``C^1 = g``, ``C^{k+1} = [g, C^k]``, up to and including stabilization."""
    cur = LinearSubspace.whole(g.n)
    terms = [cur]
    while cur.dim:
        vecs = []
        for v in subspace_vectors(cur):
            for i in range(1, g.n + 1):
                w = bracket(g, e(i), v)
                if w:
                    vecs.append(w)
        nxt = span(g.n, vecs)
        if nxt.dim == cur.dim:
            break
        terms.append(nxt)
        cur = nxt
    return Flag(tuple(terms))


def nil_index(g: LieAlgebra) -> int | None:
    """Nil-index s (``C^s != 0 = C^{s+1}``), or None if not nilpotent."""
    flag = lower_central_series(g)
    if flag[-1].dim:
        return None
    return len(flag) - 1


def is_nilpotent(g: LieAlgebra) -> bool:
    return nil_index(g) is not None


def is_filiform(g: LieAlgebra) -> bool:
    s = nil_index(g)
    return s is not None and g.n >= 2 and s == g.n - 1


def center(g: LieAlgebra) -> LinearSubspace:
    """``{z : [z, x] = 0 for all x}`` in 0-based coordinates."""
    from .exactla import SparseMatrix, kernel_basis

    # row (i, k): coefficient of e_k in [z, e_i] = sum_j z_j [e_j, e_i]
    ent = {}
    for i in range(1, g.n + 1):
        for j in range(1, g.n + 1):
            for k, c in g.basis_bracket(j, i).items():
                ent[(i - 1) * g.n + (k - 1), j - 1] = c
    return kernel_basis(SparseMatrix(g.n * g.n, g.n, ent))


def center_vectors(g: LieAlgebra) -> list[dict[int, Fraction]]:
    return subspace_vectors(center(g))


def associated_graded(g: LieAlgebra, flag: Flag) -> LieAlgebra:
    """Graded algebra ``⊕ F^k / F^{k+1}``.

    The basis of ``gr`` is built level by level from the reduced bases:
    at level ``k`` it takes the vectors of ``F^k`` whose pivot is not a pivot
    of ``F^{k+1}``.  If those are standard basis vectors (true for coordinate
    flags) the basis order and names are preserved.
    """
    subs = list(flag.subspaces)
    if not subs or subs[0].dim != g.n:
        raise LieAlgebraError("flag must start with the whole algebra")
    subs.append(LinearSubspace.zero(g.n))
    flag_levels = list(flag.levels)
    per_level: list[list[dict]] = []
    for a, b in zip(subs, subs[1:]):
        bp = set(b.pivots)
        per_level.append([v for v in a.basis if min(v) not in bp])
    adapted = [(flag_levels[k], _to1(v)) for k, vs in enumerate(per_level) for v in vs]
    # sort by the pivot so a coordinate flag keeps the original numbering
    adapted.sort(key=lambda kv: min(kv[1]))
    pos = {min(v): idx for idx, (_, v) in enumerate(adapted)}
    level_of = [k for k, _ in adapted]
    m = len(adapted)

    def level_of_vector(v) -> int:
        # largest filtration level whose subspace contains v
        v0 = _to0(v)
        lev = None
        for k, s in enumerate(subs[:-1]):
            if s.contains(v0):
                lev = flag_levels[k]
            else:
                break
        return lev

    def allowed(lev, target) -> bool:
        # F^t is the first subspace with level >= t, so v is in F^t iff lev >= t
        return lev is not None and lev >= target

    # coordinates of a vector in the adapted basis (triangular in pivots)
    def coords(v) -> dict[int, Fraction]:
        r = dict(v)
        out = {}
        while r:
            p = min(r)
            if p not in pos:
                raise LieAlgebraError("adapted basis is incomplete")
            idx = pos[p]
            basis_v = adapted[idx][1]
            c = r[p] / basis_v[p]
            out[idx + 1] = c
            vec_axpy(r, -c, basis_v)
        return out

    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            x, y = adapted[a][1], adapted[b][1]
            ka, kb = level_of[a], level_of[b]
            w = bracket(g, x, y)
            if not w:
                continue
            if not allowed(level_of_vector(w), ka + kb):
                raise LieAlgebraError("bracket is not compatible with the filtration")
            terms = {i: c for i, c in coords(w).items() if level_of[i - 1] == ka + kb}
            if terms:
                brackets[a + 1, b + 1] = terms
    return LieAlgebra(m, brackets, tuple(level_of), GRADED, ("gr " + g.name).strip())


# ---------------------------------------------------------------------------
# triangular basis changes


@dataclass(frozen=True)
class BasisChange:
    """Lower-triangular ``phi`` with diagonal ``(a, a^2, ..., a^n)``.

    ``columns[i]`` is ``phi(e_{i+1})`` as a 1-based sparse vector.
    """

    n: int
    columns: tuple

    def __post_init__(self):
        cols = tuple(vec_clean({k: as_rational(c) for k, c in col.items()}) for col in self.columns)
        if len(cols) != self.n:
            raise LieAlgebraError("basis change needs n columns")
        if self.n:
            a = cols[0].get(1)
            if not a:
                raise LieAlgebraError("basis change is singular")
            for i, col in enumerate(cols, start=1):
                if any(k < i for k in col):
                    raise LieAlgebraError("basis change is not lower triangular")
                if col.get(i) != a ** i:
                    raise LieAlgebraError("diagonal must be consecutive powers of one scalar")
        object.__setattr__(self, "columns", cols)

    @property
    def alpha(self) -> Fraction:
        return self.columns[0][1] if self.n else Fraction(1)

    @classmethod
    def identity(cls, n: int) -> "BasisChange":
        return cls(n, tuple({i: Fraction(1)} for i in range(1, n + 1)))

    @classmethod
    def diagonal(cls, n: int, alpha) -> "BasisChange":
        alpha = as_rational(alpha)
        return cls(n, tuple({i: alpha ** i} for i in range(1, n + 1)))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> "BasisChange":
        n = len(rows)
        cols = tuple({i + 1: as_rational(rows[i][j]) for i in range(n) if rows[i][j]}
                     for j in range(n))
        return cls(n, cols)

    def to_matrix(self) -> list[list[Fraction]]:
        m = [[Fraction(0)] * self.n for _ in range(self.n)]
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                m[i - 1][j] = c
        return m

    def apply(self, v: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, c in v.items():
            vec_axpy(out, c, self.columns[i - 1])
        return out

    def solve(self, v: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """``phi^{-1} v`` by forward substitution."""
        r = dict(v)
        out = {}
        for i in range(1, self.n + 1):
            c = r.get(i)
            if not c:
                continue
            x = c / self.columns[i - 1][i]
            out[i] = x
            vec_axpy(r, -x, self.columns[i - 1])
        return out

    def inverse(self) -> "BasisChange":
        return BasisChange(self.n, tuple(self.solve({i: Fraction(1)}) for i in range(1, self.n + 1)))

    def compose(self, other: "BasisChange") -> "BasisChange":
        """``self ∘ other``."""
        return BasisChange(self.n, tuple(self.apply(col) for col in other.columns))

    def __matmul__(self, other: "BasisChange") -> "BasisChange":
        return self.compose(other)

    def is_identity(self) -> bool:
        return all(col == {i: 1} for i, col in enumerate(self.columns, start=1))


def apply_basis_change(g: LieAlgebra, phi: BasisChange) -> LieAlgebra:
    """Structure constants in the new basis: ``[x, y]' = phi^{-1}[phi x, phi y]``."""
    if phi.n != g.n:
        raise LieAlgebraError("basis change has dimension %d, algebra %d" % (phi.n, g.n))
    brackets = {}
    cols = phi.columns
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            w = bracket(g, cols[i - 1], cols[j - 1])
            if w:
                w = phi.solve(w)
                if w:
                    brackets[i, j] = w
    return LieAlgebra(g.n, brackets, g.weights, fitting_flavor(g.n, brackets, g.weights, g.flavor), g.name)


def fitting_flavor(n: int, brackets, weights, preferred: str = GRADED) -> str:
    """Strongest flavor in ``preferred, filtered, plain`` the constants satisfy."""
    order = FLAVORS[FLAVORS.index(preferred):]
    for flavor in order:
        ok = True
        for (i, j), terms in brackets.items():
            wij = weights[i - 1] + weights[j - 1]
            for k in terms:
                if flavor == GRADED and weights[k - 1] != wij:
                    ok = False
                if flavor == FILTERED and weights[k - 1] < wij:
                    ok = False
        if ok:
            return flavor
    return PLAIN
