"""
Chevalley-Eilenberg cochains with trivial or adjoint coefficients.

A cochain is a sparse map ``(target, I) -> coefficient`` where ``I`` is a
strictly increasing tuple of 1-based indices naming the monomial
``e^{i_1} ∧ ... ∧ e^{i_q}`` and ``target`` is the basis vector ``e_t`` of the
coefficient module (``0`` for trivial coefficients).

Weights: ``e^I`` has weight ``sum w(i)``; ``e_t ⊗ e^I`` has weight
``w(t) - sum w(I)``.  The differential of a graded algebra preserves both.

Sign convention.  ``d`` is the negative of the textbook differential, so on
trivial 1-cochains ``(d f)(x, y) = f([x, y])`` and ``d e^3 = e^1 ∧ e^2`` on
``V_n``.  On adjoint cochains

    d(v ⊗ ω) = - sum_p [e_p, v] ⊗ (e^p ∧ ω) + v ⊗ dω,

which makes ``d Ψ`` the part of the Jacobiator of ``[,] + Ψ`` that is linear in
``Ψ``.  Forms evaluate by the determinant rule with no ``1/q!`` factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Mapping

from .exactla import (LinearSubspace, SparseMatrix, as_rational, kernel_vectors, rank,
                      solve)
from .liealg import GRADED, LieAlgebra, fitting_flavor

TRIVIAL = "trivial"
ADJOINT = "adjoint"
COEFFS = (TRIVIAL, ADJOINT)


class CochainError(ValueError):
    pass


def sort_sign(seq: Iterable[int]) -> tuple[tuple[int, ...], int]:
    """Sorted tuple and permutation sign; sign 0 when an index repeats."""
    s = list(seq)
    if len(set(s)) != len(s):
        return tuple(sorted(s)), 0
    sign = 1
    # insertion sort counting transpositions; q is tiny
    for a in range(1, len(s)):
        b = a
        while b > 0 and s[b - 1] > s[b]:
            s[b - 1], s[b] = s[b], s[b - 1]
            sign = -sign
            b -= 1
    return tuple(s), sign


def _det(rows: list[list[Fraction]]) -> Fraction:
    k = len(rows)
    total = Fraction(0)
    for perm in permutations(range(k)):
        _, sg = sort_sign(perm)
        prod = Fraction(sg)
        for a, b in enumerate(perm):
            prod *= rows[a][b]
            if not prod:
                break
        total += prod
    return total


@dataclass(frozen=True)
class Cochain:
    n: int
    q: int
    coeff: str = TRIVIAL
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.coeff not in COEFFS:
            raise CochainError("unknown coefficients %r" % self.coeff)
        if self.q < 0:
            raise CochainError("negative degree")
        clean: dict = {}
        for (t, idx), c in self.terms.items():
            c = as_rational(c)
            if not c:
                continue
            if self.coeff == TRIVIAL and t != 0:
                raise CochainError("trivial cochains carry target 0")
            if self.coeff == ADJOINT and not 1 <= t <= self.n:
                raise CochainError("target e_%d out of range" % t)
            if len(idx) != self.q or any(not 1 <= i <= self.n for i in idx):
                raise CochainError("bad monomial %r for degree %d" % (idx, self.q))
            key, sg = sort_sign(idx)
            if not sg:
                continue
            k = (t, key)
            v = clean.get(k, 0) + sg * c
            if v:
                clean[k] = v
            else:
                clean.pop(k, None)
        object.__setattr__(self, "terms", clean)

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, n: int, q: int, coeff: str = TRIVIAL) -> "Cochain":
        return cls(n, q, coeff, {})

    @classmethod
    def form(cls, n: int, entries: Mapping[tuple, object]) -> "Cochain":
        """Trivial cochain from ``{(i, j, ...): c}``."""
        entries = dict(entries)
        q = len(next(iter(entries))) if entries else 0
        return cls(n, q, TRIVIAL, {(0, tuple(i)): c for i, c in entries.items()})

    @classmethod
    def dual(cls, n: int, k: int) -> "Cochain":
        return cls(n, 1, TRIVIAL, {(0, (k,)): 1})

    @classmethod
    def vector(cls, n: int, v: Mapping[int, object]) -> "Cochain":
        """An element of ``g`` as an adjoint 0-cochain."""
        return cls(n, 0, ADJOINT, {(t, ()): c for t, c in v.items()})

    def tensor(self, v: Mapping[int, object]) -> "Cochain":
        """``v ⊗ self`` for a trivial cochain ``self``."""
        if self.coeff != TRIVIAL:
            raise CochainError("tensor needs a trivial cochain")
        out = {}
        for (_, idx), c in self.terms.items():
            for t, a in v.items():
                out[t, idx] = out.get((t, idx), 0) + c * as_rational(a)
        return Cochain(self.n, self.q, ADJOINT, out)

    def slot(self, t: int) -> "Cochain":
        """The trivial form multiplying ``e_t`` in an adjoint cochain."""
        return Cochain(self.n, self.q, TRIVIAL,
                       {(0, idx): c for (s, idx), c in self.terms.items() if s == t})

    def targets(self) -> list[int]:
        return sorted({t for t, _ in self.terms})

    # arithmetic ---------------------------------------------------------

    def _check(self, other: "Cochain") -> None:
        if (self.n, self.q, self.coeff) != (other.n, other.q, other.coeff):
            raise CochainError("incompatible cochains")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Cochain(self.n, self.q, self.coeff, out)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __neg__(self) -> "Cochain":
        return Cochain(self.n, self.q, self.coeff, {k: -c for k, c in self.terms.items()})

    def __mul__(self, a) -> "Cochain":
        a = as_rational(a)
        return Cochain(self.n, self.q, self.coeff, {k: a * c for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, key) -> Fraction:
        t, idx = key
        k, sg = sort_sign(idx)
        return sg * self.terms.get((t, k), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    # weights ------------------------------------------------------------

    def key_weight(self, weights: tuple, key) -> int:
        t, idx = key
        s = sum(weights[i - 1] for i in idx)
        return s if self.coeff == TRIVIAL else weights[t - 1] - s

    def weights(self, weights: tuple) -> set[int]:
        return {self.key_weight(weights, k) for k in self.terms}

    def weight(self, weights: tuple) -> int | None:
        """The weight if homogeneous and nonzero, else None."""
        ws = self.weights(weights)
        return ws.pop() if len(ws) == 1 else None

    def component(self, weights: tuple, mu: int) -> "Cochain":
        return Cochain(self.n, self.q, self.coeff,
                       {k: c for k, c in self.terms.items() if self.key_weight(weights, k) == mu})

    def components(self, weights: tuple) -> dict[int, "Cochain"]:
        return {mu: self.component(weights, mu) for mu in sorted(self.weights(weights))}

    # exterior calculus --------------------------------------------------

    def wedge(self, other: "Cochain") -> "Cochain":
        """``self ∧ other``; ``other`` must have trivial coefficients."""
        if other.coeff != TRIVIAL:
            raise CochainError("right factor of a wedge must be trivial")
        if self.n != other.n:
            raise CochainError("dimension mismatch")
        out: dict = {}
        for (t, a), c in self.terms.items():
            for (_, b), d in other.terms.items():
                if set(a) & set(b):
                    continue
                key, sg = sort_sign(a + b)
                out[t, key] = out.get((t, key), 0) + sg * c * d
        return Cochain(self.n, self.q + other.q, self.coeff, out)

    def interior(self, v: Mapping[int, object]) -> "Cochain":
        """``ι_v``: insert ``v`` into the first slot."""
        if self.q == 0:
            raise CochainError("cannot contract a 0-cochain")
        out: dict = {}
        for (t, idx), c in self.terms.items():
            for r, i in enumerate(idx):
                a = v.get(i)
                if a:
                    key = (t, idx[:r] + idx[r + 1:])
                    out[key] = out.get(key, 0) + (-1) ** r * c * as_rational(a)
        return Cochain(self.n, self.q - 1, self.coeff, out)

    def evaluate(self, *args: Mapping[int, object]):
        """Value on ``q`` vectors: a Fraction (trivial) or a sparse vector."""
        if len(args) != self.q:
            raise CochainError("expected %d arguments" % self.q)
        out: dict[int, Fraction] = {}
        for (t, idx), c in self.terms.items():
            rows = [[as_rational(x.get(i, 0)) for i in idx] for x in args]
            val = c * _det(rows) if self.q else c
            if val:
                out[t] = out.get(t, 0) + val
        if self.coeff == TRIVIAL:
            return out.get(0, Fraction(0))
        return {t: c for t, c in out.items() if c}


TwoForm = Cochain


def two_form(n: int, entries: Mapping[tuple, object]) -> Cochain:
    return Cochain(n, 2, TRIVIAL, {(0, tuple(ij)): c for ij, c in entries.items()})


# ---------------------------------------------------------------------------
# differential


def _structure(g: LieAlgebra):
    """Cached ``d e^k`` and left adjoint action, keyed on the algebra."""
    s = g._cache.get("structure")
    if s is None:
        de: dict[int, dict] = {k: {} for k in range(1, g.n + 1)}
        for (i, j), terms in g.brackets.items():
            for k, c in terms.items():
                de[k][i, j] = c
        # ad[t] = [(p, [e_p, e_t]) ...]
        ad: dict[int, list] = {t: [] for t in range(1, g.n + 1)}
        for (i, j), terms in g.brackets.items():
            ad[j].append((i, terms))
            ad[i].append((j, {k: -c for k, c in terms.items()}))
        s = (de, ad)
        g._cache["structure"] = s
    return s


def _d_trivial_monomial(de, idx: tuple) -> dict[tuple, Fraction]:
    out: dict[tuple, Fraction] = {}
    for r, k in enumerate(idx):
        rest_l, rest_r = idx[:r], idx[r + 1:]
        for (i, j), c in de[k].items():
            if i in idx or j in idx:
                continue
            key, sg = sort_sign(rest_l + (i, j) + rest_r)
            v = out.get(key, 0) + (-1) ** r * sg * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def d_monomial(g: LieAlgebra, key: tuple, coeff: str) -> dict[tuple, Fraction]:
    """``d`` of one basis cochain, as ``{(target, I): c}``."""
    de, ad = _structure(g)
    t, idx = key
    out: dict[tuple, Fraction] = {}
    for k, c in _d_trivial_monomial(de, idx).items():
        out[t, k] = c
    if coeff == ADJOINT:
        for p, terms in ad[t]:
            if p in idx:
                continue
            k, sg = sort_sign((p,) + idx)
            for s, c in terms.items():
                kk = (s, k)
                v = out.get(kk, 0) - sg * c
                if v:
                    out[kk] = v
                else:
                    out.pop(kk, None)
    return out


def differential(g: LieAlgebra, c: Cochain) -> Cochain:
    if c.n != g.n:
        raise CochainError("cochain has dimension %d, algebra %d" % (c.n, g.n))
    out: dict = {}
    for key, a in c.terms.items():
        for k, b in d_monomial(g, key, c.coeff).items():
            out[k] = out.get(k, 0) + a * b
    return Cochain(g.n, c.q + 1, c.coeff, out)


def is_graded(g: LieAlgebra) -> bool:
    if g.flavor == GRADED:
        return True
    key = "graded"
    if key not in g._cache:
        g._cache[key] = fitting_flavor(g.n, g.brackets, g.weights, GRADED) == GRADED
    return g._cache[key]


# ---------------------------------------------------------------------------
# weight blocks


def _subsets_by_weight(g: LieAlgebra, q: int) -> dict[int, list[tuple]]:
    key = ("subsets", q)
    table = g._cache.get(key)
    if table is None:
        table = {}
        for idx in combinations(range(1, g.n + 1), q):
            table.setdefault(sum(g.weights[i - 1] for i in idx), []).append(idx)
        g._cache[key] = table
    return table


def block_weights(g: LieAlgebra, q: int, coeff: str) -> list[int]:
    sums = _subsets_by_weight(g, q)
    if coeff == TRIVIAL:
        return sorted(sums)
    return sorted({w - s for w in set(g.weights) for s in sums})


def block_basis(g: LieAlgebra, q: int, mu: int, coeff: str) -> list[tuple]:
    """Monomial keys ``(target, I)`` of ``C^q_(mu)`` in sorted order."""
    key = ("block", q, mu, coeff)
    basis = g._cache.get(key)
    if basis is None:
        sums = _subsets_by_weight(g, q)
        if coeff == TRIVIAL:
            basis = [(0, idx) for idx in sums.get(mu, [])]
        else:
            basis = sorted((t, idx) for t in range(1, g.n + 1)
                           for idx in sums.get(g.weights[t - 1] - mu, []))
        g._cache[key] = basis
    return basis


def full_basis(g: LieAlgebra, q: int, coeff: str, min_weight: int | None = None) -> list[tuple]:
    """All monomial keys of ``C^q``, optionally only weights ``>= min_weight``."""
    keys = []
    for mu in block_weights(g, q, coeff):
        if min_weight is None or mu >= min_weight:
            keys.extend(block_basis(g, q, mu, coeff))
    return sorted(keys)


def _matrix(g: LieAlgebra, coeff: str, cols: list[tuple], rows: list[tuple]) -> SparseMatrix:
    row_of = {k: r for r, k in enumerate(rows)}
    ent = {}
    for j, key in enumerate(cols):
        for k, c in d_monomial(g, key, coeff).items():
            r = row_of.get(k)
            if r is None:
                raise CochainError("differential leaves the chosen target space")
            ent[r, j] = c
    return SparseMatrix(len(rows), len(cols), ent)


def differential_matrix(g: LieAlgebra, q: int, mu: int, coeff: str = ADJOINT) -> SparseMatrix:
    """Matrix of ``d: C^q_(mu) -> C^{q+1}_(mu)`` in the monomial bases."""
    if not is_graded(g):
        raise CochainError("weight blocks need a graded algebra")
    return _matrix(g, coeff, block_basis(g, q, mu, coeff), block_basis(g, q + 1, mu, coeff))


def filtered_differential_matrix(g: LieAlgebra, q: int, coeff: str = ADJOINT,
                                 min_weight: int | None = None) -> SparseMatrix:
    """``d`` on the subcomplex of weights ``>= min_weight`` (whole complex if None).

    Valid for filtered algebras, whose differential never lowers weight.
    """
    return _matrix(g, coeff, full_basis(g, q, coeff, min_weight),
                   full_basis(g, q + 1, coeff, min_weight))


def to_vector(keys: list[tuple], c: Cochain) -> dict[int, Fraction]:
    pos = {k: i for i, k in enumerate(keys)}
    try:
        return {pos[k]: v for k, v in c.terms.items()}
    except KeyError as exc:
        raise CochainError("cochain has a term outside the block: %r" % (exc.args[0],)) from None


def from_vector(g: LieAlgebra, q: int, coeff: str, keys: list[tuple], v: Mapping[int, Fraction]) -> Cochain:
    return Cochain(g.n, q, coeff, {keys[i]: c for i, c in v.items()})


# ---------------------------------------------------------------------------
# cohomology


@dataclass(frozen=True)
class BlockCohomology:
    weight: int | None
    dim_c: int
    dim_z: int
    dim_b: int
    reps: tuple = ()

    @property
    def dim_h(self) -> int:
        return self.dim_z - self.dim_b


@dataclass(frozen=True)
class CohomologyReport:
    q: int
    coeff: str
    blocks: tuple  # of BlockCohomology, increasing weight

    @property
    def total(self) -> int:
        return sum(b.dim_h for b in self.blocks)

    def dims(self) -> dict:
        """``{weight: dim H}`` for the nonzero blocks."""
        return {b.weight: b.dim_h for b in self.blocks if b.dim_h}

    def weight_multiset(self) -> list:
        return [b.weight for b in self.blocks for _ in range(b.dim_h)]

    def block(self, mu) -> BlockCohomology | None:
        for b in self.blocks:
            if b.weight == mu:
                return b
        return None

    def representatives(self) -> list[Cochain]:
        return [r for b in self.blocks for r in b.reps]


def _block(g: LieAlgebra, q: int, coeff: str, mu, keys, d_in, d_out, reps: bool) -> BlockCohomology:
    dim_c = len(keys)
    if not reps:
        dim_z = dim_c - rank(d_out)
        dim_b = rank(d_in)
        return BlockCohomology(mu, dim_c, dim_z, dim_b)
    zvecs = kernel_vectors(d_out)
    # image of d_in: its columns
    bspace = LinearSubspace.span(dim_c, d_in.col_dicts())
    chosen = []
    cur = bspace
    for z in zvecs:
        if not cur.contains(z):
            chosen.append(z)
            cur = LinearSubspace.span(dim_c, list(cur.basis) + [z])
    out = tuple(from_vector(g, q, coeff, keys, z) for z in chosen)
    return BlockCohomology(mu, dim_c, len(zvecs), bspace.dim, out)


def cohomology(g: LieAlgebra, q: int, coeff: str = ADJOINT,
               weights: Iterable[int] | None = None, reps: bool = False) -> CohomologyReport:
    """``H^q(g, V)`` block by block.

    A graded algebra is split into weight blocks; any other algebra is treated
    as a single block with weight ``None``.
    """
    if coeff not in COEFFS:
        raise CochainError("unknown coefficients %r" % coeff)
    if q < 0:
        raise CochainError("negative degree")
    blocks = []
    if is_graded(g):
        wanted = set(weights) if weights is not None else None
        for mu in block_weights(g, q, coeff):
            if wanted is not None and mu not in wanted:
                continue
            keys = block_basis(g, q, mu, coeff)
            if not keys:
                continue
            d_out = differential_matrix(g, q, mu, coeff)
            d_in = (differential_matrix(g, q - 1, mu, coeff) if q
                    else SparseMatrix(len(keys), 0, {}))
            blocks.append(_block(g, q, coeff, mu, keys, d_in, d_out, reps))
    else:
        if weights is not None:
            raise CochainError("weight selection needs a graded algebra")
        keys = full_basis(g, q, coeff)
        d_out = filtered_differential_matrix(g, q, coeff)
        d_in = filtered_differential_matrix(g, q - 1, coeff) if q else SparseMatrix(len(keys), 0, {})
        blocks.append(_block(g, q, coeff, None, keys, d_in, d_out, reps))
    return CohomologyReport(q, coeff, tuple(blocks))


def is_cocycle(g: LieAlgebra, c: Cochain) -> bool:
    return differential(g, c).is_zero()


def coboundary_preimage(g: LieAlgebra, c: Cochain) -> Cochain | None:
    """Some ``φ`` with ``dφ = c``, or None when ``c`` is not exact."""
    if c.q == 0:
        return None if c else Cochain.zero(g.n, 0, c.coeff)
    if c.is_zero():
        return Cochain.zero(g.n, c.q - 1, c.coeff)
    if is_graded(g):
        # solve block by block
        total = Cochain.zero(g.n, c.q - 1, c.coeff)
        for mu, part in c.components(g.weights).items():
            src = block_basis(g, c.q - 1, mu, c.coeff)
            dst = block_basis(g, c.q, mu, c.coeff)
            m = _matrix(g, c.coeff, src, dst)
            x = solve(m, to_vector(dst, part))
            if x is None:
                return None
            total = total + from_vector(g, c.q - 1, c.coeff, src, x)
        return total
    src = full_basis(g, c.q - 1, c.coeff)
    dst = full_basis(g, c.q, c.coeff)
    x = solve(_matrix(g, c.coeff, src, dst), to_vector(dst, c))
    return None if x is None else from_vector(g, c.q - 1, c.coeff, src, x)


def is_coboundary(g: LieAlgebra, c: Cochain) -> bool:
    return coboundary_preimage(g, c) is not None


def deformed_differential(g0: LieAlgebra, psi, c: Cochain) -> Cochain:
    """Differential of ``deform(g0, psi)`` applied to ``c``."""
    from .deformation import deform

    return differential(deform(g0, psi), c)
