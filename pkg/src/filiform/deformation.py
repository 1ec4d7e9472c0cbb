"""
Filtered deformations of graded Lie algebras, the Nijenhuis-Richardson bracket,
UT_n-canonicalization for ``V_n`` and the weighted moduli action.

A deformation ``Ψ`` of ``g0`` is the adjoint 2-cochain with
``[x, y]_new = [x, y] + Ψ(x, y)``; its residual ``dΨ + ½[Ψ, Ψ]`` is the
Jacobiator of the new bracket.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .cohomology import (ADJOINT, Cochain, CochainError, _matrix, block_basis, cohomology,
                         differential, filtered_differential_matrix, from_vector,
                         to_vector)
from .exactla import (SparseMatrix, as_rational, factor_rational, rank, rational_roots,
                      solve)
from .liealg import (BasisChange, LieAlgebra, apply_basis_change, fitting_flavor,
                     jacobi_residual)


class DeformationError(ValueError):
    pass


ANY = "any"


# ---------------------------------------------------------------------------
# data


@dataclass(frozen=True)
class Deformation:
    """``Ψ = Σ Ψ_l`` with ``Ψ_l`` an adjoint 2-cochain of weight ``l >= 1``."""

    n: int
    components: dict = field(default_factory=dict)
    weights: tuple = ()

    def __post_init__(self):
        weights = tuple(self.weights) if self.weights else tuple(range(1, self.n + 1))
        clean = {}
        for l, c in self.components.items():
            if c.n != self.n or c.q != 2 or c.coeff != ADJOINT:
                raise DeformationError("components must be adjoint 2-cochains on %d generators" % self.n)
            if c.is_zero():
                continue
            if l < 1:
                raise DeformationError("deformation components need positive weight, got %d" % l)
            if c.weights(weights) != {l}:
                raise DeformationError("component %d is not homogeneous of weight %d" % (l, l))
            clean[l] = c
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "components", dict(sorted(clean.items())))

    @classmethod
    def from_cochain(cls, c: Cochain, weights: Sequence[int] = ()) -> "Deformation":
        w = tuple(weights) if weights else tuple(range(1, c.n + 1))
        return cls(c.n, c.components(w), w)

    @classmethod
    def zero(cls, n: int) -> "Deformation":
        return cls(n, {})

    def total(self) -> Cochain:
        out = Cochain.zero(self.n, 2, ADJOINT)
        for c in self.components.values():
            out = out + c
        return out

    def component(self, l: int) -> Cochain:
        return self.components.get(l, Cochain.zero(self.n, 2, ADJOINT))

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other):
        if not isinstance(other, Deformation):
            return NotImplemented
        return (self.n, self.components) == (other.n, other.components)


@dataclass(frozen=True)
class ModuliPoint:
    n: int
    x: tuple

    def __post_init__(self):
        x = tuple(as_rational(v) for v in self.x)
        if len(x) != 5:
            raise DeformationError("a moduli point has five coordinates")
        object.__setattr__(self, "x", x)

    def weight(self, i: int) -> int:
        """Weight of ``x_i`` (1-based)."""
        return self.n - 12 + i

    def is_zero(self) -> bool:
        return not any(self.x)

    def scaled(self, alpha) -> "ModuliPoint":
        a = as_rational(alpha)
        return ModuliPoint(self.n, tuple(a ** self.weight(i) * v for i, v in enumerate(self.x, start=1)))


@dataclass(frozen=True)
class ObstructionClass:
    weight: int
    representative: Cochain
    coordinates: tuple

    @property
    def is_zero(self) -> bool:
        return not any(self.coordinates)


# ---------------------------------------------------------------------------
# Nijenhuis-Richardson bracket


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def nr_bracket(a: Cochain, b: Cochain) -> Cochain:
    """``[u⊗A, v⊗B] = u⊗(B∧ι_v A) - (-1)^{(p-1)(q-1)} v⊗(A∧ι_u B)``."""
    if a.coeff != ADJOINT or b.coeff != ADJOINT:
        raise CochainError("the bracket is defined on adjoint cochains")
    if a.n != b.n:
        raise CochainError("dimension mismatch")
    p, q = a.q, b.q
    n = a.n
    if p + q == 0:
        raise CochainError("bracket of two 0-cochains has negative degree")
    out = Cochain.zero(n, p + q - 1, ADJOINT)
    # B∧ι_v A = (-1)^{q(p-1)} (ι_v A)∧B
    if p:
        s1 = _sign(q * (p - 1))
        for v in b.targets():
            part = a.interior({v: 1}).wedge(b.slot(v))
            if part:
                out = out + part * s1
    if q:
        s2 = -_sign((p - 1) * (q - 1) + p * (q - 1))
        for u in a.targets():
            part = b.interior({u: 1}).wedge(a.slot(u))
            if part:
                out = out + part * s2
    return out


def _as_cochain(psi) -> Cochain:
    return psi.total() if isinstance(psi, Deformation) else psi


def deformation_residual(g0: LieAlgebra, psi) -> Cochain:
    """``dΨ + ½[Ψ, Ψ]``."""
    c = _as_cochain(psi)
    return differential(g0, c) + nr_bracket(c, c) * Fraction(1, 2)


def residual_by_weight(g0: LieAlgebra, psi) -> dict[int, Cochain]:
    return deformation_residual(g0, psi).components(g0.weights)


# ---------------------------------------------------------------------------
# deform / extract


def _deformed_brackets(g0: LieAlgebra, c: Cochain) -> dict:
    br = {k: dict(v) for k, v in g0.brackets.items()}
    for (t, (i, j)), a in c.terms.items():
        row = br.setdefault((i, j), {})
        row[t] = row.get(t, 0) + a
    return br


def deform(g0: LieAlgebra, psi, check: bool = True) -> LieAlgebra:
    """The algebra ``(g0, [,] + Ψ)``; rejects a nonzero residual."""
    c = _as_cochain(psi)
    if c.n != g0.n:
        raise DeformationError("deformation has dimension %d, algebra %d" % (c.n, g0.n))
    br = _deformed_brackets(g0, c)
    flavor = fitting_flavor(g0.n, br, g0.weights, g0.flavor)
    g = LieAlgebra(g0.n, br, g0.weights, flavor, g0.name + "+psi" if c else g0.name)
    if check and c and jacobi_residual(g):
        raise DeformationError("deformation residual is nonzero")
    return g


def extract_cochain(g: LieAlgebra, g0: LieAlgebra) -> Cochain:
    if g.n != g0.n:
        raise DeformationError("dimension mismatch")
    terms = {}
    for key in set(g.brackets) | set(g0.brackets):
        a, b = g.brackets.get(key, {}), g0.brackets.get(key, {})
        for t in set(a) | set(b):
            c = a.get(t, 0) - b.get(t, 0)
            if c:
                terms[t, key] = c
    return Cochain(g.n, 2, ADJOINT, terms)


def extract_deformation(g: LieAlgebra, g0: LieAlgebra) -> Deformation:
    """``Ψ`` with ``g = deform(g0, Ψ)``, split by weight of ``g0``."""
    if g.weights != g0.weights:
        raise DeformationError("algebras must share basis weights")
    return Deformation.from_cochain(extract_cochain(g, g0), g0.weights)


# ---------------------------------------------------------------------------
# Massey obstruction


def _sum_brackets(parts: Mapping[int, Cochain], k: int, n: int) -> Cochain:
    out = Cochain.zero(n, 3, ADJOINT)
    for m, a in parts.items():
        b = parts.get(k - m)
        if b is not None:
            out = out + nr_bracket(a, b)
    return out


def massey_obstruction(g0: LieAlgebra, partial: Mapping[int, Cochain], k: int) -> ObstructionClass:
    """Class of ``-½ Σ_{m+l=k} [Ψ_m, Ψ_l]`` in ``H^3_(k)(g0, g0)``.

    ``partial`` maps weights ``< k`` to components; missing weights are zero.
    """
    n = g0.n
    parts = {l: c for l, c in partial.items() if not c.is_zero()}
    for l, c in parts.items():
        if l >= k:
            raise DeformationError("partial solution has a component of weight %d >= %d" % (l, k))
        if c.weights(g0.weights) != {l}:
            raise DeformationError("component %d is not homogeneous" % l)
    for i in range(1, k):
        eq = _sum_brackets(parts, i, n) * Fraction(1, 2)
        if i in parts:
            eq = eq + differential(g0, parts[i])
        if not eq.is_zero():
            raise DeformationError("deformation equation fails at weight %d" % i)
    rep = _sum_brackets(parts, k, n) * Fraction(-1, 2)
    if not differential(g0, rep).is_zero():
        raise DeformationError("obstruction representative is not closed")
    report = cohomology(g0, 3, ADJOINT, weights=[k], reps=True)
    basis = list(report.representatives())
    if not basis:
        return ObstructionClass(k, rep, ())
    keys = block_basis(g0, 3, k, ADJOINT)
    src = block_basis(g0, 2, k, ADJOINT)
    dmat = _matrix(g0, ADJOINT, src, keys)
    # columns: coboundaries then class representatives, solved together
    cols = dmat.col_dicts() + [to_vector(keys, h) for h in basis]
    m = SparseMatrix.from_columns(cols, len(keys))
    x = solve(m, to_vector(keys, rep))
    if x is None:
        raise DeformationError("obstruction is not expressible in the computed basis")
    off = len(src)
    coords = tuple(x.get(off + i, Fraction(0)) for i in range(len(basis)))
    return ObstructionClass(k, rep, coords)


# ---------------------------------------------------------------------------
# canonicalization


def _unipotent(n: int, phi: Cochain) -> BasisChange:
    """``id + φ`` for an adjoint 1-cochain of positive weight."""
    cols = [{i: Fraction(1)} for i in range(1, n + 1)]
    for (t, (s,)), c in phi.terms.items():
        cols[s - 1][t] = cols[s - 1].get(t, 0) + c
    return BasisChange(n, tuple(cols))


def canonicalize(psi, n: int | None = None) -> tuple[ModuliPoint, list[BasisChange]]:
    """Moduli coordinates of a filtered deformation of ``V_n`` and the basis changes used."""
    from .catalog import V, psi as basic

    if isinstance(psi, Deformation):
        n = psi.n if n is None else n
        c = psi.total()
    else:
        c = psi
        n = c.n if n is None else n
    if n < 16:
        raise DeformationError(
            "canonicalize needs n >= 16: for n in 12..15 the extra weight-1 class is unsupported")
    if c.n != n:
        raise DeformationError("deformation lives in dimension %d, not %d" % (c.n, n))
    v = V(n)
    bad = [w for w in c.weights(v.weights) if w < 1]
    if bad:
        raise DeformationError("deformation has non-positive weight %d" % min(bad))
    g = deform(v, c)
    x = [Fraction(0)] * 5
    trail: list[BasisChange] = []
    for l in range(1, n - 2):
        cur = extract_cochain(g, v).component(v.weights, l)
        if cur.is_zero():
            continue
        src = block_basis(v, 1, l, ADJOINT)
        dst = block_basis(v, 2, l, ADJOINT)
        dmat = _matrix(v, ADJOINT, src, dst)
        rhs = to_vector(dst, cur)
        level = n - l
        if level in (7, 8, 9, 10, 11):
            cols = dmat.col_dicts() + [to_vector(dst, basic(n, level))]
            sol = solve(SparseMatrix.from_columns(cols, len(dst)), rhs)
            if sol is None:
                raise DeformationError("weight %d component is not closed" % l)
            x[12 - level - 1] = sol.pop(len(src), Fraction(0))
        else:
            sol = solve(dmat, rhs)
            if sol is None:
                raise DeformationError("weight %d component is not exact" % l)
        if not sol:
            continue
        step = _unipotent(n, from_vector(v, 1, ADJOINT, src, sol))
        g = apply_basis_change(g, step)
        trail.append(step)
    rest = extract_cochain(g, v)
    from .catalog import psi_sum

    if rest != psi_sum(n, x):
        raise DeformationError("canonical form did not converge")
    return ModuliPoint(n, tuple(x)), trail


def compose_trail(n: int, trail: Sequence[BasisChange]) -> BasisChange:
    out = BasisChange.identity(n)
    for step in trail:
        out = out @ step
    return out


# ---------------------------------------------------------------------------
# weighted moduli action


def orbit_equivalent(p: ModuliPoint, q: ModuliPoint):
    """``ANY``, a set of ``α`` with ``q = α·p``, or None."""
    if p.n != q.n:
        raise DeformationError("points live in different dimensions")
    if [bool(a) for a in p.x] != [bool(b) for b in q.x]:
        return None
    if p.is_zero():
        return ANY
    i = next(k for k, a in enumerate(p.x, start=1) if a)
    cands = rational_roots(q.x[i - 1] / p.x[i - 1], p.weight(i))
    good = {a for a in cands if a and p.scaled(a) == q}
    return good or None


def moduli_normal_form(p: ModuliPoint) -> ModuliPoint:
    """Canonical representative of the ``Q*``-orbit of ``p``."""
    if p.is_zero():
        return p
    i = next(k for k, a in enumerate(p.x, start=1) if a)
    w = p.weight(i)
    sign, exps = factor_rational(p.x[i - 1])
    alpha = Fraction(1)
    for prime, e in exps.items():
        alpha *= Fraction(prime) ** (-(e // w))
    if w % 2:
        if sign * alpha ** w < 0:
            alpha = -alpha
        return p.scaled(alpha)
    a, b = p.scaled(alpha), p.scaled(-alpha)
    return min(a, b, key=lambda m: m.x)


def nonsingular_classify(p: ModuliPoint) -> bool:
    if p.n < 16:
        raise DeformationError("the classification is stated for n >= 16")
    return sum(1 for a in p.x if a) <= 1


# ---------------------------------------------------------------------------
# tangent data


@dataclass(frozen=True)
class TangentDims:
    kernel_c1: int
    orbit_dim: int
    z2: int
    stabilizer: int


def tangent_dims(g0: LieAlgebra, psi) -> TangentDims:
    """Ranks of the deformed differential on positive-weight ``C^1`` and ``C^2``."""
    g = deform(g0, _as_cochain(psi))
    d1 = filtered_differential_matrix(g, 1, ADJOINT, min_weight=1)
    r1 = rank(d1)
    d2 = filtered_differential_matrix(g, 2, ADJOINT, min_weight=1)
    r2 = rank(d2)
    d0 = filtered_differential_matrix(g, 1, ADJOINT, min_weight=0)
    return TangentDims(d1.cols - r1, r1, d2.cols - r2, d0.cols - rank(d0))


def kernel_basis_operators(n: int, g: LieAlgebra) -> list[Cochain]:
    """Inner derivations ``ad(e_1..e_{n-1})`` and the three tail operators."""
    C = Cochain
    # d of a 0-cochain v is ad_v
    ops = [differential(g, C.vector(n, {i: 1})) for i in range(1, n)]
    one = C.dual(n, 2).tensor({n: 1})
    two = C.dual(n, 2).tensor({n - 1: 1}) + C.dual(n, 3).tensor({n: n - 2})
    three = (C.dual(n, 2).tensor({n - 2: 1}) + C.dual(n, 3).tensor({n - 1: n - 3})
             + C.dual(n, 4).tensor({n: Fraction((n - 2) * (n - 3), 2)}))
    return ops + [one, two, three]
