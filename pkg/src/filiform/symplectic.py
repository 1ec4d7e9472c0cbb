"""
Symplectic and contact structures on Lie algebras, and one-dimensional central
extensions by closed 2-forms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cohomology import TRIVIAL, Cochain, differential, full_basis, _matrix
from .exactla import SparseMatrix, kernel_vectors, skew_determinant
from .liealg import (PLAIN, LieAlgebra, LieAlgebraError, center_vectors, fitting_flavor,
                     jacobi_residual)

EXISTS = "Exists"
CERTIFIED_NONE = "CertifiedNone"
UNDECIDED = "Undecided"

DEFAULT_TRIALS = 64


class SymplecticError(ValueError):
    pass


def _check_form(g: LieAlgebra, w: Cochain, q: int) -> None:
    if w.coeff != TRIVIAL or w.q != q:
        raise SymplecticError("expected a trivial %d-form" % q)
    if w.n != g.n:
        raise SymplecticError("form has dimension %d, algebra %d" % (w.n, g.n))


def is_closed(g: LieAlgebra, w: Cochain) -> bool:
    _check_form(g, w, 2)
    return differential(g, w).is_zero()


def gram_matrix(w: Cochain) -> SparseMatrix:
    entries = {}
    for (_, (i, j)), c in w.terms.items():
        entries[i - 1, j - 1] = c
        entries[j - 1, i - 1] = -c
    return SparseMatrix(w.n, w.n, entries)


def nondegenerate(g: LieAlgebra, w: Cochain) -> bool:
    _check_form(g, w, 2)
    if g.n % 2:
        return False
    return skew_determinant(gram_matrix(w)) != 0


def is_symplectic(g: LieAlgebra, w: Cochain) -> bool:
    return is_closed(g, w) and nondegenerate(g, w)


@dataclass(frozen=True)
class SymplecticDecision:
    verdict: str
    witness: Cochain | None = None
    certificate: str | None = None
    trials: int = 0


def closed_two_forms(g: LieAlgebra) -> list[Cochain]:
    """A basis of ``Z^2(g)``."""
    keys = full_basis(g, 2, TRIVIAL)
    m = _matrix(g, TRIVIAL, keys, full_basis(g, 3, TRIVIAL))
    return [Cochain(g.n, 2, TRIVIAL, {keys[i]: c for i, c in v.items()})
            for v in kernel_vectors(m)]


def center_pairing_vanishes(g: LieAlgebra, z2: list[Cochain]) -> bool:
    """True when every closed 2-form kills the center, so none is nondegenerate."""
    zs = center_vectors(g)
    if not zs:
        return False
    return all(w.interior(z).is_zero() for w in z2 for z in zs)


def symplectic_decision(g: LieAlgebra, seed: int = 0, trials: int = DEFAULT_TRIALS) -> SymplecticDecision:
    if g.n % 2:
        raise SymplecticError("odd-dimensional algebras carry no symplectic form")
    if jacobi_residual(g):
        raise SymplecticError("bracket fails the Jacobi identity")
    z2 = closed_two_forms(g)
    if center_pairing_vanishes(g, z2):
        return SymplecticDecision(
            CERTIFIED_NONE,
            certificate="every closed 2-form annihilates the center (dim Z^2 = %d)" % len(z2))
    rng = random.Random(seed)
    for t in range(1, trials + 1):
        w = Cochain.zero(g.n, 2, TRIVIAL)
        for b in z2:
            w = w + b * rng.randint(-3, 3)
        if nondegenerate(g, w):
            return SymplecticDecision(EXISTS, witness=w, trials=t)
    return SymplecticDecision(UNDECIDED, trials=trials)


# ---------------------------------------------------------------------------
# central extensions


def central_extension(g: LieAlgebra, c: Cochain) -> LieAlgebra:
    """``g ⊕ K e_{n+1}`` with ``[x, y]' = [x, y] + c(x, y) e_{n+1}``."""
    _check_form(g, c, 2)
    if not is_closed(g, c):
        raise SymplecticError("extension cocycle is not closed")
    n = g.n
    br = {k: dict(v) for k, v in g.brackets.items()}
    for (_, (i, j)), a in c.terms.items():
        br.setdefault((i, j), {})[n + 1] = a
    w = c.weight(g.weights)
    if w is not None:
        weights = g.weights + (w,)
        flavor = fitting_flavor(n + 1, br, weights, g.flavor)
    else:
        # inhomogeneous cocycle: no natural weight, plain flavor
        weights = g.weights + (max(g.weights, default=0) + 1,)
        flavor = PLAIN
    try:
        h = LieAlgebra(n + 1, br, weights, flavor, g.name + "+ext")
    except LieAlgebraError as exc:
        raise SymplecticError(str(exc)) from None
    if jacobi_residual(h):
        raise SymplecticError("central extension fails the Jacobi identity")
    return h


def extension_filiform_check(g: LieAlgebra, c: Cochain) -> bool:
    """Whether ``x -> c(x, ξ)`` is nonzero for the central ``ξ`` of a filiform ``g``."""
    _check_form(g, c, 2)
    zs = center_vectors(g)
    if len(zs) != 1:
        raise SymplecticError("expected a one-dimensional center")
    return not c.interior(zs[0]).is_zero()


# ---------------------------------------------------------------------------
# contact


def contact_check(g: LieAlgebra, theta: Cochain) -> bool:
    """``θ ∧ (dθ)^k != 0`` on an algebra of dimension ``2k + 1``."""
    _check_form(g, theta, 1)
    if g.n % 2 == 0:
        raise SymplecticError("contact forms live in odd dimension")
    dtheta = differential(g, theta)
    acc = theta
    for _ in range(g.n // 2):
        acc = acc.wedge(dtheta)
        if acc.is_zero():
            return False
    return True
