"""
Named algebras, cocycles, polynomials and forms.

Forms are trivial-coefficient cochains; the adjoint cocycles ``psi`` are sums
``e_k ⊗ (2-form)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .cohomology import ADJOINT, Cochain, two_form
from .exactla import as_rational
from .liealg import FILTERED, GRADED, LieAlgebra, jacobi_residual


class CatalogError(ValueError):
    pass


def _checked(g: LieAlgebra) -> LieAlgebra:
    bad = jacobi_residual(g)
    if bad:
        raise CatalogError("%s fails Jacobi at %r" % (g.name, bad[0][0]))
    return g


# ---------------------------------------------------------------------------
# algebras


def V(n: int) -> LieAlgebra:
    """``[e_i, e_j] = (j - i) e_{i+j}`` for ``i + j <= n``."""
    if n < 3:
        raise CatalogError("V needs n >= 3")
    br = {(i, j): {i + j: j - i} for i in range(1, n + 1) for j in range(i + 1, n + 1) if i + j <= n}
    return LieAlgebra(n, br, (), GRADED, "V%d" % n)


def m0(n: int, weights: Sequence[int] | None = None) -> LieAlgebra:
    if n < 3:
        raise CatalogError("m0 needs n >= 3")
    br = {(1, i): {i + 1: 1} for i in range(2, n)}
    return LieAlgebra(n, br, tuple(weights or ()), GRADED, "m0(%d)" % n)


def canonical_weights(n: int) -> tuple:
    """The grading with a two-dimensional degree-one piece: ``(1, 1, 2, ..., n-1)``."""
    return (1,) + tuple(range(1, n))


def m1(n: int) -> LieAlgebra:
    if n < 4 or n % 2:
        raise CatalogError("m1 needs an even dimension >= 4")
    k = n // 2
    br = {(1, i): {i + 1: 1} for i in range(2, n)}
    for j in range(2, k + 1):
        br[j, n + 1 - j] = {n: (-1) ** (j + 1)}
    return LieAlgebra(n, br, canonical_weights(n), GRADED, "m1(%d)" % n)


def m2(n: int) -> LieAlgebra:
    if n < 3:
        raise CatalogError("m2 needs n >= 3")
    br = {(1, i): {i + 1: 1} for i in range(2, n)}
    for j in range(3, n - 1):
        br[2, j] = {j + 2: 1}
    return LieAlgebra(n, br, (), GRADED, "m2(%d)" % n)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, (), GRADED, "abelian(%d)" % n)


def heisenberg() -> LieAlgebra:
    return LieAlgebra(3, {(1, 2): {3: 1}}, (1, 1, 2), GRADED, "heisenberg")


G8_EXCLUDED = (Fraction(-5, 2), Fraction(-2), Fraction(-1, 2), Fraction(1, 2))
G10_EXCLUDED = (Fraction(-5, 2), Fraction(-1, 4), Fraction(-1), Fraction(-3))


def _g8_brackets(a: Fraction) -> dict:
    br = {(1, i): {i + 1: 1} for i in range(2, 8)}
    br.update({
        (2, 3): {5: 2 + a}, (2, 4): {6: 2 + a}, (2, 5): {7: 1 + a}, (3, 4): {7: 1},
        (2, 6): {8: a}, (3, 5): {8: 1},
    })
    return br


def g8(alpha) -> LieAlgebra:
    a = as_rational(alpha)
    if a in G8_EXCLUDED:
        raise CatalogError("g8 is not defined for alpha = %s" % a)
    return _checked(LieAlgebra(8, _g8_brackets(a), (), GRADED, "g8(%s)" % a))


def g10(alpha) -> LieAlgebra:
    """The 10-dimensional family.

    The two further excluded parameters are real roots of
    ``2a^3 + 2a^2 + 3`` and ``4a^3 + 8a^2 - 8a - 21``; neither cubic has a
    rational root, so only the four rational exclusions can occur here.
    """
    a = as_rational(alpha)
    if a in G10_EXCLUDED:
        raise CatalogError("g10 is not defined for alpha = %s" % a)
    br = _g8_brackets(a)
    br.update({(1, 8): {9: 1}, (1, 9): {10: 1}})
    den = 2 * a + 5
    br.update({
        (2, 7): {9: (2 * a * a + 3 * a - 2) / den},
        (3, 6): {9: (2 * a + 2) / den},
        (4, 5): {9: 3 / den},
        (2, 8): {10: (2 * a * a + a - 1) / den},
        (3, 7): {10: (2 * a - 1) / den},
        (4, 6): {10: 3 / den},
    })
    return _checked(LieAlgebra(10, br, (), GRADED, "g10(%s)" % a))


# ---------------------------------------------------------------------------
# polynomials


def _c(j: int, k: int) -> Fraction:
    # binomial as a polynomial in j, so negative arguments are fine
    num = 1
    for t in range(k):
        num *= j - t
    return Fraction(num, factorial(k))


def _p(j):
    c1, c2 = _c(j, 1), _c(j, 2)
    return (Fraction(5 * c2 + 3 * c1 - 6, 21),
            -Fraction(4 * c2 + 15 * c1 - 30, 21),
            -Fraction(13 * c2 - 30 * c1 + 60, 21))


def _q(j):
    c1, c2, c3 = _c(j + 1, 1), _c(j + 1, 2), _c(j + 1, 3)
    return ((3 * c3 + 4 * c2 - 4 * c1) / 28,
            (c3 - 8 * c2 + 8 * c1) / 14,
            (-13 * c3 + 20 * c2 - 20 * c1) / 28)


# Z2's linear coefficient is +59/99: with -59/99 the weight-11 equation has no
# solution of this shape and psi_{n,11} is not closed.
_Z_COEFFS = (
    (Fraction(1, 22), Fraction(23, 231), Fraction(-7, 198), Fraction(-59, 693), Fraction(37, 231)),
    (Fraction(17, 154), Fraction(-62, 231), Fraction(-53, 1386), Fraction(59, 99), Fraction(-37, 33)),
    (Fraction(-29, 154), Fraction(-4, 77), Fraction(317, 462), Fraction(-59, 33), Fraction(37, 11)),
    (Fraction(-47, 154), Fraction(185, 231), Fraction(-2245, 1386), Fraction(295, 99), Fraction(-185, 33)),
)


def _z(j):
    cs = (_c(j + 2, 4), _c(j + 2, 3), _c(j + 2, 2), _c(j + 2, 1), 1)
    return tuple(sum(a * b for a, b in zip(row, cs)) for row in _Z_COEFFS)


POLY_FAMILIES = ("P1", "P2", "P3", "Q1", "Q2", "Q3", "Z1", "Z2", "Z3", "Z4")


def poly(family: str, j: int) -> Fraction:
    """Exact value of ``P1..P3``, ``Q1..Q3`` or ``Z1..Z4`` at ``j``."""
    if family not in POLY_FAMILIES:
        raise CatalogError("unknown polynomial %r" % family)
    table = {"P": _p, "Q": _q, "Z": _z}[family[0]]
    return table(j)[int(family[1]) - 1]


# ---------------------------------------------------------------------------
# forms


def g5(n: int) -> Cochain:
    return two_form(n, {(2, 3): 1})


def g7(n: int) -> Cochain:
    return two_form(n, {(2, 5): 1, (3, 4): -3})


def g12(n: int = 12) -> Cochain:
    return Cochain.form(n, {(2, 3, 7): 2, (2, 4, 6): -5, (3, 4, 5): 20})


def xi_forms(j: int, n: int = 9) -> tuple[Cochain, Cochain, Cochain, Cochain]:
    """The weight 8..11 forms solving the correction system for ``e_j ⊗ g7``."""
    if n < 9:
        raise CatalogError("xi forms need n >= 9")
    p, q, z = _p(j), _q(j), _z(j)
    xi1 = two_form(n, {(2, 6): Fraction(j - 1, 2), (3, 5): -(j - 1)})
    xi2 = two_form(n, {(2, 7): p[0], (3, 6): p[1], (4, 5): p[2]})
    xi3 = two_form(n, {(2, 8): q[0], (3, 7): q[1], (4, 6): q[2]})
    xi4 = two_form(n, {(2, 9): z[0], (3, 8): z[1], (4, 7): z[2], (5, 6): z[3]})
    return xi1, xi2, xi3, xi4


def xi_class_form(j: int, n: int = 12) -> Cochain:
    """``(j+3)e^1∧ξ4 + (j+1)e^2∧ξ3 + (j-1)e^3∧ξ2 + (j-3)e^4∧ξ1 + (j-5)e^5∧g7``."""
    xs = xi_forms(j, n)
    out = Cochain.zero(n, 3)
    for k, (coef, form) in enumerate(zip((j + 3, j + 1, j - 1, j - 3, j - 5),
                                         (xs[3], xs[2], xs[1], xs[0], g7(n))), start=1):
        out = out + Cochain.dual(n, k).wedge(form) * coef
    return out


def xi_class_coefficient(j: int) -> Fraction:
    return -Fraction((j - 8) * (j * j - 4 * j + 27) * (j * j - 13 * j + 48), 5544)


PSI_LEVELS = (7, 8, 9, 10, 11)


def psi(n: int, l: int) -> Cochain:
    """Basic adjoint cocycle of weight ``n - l``: ``sum_p e_{j+p} ⊗ ξ_p(j)``, ``j = n - l + 7``."""
    if l not in PSI_LEVELS:
        raise CatalogError("psi level must be one of 7..11")
    if n < 12:
        raise CatalogError("psi needs n >= 12")
    j = n - l + 7
    forms = (g7(n),) + xi_forms(j, n)
    out = Cochain.zero(n, 2, ADJOINT)
    for p in range(l - 6):
        out = out + forms[p].tensor({j + p: 1})
    return out


def psi_sum(n: int, x: Sequence) -> Cochain:
    """``x1 psi_{n,11} + ... + x5 psi_{n,7}``."""
    if len(x) != 5:
        raise CatalogError("need five coordinates")
    out = Cochain.zero(n, 2, ADJOINT)
    for i, c in enumerate(x, start=1):
        if c:
            out = out + psi(n, 12 - i) * c
    return out


def omega_proj(n: int, m: int) -> Cochain:
    """``Ω_{n+1}``, ``Ω_{n+2}`` (``i, j > 1``) or ``Ω_{n+3}`` (``i, j > 2``)."""
    if m not in (n + 1, n + 2, n + 3):
        raise CatalogError("m must be n+1, n+2 or n+3")
    low = m - n  # smallest allowed index
    return two_form(n, {(i, m - i): m - 2 * i for i in range(low, (m + 1) // 2) if m - i <= n and m - i > i})


def _pair_sum(n: int, coef) -> Cochain:
    return two_form(n, {(i, n + 1 - i): coef(i, n + 1 - i) for i in range(1, n // 2 + 1)})


def omega_2k(two_k: int, l: int) -> Cochain:
    """``Ω_{2k,l}`` for ``l = 7..11``."""
    if l not in PSI_LEVELS:
        raise CatalogError("level must be one of 7..11")
    n = two_k
    if l == 7:
        return g7(n)
    # Ω_{2k,8..11} are ξ1(2k), ξ2(2k-1), ξ3(2k-2), ξ4(2k-3)
    p = l - 7
    return xi_forms(two_k - p + 1, n)[p - 1]


def omega_X(two_k: int, X: Sequence, x5=0) -> Cochain:
    if two_k < 16 or two_k % 2:
        raise CatalogError("omega_X needs an even dimension >= 16")
    if len(X) != 4:
        raise CatalogError("X has four coordinates")
    out = _pair_sum(two_k, lambda i, j: j - i)
    for c, l in zip(tuple(X) + (x5,), (11, 10, 9, 8, 7)):
        c = as_rational(c)
        if c:
            out = out + omega_2k(two_k, l) * c
    return out


CATALOG_FORMS = ("m0", "V", "g8", "g10")


def omega_catalog(name: str, n: int | None = None, alpha=None) -> Cochain:
    """The symplectic form listed for a graded catalog algebra."""
    if name == "m0":
        if n is None or n % 2:
            raise CatalogError("m0 form needs an even dimension")
        return _pair_sum(n, lambda i, j: (-1) ** (i + 1))
    if name == "V":
        if n is None or n % 2:
            raise CatalogError("V form needs an even dimension")
        return _pair_sum(n, lambda i, j: j - i)
    if name == "g8":
        a = as_rational(alpha)
        if a in G8_EXCLUDED:
            raise CatalogError("g8 is not defined for alpha = %s" % a)
        den = 2 * a + 5
        return two_form(8, {(1, 8): 1, (2, 7): (2 * a * a + 3 * a - 2) / den,
                            (3, 6): (2 * a + 2) / den, (4, 5): 3 / den})
    if name == "g10":
        a = as_rational(alpha)
        if a in G10_EXCLUDED:
            raise CatalogError("g10 is not defined for alpha = %s" % a)
        s = a * a + 4 * a + 3
        den = 2 * s * (2 * a + 5)
        return two_form(10, {(1, 10): 1, (2, 9): (2 * a ** 3 + 2 * a * a + 3) / (2 * s),
                             (3, 8): (4 * a ** 3 + 8 * a * a - 8 * a - 21) / den,
                             (4, 7): 3 * (2 * a * a + 4 * a + 5) / den,
                             (5, 6): 3 * (4 * a + 1) / den})
    raise CatalogError("no catalog form named %r" % name)


# ---------------------------------------------------------------------------
# symplectic filtered deformations of V_2k


def gX(two_k: int, X: Sequence) -> LieAlgebra:
    """Filtered deformation of ``V_{2k}`` with coordinates ``X = (x1, x2, x3, x4)``.

    Correction targets come from weights: the coordinate ``x_i`` has weight
    ``2k - 11 + i``, so a correction in row ``i + j = s`` lands on
    ``e_{s + 2k - 11 + i}``.  Coefficients are those of
    ``x1 psi_{2k,10} + ... + x4 psi_{2k,7}``.
    """
    if two_k < 16 or two_k % 2:
        raise CatalogError("gX needs an even dimension >= 16")
    if len(X) != 4:
        raise CatalogError("X has four coordinates")
    n = two_k
    xs = [as_rational(x) for x in X]
    br = {k: dict(v) for k, v in V(n).brackets.items()}
    # row s = i + j: form whose coefficients multiply x_i at level p = s - 7
    for idx, x in enumerate(xs, start=1):
        if not x:
            continue
        l = 11 - idx
        j0 = n - l + 7
        forms = (g7(n),) + xi_forms(j0, n)
        for p in range(l - 6):
            target = j0 + p
            for (_, (a, b)), c in forms[p].terms.items():
                row = br.setdefault((a, b), {})
                row[target] = row.get(target, 0) + x * c
    g = LieAlgebra(n, br, (), FILTERED, "gX(%d;%s)" % (n, ",".join(str(x) for x in xs)))
    return _checked(g)
