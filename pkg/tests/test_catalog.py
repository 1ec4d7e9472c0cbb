import random
from fractions import Fraction

import pytest

from filiform import catalog
from filiform.catalog import (CatalogError, V, g5, g7, g8, g10, g12, gX, m0, m1, m2,
                              omega_2k, omega_catalog, omega_proj, omega_X, poly, psi,
                              psi_sum, xi_forms)
from filiform.cohomology import ADJOINT, Cochain, differential, two_form
from filiform.liealg import FILTERED, GRADED, is_filiform, is_lie_algebra

from _util import rand_rational


def test_named_algebras():
    assert m0(4).brackets == {(1, 2): {3: 1}, (1, 3): {4: 1}}
    v6 = V(6).brackets
    assert v6[2, 3] == {5: 1} and v6[2, 4] == {6: 2} and v6[1, 5] == {6: 4}
    assert len(v6) == 6
    b = m2(6).brackets
    assert b[2, 3] == {5: 1} and b[2, 4] == {6: 1}
    assert m1(8).brackets[2, 7] == {8: -1}
    for g in (m0(9), m1(10), m2(9), V(12)):
        assert g.flavor == GRADED and is_lie_algebra(g) and is_filiform(g)
    assert m1(8).weights == (1, 1, 2, 3, 4, 5, 6, 7)


def test_bad_dimensions():
    with pytest.raises(CatalogError):
        m1(7)
    with pytest.raises(CatalogError):
        V(2)


def test_g8_g10():
    b = g8(1).brackets
    assert b[2, 3] == {5: 3} and b[2, 5] == {7: 2} and b[2, 6] == {8: 1} and b[3, 5] == {8: 1}
    with pytest.raises(CatalogError):
        g8(-2)
    for bad in (Fraction(-5, 2), Fraction(-1, 4), -1, -3):
        with pytest.raises(CatalogError):
            g10(bad)
    b = g10(0).brackets
    # denominators 2a+5 = 5 at a = 0
    assert b[2, 7] == {9: Fraction(-2, 5)} and b[3, 6] == {9: Fraction(2, 5)}
    assert b[4, 5] == {9: Fraction(3, 5)}


def test_g10_irrational_exclusions_have_no_rational_root():
    # rational root test: candidates p/q with p | 3, q | 2 and p | 21, q | 4
    for coeffs, cands in (((2, 2, 0, 3), (1, 3)), ((4, 8, -8, -21), (1, 3, 7, 21))):
        for p in cands:
            for q in (1, 2, 4):
                for a in (Fraction(p, q), Fraction(-p, q)):
                    assert sum(c * a ** (3 - k) for k, c in enumerate(coeffs)) != 0


def test_gx_examples():
    assert gX(16, (0, 0, 0, 0)).brackets == V(16).brackets
    g = gX(16, (0, 0, 0, 1))
    assert g.brackets[2, 5] == {7: 3, 16: 1}
    assert g.brackets[3, 4] == {7: 1, 16: -3}
    changed = {k for k in g.brackets if g.brackets[k] != V(16).brackets.get(k)}
    assert changed == {(2, 5), (3, 4)}
    g = gX(16, (1, 0, 0, 0))
    assert g.brackets[2, 6][14] == 6
    assert g.flavor == FILTERED
    with pytest.raises(CatalogError):
        gX(15, (0, 0, 0, 0))


def test_poly_examples():
    assert poly("P1", 2) == Fraction(5, 21)
    assert poly("Q1", 2) == Fraction(3, 28)
    assert poly("P3", 2) == Fraction(-13, 21)
    assert poly("P2", 2) == Fraction(-4, 21)


def test_z2_linear_coefficient():
    # the closedness of psi fixes the binom(j+2, 1) coefficient of Z2 to +59/99
    c = catalog._c
    for j in range(2, 13):
        expect = (Fraction(17, 154) * c(j + 2, 4) - Fraction(62, 231) * c(j + 2, 3)
                  - Fraction(53, 1386) * c(j + 2, 2) + Fraction(59, 99) * c(j + 2, 1)
                  - Fraction(37, 33))
        assert poly("Z2", j) == expect


def test_xi_forms_examples():
    x1, x2, x3, x4 = xi_forms(2)
    assert x1 == two_form(9, {(2, 6): Fraction(1, 2), (3, 5): -1})
    assert x2 == two_form(9, {(2, 7): Fraction(5, 21), (3, 6): Fraction(-4, 21),
                              (4, 5): Fraction(-13, 21)})
    w = tuple(range(1, 10))
    assert [x.weight(w) for x in (x1, x2, x3, x4)] == [8, 9, 10, 11]
    assert all(1 not in idx for x in (x1, x2, x3, x4) for _, idx in x.terms)


def test_psi_examples():
    assert psi(16, 7) == g7(16).tensor({16: 1})
    assert psi(16, 8) == g7(16).tensor({15: 1}) + two_form(16, {(2, 6): 1, (3, 5): -2}).tensor({16: 7})
    with pytest.raises(CatalogError):
        psi(16, 6)


def test_psi_closed_and_supported():
    for n in range(12, 21):
        v = V(n)
        for l in catalog.PSI_LEVELS:
            p = psi(n, l)
            assert differential(v, p).is_zero()
            assert p.weight(v.weights) == n - l
            assert all(n - 4 <= t <= n and 2 <= i and j <= 9 for t, (i, j) in p.terms)


def test_forms_examples():
    assert omega_catalog("m0", 4) == two_form(4, {(1, 4): 1, (2, 3): -1})
    assert omega_catalog("V", 6) == two_form(6, {(1, 6): 5, (2, 5): 3, (3, 4): 1})
    assert omega_2k(16, 8) == two_form(16, {(2, 6): Fraction(15, 2), (3, 5): -15})
    assert omega_proj(6, 7) == two_form(6, {(1, 6): 5, (2, 5): 3, (3, 4): 1})
    assert all(1 not in idx for _, idx in omega_proj(12, 14).terms)
    assert all(min(idx) > 2 for _, idx in omega_proj(12, 15).terms)
    assert g12()[0, (3, 4, 5)] == 20
    with pytest.raises(CatalogError):
        omega_catalog("nope", 4)
    with pytest.raises(CatalogError):
        omega_proj(12, 17)


def test_omega_proj_differentials():
    for n in range(12, 21):
        v = V(n)
        o1, o2, o3 = (omega_proj(n, n + k) for k in (1, 2, 3))
        e1, e2 = Cochain.dual(n, 1), Cochain.dual(n, 2)
        assert differential(v, o1).is_zero()
        assert differential(v, o2) == e1.wedge(o1) * n
        assert differential(v, o3) == e1.wedge(o2) * (n + 1) + e2.wedge(o1) * (n - 1)


def test_g5_g7_closed():
    for n in (12, 16):
        assert differential(V(n), g5(n)).is_zero()
        assert differential(V(n), g7(n)).is_zero()


def test_psi_sum_linear():
    rng = random.Random(7)
    x = tuple(rand_rational(rng) for _ in range(5))
    expect = Cochain.zero(16, 2, ADJOINT)
    for i, c in enumerate(x, start=1):
        expect = expect + psi(16, 12 - i) * c
    assert psi_sum(16, x) == expect


def test_omega_x_closed_nondegenerate_samples():
    from filiform.symplectic import is_closed, nondegenerate

    rng = random.Random(8)
    for two_k in (16, 18, 20):
        for _ in range(3):
            x = tuple(rand_rational(rng) for _ in range(4))
            x5 = rand_rational(rng)
            g, w = gX(two_k, x), omega_X(two_k, x, x5)
            assert is_closed(g, w) and nondegenerate(g, w)
    assert nondegenerate(V(16), omega_X(16, (0, 0, 0, 0), 0))
