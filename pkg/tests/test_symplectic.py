import random
from fractions import Fraction

import pytest

from filiform.catalog import (V, abelian, g8, g10, gX, heisenberg, m0, omega_catalog, omega_X,
                              psi)
from filiform.cohomology import TRIVIAL, Cochain, cohomology, two_form
from filiform.deformation import canonicalize, deform, extract_deformation
from filiform.liealg import BasisChange, apply_basis_change, is_filiform
from filiform.symplectic import (CERTIFIED_NONE, EXISTS, SymplecticError, central_extension,
                                 closed_two_forms, contact_check, extension_filiform_check,
                                 is_closed, is_symplectic, nondegenerate, symplectic_decision)

from _util import rand_nonzero, rand_rational


def test_m0_4_form():
    w = two_form(4, {(1, 4): 1, (2, 3): -1})
    assert is_closed(m0(4), w) and nondegenerate(m0(4), w)
    assert w == omega_catalog("m0", 4)


@pytest.mark.parametrize("n", range(6, 22, 2))
def test_v_forms(n):
    assert is_symplectic(V(n), omega_catalog("V", n))


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(1), Fraction(-1, 3), Fraction(7, 2)])
def test_g8_g10_forms(alpha):
    assert is_symplectic(g8(alpha), omega_catalog("g8", alpha=alpha))
    assert is_symplectic(g10(alpha), omega_catalog("g10", alpha=alpha))


def test_odd_dimension_is_degenerate():
    assert not nondegenerate(V(7), two_form(7, {(1, 7): 1, (2, 6): 1, (3, 5): 1}))
    with pytest.raises(SymplecticError):
        symplectic_decision(V(7))


def test_form_shape_checked():
    with pytest.raises(SymplecticError):
        is_closed(V(6), omega_catalog("V", 8))
    with pytest.raises(SymplecticError):
        is_closed(V(6), Cochain.dual(6, 1))


def test_decision_examples():
    d = symplectic_decision(gX(16, (0, 1, -2, Fraction(1, 3))))
    assert d.verdict == EXISTS and is_symplectic(gX(16, (0, 1, -2, Fraction(1, 3))), d.witness)
    g = deform(V(16), psi(16, 11))
    d = symplectic_decision(g)
    assert d.verdict == CERTIFIED_NONE and d.witness is None
    # independent confirmation of the certificate's regime
    assert cohomology(g, 2, TRIVIAL).total == 2
    assert symplectic_decision(abelian(4)).verdict == EXISTS


def test_decision_is_seed_deterministic():
    g = V(10)
    a, b = symplectic_decision(g, seed=5), symplectic_decision(g, seed=5)
    assert a == b


def test_certificate_never_fires_on_symplectic_catalog():
    algebras = [m0(n) for n in (4, 6, 8)] + [V(n) for n in (6, 8, 10, 12)]
    algebras += [g8(Fraction(3, 4)), g10(Fraction(2))]
    for g in algebras:
        d = symplectic_decision(g)
        assert d.verdict == EXISTS, g.name
        assert is_symplectic(g, d.witness)


def test_closed_two_forms_are_closed():
    for w in closed_two_forms(V(8)):
        assert is_closed(V(8), w)


def test_central_extension_examples():
    h = central_extension(abelian(2), two_form(2, {(1, 2): 1}))
    assert h.n == 3 and h.brackets == heisenberg().brackets
    z = central_extension(V(8), Cochain.zero(8, 2, TRIVIAL))
    assert not is_filiform(z)
    with pytest.raises(SymplecticError):
        central_extension(V(6), two_form(6, {(3, 4): 1}))


def test_extension_of_v_by_its_form_is_v_odd():
    n = 16
    h = central_extension(V(n), omega_X(n, (0, 0, 0, 0)))
    assert is_filiform(h)
    assert canonicalize(extract_deformation(h, V(n + 1)))[0].x == (0,) * 5


def test_extension_filiform_check_examples():
    assert extension_filiform_check(V(16), omega_X(16, (0, 1, 0, 0), 2))
    w = two_form(16, {(1, 4): 1})  # no e^i ∧ e^16 term
    assert not extension_filiform_check(V(16), w)


def test_extension_filiform_check_matches_is_filiform():
    rng = random.Random(41)
    g = V(16)
    z2 = closed_two_forms(g)
    for t in range(50):
        c = Cochain.zero(16, 2, TRIVIAL)
        for b in rng.sample(z2, 3):
            c = c + b * rng.randint(-2, 2)
        if t % 3 == 0:
            # drop all pairings with the center
            c = Cochain(16, 2, TRIVIAL, {k: v for k, v in c.terms.items() if k[1][1] != 16})
            if not is_closed(g, c):
                continue
        assert extension_filiform_check(g, c) == is_filiform(central_extension(g, c))


def test_contact_examples():
    assert contact_check(heisenberg(), Cochain.dual(3, 3))
    assert not contact_check(V(17), Cochain.dual(17, 1))
    with pytest.raises(SymplecticError):
        contact_check(V(16), Cochain.dual(16, 16))
    rng = random.Random(42)
    for _ in range(3):
        X = (Fraction(0),) + tuple(rand_rational(rng) for _ in range(3))
        h = central_extension(gX(16, X), omega_X(16, X, rand_rational(rng)))
        assert contact_check(h, Cochain.dual(17, 17))


@pytest.mark.parametrize("n", [16, 18, 20])
def test_omega_x_closed_and_nondegenerate(n):
    rng = random.Random(n)
    for t in range(4):
        X = (0, 0, 0, 0) if t == 0 else tuple(rand_rational(rng) for _ in range(4))
        x5 = 0 if t == 0 else rand_rational(rng)
        g = gX(n, X)
        assert is_symplectic(g, omega_X(n, X, x5))


def test_diagonal_scaling_symplecto_equivalence():
    # weights come from the 2k+1 extension; the pullback is Ω_X up to the
    # overall factor alpha^(2k+1), which rescales a symplectic form harmlessly
    rng = random.Random(43)
    n = 16
    for _ in range(5):
        a = rand_nonzero(rng, 3, 2)
        X = tuple(rand_rational(rng) for _ in range(4))
        x5 = rand_rational(rng)
        Y = tuple(a ** (n + 1 - 12 + i) * x for i, x in enumerate(X, 1))
        y5 = a ** (n + 1 - 12 + 5) * x5
        phi = BasisChange(n, tuple({i: a ** i} for i in range(1, n + 1)))
        assert apply_basis_change(gX(n, Y), phi).brackets == gX(n, X).brackets
        oy = omega_X(n, Y, y5)
        pulled = two_form(n, {idx: c * a ** (idx[0] + idx[1]) for (_, idx), c in oy.terms.items()})
        assert pulled == omega_X(n, X, x5) * a ** (n + 1)


def test_g8_at_minus_one_has_no_symplectic_form():
    # alpha = -1 is not excluded for g8, yet e^6, e^7, e^8 only ever pair with
    # e^1, e^2 in closed forms, so every closed 2-form has a kernel
    g = g8(Fraction(-1))
    assert not nondegenerate(g, omega_catalog("g8", alpha=-1))
    for b in closed_two_forms(g):
        for (_, (i, j)), _c in b.terms.items():
            if j >= 6:
                assert i in (1, 2)
    assert symplectic_decision(g).verdict != EXISTS
