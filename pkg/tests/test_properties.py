"""Seeded property checks, 100 cases each."""

import random
from fractions import Fraction

import pytest

from filiform.catalog import V, m0, psi_sum
from filiform.cohomology import ADJOINT, TRIVIAL, Cochain, differential
from filiform.deformation import _sign, deform, extract_cochain, nr_bracket
from filiform.exactla import SparseMatrix, rref

from _util import rand_cochain, rand_point

CASES = 100


def _graded(rng, g, q, coeff, k=4):
    """Random cochain, cut to one weight component."""
    while True:
        c = rand_cochain(rng, g.n, q, coeff, k)
        comps = c.components(g.weights)
        if comps:
            return comps[rng.choice(sorted(comps))]


def _degrees(rng):
    return rng.choice([(1, 1), (1, 2), (2, 1), (2, 2), (0, 2), (2, 0), (1, 3), (0, 1)])


def test_d_squared_vanishes():
    rng = random.Random(61)
    algebras = [V(7), V(8), m0(7)]
    for t in range(CASES):
        g = algebras[t % 3]
        q = rng.randint(0, 3)
        coeff = rng.choice((ADJOINT, TRIVIAL))
        c = rand_cochain(rng, g.n, q, coeff, 6)
        assert differential(g, differential(g, c)).is_zero()


def test_nr_super_antisymmetry():
    rng = random.Random(62)
    for _ in range(CASES):
        p, q = _degrees(rng)
        if p + q == 0:
            continue
        a, b = rand_cochain(rng, 6, p, ADJOINT, 4), rand_cochain(rng, 6, q, ADJOINT, 4)
        assert nr_bracket(a, b) == nr_bracket(b, a) * (-_sign((p - 1) * (q - 1)))


def test_nr_super_jacobi():
    rng = random.Random(63)
    for _ in range(CASES):
        p, q, r = rng.choice([(1, 1, 1), (1, 2, 2), (2, 2, 2), (2, 1, 2), (1, 2, 1), (2, 2, 1)])
        a, b, c = (rand_cochain(rng, 6, k, ADJOINT, 4) for k in (p, q, r))
        lhs = nr_bracket(a, nr_bracket(b, c))
        rhs = nr_bracket(nr_bracket(a, b), c) + nr_bracket(b, nr_bracket(a, c)) * _sign((p - 1) * (q - 1))
        assert lhs == rhs


def test_leibniz():
    # d[a, b] = (-1)^(q-1) [da, b] + [a, db]
    rng = random.Random(64)
    g = V(7)
    for _ in range(CASES):
        p, q = rng.choice([(1, 1), (1, 2), (2, 1), (2, 2), (0, 2), (2, 0), (0, 1), (1, 0)])
        a, b = rand_cochain(rng, 7, p, ADJOINT, 4), rand_cochain(rng, 7, q, ADJOINT, 4)
        lhs = differential(g, nr_bracket(a, b))
        rhs = nr_bracket(differential(g, a), b) * _sign(q - 1) + nr_bracket(a, differential(g, b))
        assert lhs == rhs


def test_differential_and_bracket_are_weight_additive():
    rng = random.Random(65)
    g = V(8)
    w = g.weights
    for _ in range(CASES):
        p, q = rng.choice([(1, 1), (1, 2), (2, 2), (0, 2)])
        a, b = _graded(rng, g, p, ADJOINT), _graded(rng, g, q, ADJOINT)
        ab = nr_bracket(a, b)
        assert ab.is_zero() or ab.weight(w) == a.weight(w) + b.weight(w)
        da = differential(g, a)
        assert da.is_zero() or da.weight(w) == a.weight(w)
        s, t = _graded(rng, g, 1, TRIVIAL), _graded(rng, g, 2, TRIVIAL)
        st = s.wedge(t)
        assert st.is_zero() or st.weight(w) == s.weight(w) + t.weight(w)


def test_deform_extract_inverse():
    rng = random.Random(66)
    for t in range(CASES):
        if t % 10 == 0:
            n = rng.choice((16, 17, 18))
            psi = psi_sum(n, rand_point(rng))
            g0 = V(n)
            assert extract_cochain(deform(g0, psi), g0) == psi
            continue
        g0 = V(8)
        c = _graded(rng, g0, 2, ADJOINT, 6)
        if c.weight(g0.weights) < 1:
            c = Cochain.zero(8, 2, ADJOINT)
        assert extract_cochain(deform(g0, c, check=False), g0) == c


@pytest.mark.parametrize("seed", [67])
def test_rref_idempotent(seed):
    rng = random.Random(seed)
    for _ in range(CASES):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        entries = {(i, j): Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                   for i in range(r) for j in range(c) if rng.random() < 0.5}
        rk, piv, red = rref(SparseMatrix(r, c, entries))
        rk2, piv2, red2 = rref(red)
        assert (rk2, piv2) == (rk, piv)
        assert red2.to_dense() == red.to_dense()
