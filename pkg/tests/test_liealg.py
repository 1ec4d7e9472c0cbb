import random
from fractions import Fraction

import pytest

from filiform.catalog import V, abelian, gX, heisenberg, m0, m1, m2
from filiform.liealg import (FILTERED, GRADED, PLAIN, BasisChange, Flag, LieAlgebra,
                             LieAlgebraError, apply_basis_change, associated_graded,
                             basis_tail_flag, bracket, center, center_vectors, e,
                             is_filiform, is_lie_algebra, jacobi_residual,
                             lower_central_series, nil_index, span, weight_flag)

from _util import rand_unitriangular


def test_bracket_examples():
    assert bracket(V(6), e(1), e(5)) == {6: 4}
    assert bracket(m1(8), e(2), e(7)) == {8: -1}
    assert bracket(V(6), e(5), e(1)) == {6: -4}


def test_bracket_alternating_on_random_vectors():
    rng = random.Random(1)
    g = V(9)
    for _ in range(20):
        x = {i: Fraction(rng.randint(-3, 3)) for i in range(1, 10)}
        assert not bracket(g, x, x)


def test_bracket_dimension_mismatch():
    with pytest.raises(LieAlgebraError):
        bracket(V(4), e(5), e(1))


def test_jacobi_examples():
    assert jacobi_residual(V(20)) == []
    assert jacobi_residual(m0(10)) == []
    assert jacobi_residual(gX(16, (1, 1, 1, 1))) == []


def test_jacobi_detects_failure():
    # [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=e2: the cyclic sum is -e3 - e3
    g = LieAlgebra(3, {(1, 2): {3: 1}, (1, 3): {1: 1}, (2, 3): {2: 1}})
    assert not is_lie_algebra(g)
    assert jacobi_residual(g) == [((1, 2, 3), {3: -2})]


def test_construction_invariants():
    with pytest.raises(LieAlgebraError):
        LieAlgebra(3, {(1, 2): {3: 1}, (2, 1): {3: 1}})
    with pytest.raises(LieAlgebraError):
        LieAlgebra(3, {(1, 2): {2: 1}}, (), GRADED)
    with pytest.raises(LieAlgebraError):
        LieAlgebra(4, {(1, 2): {2: 1}}, (), FILTERED)
    assert LieAlgebra(4, {(1, 2): {4: 1}}, (), FILTERED).flavor == FILTERED
    with pytest.raises(LieAlgebraError):
        LieAlgebra(3, {(1, 2): {7: 1}})
    # stored with i > j is normalized by antisymmetry
    g = LieAlgebra(3, {(2, 1): {3: 1}})
    assert g.brackets == {(1, 2): {3: -1}}


def test_lower_central_series():
    assert lower_central_series(m0(7)).dims == [7, 5, 4, 3, 2, 1, 0]
    assert lower_central_series(abelian(4)).dims == [4, 0]
    assert nil_index(V(12)) == 11


def test_is_filiform():
    assert is_filiform(V(12))
    assert not is_filiform(abelian(3))
    h = heisenberg()
    h_plus = LieAlgebra(4, h.brackets, (1, 1, 2, 1), GRADED, "H+R")
    assert not is_filiform(h_plus)


def test_center():
    assert center_vectors(V(9)) == [{9: 1}]
    assert center(abelian(3)).dim == 3
    assert center_vectors(m0(8)) == [{8: 1}]


def test_flag_validation():
    with pytest.raises(LieAlgebraError):
        Flag((span(3, [e(1)]), span(3, [e(1), e(2)])))
    with pytest.raises(LieAlgebraError):
        Flag((span(3, [e(1), e(2)]), span(3, [e(1)])), levels=(2, 2))


def test_associated_graded_examples():
    g = gX(16, (1, 2, 3, 4))
    assert associated_graded(g, basis_tail_flag(16)).brackets == V(16).brackets
    v = V(10)
    assert associated_graded(v, weight_flag(v)) == v
    for n in (6, 9, 12):
        gr = associated_graded(m2(n), lower_central_series(m2(n)))
        assert gr.brackets == m0(n).brackets
        # gr_C V_n keeps only [e1, ei] = (i-1)e_{i+1}; rescaling e_i by (i-2)! gives m0
        gr_v = associated_graded(V(n), lower_central_series(V(n)))
        assert gr_v.brackets == {(1, i): {i + 1: i - 1} for i in range(2, n)}


def test_associated_graded_rejects_incompatible():
    # [e1,e2]=e2 does not raise the filtration level
    g = LieAlgebra(2, {(1, 2): {2: 1}})
    with pytest.raises(LieAlgebraError):
        associated_graded(g, basis_tail_flag(2))


def test_basis_change_examples():
    v = V(10)
    assert apply_basis_change(v, BasisChange.identity(10)) == v
    assert apply_basis_change(v, BasisChange.diagonal(10, Fraction(-2, 3))) == v
    g = apply_basis_change(V(16), rand_unitriangular(random.Random(3), 16))
    assert g.flavor == FILTERED and is_lie_algebra(g)


def test_basis_change_validation():
    with pytest.raises(LieAlgebraError):
        BasisChange(2, ({1: 1, 2: 1}, {1: 1, 2: 1}))
    with pytest.raises(LieAlgebraError):
        BasisChange(2, ({1: 2}, {2: 2}))
    with pytest.raises(LieAlgebraError):
        apply_basis_change(V(4), BasisChange.identity(5))


def test_basis_change_inverse_round_trip():
    rng = random.Random(4)
    g = gX(16, (1, 0, 2, 0))
    for _ in range(5):
        phi = rand_unitriangular(rng, 16)
        phi = phi @ BasisChange.diagonal(16, Fraction(rng.choice([-2, 3, 5]), 1))
        assert (phi @ phi.inverse()).is_identity()
        assert apply_basis_change(apply_basis_change(g, phi), phi.inverse()) == g


def test_basis_change_composition_is_an_action():
    rng = random.Random(5)
    g = V(12)
    a, b = rand_unitriangular(rng, 12), rand_unitriangular(rng, 12)
    assert apply_basis_change(g, a @ b) == apply_basis_change(apply_basis_change(g, a), b)


def test_plain_flavor_accepts_anything():
    g = LieAlgebra(3, {(1, 2): {1: 1}}, (), PLAIN)
    assert g.flavor == PLAIN
