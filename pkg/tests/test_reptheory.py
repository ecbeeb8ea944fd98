from __future__ import annotations

import pytest

from polyvf.derlie import Derivation, euler
from polyvf.graded import (
    GradedComponent,
    coords_of,
    dim_W,
    from_coords,
    full_space,
    int_coords,
    submodule_M,
    submodule_N,
)
from polyvf.linalg import Subspace
from polyvf.polyring import Polynomial
from polyvf.reptheory import (
    Isomorphism,
    ModuleRef,
    NotAnEigenvectorError,
    NotInvariantError,
    Verdict,
    act,
    action_matrix,
    certify_irreducible,
    classify_isomorphism,
    expected_weights,
    gl_generators,
    has_triangular_shape,
    is_invariant,
    maximal_vectors,
    raising_operators,
    submodule_closure,
    weight_of,
)


def test_generators():
    assert len(gl_generators(3)) == 9
    assert len(raising_operators(3)) == 3
    assert len(raising_operators(4)) == 6


def test_action_example():
    # x1 d2 acting on x2 d1 gives x1 d1 - x2 d2
    g = Derivation.linear(2, 1, 2)
    v = int_coords(Derivation.linear(2, 2, 1), 0)
    x1, x2 = Polynomial.variable(2, 1), Polynomial.variable(2, 2)
    assert act(g, 2, 0, v) == int_coords(Derivation([x1, -x2]), 0)


def test_action_matrix_rejects_non_linear_fields():
    with pytest.raises(ValueError):
        action_matrix(Derivation.partial(2, 1), 2, 0)


def test_weight_example():
    D = Derivation.monomial_field((2, 0), 2)
    w = weight_of(GradedComponent(2, 1, coords_of(D, 1)))
    assert w.cartan == (3,) and w.euler_scalar == 1


def test_weight_of_non_eigenvector():
    D = Derivation.monomial_field((1, 0), 1) + Derivation.monomial_field((0, 1), 1)
    with pytest.raises(NotAnEigenvectorError):
        weight_of(GradedComponent(2, 0, coords_of(D, 0)))


def test_maximal_vectors_in_degree_zero():
    S = maximal_vectors(3, 0, within=submodule_M(3, 0))
    assert S == Subspace.span([coords_of(Derivation.linear(3, 1, 3), 0)], dim_W(3, 0))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_maximal_vectors_and_weights(n):
    x1 = Polynomial.variable(n, 1)
    for m in range(0, 4):
        assert maximal_vectors(n, m).dim == 2
        hM = maximal_vectors(n, m, within=submodule_M(n, m))
        hN = maximal_vectors(n, m, within=submodule_N(n, m))
        assert hM.dim == hN.dim == 1
        top_M = [0] * n
        top_M[0] = m + 1
        assert hM == Subspace.span([coords_of(Derivation.monomial_field(top_M, n), m)], dim_W(n, m))
        assert hN == Subspace.span([coords_of(euler(n) * x1 ** m, m)], dim_W(n, m))
        l1, l2 = expected_weights(n, m)
        assert weight_of(GradedComponent(n, m, hN.basis[0])) == l1
        assert weight_of(GradedComponent(n, m, hM.basis[0])) == l2
        for v in maximal_vectors(n, m).basis:
            assert has_triangular_shape(from_coords(GradedComponent(n, m, v)), m)


def test_triangular_shape_detects_violations():
    assert not has_triangular_shape(Derivation.monomial_field((1, 1, 0), 1), 1)
    assert not has_triangular_shape(Derivation.monomial_field((0, 1, 1), 2), 1)
    assert has_triangular_shape(Derivation.monomial_field((1, 1, 0), 2), 1)


def test_submodule_closure_of_single_vector():
    assert submodule_closure(3, 2, [coords_of(Derivation.monomial_field((3, 0, 0), 2), 2)]).dim == 24
    assert submodule_closure(2, 1, [coords_of(euler(2) * Polynomial.variable(2, 2), 1)]) == submodule_N(2, 1)


def test_certificates():
    assert certify_irreducible(3, 1, submodule_M(3, 1)).verdict is Verdict.IRREDUCIBLE
    assert certify_irreducible(3, 1, submodule_N(3, 1)).verdict is Verdict.IRREDUCIBLE
    c = certify_irreducible(3, 1, full_space(3, 1))
    assert c.verdict is Verdict.INCONCLUSIVE and c.hw_dimension == 2
    line = Subspace.span([coords_of(Derivation.linear(2, 1, 2), 0)], 4)
    assert not is_invariant(2, 0, line)
    with pytest.raises(NotInvariantError):
        certify_irreducible(2, 0, line)


def test_isomorphism_examples():
    assert classify_isomorphism(ModuleRef("M", 1, 2), ModuleRef("N", 3, 2)) is Isomorphism.ISO_SL_ONLY
    assert classify_isomorphism(ModuleRef("M", 1, 3), ModuleRef("N", 3, 3)) is Isomorphism.NON_ISO
    assert classify_isomorphism(ModuleRef("M", 2, 2), ModuleRef("M", 2, 2)) is Isomorphism.ISO_SL_AND_GL
    assert classify_isomorphism(ModuleRef("N", 1, 2), ModuleRef("N", 2, 2)) is Isomorphism.NON_ISO
    with pytest.raises(ValueError):
        ModuleRef("W", 0, 2)
