from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from polyvf.derlie import Derivation, bracket, divergence, euler
from polyvf.graded import (
    GradedComponent,
    basis,
    bracket_coords,
    coords_of,
    dim_M,
    dim_N,
    dim_W,
    from_coords,
    int_coords,
    project_M,
    project_N,
    submodule_M,
    submodule_N,
    to_coords,
)
from polyvf.linalg import intersection, primitive, span_union
from polyvf.polyring import Polynomial
from polyvf.sampling import random_homogeneous

x1 = Polynomial.variable(2, 1)
x2 = Polynomial.variable(2, 2)


@pytest.mark.parametrize(
    "n, i, w, m, nn",
    [(2, 1, 6, 4, 2), (3, 0, 9, 8, 1), (3, 1, 18, 15, 3), (3, 2, 30, 24, 6), (2, -1, 2, None, None)],
)
def test_dimension_spot_values(n, i, w, m, nn):
    assert dim_W(n, i) == w == len(basis(n, i))
    if m is not None:
        assert dim_M(n, i) == m == submodule_M(n, i).dim
        assert dim_N(n, i) == nn == submodule_N(n, i).dim


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_dimension_identities(n):
    for i in range(0, 6):
        assert dim_M(n, i) + dim_N(n, i) == dim_W(n, i)
        assert dim_N(n, i) == comb(n + i - 1, i)


def test_basis_order():
    labels = basis(2, 0).labels()
    assert labels == ["x1 d1", "x2 d1", "x1 d2", "x2 d2"]
    assert basis(2, -1).labels() == ["d1", "d2"]
    assert basis(2, 1).index(2, (1, 1)) == 4


def test_coordinate_roundtrip(rng):
    for m in range(-1, 4):
        D = random_homogeneous(3, m, rng)
        c = to_coords(D)
        assert from_coords(c) == D
        assert coords_of(D, m) == c.coords


def test_inhomogeneous_input_rejected():
    with pytest.raises(ValueError):
        to_coords(Derivation([x1 + x1 ** 2, Polynomial.zero(2)]))


def test_component_length_checked():
    with pytest.raises(ValueError):
        GradedComponent(2, 0, (Fraction(1),))


def test_projection_example():
    D = Derivation([x1 ** 2, Polynomial.zero(2)])
    assert project_N(D) == euler(2) * (Fraction(2, 3) * x1)
    assert project_M(D) == Derivation([Fraction(1, 3) * x1 ** 2, Fraction(-2, 3) * x1 * x2])
    assert divergence(project_M(D)).is_zero()


def test_projections_on_random_fields(rng):
    for n in (2, 3):
        for m in range(0, 4):
            for _ in range(10):
                D = random_homogeneous(n, m, rng)
                pM, pN = project_M(D, m), project_N(D, m)
                assert pM + pN == D
                assert project_N(pN, m) == pN
                assert project_M(pM, m) == pM
                assert divergence(pM).is_zero()


@pytest.mark.parametrize("n", [2, 3])
def test_direct_sum(n):
    for m in range(0, 4):
        M, N = submodule_M(n, m), submodule_N(n, m)
        assert intersection(M, N).dim == 0
        assert span_union(M, N.basis).dim == dim_W(n, m)


def test_bracket_coords_matches_polynomial_bracket(rng):
    for n in (2, 3):
        for i in range(-1, 3):
            for j in range(-1, 3):
                A, B = random_homogeneous(n, i, rng), random_homogeneous(n, j, rng)
                got = bracket_coords(n, i, int_coords(A, i), j, int_coords(B, j))
                C = bracket(A, B)
                if C.is_zero():
                    assert not got
                else:
                    # both sides are positive multiples of the same vector
                    assert int_coords(C, i + j) == primitive(got)


def test_invalid_arguments():
    with pytest.raises(ValueError):
        dim_W(1, 0)
    with pytest.raises(ValueError):
        dim_M(2, -1)
