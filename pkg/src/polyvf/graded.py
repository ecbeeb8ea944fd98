"""Homogeneous components W^[m] of the vector-field algebra in coordinates.

The canonical basis of W^[m] is x^J d/dx_i with |J| = m+1, ordered by i
ascending and then J descending in graded-lex.  All downstream matrices use
these coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Sequence, Tuple

from .derlie import Derivation, HomogeneousDerivation, divergence, euler
from .linalg import (
    Echelon,
    IntVec,
    Matrix,
    Subspace,
    nullspace,
    to_int_vector,
)
from .polyring import Monomial, Polynomial, monomials_of_degree


def _check_nm(n: int, m: int, min_m: int = -1) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if m < min_m:
        raise ValueError(f"degree must be >= {min_m}, got {m}")


@dataclass(frozen=True)
class GradedBasis:
    n: int
    m: int
    keys: Tuple[Tuple[int, Monomial], ...]  # (i, J) per position

    @property
    def elements(self) -> Tuple[HomogeneousDerivation, ...]:
        return _basis_elements(self.n, self.m)

    def index(self, i: int, mono: Monomial) -> int:
        return _basis_index(self.n, self.m)[(i, tuple(mono))]

    def __len__(self) -> int:
        return len(self.keys)

    def labels(self) -> List[str]:
        return [str(e) for e in self.elements]


@dataclass(frozen=True)
class GradedComponent:
    n: int
    m: int
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != dim_W(self.n, self.m):
            raise ValueError(
                f"expected {dim_W(self.n, self.m)} coordinates, got {len(self.coords)}"
            )
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def to_derivation(self) -> HomogeneousDerivation:
        return from_coords(self)

    def is_zero(self) -> bool:
        return not any(self.coords)


@lru_cache(maxsize=None)
def basis(n: int, m: int) -> GradedBasis:
    _check_nm(n, m)
    monos = monomials_of_degree(n, m + 1)
    return GradedBasis(n, m, tuple((i, J) for i in range(1, n + 1) for J in monos))


@lru_cache(maxsize=None)
def _basis_elements(n: int, m: int) -> Tuple[HomogeneousDerivation, ...]:
    return tuple(
        HomogeneousDerivation.of(Derivation.monomial_field(J, i), m)
        for i, J in basis(n, m).keys
    )


@lru_cache(maxsize=None)
def _basis_index(n: int, m: int) -> Dict[Tuple[int, Monomial], int]:
    return {key: k for k, key in enumerate(basis(n, m).keys)}


# closed-form dimensions

def dim_W(n: int, i: int) -> int:
    _check_nm(n, i)
    return n * comb(n + i, i + 1)


def dim_N(n: int, i: int) -> int:
    _check_nm(n, i, 0)
    return comb(n + i - 1, i)


def dim_M(n: int, i: int) -> int:
    _check_nm(n, i, 0)
    num = (n + i + 1) * factorial(n + i - 1)
    den = factorial(i + 1) * factorial(n - 2)
    q, r = divmod(num, den)
    assert r == 0
    return q


# coordinates

def to_coords(D: Derivation, m: int | None = None) -> GradedComponent:
    if m is None:
        if isinstance(D, HomogeneousDerivation):
            m = D.deg
        else:
            m = D.degree()
            if m is None:
                if D.is_zero():
                    raise ValueError("degree of the zero derivation must be given")
                raise ValueError("derivation is not homogeneous")
    idx = _basis_index(D.n, m)
    coords = [Fraction(0)] * len(idx)
    for i, mono, c in D.terms():
        try:
            coords[idx[(i, mono)]] = c
        except KeyError:
            raise ValueError(f"term of {D} is not of degree {m}") from None
    return GradedComponent(D.n, m, tuple(coords))


def from_coords(c: GradedComponent) -> HomogeneousDerivation:
    n = c.n
    keys = basis(n, c.m).keys
    if len(c.coords) != len(keys):
        raise ValueError("coordinate length mismatch")
    terms: List[dict] = [dict() for _ in range(n)]
    for (i, J), a in zip(keys, c.coords):
        if a:
            terms[i - 1][J] = a
    return HomogeneousDerivation([Polynomial(n, t) for t in terms], c.m)


def coords_of(D: Derivation, m: int) -> Tuple[Fraction, ...]:
    return to_coords(D, m).coords


# M/N decomposition

def _degree_of(D: Derivation) -> int:
    if isinstance(D, HomogeneousDerivation):
        return D.deg
    m = D.degree()
    if m is None:
        raise ValueError("a homogeneous derivation is required")
    return m


def project_N(D: Derivation, m: int | None = None) -> HomogeneousDerivation:
    """Euler part f*E_n of D, with f = Div(D)/(m+n)."""
    n = D.n
    if m is None:
        m = 0 if D.is_zero() else _degree_of(D)
    _check_nm(n, m, 0)
    f = divergence(D).scale(Fraction(1, m + n))
    return HomogeneousDerivation.of(euler(n) * f, m)


def project_M(D: Derivation, m: int | None = None) -> HomogeneousDerivation:
    if m is None:
        m = 0 if D.is_zero() else _degree_of(D)
    return HomogeneousDerivation.of(D - project_N(D, m), m)


@lru_cache(maxsize=None)
def divergence_matrix(n: int, m: int) -> Matrix:
    """Matrix of Div: W^[m] -> degree-m polynomials (rows: monomials in grlex)."""
    _check_nm(n, m)
    monos = monomials_of_degree(n, m)
    row_of = {mono: r for r, mono in enumerate(monos)}
    rows = [[0] * dim_W(n, m) for _ in monos]
    for k, (i, J) in enumerate(basis(n, m).keys):
        e = J[i - 1]
        if e:
            rows[row_of[J[: i - 1] + (e - 1,) + J[i:]]][k] = e
    return Matrix(rows, dim_W(n, m))


def euler_multiple_coords(n: int, f_mono: Monomial) -> IntVec:
    """Integer coordinates of x^f_mono * E_n."""
    m = sum(f_mono)
    idx = _basis_index(n, m)
    out = {}
    for i in range(1, n + 1):
        J = f_mono[: i - 1] + (f_mono[i - 1] + 1,) + f_mono[i:]
        out[idx[(i, J)]] = 1
    return out


@lru_cache(maxsize=None)
def submodule_M(n: int, m: int) -> Subspace:
    _check_nm(n, m, 0)
    return nullspace(divergence_matrix(n, m))


@lru_cache(maxsize=None)
def submodule_N(n: int, m: int) -> Subspace:
    _check_nm(n, m, 0)
    ech = Echelon(dim_W(n, m))
    for f in monomials_of_degree(n, m):
        ech.insert(euler_multiple_coords(n, f))
    return Subspace.from_echelon(ech)


@lru_cache(maxsize=None)
def full_space(n: int, m: int) -> Subspace:
    if m < -1:
        return Subspace.zero(0)
    return Subspace.full(dim_W(n, m))


def ambient_dim(n: int, m: int) -> int:
    return 0 if m < -1 else dim_W(n, m)


# structure constants of the bracket in monomial coordinates

@lru_cache(maxsize=None)
def bracket_table(n: int, i: int, j: int) -> Tuple[Tuple[Tuple[Tuple[int, int], ...], ...], ...]:
    """table[a][b] lists (index, integer coefficient) of [e_a, e_b] in W^[i+j].

    Uses [x^A d_p, x^B d_q] = B_p x^(A+B-e_p) d_q - A_q x^(A+B-e_q) d_p.
    """
    t = i + j
    keys_i = basis(n, i).keys
    keys_j = basis(n, j).keys
    if t < -1:
        return tuple(tuple(() for _ in keys_j) for _ in keys_i)
    idx = _basis_index(n, t)
    rows = []
    for p, A in keys_i:
        row = []
        for q, B in keys_j:
            acc: Dict[int, int] = {}
            S = [a + b for a, b in zip(A, B)]
            bp = B[p - 1]
            if bp:
                S2 = list(S)
                S2[p - 1] -= 1
                k = idx[(q, tuple(S2))]
                acc[k] = acc.get(k, 0) + bp
            aq = A[q - 1]
            if aq:
                S2 = list(S)
                S2[q - 1] -= 1
                k = idx[(p, tuple(S2))]
                acc[k] = acc.get(k, 0) - aq
            row.append(tuple((k, c) for k, c in sorted(acc.items()) if c))
        rows.append(tuple(row))
    return tuple(rows)


def bracket_coords(n: int, i: int, u: IntVec, j: int, v: IntVec) -> IntVec:
    """Bracket of two sparse integer coordinate vectors of W^[i] and W^[j]."""
    table = bracket_table(n, i, j)
    acc: Dict[int, int] = {}
    for a, x in u.items():
        row = table[a]
        for b, y in v.items():
            xy = x * y
            for k, c in row[b]:
                acc[k] = acc.get(k, 0) + xy * c
    return {k: c for k, c in acc.items() if c}


def int_coords(D: Derivation, m: int) -> IntVec:
    return to_int_vector(coords_of(D, m))
