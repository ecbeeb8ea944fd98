"""gl_n action on W^[m]: highest-weight vectors, weights, submodules.

The Borel subalgebra is the upper-triangular one: raising operators are
x_a d/dx_b with a < b and the Cartan basis is h_a = x_a d/dx_a - x_n d/dx_n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .derlie import Derivation, bracket, euler
from .graded import (
    GradedComponent,
    basis,
    coords_of,
    dim_W,
    from_coords,
    submodule_M,
    submodule_N,
)
from .linalg import Echelon, IntVec, Matrix, Subspace, primitive, to_int_vector


class NotInvariantError(ValueError):
    """The subspace is not stable under the degree-0 action."""


class NotAnEigenvectorError(ValueError):
    def __init__(self, alpha: int | str, message: str):
        super().__init__(message)
        self.alpha = alpha


class NormalFormViolation(AssertionError):
    """A computed maximal vector does not have the expected triangular shape."""


@dataclass(frozen=True)
class ActionOperator:
    generator: Derivation
    n: int
    m: int
    matrix: Matrix

    def apply(self, v: Sequence) -> Tuple[Fraction, ...]:
        return self.matrix.apply(v)


@dataclass(frozen=True)
class WeightVector:
    cartan: Tuple[int, ...]
    euler_scalar: int

    def as_dict(self) -> dict:
        return {"cartan": list(self.cartan), "euler_scalar": self.euler_scalar}


class Verdict(str, enum.Enum):
    IRREDUCIBLE = "irreducible"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class IrreducibilityCertificate:
    subspace: Subspace
    hw_dimension: int
    hw_vectors: Tuple[GradedComponent, ...]
    verdict: Verdict


class Isomorphism(str, enum.Enum):
    ISO_SL_AND_GL = "iso_sl_and_gl"
    ISO_SL_ONLY = "iso_sl_only"
    NON_ISO = "non_iso"


@dataclass(frozen=True)
class ModuleRef:
    """One of the irreducible pieces M_i or N_i of W^[i] in n variables."""

    family: str
    degree: int
    n: int

    def __post_init__(self):
        if self.family not in ("M", "N"):
            raise ValueError("family must be 'M' or 'N'")
        if self.degree < 0 or self.n < 2:
            raise ValueError("need degree >= 0 and n >= 2")

    def subspace(self) -> Subspace:
        fn = submodule_M if self.family == "M" else submodule_N
        return fn(self.n, self.degree)

    def __str__(self):
        return f"{self.family}_{self.degree}"


# generators of the degree-0 component

def gl_generators(n: int) -> List[Derivation]:
    return [Derivation.linear(n, a, b) for a in range(1, n + 1) for b in range(1, n + 1)]


def raising_operators(n: int) -> List[Derivation]:
    return [Derivation.linear(n, a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]


def cartan_element(n: int, alpha: int) -> Derivation:
    return Derivation.linear(n, alpha, alpha) - Derivation.linear(n, n, n)


# action matrices

@lru_cache(maxsize=None)
def _action_columns(g: Derivation, n: int, m: int) -> Tuple[IntVec, ...]:
    # sparse integer columns
    cols = []
    for e in basis(n, m).elements:
        col = {}
        for k, x in enumerate(coords_of(bracket(g, e), m)):
            if x:
                if x.denominator != 1:
                    raise ValueError("generator must have integer coefficients")
                col[k] = int(x)
        cols.append(col)
    return tuple(cols)


def _check_degree_zero(g: Derivation, n: int) -> None:
    if g.n != n:
        raise ValueError(f"generator lives in {g.n} variables, expected {n}")
    if not g.is_zero() and g.degree() != 0:
        raise ValueError("generator must be a linear vector field (degree 0)")


def action_matrix(g: Derivation, n: int, m: int) -> ActionOperator:
    _check_degree_zero(g, n)
    N = dim_W(n, m)
    cols = _action_columns(g, n, m)
    rows = [[Fraction(0)] * N for _ in range(N)]
    for k, col in enumerate(cols):
        for r, x in col.items():
            rows[r][k] = x
    return ActionOperator(g, n, m, Matrix(rows, N))


def act(g: Derivation, n: int, m: int, v: IntVec) -> IntVec:
    """Apply ad(g) to a sparse coordinate vector of W^[m]."""
    _check_degree_zero(g, n)
    cols = _action_columns(g, n, m)
    acc: Dict[int, int] = {}
    for k, x in v.items():
        for r, y in cols[k].items():
            acc[r] = acc.get(r, 0) + x * y
    return {r: x for r, x in acc.items() if x}


# highest-weight vectors

def has_triangular_shape(D: Derivation, m: int) -> bool:
    """The d/dx_1 coefficient is c*x1^(m+1); for i >= 2 the d/dx_i coefficient
    involves x1 and x_i only."""
    n = D.n
    top = (m + 1,) + (0,) * (n - 1)
    if any(mono != top for mono in D.coeffs[0].terms):
        return False
    for i in range(2, n + 1):
        for mono in D.coeffs[i - 1].terms:
            if any(e for k, e in enumerate(mono, start=1) if k not in (1, i)):
                return False
    return True


def maximal_vectors(n: int, m: int, within: Subspace | None = None) -> Subspace:
    if n < 2 or m < 0:
        raise ValueError("need n >= 2 and m >= 0")
    N = dim_W(n, m)
    if within is not None and within.ambient_dim != N:
        raise ValueError("subspace does not live in W^[m]")
    ops = raising_operators(n)
    if within is None:
        # joint kernel: rows of the stacked operators
        ech = Echelon(N)
        for g in ops:
            rows: Dict[int, Dict[int, int]] = {}
            for k, col in enumerate(_action_columns(g, n, m)):
                for r, x in col.items():
                    rows.setdefault(r, {})[k] = x
            for row in rows.values():
                ech.insert(row)
        result = _kernel(ech)
    else:
        B = within.int_basis()
        # unknowns: coefficients c_k of sum c_k B_k; equations: each op * that = 0
        ech = Echelon(len(B))
        for g in ops:
            images = [act(g, n, m, b) for b in B]
            rows: Dict[int, Dict[int, int]] = {}
            for k, img in enumerate(images):
                for r, x in img.items():
                    rows.setdefault(r, {})[k] = x
            for row in rows.values():
                ech.insert(primitive(row))
        coeffs = _kernel(ech)
        out = Echelon(N)
        for c in coeffs.int_basis():
            acc: Dict[int, int] = {}
            for k, x in c.items():
                for r, y in B[k].items():
                    acc[r] = acc.get(r, 0) + x * y
            out.insert({r: x for r, x in acc.items() if x})
        result = Subspace.from_echelon(out)
    for v in result.basis:
        D = from_coords(GradedComponent(n, m, v))
        if not has_triangular_shape(D, m):
            raise NormalFormViolation(f"maximal vector {D} has unexpected shape")
    return result


def _kernel(ech: Echelon) -> Subspace:
    return Subspace.from_echelon(Echelon(ech.dim, ech.kernel_vectors()))


def _eigenvalue(g: Derivation, n: int, m: int, v: IntVec, label) -> Fraction:
    img = act(g, n, m, v)
    k0 = min(v)
    lam = Fraction(img.get(k0, 0), v[k0])
    for k in set(v) | set(img):
        if img.get(k, 0) != lam * v.get(k, 0):
            raise NotAnEigenvectorError(label, f"not an eigenvector of {g} (alpha={label})")
    return lam


def weight_of(v: GradedComponent) -> WeightVector:
    n, m = v.n, v.m
    iv = to_int_vector(v.coords)
    if not iv:
        raise NotAnEigenvectorError("zero", "the zero vector has no weight")
    cartan = []
    for alpha in range(1, n):
        lam = _eigenvalue(cartan_element(n, alpha), n, m, iv, alpha)
        if lam.denominator != 1:
            raise NotAnEigenvectorError(alpha, "non-integral eigenvalue")
        cartan.append(int(lam))
    e = _eigenvalue(euler(n), n, m, iv, "euler")
    return WeightVector(tuple(cartan), int(e))


# submodules

def submodule_closure(n: int, m: int, seeds: Sequence[GradedComponent | Sequence]) -> Subspace:
    N = dim_W(n, m)
    gens = gl_generators(n)
    ech = Echelon(N)
    work: List[IntVec] = []
    for s in seeds:
        coords = s.coords if isinstance(s, GradedComponent) else tuple(s)
        if len(coords) != N:
            raise ValueError("seed does not live in W^[m]")
        iv = to_int_vector(coords)
        if ech.insert(iv):
            work.append(iv)
    while work and not ech.is_full():
        v = work.pop()
        for g in gens:
            w = act(g, n, m, v)
            w = primitive(w) if w else w
            if w and ech.insert(w):
                work.append(w)
    return Subspace.from_echelon(ech)


def is_invariant(n: int, m: int, S: Subspace) -> bool:
    ech = S.echelon()
    for b in S.int_basis():
        for g in gl_generators(n):
            w = act(g, n, m, b)
            if w and not ech.contains(primitive(w)):
                return False
    return True


def certify_irreducible(n: int, m: int, S: Subspace) -> IrreducibilityCertificate:
    if S.ambient_dim != dim_W(n, m):
        raise ValueError("subspace does not live in W^[m]")
    if not is_invariant(n, m, S):
        raise NotInvariantError("subspace is not invariant under the linear vector fields")
    hw = maximal_vectors(n, m, within=S)
    vecs = tuple(GradedComponent(n, m, b) for b in hw.basis)
    verdict = Verdict.IRREDUCIBLE if hw.dim == 1 else Verdict.INCONCLUSIVE
    return IrreducibilityCertificate(S, hw.dim, vecs, verdict)


def highest_weight(ref: ModuleRef) -> WeightVector:
    hw = maximal_vectors(ref.n, ref.degree, within=ref.subspace())
    if hw.dim != 1:
        raise ValueError(f"{ref} has {hw.dim} independent maximal vectors")
    return weight_of(GradedComponent(ref.n, ref.degree, hw.basis[0]))


def classify_isomorphism(A: ModuleRef, B: ModuleRef) -> Isomorphism:
    if A.n != B.n:
        raise ValueError("modules over different n cannot be compared")
    wa, wb = highest_weight(A), highest_weight(B)
    if wa.cartan != wb.cartan:
        return Isomorphism.NON_ISO
    if wa.euler_scalar != wb.euler_scalar:
        return Isomorphism.ISO_SL_ONLY
    return Isomorphism.ISO_SL_AND_GL


def expected_weights(n: int, m: int) -> Tuple[WeightVector, WeightVector]:
    """Closed-form weights of x1^m E_n and x1^(m+1) d/dx_n."""
    l1 = tuple(m if a == 1 else 0 for a in range(1, n))
    l2 = tuple(1 + (m + 1) * (a == 1) for a in range(1, n))
    return WeightVector(l1, m), WeightVector(l2, m)
