"""Brackets between graded pieces and their M/N parts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .graded import ambient_dim, bracket_coords, full_space, submodule_M, submodule_N
from .linalg import Echelon, Subspace

ZERO = "zero"
EQUALS_M = "equals_M"
EQUALS_N = "equals_N"
EQUALS_W = "equals_W"
OTHER = "other_subspace"


@dataclass(frozen=True)
class ProductReport:
    n: int
    i: int
    j: int
    left: str
    right: str
    result_dim: int
    classification: str
    expected: str

    @property
    def matches(self) -> bool:
        return self.classification == self.expected

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "i": self.i,
            "j": self.j,
            "left": self.left,
            "right": self.right,
            "result_dim": self.result_dim,
            "classification": self.classification,
            "expected": self.expected,
            "matches": self.matches,
        }


def bracket_span(n: int, i: int, A: Subspace, j: int, B: Subspace) -> Subspace:
    """Span of [a, b] over basis vectors a of A (in W^[i]) and b of B (in W^[j])."""
    if A.ambient_dim != ambient_dim(n, i) or B.ambient_dim != ambient_dim(n, j):
        raise ValueError("subspaces do not live in the stated graded components")
    t = i + j
    ech = Echelon(ambient_dim(n, t))
    if t < -1 or not A.dim or not B.dim:
        return Subspace.from_echelon(ech)
    Bi = B.int_basis()
    for u in A.int_basis():
        for v in Bi:
            if ech.is_full():
                return Subspace.from_echelon(ech)
            w = bracket_coords(n, i, u, j, v)
            if w:
                ech.insert(w)
    return Subspace.from_echelon(ech)


def classify(n: int, t: int, S: Subspace) -> str:
    if S.dim == 0:
        return ZERO
    if t >= 0:
        if S == submodule_M(n, t):
            return EQUALS_M
        if S == submodule_N(n, t):
            return EQUALS_N
    if t >= -1 and S == full_space(n, t):
        return EQUALS_W
    return OTHER


def _piece(kind: str, n: int, d: int) -> Subspace:
    if kind == "W":
        return full_space(n, d)
    return submodule_M(n, d) if kind == "M" else submodule_N(n, d)


def expected_class(left: str, i: int, right: str, j: int) -> str:
    """The product table for [X_i, Y_j]."""
    t = i + j
    if left == "W" and right == "W":
        if t < -1:
            return ZERO
        if i == j == 0:
            return EQUALS_M
        return EQUALS_W
    if left == "M" and right == "M":
        return EQUALS_M
    if left == "N" and right == "N":
        return ZERO if i == j else EQUALS_N
    if left == "M" and right == "N":
        if i == j == 0:
            return ZERO
        if i == 0:
            return EQUALS_N
        if j == 0:
            return EQUALS_M
        return EQUALS_W
    if left == "W" and i == -1 and right == "N":
        return EQUALS_W
    if left == "W" and i == -1 and right == "M":
        # divergence-free fields stay divergence-free under d/dx_k
        return EQUALS_W if j == 0 else EQUALS_M
    raise ValueError(f"no table entry for [{left}_{i}, {right}_{j}]")


def _cases(max_degree: int) -> List[Tuple[str, int, str, int]]:
    cases = []
    for i in range(-1, max_degree + 2):
        for j in range(i, max_degree + 2):
            if i + j <= max_degree:
                cases.append(("W", i, "W", j))
    for i in range(0, max_degree + 1):
        for j in range(i, max_degree + 1):
            if i + j <= max_degree:
                cases.append(("M", i, "M", j))
                cases.append(("N", i, "N", j))
    for i in range(0, max_degree + 1):
        for j in range(0, max_degree + 1 - i):
            cases.append(("M", i, "N", j))
    for j in range(0, max_degree + 2):
        cases.append(("W", -1, "N", j))
        cases.append(("W", -1, "M", j))
    return cases


def product_report(n: int, left: str, i: int, right: str, j: int) -> ProductReport:
    S = bracket_span(n, i, _piece(left, n, i), j, _piece(right, n, j))
    return ProductReport(
        n=n,
        i=i,
        j=j,
        left=f"{left}{i}",
        right=f"{right}{j}",
        result_dim=S.dim,
        classification=classify(n, i + j, S),
        expected=expected_class(left, i, right, j),
    )


def verify_products(n: int, max_degree: int) -> List[ProductReport]:
    """Classify every product with target degree at most max_degree."""
    if n < 2 or max_degree < 1:
        raise ValueError("need n >= 2 and max_degree >= 1")
    reports = [product_report(n, *case) for case in _cases(max_degree)]
    reports.sort(key=lambda r: (r.i, r.j, r.left, r.right))
    return reports
