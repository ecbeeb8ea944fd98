"""Exact linear algebra over Q.

Everything public speaks ``Fraction``.  Internally rows are kept as sparse
primitive integer vectors (``{column: int}``) in reduced echelon form; this is
fraction-free Gauss-Jordan elimination and yields the same canonical RREF as
plain rational elimination, since the reduced row-echelon form of a matrix is
unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Sequence, Tuple

IntVec = Dict[int, int]
Vector = Tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    pass


def primitive(v: IntVec) -> IntVec:
    """Divide an integer vector by the gcd of its entries."""
    return _primitive({k: int(x) for k, x in v.items() if x}) if v else {}


def _primitive(v: IntVec) -> IntVec:
    g = gcd(*v.values())
    if g != 1:
        v = {k: x // g for k, x in v.items()}
    return v


def to_int_vector(v: Sequence) -> IntVec:
    """Sparse primitive integer multiple of a rational vector (zero -> {})."""
    nz = {k: Fraction(x) for k, x in enumerate(v) if x}
    if not nz:
        return {}
    den = lcm(*(x.denominator for x in nz.values()))
    return _primitive({k: int(x * den) for k, x in nz.items()})


def sparse_to_dense(v: IntVec, dim: int) -> Vector:
    out = [Fraction(0)] * dim
    for k, x in v.items():
        out[k] = Fraction(x)
    return tuple(out)


class Echelon:
    """Incrementally maintained reduced echelon basis with integer rows.

    ``rows[c]`` is the row whose pivot sits in column ``c``; every row is zero
    in all other pivot columns and its pivot entry is positive.
    """

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, vectors: Iterable[IntVec] = ()):
        self.dim = dim
        self.rows: Dict[int, IntVec] = {}
        for v in vectors:
            self.insert(v)

    def copy(self) -> "Echelon":
        e = Echelon(self.dim)
        e.rows = dict(self.rows)
        return e

    @property
    def rank(self) -> int:
        return len(self.rows)

    def is_full(self) -> bool:
        return len(self.rows) == self.dim

    def reduce(self, v: IntVec) -> IntVec:
        """Integer multiple of the residue of v modulo the span."""
        rows = self.rows
        hits = [c for c in v if c in rows]
        if not hits:
            return _primitive(dict(v)) if v else {}
        w = dict(v)
        for c in hits:
            f = w.pop(c)
            row = rows[c]
            p = row[c]
            if p != 1:
                for k in w:
                    w[k] *= p
            for k, x in row.items():
                if k == c:
                    continue
                s = w.get(k, 0) - f * x
                if s:
                    w[k] = s
                else:
                    w.pop(k, None)
        return _primitive(w) if w else w

    def contains(self, v: IntVec) -> bool:
        if len(self.rows) == self.dim:
            return True
        return not self.reduce(v)

    def insert(self, v: IntVec) -> bool:
        """Add v to the span; True when the rank grew."""
        if len(self.rows) == self.dim or not v:
            return False
        w = self.reduce(v)
        if not w:
            return False
        c = min(w)
        if w[c] < 0:
            w = {k: -x for k, x in w.items()}
        p = w[c]
        for pc, row in self.rows.items():
            f = row.get(c)
            if f:
                new = {k: x * p for k, x in row.items() if k != c}
                for k, x in w.items():
                    if k == c:
                        continue
                    s = new.get(k, 0) - f * x
                    if s:
                        new[k] = s
                    else:
                        new.pop(k, None)
                self.rows[pc] = _primitive(new)
        self.rows[c] = w
        return True

    def rref_rows(self) -> List[Vector]:
        out = []
        for c in sorted(self.rows):
            row = self.rows[c]
            p = row[c]
            dense = [Fraction(0)] * self.dim
            for k, x in row.items():
                dense[k] = Fraction(x, p)
            out.append(tuple(dense))
        return out

    def int_rows(self) -> List[IntVec]:
        return [self.rows[c] for c in sorted(self.rows)]

    def kernel_vectors(self) -> List[IntVec]:
        """Integer basis of {x : row . x = 0 for every row}."""
        return _nullspace_of_echelon(self)


# ---------------------------------------------------------------------------
# Matrix


class Matrix:
    """Dense rational matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        ent = tuple(tuple(Fraction(x) for x in r) for r in entries)
        if cols is None:
            cols = len(ent[0]) if ent else 0
        for r in ent:
            if len(r) != cols:
                raise DimensionMismatch("ragged matrix rows")
        self.rows = len(ent)
        self.cols = cols
        self.entries = ent

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        return cls([[col[i] for col in columns] for i in range(rows)], len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)], self.rows)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        nz = [(j, x) for j, x in enumerate(v) if x]
        return tuple(sum((r[j] * x for j, x in nz), Fraction(0)) for r in self.entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions differ")
        cols = [other.column(j) for j in range(other.cols)]
        return Matrix.from_columns([self.apply(c) for c in cols], self.rows)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.cols,
        )

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def is_diagonal(self) -> bool:
        return all(
            not x for i, r in enumerate(self.entries) for j, x in enumerate(r) if i != j
        )

    def int_rows(self) -> List[IntVec]:
        return [to_int_vector(r) for r in self.entries]

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


def stack(mats: Sequence[Matrix]) -> Matrix:
    cols = mats[0].cols
    return Matrix([r for m in mats for r in m.entries], cols)


def rref(M: Matrix) -> Tuple[Matrix, int]:
    ech = Echelon(M.cols, (to_int_vector(r) for r in M.entries))
    rows = ech.rref_rows()
    rank = len(rows)
    rows += [(Fraction(0),) * M.cols] * (M.rows - rank)
    return Matrix(rows, M.cols), rank


def rank(M: Matrix) -> int:
    return Echelon(M.cols, (to_int_vector(r) for r in M.entries)).rank


def _nullspace_of_echelon(ech: Echelon) -> List[IntVec]:
    pivots = sorted(ech.rows)
    pivset = set(pivots)
    out = []
    for f in range(ech.dim):
        if f in pivset:
            continue
        # x_f = L, x_c = -L * row[f] / row[c] with L the lcm of pivots involved
        involved = [(c, ech.rows[c]) for c in pivots if ech.rows[c].get(f)]
        L = lcm(*(r[c] for c, r in involved)) if involved else 1
        v = {f: L}
        for c, r in involved:
            v[c] = -(L // r[c]) * r[f]
        out.append(_primitive(v))
    return out


def nullspace(M: Matrix) -> "Subspace":
    ech = Echelon(M.cols, (to_int_vector(r) for r in M.entries))
    return Subspace.from_echelon(Echelon(M.cols, _nullspace_of_echelon(ech)))


# ---------------------------------------------------------------------------
# Subspace


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim held by its canonical RREF basis."""

    ambient_dim: int
    basis: Tuple[Vector, ...]

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.from_echelon(
            Echelon(ambient_dim, ({k: 1} for k in range(ambient_dim)))
        )

    @classmethod
    def from_echelon(cls, ech: Echelon) -> "Subspace":
        return cls(ech.dim, tuple(ech.rref_rows()))

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        ech = Echelon(ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(
                    f"vector of length {len(v)} in ambient dimension {ambient_dim}"
                )
            ech.insert(to_int_vector(v))
        return cls.from_echelon(ech)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def echelon(self) -> Echelon:
        return Echelon(self.ambient_dim, (to_int_vector(b) for b in self.basis))

    def int_basis(self) -> List[IntVec]:
        return [to_int_vector(b) for b in self.basis]

    def pivots(self) -> List[int]:
        return [next(k for k, x in enumerate(b) if x) for b in self.basis]

    def contains(self, v: Sequence) -> bool:
        return contains(self, v)

    def is_subspace_of(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        ech = other.echelon()
        return all(ech.contains(to_int_vector(b)) for b in self.basis)

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of v in the RREF basis (v must lie in the subspace)."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(Fraction(v[p]) for p in self.pivots())

    def combine(self, coeffs: Sequence) -> Vector:
        out = [Fraction(0)] * self.ambient_dim
        for c, b in zip(coeffs, self.basis):
            if c:
                for k, x in enumerate(b):
                    if x:
                        out[k] += c * x
        return tuple(out)


def span_union(S: Subspace, vectors: Iterable[Sequence]) -> Subspace:
    ech = S.echelon()
    for v in vectors:
        if len(v) != S.ambient_dim:
            raise DimensionMismatch(
                f"vector of length {len(v)} in ambient dimension {S.ambient_dim}"
            )
        ech.insert(to_int_vector(v))
    return Subspace.from_echelon(ech)


def contains(S: Subspace, v: Sequence) -> bool:
    if len(v) != S.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {S.ambient_dim}")
    return S.echelon().contains(to_int_vector(v))


def intersection(S: Subspace, T: Subspace) -> Subspace:
    """S ∩ T via the nullspace of [S; -T] in the combined coefficient space."""
    if S.ambient_dim != T.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    if not S.dim or not T.dim:
        return Subspace.zero(S.ambient_dim)
    rows = [tuple(b[k] for b in S.basis) + tuple(-b[k] for b in T.basis)
            for k in range(S.ambient_dim)]
    ker = nullspace(Matrix(rows, S.dim + T.dim))
    return Subspace.span((S.combine(v[: S.dim]) for v in ker.basis), S.ambient_dim)
