"""Polynomial vector fields: Lie bracket, divergence, Euler field, grading."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

from .polyring import (
    Polynomial,
    Scalar,
    VariableCountError,
    format_coefficient,
    format_monomial,
    grlex_key,
    homogeneous_components,
    partial_derivative,
)


class Derivation:
    """D = sum_i coeffs[i] d/dx_{i+1}; immutable."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, coeffs: Sequence[Polynomial]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a derivation needs at least one coefficient")
        n = len(coeffs)
        for c in coeffs:
            if not isinstance(c, Polynomial):
                raise TypeError("coefficients must be Polynomial instances")
            if c.n != n:
                raise VariableCountError(
                    f"coefficient lives in {c.n} variables, derivation has {n} slots"
                )
        self.n = n
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def zero(cls, n: int) -> "Derivation":
        return cls([Polynomial.zero(n)] * n)

    @classmethod
    def partial(cls, n: int, i: int) -> "Derivation":
        """d/dx_i."""
        return cls.monomial_field([0] * n, i)

    @classmethod
    def monomial_field(cls, exponents: Sequence[int], i: int, coeff: Scalar = 1) -> "Derivation":
        """coeff * x^exponents d/dx_i."""
        n = len(exponents)
        if not 1 <= i <= n:
            raise IndexError(f"derivation index {i} out of range 1..{n}")
        cs = [Polynomial.zero(n)] * n
        cs[i - 1] = Polynomial.monomial(exponents, coeff)
        return cls(cs)

    @classmethod
    def linear(cls, n: int, a: int, b: int) -> "Derivation":
        """x_a d/dx_b, a basis element of the degree-0 component."""
        e = [0] * n
        e[a - 1] = 1
        return cls.monomial_field(e, b)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def _check(self, other: "Derivation") -> None:
        if self.n != other.n:
            raise VariableCountError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        self._check(other)
        return Derivation([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        self._check(other)
        return Derivation([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Derivation([-a for a in self.coeffs])

    def __mul__(self, other):
        # scalar or polynomial multiple f*D
        if isinstance(other, (int, Fraction)):
            return Derivation([a.scale(other) for a in self.coeffs])
        if isinstance(other, Polynomial):
            return Derivation([a * other for a in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, f: Polynomial) -> Polynomial:
        return apply(self, f)

    def degree(self) -> int | None:
        """Homogeneous degree j (coefficients of degree j+1), None if mixed or zero."""
        degs = set()
        for c in self.coeffs:
            for m in c.terms:
                degs.add(sum(m) - 1)
        return degs.pop() if len(degs) == 1 else None

    def top_degree(self) -> int | None:
        """Largest graded degree with a nonzero component, None for zero."""
        d = max((c.total_degree() for c in self.coeffs), default=-1)
        return None if d < 0 else d - 1

    def terms(self) -> Iterable[Tuple[int, Tuple[int, ...], Fraction]]:
        """(i, monomial, coefficient) triples in canonical print order."""
        for i, c in enumerate(self.coeffs, start=1):
            for mono, a in c.items():
                yield i, mono, a

    def __repr__(self):
        return f"Derivation({format_derivation(self)!r})"

    def __str__(self):
        return format_derivation(self)


class HomogeneousDerivation(Derivation):
    """A derivation whose nonzero coefficients are all homogeneous of degree+1."""

    __slots__ = ("deg",)

    def __init__(self, coeffs: Sequence[Polynomial], degree: int):
        super().__init__(coeffs)
        if degree < -1:
            raise ValueError("graded degrees start at -1")
        for c in self.coeffs:
            if not c.is_homogeneous(degree + 1):
                raise ValueError(
                    f"coefficient {c} is not homogeneous of degree {degree + 1}"
                )
        self.deg = degree

    @classmethod
    def of(cls, D: Derivation, degree: int | None = None) -> "HomogeneousDerivation":
        if isinstance(D, HomogeneousDerivation) and degree in (None, D.deg):
            return D
        if degree is None:
            degree = D.degree()
            if degree is None:
                raise ValueError("derivation is not homogeneous of a definite degree")
        return cls(D.coeffs, degree)

    def degree(self) -> int:
        return self.deg


def apply(D: Derivation, f: Polynomial) -> Polynomial:
    if D.n != f.n:
        raise VariableCountError(f"variable count mismatch: {D.n} vs {f.n}")
    out = Polynomial.zero(f.n)
    for i, c in enumerate(D.coeffs, start=1):
        if c:
            df = partial_derivative(f, i)
            if df:
                out = out + c * df
    return out


def bracket(D1: Derivation, D2: Derivation) -> Derivation:
    D1._check(D2)
    return Derivation(
        [apply(D1, b) - apply(D2, a) for a, b in zip(D1.coeffs, D2.coeffs)]
    )


def divergence(D: Derivation) -> Polynomial:
    out = Polynomial.zero(D.n)
    for i, c in enumerate(D.coeffs, start=1):
        out = out + partial_derivative(c, i)
    return out


def euler(n: int) -> Derivation:
    if n < 2:
        raise ValueError("the Euler field is only used for n >= 2")
    return Derivation([Polynomial.variable(n, i) for i in range(1, n + 1)])


def graded_split(D: Derivation) -> Dict[int, HomogeneousDerivation]:
    n = D.n
    pieces: Dict[int, list] = {}
    for i, c in enumerate(D.coeffs):
        for d, comp in homogeneous_components(c).items():
            pieces.setdefault(d - 1, [Polynomial.zero(n)] * n)[i] = comp
    return {j: HomogeneousDerivation(pieces[j], j) for j in sorted(pieces)}


def is_euler_multiple(D: Derivation) -> Tuple[bool, Polynomial | None]:
    """Decide D == f * E_n; the witness f is returned on success.

    f is obtained by dividing the first nonzero coefficient by its variable and
    then checked against every coordinate, so no guess survives unverified.
    """
    n = D.n
    if D.is_zero():
        return True, Polynomial.zero(n)
    f = None
    for i, c in enumerate(D.coeffs, start=1):
        if c:
            f = c.exact_divide(Polynomial.variable(n, i))
            break
    if f is None:
        return False, None
    for i, c in enumerate(D.coeffs, start=1):
        if c != f * Polynomial.variable(n, i):
            return False, None
    return True, f


def format_derivation(D: Derivation) -> str:
    """Text form "x1^2 d1 - 2/3*x1*x2 d2"; accepted back by the parser."""
    chunks = []
    for i, mono, c in D.terms():
        a = abs(c)
        mtxt = format_monomial(mono)
        if a == 1:
            body = f"{mtxt} d{i}" if mtxt else f"d{i}"
        else:
            ctxt = format_coefficient(a)
            body = f"{ctxt}*{mtxt} d{i}" if mtxt else f"{ctxt} d{i}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(chunks) or "0"


def derivation_from_terms(n: int, terms: Iterable[Tuple[int, Sequence[int], Scalar]]) -> Derivation:
    """Build a derivation from (i, exponents, coefficient) triples, summing repeats."""
    acc: list[dict] = [dict() for _ in range(n)]
    for i, mono, c in terms:
        if not 1 <= i <= n:
            raise IndexError(f"derivation index {i} out of range 1..{n}")
        key = tuple(mono)
        acc[i - 1][key] = acc[i - 1].get(key, 0) + Fraction(c)
    return Derivation([Polynomial(n, t) for t in acc])


__all__ = [
    "Derivation",
    "HomogeneousDerivation",
    "apply",
    "bracket",
    "derivation_from_terms",
    "divergence",
    "euler",
    "format_derivation",
    "graded_split",
    "grlex_key",
    "is_euler_multiple",
]
