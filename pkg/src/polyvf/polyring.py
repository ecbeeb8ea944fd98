"""Sparse multivariate polynomials over the rationals.

Polynomials are immutable maps from exponent tuples to nonzero ``Fraction``
coefficients.  Variables are numbered from 1 (``x1 .. xn``) in every public
function; exponent tuples are 0-based internally.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


class VariableCountError(ValueError):
    """Operands live in polynomial rings with different numbers of variables."""


def grlex_key(mono: Monomial) -> Tuple[int, ...]:
    """Sort key for graded-lex with x1 > x2 > ... > xn (larger key = larger monomial)."""
    return (sum(mono),) + tuple(mono)


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All exponent vectors of length n and total degree d, descending in grlex."""
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    out.sort(key=grlex_key, reverse=True)
    return out


def _check_same_n(p: "Polynomial", q: "Polynomial") -> None:
    if p.n != q.n:
        raise VariableCountError(f"variable count mismatch: {p.n} vs {q.n}")


class Polynomial:
    """Element of Q[x1..xn] stored as a reduced sparse term map."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, Scalar] | None = None):
        if n < 1:
            raise ValueError("a polynomial ring needs at least one variable")
        clean: Dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for n={n}")
            c = Fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self.n = n
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, n: int, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # trusted path: terms already reduced and nonzero
        p = cls.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def monomial(cls, exponents: Iterable[int], coeff: Scalar = 1) -> "Polynomial":
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: coeff})

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        """The polynomial x_i (1-based)."""
        if not 1 <= i <= n:
            raise IndexError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): Fraction(1)})

    # read access

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in canonical order (descending graded-lex)."""
        for mono in sorted(self._terms, key=grlex_key, reverse=True):
            yield mono, self._terms[mono]

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        """Largest |J| over the support; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(m) for m in self._terms}
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def is_constant(self) -> bool:
        return self.total_degree() <= 0

    # arithmetic

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == (
                {(0,) * self.n: Fraction(other)} if other else {}
            )
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            _check_same_n(self, other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.n, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._raw(self.n, {m: v * c for m, v in self._terms.items()})

    def diff(self, i: int) -> "Polynomial":
        return partial_derivative(self, i)

    def exact_divide(self, q: "Polynomial") -> "Polynomial | None":
        """Return p/q when q divides p exactly, else None.

        Only monomial divisors are supported, which is all the Euler-multiple
        test needs.
        """
        _check_same_n(self, q)
        if len(q) != 1:
            raise NotImplementedError("exact_divide only supports monomial divisors")
        (qm, qc), = q._terms.items()
        out = {}
        for m, c in self._terms.items():
            r = tuple(a - b for a, b in zip(m, qm))
            if any(e < 0 for e in r):
                return None
            out[r] = c / qc
        return Polynomial._raw(self.n, out)

    # printing

    def __repr__(self):
        return f"Polynomial({self.n}, {format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_same_n(p, q)
    out = dict(p._terms)
    for m, c in q._terms.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return Polynomial._raw(p.n, out)


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_same_n(p, q)
    out: Dict[Monomial, Fraction] = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            s = out.get(m, 0) + c1 * c2
            if s:
                out[m] = s
            else:
                del out[m]
    return Polynomial._raw(p.n, out)


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    """d p / d x_i with 1-based i."""
    if not 1 <= i <= p.n:
        raise IndexError(f"variable index {i} out of range 1..{p.n}")
    k = i - 1
    out = {}
    for m, c in p._terms.items():
        e = m[k]
        if e:
            out[m[:k] + (e - 1,) + m[k + 1:]] = c * e
    return Polynomial._raw(p.n, out)


def homogeneous_components(p: Polynomial) -> Dict[int, Polynomial]:
    parts: Dict[int, Dict[Monomial, Fraction]] = {}
    for m, c in p._terms.items():
        parts.setdefault(sum(m), {})[m] = c
    return {d: Polynomial._raw(p.n, parts[d]) for d in sorted(parts)}


def format_coefficient(c: Fraction) -> str:
    """Canonical rational text: "p" or "p/q"."""
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(mono: Monomial) -> str:
    parts = []
    for k, e in enumerate(mono, start=1):
        if e == 1:
            parts.append(f"x{k}")
        elif e > 1:
            parts.append(f"x{k}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for idx, (mono, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mtxt = format_monomial(mono)
        if not mtxt:
            body = format_coefficient(a)
        elif a == 1:
            body = mtxt
        else:
            body = f"{format_coefficient(a)}*{mtxt}"
        if idx == 0:
            chunks.append(body if sign == "+" else f"-{body}")
        else:
            chunks.append(f" {sign} {body}")
    return "".join(chunks)
