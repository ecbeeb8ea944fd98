"""Seeded random polynomials and vector fields for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .derlie import Derivation, HomogeneousDerivation
from .graded import GradedComponent, dim_W, from_coords
from .polyring import Polynomial

_NUMERATORS = (-3, -2, -1, 1, 2, 3)
_DENOMINATORS = (1, 1, 1, 2, 3)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(_NUMERATORS), rng.choice(_DENOMINATORS))


def random_polynomial(n: int, max_degree: int, rng: random.Random, terms: int = 3) -> Polynomial:
    out = {}
    for _ in range(rng.randint(0, terms)):
        d = rng.randint(0, max_degree)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + random_rational(rng)
    return Polynomial(n, out)


def random_derivation(n: int, max_degree: int, rng: random.Random, terms: int = 2) -> Derivation:
    """Coefficients have total degree <= max_degree + 1."""
    return Derivation([random_polynomial(n, max_degree + 1, rng, terms) for _ in range(n)])


def random_homogeneous(n: int, m: int, rng: random.Random, density: float = 0.5) -> HomogeneousDerivation:
    coords = [
        random_rational(rng) if rng.random() < density else Fraction(0)
        for _ in range(dim_W(n, m))
    ]
    return from_coords(GradedComponent(n, m, tuple(coords)))


def random_linear(n: int, rng: random.Random) -> Derivation:
    """Random element of the degree-0 component."""
    return random_homogeneous(n, 0, rng, density=0.7)
