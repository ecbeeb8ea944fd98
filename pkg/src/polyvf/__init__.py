"""Exact computations with polynomial vector fields in n variables."""

from .derlie import Derivation, HomogeneousDerivation, bracket, divergence, euler, format_derivation
from .generation import generates_criterion, truncated_closure
from .graded import dim_M, dim_N, dim_W, project_M, project_N, submodule_M, submodule_N
from .parsing import ParseError, parse_derivation
from .polyring import Polynomial

__version__ = "0.1.0"

__all__ = [
    "Derivation",
    "HomogeneousDerivation",
    "ParseError",
    "Polynomial",
    "bracket",
    "dim_M",
    "dim_N",
    "dim_W",
    "divergence",
    "euler",
    "format_derivation",
    "generates_criterion",
    "parse_derivation",
    "project_M",
    "project_N",
    "submodule_M",
    "submodule_N",
    "truncated_closure",
]
