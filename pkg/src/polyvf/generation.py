"""When does one extra vector field generate everything together with the affine part?

``generates_criterion`` evaluates the closed-form test.  ``truncated_closure``
is an independent brute-force oracle: it brackets everything with everything,
keeping only components of degree <= cutoff, until the spans stop growing.
Every vector it records is a genuine element of the generated subalgebra, so its
per-degree dimensions are lower bounds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .derlie import Derivation, HomogeneousDerivation, divergence, graded_split, is_euler_multiple
from .graded import bracket_coords, coords_of, dim_W, int_coords
from .linalg import Echelon, IntVec, to_int_vector

EMPTY_TOP_DEGREE = -2  # top degree reported for the zero field


class Reason(str, enum.Enum):
    DIV_CONSTANT = "div_constant"
    TOP_DEGREE_BELOW_ONE = "top_degree_below_one"
    DEGREE_ONE_EULER_MULTIPLE = "degree_one_euler_multiple"
    CRITERION_MET = "criterion_met"


class CutoffTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class GenerationVerdict:
    generates: bool
    reasons: Tuple[Reason, ...]
    top_degree: int
    components: Dict[int, HomogeneousDerivation]

    def as_dict(self) -> dict:
        return {
            "generates": self.generates,
            "reasons": [r.value for r in self.reasons],
            "top_degree": self.top_degree,
            "components": {str(k): str(v) for k, v in sorted(self.components.items())},
        }


@dataclass
class ClosureTrace:
    cutoff: int
    per_degree: Dict[int, Tuple[int, int]]
    iterations: int
    stable: bool
    history: List[Dict[int, int]] = field(default_factory=list)

    def full(self) -> bool:
        return all(a == f for a, f in self.per_degree.values())

    def deficits(self) -> List[int]:
        return [d for d, (a, f) in sorted(self.per_degree.items()) if a < f]

    def as_dict(self) -> dict:
        return {
            "cutoff": self.cutoff,
            "per_degree": {
                str(d): {"achieved": a, "full": f} for d, (a, f) in sorted(self.per_degree.items())
            },
            "iterations": self.iterations,
            "stable": self.stable,
            "deficit_degrees": self.deficits(),
        }


def top_degree(D: Derivation) -> int:
    k = D.top_degree()
    return EMPTY_TOP_DEGREE if k is None else k


def default_cutoff(D: Derivation) -> int:
    return max(top_degree(D), 0) + 3


def generates_criterion(D: Derivation) -> GenerationVerdict:
    if D.n < 2:
        raise ValueError("need n >= 2")
    parts = graded_split(D)
    k = top_degree(D)
    reasons = []
    if k < 1:
        reasons.append(Reason.TOP_DEGREE_BELOW_ONE)
    if divergence(D).is_constant():
        reasons.append(Reason.DIV_CONSTANT)
    if k == 1 and is_euler_multiple(parts[1])[0]:
        reasons.append(Reason.DEGREE_ONE_EULER_MULTIPLE)
    if not reasons:
        reasons.append(Reason.CRITERION_MET)
    ok = reasons == [Reason.CRITERION_MET]
    return GenerationVerdict(ok, tuple(reasons), k, parts)


def wc_membership(D: Derivation) -> bool:
    """True iff D has constant divergence."""
    return divergence(D).total_degree() <= 0


def _affine_seeds(n: int) -> List[Tuple[int, IntVec]]:
    seeds = [(-1, {k: 1}) for k in range(dim_W(n, -1))]
    seeds += [(0, {k: 1}) for k in range(dim_W(n, 0))]
    return seeds


def truncated_closure(D: Derivation, cutoff: int | None = None) -> ClosureTrace:
    """Per-degree spans of the subalgebra generated by the affine fields and D.

    D enters through its graded components.  Brackets are formed between all
    pairs of recorded basis vectors whose degrees sum to at most the cutoff; a
    degree whose span is already full is skipped.  A pass that records nothing
    new ends the run.
    """
    n = D.n
    T = default_cutoff(D) if cutoff is None else cutoff
    if T < 1:
        raise ValueError("cutoff must be >= 1")
    parts = graded_split(D)
    if parts and max(parts) > T:
        raise CutoffTooSmall(f"D has a component of degree {max(parts)} above cutoff {T}")

    degrees = list(range(-1, T + 1))
    spans = {d: Echelon(dim_W(n, d)) for d in degrees}
    vecs: Dict[int, List[IntVec]] = {d: [] for d in degrees}

    def record(d: int, v: IntVec) -> bool:
        if spans[d].insert(v):
            vecs[d].append(v)
            return True
        return False

    for d, v in _affine_seeds(n):
        record(d, v)
    for d, comp in parts.items():
        record(d, int_coords(comp, d))

    history = [{d: spans[d].rank for d in degrees}]
    # vectors recorded before the current pass; pairs of two old vectors are already done
    done = {d: 0 for d in degrees}
    iterations = 0
    while True:
        iterations += 1
        start = {d: len(vecs[d]) for d in degrees}
        for i in degrees:
            for j in degrees:
                if j < i or i + j > T or i + j < -1:
                    continue
                t = i + j
                if spans[t].is_full():
                    continue
                A, B = vecs[i][: start[i]], vecs[j][: start[j]]
                for a_idx, u in enumerate(A):
                    b_from = a_idx if i == j else 0
                    for b_idx in range(b_from, len(B)):
                        if a_idx < done[i] and b_idx < done[j]:
                            continue
                        w = bracket_coords(n, i, u, j, B[b_idx])
                        if w and record(t, w) and spans[t].is_full():
                            break
                    if spans[t].is_full():
                        break
        done = start
        history.append({d: spans[d].rank for d in degrees})
        if all(len(vecs[d]) == start[d] for d in degrees):
            break
    per_degree = {d: (spans[d].rank, dim_W(n, d)) for d in degrees}
    return ClosureTrace(T, per_degree, iterations, True, history)


def truncated_closure_ungraded(seeds: Sequence[Derivation], n: int, cutoff: int) -> ClosureTrace:
    """Same oracle but on whole (inhomogeneous) elements of the truncated algebra.

    Seeds are not split into graded components; the per-degree figure is
    dim(U ∩ W^[d]).  Used to confirm that splitting seeds does not change the
    result when the Euler field is among them.
    """
    T = cutoff
    degrees = list(range(-1, T + 1))
    offset = {}
    pos = 0
    for d in degrees:
        offset[d] = pos
        pos += dim_W(n, d)
    total = pos

    def blocks(v: IntVec) -> Dict[int, IntVec]:
        out: Dict[int, IntVec] = {}
        for k, x in v.items():
            d = max(dd for dd in degrees if offset[dd] <= k)
            out.setdefault(d, {})[k - offset[d]] = x
        return out

    def bracket_full(u: IntVec, v: IntVec) -> IntVec:
        acc: Dict[int, int] = {}
        bu, bv = blocks(u), blocks(v)
        for i, ui in bu.items():
            for j, vj in bv.items():
                t = i + j
                if t < -1 or t > T:
                    continue
                for k, x in bracket_coords(n, i, ui, j, vj).items():
                    kk = offset[t] + k
                    acc[kk] = acc.get(kk, 0) + x
        return {k: x for k, x in acc.items() if x}

    def embed(S: Derivation) -> IntVec:
        dense = [Fraction(0)] * total
        for d, comp in graded_split(S).items():
            if d > T:
                raise CutoffTooSmall(f"seed has a component of degree {d} above cutoff {T}")
            for k, x in enumerate(coords_of(comp, d)):
                dense[offset[d] + k] = x
        return to_int_vector(dense)

    ech = Echelon(total)
    vecs: List[IntVec] = []
    for S in seeds:
        v = embed(S)
        if v and ech.insert(v):
            vecs.append(v)
    done = 0
    iterations = 0
    while True:
        iterations += 1
        start = len(vecs)
        for a in range(start):
            for b in range(a + 1, start):
                if a < done and b < done:
                    continue
                w = bracket_full(vecs[a], vecs[b])
                if w and ech.insert(w):
                    vecs.append(w)
        if len(vecs) == start:
            break
        done = start
    # dim(U ∩ W^[d]) = dim U - rank of U projected away from block d
    U = ech.int_rows()
    per_degree = {}
    for d in degrees:
        lo, hi = offset[d], offset[d] + dim_W(n, d)
        proj = Echelon(total)
        for row in U:
            proj.insert({k: x for k, x in row.items() if not lo <= k < hi})
        per_degree[d] = (len(U) - proj.rank, dim_W(n, d))
    return ClosureTrace(T, per_degree, iterations, True, [])


def agreement(D: Derivation, cutoff: int | None = None) -> Tuple[bool, GenerationVerdict, ClosureTrace]:
    """Criterion vs oracle: True means full when predicted, deficit otherwise."""
    verdict = generates_criterion(D)
    trace = truncated_closure(D, cutoff)
    ok = trace.full() if verdict.generates else bool(trace.deficits())
    return ok, verdict, trace
