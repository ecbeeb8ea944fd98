"""Verification families behind the CLI subcommands.

Each ``run_*`` function returns a :class:`Section`: JSON-ready data, a list of
named pass/fail checks, and lines for the text table.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .derlie import Derivation, bracket, divergence, euler, format_derivation, is_euler_multiple
from .generation import agreement, generates_criterion, truncated_closure, wc_membership
from .graded import (
    GradedComponent,
    basis,
    coords_of,
    dim_M,
    dim_N,
    dim_W,
    divergence_matrix,
    euler_multiple_coords,
    from_coords,
    full_space,
    project_M,
    project_N,
    submodule_M,
    submodule_N,
)
from .linalg import Echelon, Subspace, intersection, rank, span_union
from .parsing import parse_derivation
from .polyring import Polynomial, format_coefficient, monomials_of_degree
from .reptheory import (
    Isomorphism,
    ModuleRef,
    Verdict,
    certify_irreducible,
    classify_isomorphism,
    expected_weights,
    gl_generators,
    is_invariant,
    maximal_vectors,
    weight_of,
)
from .sampling import random_derivation, random_homogeneous
from .structure import verify_products

# (n, expression, criterion verdict) for the generation battery
GENERATION_BATTERY: Tuple[Tuple[int, str, bool], ...] = (
    (2, "x1^2 d1", True),
    (2, "x1*(x1 d1 + x2 d2)", False),
    (2, "x1^2 d2", False),
    (2, "x1^3 d1", True),
    (2, "0", False),
    (2, "d1 + x2 d1", False),
    (2, "x2 E", False),
    (2, "x1 E + d1 + x1 d2", False),
    (2, "x2^2 d2", True),
    (2, "x1*x2 d1", True),
    (2, "x1^2 d2 + x2^2 d1", False),
    (2, "x1^2 E", True),
    (2, "x1^3 d2", False),
    (2, "x1^3 d2 + x1 E", True),
    (2, "x1^3 d2 + x1^2 d2", False),
    (2, "x1^2*x2 d1 - x1^3 d2", True),
    (2, "x1^4 d1", True),
    (2, "x1^4 d2 + x2^4 d1", False),
    (2, "x1^3 E", True),
    (2, "x2^4 d2 + d1", True),
    (2, "x1 d1 + x1^2 d1", True),
    (2, "1/2*x1^2 d1 - x1*x2 d2", False),
    (2, "x1^2 d1 + x1*x2 d2 + d2", False),
    (2, "x1^2 d1 + x1*x2 d2 + x2^3 d1", True),
    (2, "x1*x2^2 d2 - 1/3*x2^3 d1 + x2 d1", True),
    (3, "x1^2 d1", True),
    (3, "x1 E", False),
    (3, "x1^2 d2", False),
    (3, "x1^3 d1", True),
    (3, "x2*x3 d1 + x1^2 d3", False),
    (3, "x3^2 d3 + d1", True),
    (3, "x1*x2*x3 E", True),
    (3, "x2^3 d1 + x1 E", True),
    (3, "x1*x2 d3", False),
    (3, "x3 E + x1 d2", False),
    (3, "x2^3 d1 + x3^2 d1", False),
    (3, "x1^2 x3 d2 - 2/3*x3^3 d3 + x1 d3", True),
)


@dataclass
class Section:
    name: str
    data: dict = field(default_factory=dict)
    checks: List[Tuple[str, bool]] = field(default_factory=list)
    lines: List[str] = field(default_factory=list)

    def check(self, label: str, ok: bool) -> bool:
        self.checks.append((f"{self.name}.{label}", bool(ok)))
        return bool(ok)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def rational(x) -> str:
    return format_coefficient(Fraction(x))


def vector_text(v) -> List[str]:
    return [rational(x) for x in v]


def _component_text(n: int, m: int, v) -> str:
    return format_derivation(from_coords(GradedComponent(n, m, tuple(v))))


def _is_multiple(v, w) -> bool:
    """v is a nonzero scalar multiple of w."""
    k = next((k for k, x in enumerate(w) if x), None)
    if k is None or not v[k]:
        return False
    c = Fraction(v[k]) / w[k]
    return all(Fraction(a) == c * b for a, b in zip(v, w))


# ---------------------------------------------------------------------------


def run_dims(n: int, max_degree: int) -> Section:
    sec = Section("dims")
    rows = []
    sec.lines.append(f"{'deg':>4} {'dim W':>7} {'dim M':>7} {'dim N':>7}   enumerated/rank check")
    for i in range(-1, max_degree + 1):
        enumerated = len(basis(n, i))
        row = {"degree": i, "dim_W": dim_W(n, i), "basis_count": enumerated}
        ok = sec.check(f"W[{i}]", dim_W(n, i) == enumerated)
        if i >= 0:
            div_rank = rank(divergence_matrix(n, i))
            kernel = dim_W(n, i) - div_rank
            ech = Echelon(dim_W(n, i), (euler_multiple_coords(n, f) for f in monomials_of_degree(n, i)))
            row.update(
                dim_M=dim_M(n, i),
                divergence_kernel_rank=kernel,
                dim_N=dim_N(n, i),
                euler_image_rank=ech.rank,
            )
            ok &= sec.check(f"M[{i}]", dim_M(n, i) == kernel)
            ok &= sec.check(f"N[{i}]", dim_N(n, i) == ech.rank)
            ok &= sec.check(f"sum[{i}]", dim_M(n, i) + dim_N(n, i) == dim_W(n, i))
            sec.lines.append(
                f"{i:>4} {dim_W(n, i):>7} {dim_M(n, i):>7} {dim_N(n, i):>7}   {'ok' if ok else 'MISMATCH'}"
            )
        else:
            sec.lines.append(f"{i:>4} {dim_W(n, i):>7} {'-':>7} {'-':>7}   {'ok' if ok else 'MISMATCH'}")
        rows.append(row)
    sec.data = {"degrees": rows}
    return sec


def run_decompose(n: int, max_degree: int, rng: random.Random, samples: int) -> Section:
    sec = Section("decompose")
    out = []
    gens = gl_generators(n)
    for m in range(0, max_degree + 1):
        M, N = submodule_M(n, m), submodule_N(n, m)
        meet = intersection(M, N)
        joined = span_union(M, N.basis)
        proj_ok = True
        for _ in range(samples):
            D = random_homogeneous(n, m, rng)
            pM, pN = project_M(D, m), project_N(D, m)
            proj_ok &= (pM + pN) == D
            proj_ok &= project_N(pN, m) == pN
            proj_ok &= divergence(pM).is_zero()
            proj_ok &= is_euler_multiple(pN)[0]
        inv_M = is_invariant(n, m, M)
        inv_N = is_invariant(n, m, N)
        sec.check(f"dims[{m}]", M.dim == dim_M(n, m) and N.dim == dim_N(n, m))
        sec.check(f"direct[{m}]", meet.dim == 0 and joined.dim == dim_W(n, m))
        sec.check(f"projections[{m}]", proj_ok)
        sec.check(f"invariant[{m}]", inv_M and inv_N)
        out.append(
            {
                "degree": m,
                "basis": basis(n, m).labels(),
                "dim_M": M.dim,
                "dim_N": N.dim,
                "M_basis": [_component_text(n, m, b) for b in M.basis],
                "N_basis": [_component_text(n, m, b) for b in N.basis],
                "intersection_dim": meet.dim,
                "sum_dim": joined.dim,
                "projection_samples": samples,
                "projection_identities": proj_ok,
                "invariant_under": len(gens),
                "M_invariant": inv_M,
                "N_invariant": inv_N,
            }
        )
        sec.lines.append(
            f"W[{m}] = M ({M.dim}) + N ({N.dim}); meet {meet.dim}, sum {joined.dim}/{dim_W(n, m)}; "
            f"projections {'ok' if proj_ok else 'FAIL'}; invariant {'ok' if inv_M and inv_N else 'FAIL'}"
        )
    sec.data = {"degrees": out}
    return sec


def _hw_targets(n: int, m: int) -> Tuple[Tuple, Tuple]:
    x1 = Polynomial.variable(n, 1)
    v1 = coords_of(euler(n) * (x1 ** m), m)
    e = [0] * n
    e[0] = m + 1
    v2 = coords_of(Derivation.monomial_field(e, n), m)
    return v1, v2


def run_hw(n: int, max_degree: int) -> Section:
    sec = Section("hw")
    out = []
    for m in range(0, max_degree + 1):
        joint = maximal_vectors(n, m)
        in_M = maximal_vectors(n, m, within=submodule_M(n, m))
        in_N = maximal_vectors(n, m, within=submodule_N(n, m))
        t1, t2 = _hw_targets(n, m)
        lam1, lam2 = expected_weights(n, m)
        entry = {
            "degree": m,
            "joint_dim": joint.dim,
            "joint_vectors": [_component_text(n, m, b) for b in joint.basis],
            "M_dim": in_M.dim,
            "N_dim": in_N.dim,
        }
        sec.check(f"joint_dim[{m}]", joint.dim == 2)
        sec.check(f"M_dim[{m}]", in_M.dim == 1)
        sec.check(f"N_dim[{m}]", in_N.dim == 1)
        if in_M.dim == 1 and in_N.dim == 1:
            wM = weight_of(GradedComponent(n, m, in_M.basis[0]))
            wN = weight_of(GradedComponent(n, m, in_N.basis[0]))
            entry.update(
                M_vector=_component_text(n, m, in_M.basis[0]),
                N_vector=_component_text(n, m, in_N.basis[0]),
                M_weight=wM.as_dict(),
                N_weight=wN.as_dict(),
            )
            sec.check(f"M_vector[{m}]", _is_multiple(in_M.basis[0], t2))
            sec.check(f"N_vector[{m}]", _is_multiple(in_N.basis[0], t1))
            sec.check(f"M_weight[{m}]", wM == lam2)
            sec.check(f"N_weight[{m}]", wN == lam1)
        certs = {
            "M": certify_irreducible(n, m, submodule_M(n, m)),
            "N": certify_irreducible(n, m, submodule_N(n, m)),
            "W": certify_irreducible(n, m, full_space(n, m)),
        }
        entry["certificates"] = {
            k: {"verdict": c.verdict.value, "hw_dimension": c.hw_dimension} for k, c in certs.items()
        }
        sec.check(f"M_irreducible[{m}]", certs["M"].verdict is Verdict.IRREDUCIBLE)
        sec.check(f"N_irreducible[{m}]", certs["N"].verdict is Verdict.IRREDUCIBLE)
        sec.check(
            f"W_inconclusive[{m}]",
            certs["W"].verdict is Verdict.INCONCLUSIVE and certs["W"].hw_dimension == 2,
        )
        out.append(entry)
        w = entry.get("M_weight", {}), entry.get("N_weight", {})
        sec.lines.append(
            f"m={m}: maximal vectors {joint.dim}; M: {entry.get('M_vector')} weight "
            f"{w[0].get('cartan')}; N: {entry.get('N_vector')} weight {w[1].get('cartan')}"
        )
    sec.data = {"degrees": out}
    return sec


def expected_isomorphism(n: int, a: ModuleRef, b: ModuleRef) -> Isomorphism:
    if a.family == b.family:
        return Isomorphism.ISO_SL_AND_GL if a.degree == b.degree else Isomorphism.NON_ISO
    M, N = (a, b) if a.family == "M" else (b, a)
    if n == 2 and N.degree == M.degree + 2:
        return Isomorphism.ISO_SL_ONLY
    return Isomorphism.NON_ISO


def run_iso(n: int, max_degree: int) -> Section:
    sec = Section("iso")
    out = []
    refs = [ModuleRef(f, d, n) for f in ("M", "N") for d in range(0, max_degree + 1)]
    for a_idx, a in enumerate(refs):
        for b in refs[a_idx:]:
            got = classify_isomorphism(a, b)
            want = expected_isomorphism(n, a, b)
            la, lb = str(a), str(b)
            sec.check(f"{la}~{lb}", got is want)
            out.append({"left": la, "right": lb, "classification": got.value, "expected": want.value})
            if got is not Isomorphism.NON_ISO and a != b:
                sec.lines.append(f"{la} ~ {lb}: {got.value} (dims {a.subspace().dim}, {b.subspace().dim})")
    for i in range(0, max_degree - 1):
        same = dim_M(n, i) == dim_N(n, i + 2)
        if n == 2:
            sec.check(f"dim_M{i}=dim_N{i + 2}", same and dim_M(n, i) == i + 3)
    sec.lines.append(f"{len(out)} pairs classified, {sum(not ok for _, ok in sec.checks)} mismatches")
    sec.data = {"pairs": out}
    return sec


def run_products(n: int, max_degree: int) -> Section:
    sec = Section("products")
    reports = verify_products(n, max_degree)
    for r in reports:
        sec.check(f"[{r.left},{r.right}]", r.matches)
        flag = "" if r.matches else f"   MISMATCH (expected {r.expected})"
        sec.lines.append(f"[{r.left:>4}, {r.right:>4}] -> {r.classification:<14} dim {r.result_dim}{flag}")
    sec.data = {"products": [r.as_dict() for r in reports]}
    return sec


def run_generates(D: Derivation, *, oracle: bool, cutoff: int | None, expect: bool | None) -> Section:
    sec = Section("generates")
    verdict = generates_criterion(D)
    sec.data = {"expr": format_derivation(D), "n": D.n, "verdict": verdict.as_dict()}
    sec.lines.append(f"D = {format_derivation(D)}")
    sec.lines.append(
        f"criterion: {'generates' if verdict.generates else 'does not generate'} "
        f"({', '.join(r.value for r in verdict.reasons)}); top degree {verdict.top_degree}"
    )
    if oracle:
        trace = truncated_closure(D, cutoff)
        ok = trace.full() if verdict.generates else bool(trace.deficits())
        sec.data["oracle"] = trace.as_dict()
        sec.data["agreement"] = ok
        sec.check("agreement", ok)
        for d, (a, f) in sorted(trace.per_degree.items()):
            sec.lines.append(f"  degree {d:>2}: {a:>4} / {f:<4}{'' if a == f else '  deficit'}".rstrip())
    if expect is not None:
        sec.data["expected"] = expect
        sec.check("expected", verdict.generates == expect)
    return sec


def random_battery(n: int, rng: random.Random, count: int) -> List[Derivation]:
    """Random fields whose top degree lies between 1 and 3."""
    top = 3
    out: List[Derivation] = []
    while len(out) < count:
        D = random_derivation(n, rng.randint(1, top), rng, terms=2)
        if 1 <= (D.top_degree() or 0) <= top:
            out.append(D)
    return out


def run_battery(n: int, rng: random.Random | None = None, extra: int = 0) -> Section:
    """Criterion against the oracle on the fixed battery, plus ``extra`` random fields."""
    sec = Section("battery")
    out = []
    cases = [(text, parse_derivation(text, n), want) for bn, text, want in GENERATION_BATTERY if bn == n]
    if extra:
        cases += [(format_derivation(D), D, None) for D in random_battery(n, rng or random.Random(0), extra)]
    for text, D, want in cases:
        ok, verdict, trace = agreement(D)
        if want is not None:
            sec.check(f"{text}.criterion", verdict.generates == want)
        sec.check(f"{text}.oracle", ok)
        out.append({"expr": text, "generates": verdict.generates, "expected": want,
                    "agreement": ok, "deficit_degrees": trace.deficits(), "cutoff": trace.cutoff})
        sec.lines.append(
            f"{text:<36} {'gen' if verdict.generates else 'no ':<4} oracle "
            f"{'full' if trace.full() else 'deficit ' + str(trace.deficits())}"
        )
    sec.data = {"cases": out}
    return sec


def run_laws(n: int, rng: random.Random, samples: int) -> Section:
    sec = Section("laws")
    counts: Dict[str, int] = {}

    def tally(label: str, ok: bool) -> None:
        counts[label] = counts.get(label, 0) + (0 if ok else 1)

    for _ in range(samples):
        D1, D2, D3 = (random_derivation(n, 1, rng) for _ in range(3))
        f = random_derivation(n, 1, rng).coeffs[0]
        b12 = bracket(D1, D2)
        tally("antisymmetry", b12 == -bracket(D2, D1))
        jac = bracket(b12, D3) + bracket(bracket(D2, D3), D1) + bracket(bracket(D3, D1), D2)
        tally("jacobi", jac.is_zero())
        tally("div_additive", divergence(D1 + D2) == divergence(D1) + divergence(D2)
              and divergence(D1 - D2) == divergence(D1) - divergence(D2))
        tally("div_product", divergence(D1 * f) == f * divergence(D1) + D1(f))
        tally("div_bracket", divergence(b12) == D1(divergence(D2)) - D2(divergence(D1)))
        W1 = _constant_divergence_part(D1)
        W2 = _constant_divergence_part(D2)
        tally("wc_closed", wc_membership(bracket(W1, W2)))
    for label, bad in sorted(counts.items()):
        sec.check(label, bad == 0)
        sec.lines.append(f"{label:<14} {samples - bad}/{samples}")
    sec.data = {"samples": samples, "failures": counts}
    return sec


def _constant_divergence_part(D: Derivation) -> Derivation:
    """D minus a correction that makes its divergence constant."""
    div = divergence(D)
    n = D.n
    # subtract the antiderivative in x1 of the non-constant part of Div
    corr = {}
    for mono, c in div.terms.items():
        if sum(mono) == 0:
            continue
        e = (mono[0] + 1,) + mono[1:]
        corr[e] = c / (mono[0] + 1)
    fix = Derivation([Polynomial(n, corr)] + [Polynomial.zero(n)] * (n - 1))
    return D - fix


def run_verify(n: int, max_degree: int, seed: int, samples: int) -> List[Section]:
    rng = random.Random(seed)
    return [
        run_dims(n, max_degree),
        run_decompose(n, max_degree, rng, samples),
        run_hw(n, max_degree),
        run_products(n, max_degree),
        run_iso(n, max_degree),
        run_battery(n, rng, 5),
        run_laws(n, rng, samples),
    ]
