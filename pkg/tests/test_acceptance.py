"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (the summary lines appear at the end
of the session) or ``python3 tests/test_acceptance.py`` for the lines alone.
"""

from __future__ import annotations

import random
import sys
from typing import Dict, List, Tuple

import pytest

from polyvf.cli import EXIT_OK, run_command
from polyvf.graded import dim_M, dim_N, dim_W
from polyvf.reptheory import Isomorphism, ModuleRef, classify_isomorphism
from polyvf.structure import EQUALS_M, EQUALS_N, EQUALS_W, ZERO
from polyvf.verification import (
    GENERATION_BATTERY,
    run_battery,
    run_decompose,
    run_dims,
    run_hw,
    run_iso,
    run_laws,
    run_products,
)

RESULTS: Dict[int, Tuple[bool, str]] = {}

TITLES = {
    1: "dimension formulas against enumeration and ranks",
    2: "direct-sum decomposition and projections",
    3: "maximal vectors and highest weights",
    4: "bracket product table",
    5: "isomorphism classification",
    6: "generation criterion against the closure oracle",
    7: "Jacobi identity and divergence identities",
    8: "byte-identical JSON reports",
}


def record(k: int, failures: List[str]) -> None:
    ok = not failures
    detail = "" if ok else f" ({len(failures)} failing: {', '.join(failures[:5])})"
    RESULTS[k] = (ok, f"criterion {k}: {'PASS' if ok else 'FAIL'} {TITLES[k]}{detail}")
    print(RESULTS[k][1])
    assert ok, RESULTS[k][1]


def summary_lines() -> List[str]:
    return [RESULTS[k][1] for k in sorted(RESULTS)]


def _failed(sections) -> List[str]:
    return [name for sec in sections for name, ok in sec.checks if not ok]


def test_criterion_1_dimensions():
    failures = _failed(run_dims(n, 5) for n in (2, 3, 4))
    spots = {(2, 1): (6, 4, 2), (3, 0): (9, 8, 1)}
    for (n, i), want in spots.items():
        if (dim_W(n, i), dim_M(n, i), dim_N(n, i)) != want:
            failures.append(f"spot{(n, i)}")
    record(1, failures)


def test_criterion_2_decomposition():
    rng = random.Random(2)
    record(2, _failed(run_decompose(n, 5, rng, 100) for n in (2, 3, 4)))


def test_criterion_3_highest_weights():
    # the normal-form check runs inside maximal_vectors and raises on violation
    record(3, _failed(run_hw(n, 4) for n in (2, 3, 4)))


def test_criterion_4_products():
    failures = []
    required = {
        ("M0", "N0"): ZERO,
        ("N2", "N2"): ZERO,
        ("M0", "N3"): EQUALS_N,
        ("M3", "N0"): EQUALS_M,
        ("W0", "W0"): EQUALS_M,
        ("W-1", "N3"): EQUALS_W,
    }
    for n in (2, 3):
        sec = run_products(n, 4)
        failures += _failed([sec])
        seen = {(p["left"], p["right"]): p["classification"] for p in sec.data["products"]}
        for key, want in required.items():
            if seen.get(key) != want:
                failures.append(f"n={n}:{key}")
    record(4, failures)


def test_criterion_5_isomorphisms():
    failures = _failed(run_iso(n, 5) for n in (2, 3))
    for i in range(0, 4):
        a, b2, b3 = ModuleRef("M", i, 2), ModuleRef("N", i + 2, 2), ModuleRef("N", i + 2, 3)
        if classify_isomorphism(a, b2) is not Isomorphism.ISO_SL_ONLY:
            failures.append(f"M{i}~N{i + 2} (n=2)")
        if not dim_M(2, i) == dim_N(2, i + 2) == i + 3:
            failures.append(f"dims M{i},N{i + 2}")
        if classify_isomorphism(ModuleRef("M", i, 3), b3) is not Isomorphism.NON_ISO:
            failures.append(f"M{i}~N{i + 2} (n=3)")
    record(5, failures)


def test_criterion_6_generation():
    rng = random.Random(6)
    sections = [run_battery(n, rng, 10) for n in (2, 3)]
    failures = _failed(sections)
    if len(GENERATION_BATTERY) < 30:
        failures.append("battery too small")
    canonical = {(2, "x1^2 d1"): True, (2, "x1*(x1 d1 + x2 d2)"): False,
                 (2, "x1^2 d2"): False, (2, "x1^3 d1"): True}
    present = {(n, t): w for n, t, w in GENERATION_BATTERY}
    for key, want in canonical.items():
        if present.get(key) is not want:
            failures.append(f"missing canonical case {key}")
    record(6, failures)


def test_criterion_7_laws():
    rng = random.Random(7)
    record(7, _failed(run_laws(n, rng, 500) for n in (2, 3)))


def test_criterion_8_determinism(tmp_path):
    argv = ["verify", "--n", "2", "--max-degree", "3", "--seed", "42"]
    blobs, failures = [], []
    for name in ("out1.json", "out2.json"):
        path = tmp_path / name
        code = run_command(argv + ["--json", str(path)], stdout=_Null(), stderr=_Null())
        if code != EXIT_OK:
            failures.append(f"exit {code}")
        blobs.append(path.read_bytes())
    if blobs[0] != blobs[1]:
        failures.append("reports differ")
    record(8, failures)


class _Null:
    def write(self, _):
        return 0

    def flush(self):
        pass


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
