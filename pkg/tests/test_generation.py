from __future__ import annotations

import random

import pytest

from polyvf.derlie import Derivation, euler, graded_split
from polyvf.generation import (
    EMPTY_TOP_DEGREE,
    CutoffTooSmall,
    Reason,
    agreement,
    default_cutoff,
    generates_criterion,
    truncated_closure,
    truncated_closure_ungraded,
    wc_membership,
)
from polyvf.graded import basis
from polyvf.parsing import parse_derivation
from polyvf.polyring import Polynomial
from polyvf.sampling import random_derivation
from polyvf.verification import GENERATION_BATTERY


def P(text, n=2):
    return parse_derivation(text, n)


@pytest.mark.parametrize(
    "text, generates, reason",
    [
        ("x1^2 d1", True, Reason.CRITERION_MET),
        ("x1 E", False, Reason.DEGREE_ONE_EULER_MULTIPLE),
        ("x1^2 d2", False, Reason.DIV_CONSTANT),
        ("x1^3 d1", True, Reason.CRITERION_MET),
        ("x1 d1 + d2", False, Reason.TOP_DEGREE_BELOW_ONE),
    ],
)
def test_canonical_examples(text, generates, reason):
    v = generates_criterion(P(text))
    assert v.generates is generates
    assert reason in v.reasons
    ok, _, trace = agreement(P(text))
    assert ok
    assert trace.full() is generates


def test_zero_field():
    v = generates_criterion(Derivation.zero(2))
    assert not v.generates
    assert v.top_degree == EMPTY_TOP_DEGREE
    assert set(v.reasons) == {Reason.TOP_DEGREE_BELOW_ONE, Reason.DIV_CONSTANT}
    assert default_cutoff(Derivation.zero(2)) == 3
    trace = truncated_closure(Derivation.zero(2))
    assert trace.cutoff == 3
    assert trace.per_degree[-1] == (2, 2)
    assert trace.per_degree[1] == (0, 6)


def test_euler_multiple_trace():
    trace = truncated_closure(P("x1 E"), 4)
    assert trace.per_degree[1] == (2, 6)
    assert trace.deficits() == [1, 2, 3, 4]


def test_divergence_free_stays_in_wc():
    trace = truncated_closure(P("x1^2 d2"))
    # only the constant-divergence fields are reached: the divergence-free part of W[d]
    assert trace.per_degree[1] == (4, 6)
    assert trace.per_degree[2] == (5, 8)


def test_criterion_ignores_lower_components_for_euler_test():
    assert generates_criterion(P("x1 E + d1 + x1 d2")).reasons == (Reason.DEGREE_ONE_EULER_MULTIPLE,)
    assert generates_criterion(P("x1^3 d2 + x1 E")).generates


def test_reasons_consistency():
    for n, text, want in GENERATION_BATTERY:
        v = generates_criterion(P(text, n))
        assert v.generates == (v.reasons == (Reason.CRITERION_MET,))
        assert v.generates is want


def test_components_match_split():
    D = P("x1^2 d1 + x2 d1 + d2")
    assert generates_criterion(D).components == graded_split(D)


def test_cutoff_too_small():
    with pytest.raises(CutoffTooSmall):
        truncated_closure(P("x1^4 d1"), 2)
    with pytest.raises(ValueError):
        truncated_closure(P("x1^2 d1"), 0)


def test_history_is_monotone():
    trace = truncated_closure(P("x1^2 d1 + x1*x2 d2 + x2^3 d1"))
    assert trace.stable
    for before, after in zip(trace.history, trace.history[1:]):
        assert all(after[d] >= before[d] for d in before)
    assert trace.history[-1] == {d: a for d, (a, _) in trace.per_degree.items()}


@pytest.mark.parametrize("text", ["x1^2 d1", "x1 E", "x1^2 d2", "x2 E + d1", "x1*x2 d1 + x1 d2"])
def test_split_seeds_give_the_same_closure(text):
    """With the Euler field among the seeds, graded components come for free."""
    D = P(text)
    T = 3
    affine = [b for m in (-1, 0) for b in basis(2, m).elements]
    graded = truncated_closure(D, T)
    ungraded = truncated_closure_ungraded(affine + [D], 2, T)
    assert graded.per_degree == ungraded.per_degree


def test_agreement_on_random_fields():
    rng = random.Random(7)
    for n in (2, 3):
        for _ in range(8):
            D = random_derivation(n, rng.randint(1, 2), rng)
            if D.is_zero():
                continue
            ok, verdict, trace = agreement(D)
            assert ok, (str(D), verdict, trace.per_degree)


def test_wc_membership():
    assert wc_membership(euler(2))
    assert wc_membership(P("x1^2 d2 + d1"))
    assert not wc_membership(P("x1^2 d1"))


def test_needs_two_variables():
    with pytest.raises(ValueError):
        generates_criterion(Derivation([Polynomial.variable(1, 1)]))
