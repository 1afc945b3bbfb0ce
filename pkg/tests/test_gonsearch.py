from collections import Counter

import pytest

from x0gonality.curve import Divisor, load_curve
from x0gonality.gonsearch import (SupportPattern, count_effective, enumerate_divisors, find_function_of_degree,
                                  prove_gonality_lower_bound, rational_anchor, support_patterns)
from x0gonality.rrspace import evaluate_ratio, rr_dim

from conftest import shipped_labels


def test_patterns_n6_p5():
    assert support_patterns(6, 5, 5) == [SupportPattern(0), SupportPattern(1, True)]


def test_patterns_n8_p3():
    assert support_patterns(8, 3, 7) == [SupportPattern(0), SupportPattern(1), SupportPattern(2, True)]


def test_patterns_n7_p2():
    assert support_patterns(7, 2, 4) == [SupportPattern(0), SupportPattern(1), SupportPattern(2)]


def test_patterns_without_rational_points():
    assert support_patterns(0, 3, 4) == [SupportPattern(0)]


def test_bad_pattern_arguments():
    with pytest.raises(ValueError):
        support_patterns(-1, 3, 2)
    with pytest.raises(ValueError):
        SupportPattern(0, anchored=True)


def test_degree2_no_rational_support_is_the_quadratic_places(reduced):
    C = reduced("X0(38)", 5)
    got = list(enumerate_divisors(C, 2, SupportPattern(0)))
    assert got == [Divisor.of(pl) for pl in C.places(2)]


def test_x0_99_degree5_unanchored(reduced):
    C = reduced("X0(99)", 5)
    got = list(enumerate_divisors(C, 5, SupportPattern(0)))
    assert len(set(got)) == len(got)
    shapes = Counter(tuple(sorted((pl.degree for pl, c in D.items() for _ in range(c)), reverse=True)) for D in got)
    # partitions of 5 into parts >= 2
    assert set(shapes) == {(5,), (3, 2)}
    n2, n3, n5 = (len(C.places(d)) for d in (2, 3, 5))
    assert shapes[(5,)] == n5 and shapes[(3, 2)] == n3 * n2


def test_anchored_pattern_contains_anchor(reduced):
    C = reduced("X0(38)", 5)
    a = rational_anchor(C)
    pat = SupportPattern(1, True)
    for D in enumerate_divisors(C, 3, pat, a):
        rational = [pl for pl in D.support() if pl.degree == 1]
        assert rational == [a]
    with pytest.raises(ValueError):
        list(enumerate_divisors(C, 3, pat, None))


@pytest.mark.parametrize("label,p,e", [("X0(38)", 3, 3), ("X0(23)", 2, 4), ("X0(97)/w97", 5, 3)])
def test_unrestricted_enumeration_is_complete(reduced, label, p, e):
    C = reduced(label, p)
    got = list(enumerate_divisors(C, e))
    assert len(got) == len(set(got)) == count_effective(C, e)
    assert all(D.is_effective() and D.degree == e for D in got)


def test_enumeration_order(reduced):
    C = reduced("X0(38)", 5)
    stream = enumerate_divisors(C, 3)
    assert [next(stream) for _ in range(2)] == [Divisor.of(pl) for pl in C.places(3)[:2]]


def test_x0_38_proven(reduced):
    v = prove_gonality_lower_bound(reduced("X0(38)", 5), 4)
    assert (v.claim, v.bound) == ("proven_lower_bound", 4) and v.witness is None


def test_x0_109_proven(reduced):
    v = prove_gonality_lower_bound(reduced("X0(109)", 3), 5)
    assert (v.claim, v.bound) == ("proven_lower_bound", 5)


def test_genus2_quotient_has_degree2_function(reduced):
    v = prove_gonality_lower_bound(reduced("X0(67)/w67", 3), 3)
    assert (v.claim, v.bound) == ("function_found", 2)
    assert rr_dim(reduced("X0(67)/w67", 3), v.witness.divisor) == 2


def test_hyperelliptic_x_fibre(small_curve):
    H = small_curve("H: y^2 = x^5 + 1", 7)
    v = find_function_of_degree(H, 2)
    assert v.claim == "function_found" and v.bound == 2
    D = v.witness.divisor
    # the polar divisor is an x-fibre, hence equivalent to the divisor at infinity
    from x0gonality.rrspace import rr_space
    assert rr_space(H, D - H.infinity_divisor()).dimension == 1


def test_budget_gives_inconclusive(reduced):
    v = prove_gonality_lower_bound(reduced("X0(109)", 3), 5, max_divisors=5)
    assert v.claim == "inconclusive" and "budget" in v.reason
    v = find_function_of_degree(reduced("X0(97)", 3), 4, max_seconds=1e-6)
    assert v.claim == "inconclusive"


def test_verdicts_are_deterministic(reduced):
    C = reduced("X0(53)", 3)
    a = prove_gonality_lower_bound(C, 6)
    b = prove_gonality_lower_bound(C, 6)
    assert (a.claim, a.bound, a.stats.divisors) == (b.claim, b.bound, b.stats.divisors)
    assert (a.witness is None) == (b.witness is None)
    if a.witness is not None:
        assert a.witness.divisor == b.witness.divisor
        assert (a.witness.numerator == b.witness.numerator).all()


def _fibres(C, w):
    vals = Counter()
    for pl in C.places(1):
        vals[evaluate_ratio(C, w.m, w.numerator, w.denominator, pl)] += 1
    return vals


@pytest.mark.parametrize("label,p", [("X0(53)", 3), ("X0(43)", 2), ("X0(38)", 3), ("X0(97)/w97", 3),
                                     ("X0(61)", 2)])
def test_found_function_respects_fibre_bound(reduced, label, p):
    C = reduced(label, p)
    v = prove_gonality_lower_bound(C, C.genus + 2)
    assert v.claim == "function_found"
    e = v.bound
    fib = _fibres(C, v.witness)
    assert max(fib.values()) <= e
    assert len(C.places(1)) <= e * (p + 1)


@pytest.mark.parametrize("label,p", [("X0(53)", 3), ("X0(34)", 3), ("X0(23)", 2)])
def test_lower_bound_and_function_never_coexist(reduced, label, p):
    C = reduced(label, p)
    top = prove_gonality_lower_bound(C, C.genus + 2)
    e = top.bound
    for d in range(2, e + 1):
        assert prove_gonality_lower_bound(C, d).claim == "proven_lower_bound"
    for d in range(e + 1, C.genus + 3):
        v = prove_gonality_lower_bound(C, d)
        assert (v.claim, v.bound) == ("function_found", e)


# --- property suite 7c: pruning soundness against brute-force exhaustion

def _small_cases():
    out = []
    for label in shipped_labels():
        m = load_curve(label)
        if m.genus <= 4:
            out.extend((label, p) for p in (2, 3) if p in m.good_primes)
    return out


def _brute_force_min_degree(C):
    e = 1
    while True:
        if any(rr_dim(C, D) >= 2 for D in enumerate_divisors(C, e)):
            return e
        e += 1


@pytest.mark.parametrize("label,p", _small_cases())
def test_pruning_soundness(reduced, label, p):
    C = reduced(label, p)
    expected = _brute_force_min_degree(C)
    v = prove_gonality_lower_bound(C, C.genus + 2)
    assert v.claim == "function_found"
    assert v.bound == expected
