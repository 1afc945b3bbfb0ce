import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from x0gonality.curve import CurveError, Divisor, load_curve
from x0gonality.picard import (OrderCapExceeded, check_torsion, class_order, is_principal, mu_image, sieve,
                               w_d1_points)
from x0gonality.rrspace import function_divisor, rr_space


def test_zero_is_principal(reduced):
    C = reduced("X0(38)", 5)
    assert is_principal(C, Divisor())
    assert class_order(C, Divisor(), 4) == 1


def test_divisor_of_basis_function_is_principal(reduced):
    C = reduced("X0(38)", 5)
    P, Q = C.places(1)[:2]
    L = rr_space(C, Divisor({P: 3, Q: 2}))
    for i in range(L.dimension):
        assert is_principal(C, function_divisor(L, i))


def test_difference_of_points_not_principal(reduced):
    for label, p in [("X0(38)", 5), ("X0(23)", 3), ("X0(97)", 3)]:
        C = reduced(label, p)
        P, Q = C.places(1)[:2]
        assert not is_principal(C, Divisor({P: 1, Q: -1}))


def test_is_principal_needs_degree_zero(reduced):
    C = reduced("X0(38)", 5)
    with pytest.raises(ValueError):
        is_principal(C, Divisor.of(C.places(1)[0]))


def test_cuspidal_class_order_x0_97(reduced):
    C = reduced("X0(97)", 5)
    Z = C.divisor_of_marked([(1, "0"), (-1, "inf")])
    assert class_order(C, Z, 16) == 8
    with pytest.raises(OrderCapExceeded):
        class_order(C, Z, 7)


def test_weierstrass_difference_has_order_two(small_curve):
    H = small_curve("H: y^2 = x^5 + 1", 7)
    Z = H.divisor_of_marked([(1, "W"), (-1, "inf")])
    assert class_order(H, Z, 6) == 2


def test_torsion_generators_check(reduced):
    m = load_curve("X0(97)")
    for p in (3, 5, 7):
        check_torsion(reduced("X0(97)", p), m.torsion)


def test_genus2_pencil_divisors_are_x_fibres(reduced):
    C = reduced("X0(23)", 5)
    found = w_d1_points(C, 2)
    # one fibre of x over each point of P^1(F_5)
    assert len(found) == C.p + 1
    inf = C.infinity_divisor()
    assert all(is_principal(C, D - inf) for D in found)


def test_no_degree_one_pencils(reduced):
    assert w_d1_points(reduced("X0(38)", 5), 1) == []


def test_mu_of_fixed_divisor_vanishes(reduced):
    C = reduced("X0(97)", 5)
    D = Divisor()
    for pl in C.places(1)[:3]:
        D = D + Divisor.of(pl) + Divisor.of(C.apply_involution("w97", pl))
    assert mu_image(C, D, "w97") == Divisor()


def test_x0_97_sieve_small_primes():
    res = sieve(load_curve("X0(97)"), 5, primes=(3, 5))
    assert res.per_prime[3] == [(0,)]
    assert res.per_prime[5] == [(1,), (7,)]
    assert res.intersection == [] and res.conclusion == "empty"


def test_sieve_errors():
    with pytest.raises(CurveError):
        sieve(load_curve("X0(38)"), 3, primes=(5,))
    with pytest.raises(CurveError):
        sieve(load_curve("X0(97)"), 5, primes=(97,))


# --- property suite 7d

@given(st.integers(-20, 20))
def test_class_order_of_multiple(reduced, k):
    C = reduced("X0(97)", 3)
    Z = C.divisor_of_marked([(1, "0"), (-1, "inf")])
    assert class_order(C, k * Z, 8) == 8 // math.gcd(k, 8)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_principality_is_a_congruence(small_curve, i, j, k):
    # E(F_5) = {O, (0,0), (2,0), (3,0)}, all of order 2
    E = small_curve("E: y^2 = x^3 + x", 5)
    pts = E.places(1)
    O = E.marked_place("O")
    Z = [Divisor({P: 1, O: -1}) if P != O else Divisor() for P in pts]
    a, b, c = Z[i], Z[j], Z[k]
    assert is_principal(E, a - a)
    assert is_principal(E, a - b) == is_principal(E, b - a)
    if is_principal(E, a - b) and is_principal(E, b - c):
        assert is_principal(E, a - c)
    assert is_principal(E, 2 * a)
    # the group is Z/2 x Z/2: the three nonzero classes sum to zero
    s = Z[0] + Z[1] + Z[2] + Z[3]
    assert is_principal(E, s)


@given(st.integers(1, 6), st.integers(1, 6))
def test_addition_respects_principality(reduced, a, b):
    C = reduced("X0(23)", 3)
    inf = C.infinity_divisor()
    fibres = w_d1_points(C, 2)
    Z1 = fibres[a % len(fibres)] - inf
    Z2 = fibres[b % len(fibres)] - inf
    assert is_principal(C, Z1) and is_principal(C, Z2)
    assert is_principal(C, Z1 + Z2) and is_principal(C, Z1 - Z2)
