import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from x0gonality.ffield import (FFElement, FieldError, embed, factor_univariate, least_irreducible, make_extension, pmul,
                               prime_field, roots)

FIELDS = [(2, 1), (2, 3), (3, 2), (5, 1), (5, 2), (7, 3), (13, 2), (2, 8)]


def test_prime_field_trivial_modulus():
    F = make_extension(5, 1)
    assert (F.p, F.k, F.q) == (5, 1, 5)
    assert len(F.modulus) == 2 and F.modulus[-1] == 1


def test_f9_orders_divide_8():
    F = make_extension(3, 2)
    assert all(8 % F.order(a) == 0 for a in range(1, 9))
    assert F.order(F.generator()) == 8


def test_f8_least_irreducible_modulus():
    # least monic irreducible cubic over F_2: x^3 + x + 1
    assert tuple(make_extension(2, 3).modulus) == (1, 1, 0, 1)
    assert tuple(least_irreducible(2, 3)) == (1, 1, 0, 1)


def test_extension_cached_and_scoped():
    assert make_extension(3, 4) is make_extension(3, 4)
    with pytest.raises(FieldError):
        make_extension(4, 1)
    with pytest.raises(FieldError):
        make_extension(17, 1)


def test_factor_x2_minus_1_mod_5():
    F = prime_field(5)
    assert factor_univariate(F, [4, 0, 1]) == [([1, 1], 1), ([4, 1], 1)]


def test_x2_plus_1_irreducible_mod_3():
    F = prime_field(3)
    assert factor_univariate(F, [1, 0, 1]) == [([1, 0, 1], 1)]


def test_x9_minus_x_is_product_of_degree_1_and_2_irreducibles():
    F = prime_field(3)
    f = [0, 2] + [0] * 7 + [1]
    facs = factor_univariate(F, f)
    assert all(m == 1 for _, m in facs)
    degs = sorted(len(g) - 1 for g, _ in facs)
    # 3 linear and (9 - 3) / 2 = 3 quadratic monic irreducibles
    assert degs == [1, 1, 1, 2, 2, 2]
    prod = [1]
    for g, _ in facs:
        prod = pmul(F, prod, g)
    assert prod == f


def test_factor_with_multiplicity():
    F = prime_field(7)
    f = pmul(F, pmul(F, [1, 1], [1, 1]), [3, 0, 1])   # (x+1)^2 (x^2+3)
    got = factor_univariate(F, f)
    assert ([1, 1], 2) in got
    prod = [1]
    for g, m in got:
        for _ in range(m):
            prod = pmul(F, prod, g)
    assert prod == f


def test_integers_map_through_the_prime_field():
    F = make_extension(3, 2)
    assert F(4) == F(1) and F(-1) == F(2)
    assert F([1, 1]).coeffs == [1, 1]


def test_embed_prime_subfield_fixed():
    F = prime_field(3)
    K = make_extension(3, 4)
    for a in range(3):
        assert embed(F(a), K) == K(a)


def test_embed_generator_f9_into_f81():
    F9, F81 = make_extension(3, 2), make_extension(3, 4)
    assert embed(FFElement(F9, F9.generator()), F81).order() == 8


def test_embed_rejects_bad_degree():
    with pytest.raises(FieldError):
        embed(FFElement(make_extension(3, 2), 4), make_extension(3, 3))


def test_roots_large_field_path():
    F = make_extension(13, 4)
    rng = random.Random(1)
    rs = sorted({F.random(rng) for _ in range(3)})
    f = [1]
    for r in rs:
        f = pmul(F, f, [F.neg(r), 1])
    assert roots(F, f) == rs


# --- field axioms and Frobenius (property suite 7e)

@st.composite
def field_and_elements(draw, n=3):
    p, k = draw(st.sampled_from(FIELDS))
    F = make_extension(p, k)
    return F, [draw(st.integers(0, F.q - 1)) for _ in range(n)]


@given(field_and_elements())
def test_ring_axioms(fe):
    F, (a, b, c) = fe
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, 0) == a and F.mul(a, 1) == a
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a


@given(field_and_elements(1))
def test_inverse_and_lagrange(fe):
    F, (a,) = fe
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.q - 1) == 1
        assert (F.q - 1) % F.order(a) == 0
    else:
        with pytest.raises(ZeroDivisionError):
            F.inv(0)


@given(field_and_elements(2))
def test_frobenius_is_field_automorphism_of_order_k(fe):
    F, (a, b) = fe
    fr = F.frobenius
    assert fr(F.add(a, b)) == F.add(fr(a), fr(b))
    assert fr(F.mul(a, b)) == F.mul(fr(a), fr(b))
    assert fr(a, F.k) == a
    d = F.degree_of(a)
    assert F.k % d == 0 and fr(a, d) == a
    assert all(fr(a, e) != a for e in range(1, d))


@given(field_and_elements(2))
def test_vectorised_matches_scalar(fe):
    import numpy as np
    F, (a, b) = fe
    A, B = np.array([a, b, a]), np.array([b, a, 0])
    assert list(F.vadd(A, B)) == [F.add(x, y) for x, y in zip(A, B)]
    assert list(F.vmul(A, B)) == [F.mul(x, y) for x, y in zip(A, B)]


@given(st.sampled_from([(2, 2, 4), (3, 1, 3), (3, 2, 4), (5, 1, 2), (2, 3, 6)]),
       st.integers(0, 10**6), st.integers(0, 10**6))
def test_embedding_is_ring_homomorphism(tower, x, y):
    p, a, b = tower
    S, T = make_extension(p, a), make_extension(p, b)
    u, v = FFElement(S, x % S.q), FFElement(S, y % S.q)
    assert embed(u + v, T) == embed(u, T) + embed(v, T)
    assert embed(u * v, T) == embed(u, T) * embed(v, T)
