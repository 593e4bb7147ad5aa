import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zpmcyclic.errors import MixedRings, NonUnitLeadingCoefficient, NotAUnit, NotPrime
from zpmcyclic.ring_poly import (
    NEG_INF,
    Poly,
    RingParams,
    change_ring,
    parse_poly,
    poly_divmod,
    poly_mul,
    quotient_reduce,
    reciprocal,
    reduce_mod_p,
    scalar_inverse,
    to_text,
)

Z8 = RingParams(2, 3)
Z9 = RingParams(3, 2)


def P(coeffs, ring=Z8):
    return Poly(tuple(coeffs), ring)


def brute_inverse(a, q):
    return next(b for b in range(q) if a * b % q == 1)


def convolve_oracle(f, g, q):
    if not f or not g:
        return ()
    out = np.convolve(np.array(f, dtype=object), np.array(g, dtype=object)) % q
    out = list(out)
    while out and out[-1] == 0:
        out.pop()
    return tuple(int(c) for c in out)


# ---- RingParams -----------------------------------------------------------


def test_ring_params_modulus():
    assert Z8.q == 8
    assert RingParams(3, 40).q == 3**40


@pytest.mark.parametrize("p", [1, 4, 9, 15])
def test_composite_p_rejected(p):
    with pytest.raises(NotPrime):
        RingParams(p, 2)


# ---- scalar_inverse -------------------------------------------------------


@pytest.mark.parametrize(
    "a,p,m,expected",
    [(1, 2, 3, 1), (3, 2, 3, 3), (5, 3, 2, 2)],
)
def test_scalar_inverse_examples(a, p, m, expected):
    ring = RingParams(p, m)
    assert expected == brute_inverse(a, ring.q)
    assert scalar_inverse(a, ring) == expected


def test_scalar_inverse_non_unit():
    with pytest.raises(NotAUnit):
        scalar_inverse(2, Z8)


@pytest.mark.parametrize("p,m", [(2, 1), (2, 5), (3, 1), (3, 6), (5, 3)])
def test_scalar_inverse_all_units(p, m):
    ring = RingParams(p, m)
    for a in range(ring.q):
        if a % p:
            assert a * scalar_inverse(a, ring) % ring.q == 1


# ---- normal form ----------------------------------------------------------


def test_normal_form_and_zero_degree():
    f = P([9, 0, 8, 16])
    assert f.coeffs == (1,)
    z = P([0, 8])
    assert z.coeffs == ()
    assert z.degree == NEG_INF
    assert z.degree < 0 and not isinstance(z.degree, int)


# ---- poly_mul -------------------------------------------------------------


def test_mul_example():
    f = P([1, 1])
    g = P([1, 2, 5, 1])
    assert poly_mul(f, g) == P([1, 3, 7, 6, 1])
    assert convolve_oracle(f.coeffs, g.coeffs, 8) == (1, 3, 7, 6, 1)


def test_mul_identity():
    f = P([1, 2, 5, 1])
    assert f * P([1]) == f


def test_example_product_is_x7_plus_1():
    prod = P([1, 1]) * P([1, 2, 5, 1]) * P([1, 5, 2, 1])
    assert prod == P([1, 0, 0, 0, 0, 0, 0, 1])


def test_mixed_rings():
    with pytest.raises(MixedRings):
        P([1, 1]) * P([1, 1], Z9)


coeff_lists = st.lists(st.integers(0, 80), max_size=8)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_mul_ring_axioms(a, b, c):
    f, g, h = P(a, Z9), P(b, Z9), P(c, Z9)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f * g).coeffs == convolve_oracle(f.coeffs, g.coeffs, 9)


# ---- poly_divmod ----------------------------------------------------------


def test_divmod_self():
    f = P([1, 2, 5, 1])
    assert poly_divmod(f, f) == (P([1]), P([]))


def test_divmod_x7_minus_1_by_x_minus_1():
    q, r = poly_divmod(Poly.x_n_minus_1(7, Z8), P([7, 1]))
    assert q == P([1] * 7)
    assert r.is_zero()


def test_divmod_non_unit_lead():
    with pytest.raises(NonUnitLeadingCoefficient):
        poly_divmod(P([0, 0, 1]), P([1, 2]))


@given(coeff_lists, st.lists(st.integers(0, 80), max_size=5))
def test_divmod_reconstruction(a, b):
    f = P(a, Z9)
    d = P(list(b) + [1], Z9)  # monic
    q, r = poly_divmod(f, d)
    assert q * d + r == f
    assert r.degree < d.degree


# ---- quotient_reduce ------------------------------------------------------


def test_quotient_reduce_examples():
    assert quotient_reduce(P([1, 0, 0, 0, 0, 0, 0, 1]), 7) == P([2])
    assert quotient_reduce(P([4, 0, 0, 0, 0, 0, 0, 4]), 7).is_zero()
    f = P([3, 1, 4])
    assert quotient_reduce(f, 7) == f


@given(coeff_lists, coeff_lists, st.integers(1, 9))
def test_quotient_reduce_is_multiplicative(a, b, n):
    f, g = P(a), P(b)
    lhs = quotient_reduce(f * g, n)
    rhs = quotient_reduce(quotient_reduce(f, n) * quotient_reduce(g, n), n)
    assert lhs == rhs


# ---- reciprocal -----------------------------------------------------------


def test_reciprocal_examples():
    assert reciprocal(P([1, 2, 5, 1])) == P([1, 5, 2, 1])
    assert reciprocal(P([1, 1])) == P([1, 1])


def test_reciprocal_requires_unit_constant():
    with pytest.raises(NotAUnit):
        reciprocal(P([2, 1]))


@given(st.integers(0, 8).filter(lambda a: a % 3), coeff_lists)
def test_reciprocal_involution(c0, rest):
    f = P([c0] + list(rest) + [1], Z9)
    g = reciprocal(f)
    assert g.degree == f.degree
    assert reciprocal(g) == f


# ---- reduce_mod_p ---------------------------------------------------------


def test_reduce_mod_p_examples():
    z2 = RingParams(2, 1)
    assert reduce_mod_p(P([1, 2, 5, 1])) == Poly((1, 0, 1, 1), z2)
    assert reduce_mod_p(P([1, 5, 2, 1])) == Poly((1, 1, 0, 1), z2)
    assert reduce_mod_p(P([])).is_zero()


@given(coeff_lists, coeff_lists)
def test_reduce_mod_p_is_ring_morphism(a, b):
    f, g = P(a, Z9), P(b, Z9)
    assert reduce_mod_p(f * g) == reduce_mod_p(f) * reduce_mod_p(g)


def test_change_ring_requires_same_prime():
    with pytest.raises(MixedRings):
        change_ring(P([1]), Z9)


# ---- text / json forms ----------------------------------------------------


@pytest.mark.parametrize(
    "coeffs,text",
    [
        ((2, 0, 0, 4, 6, 4, 4, 0, 2), "2x^8+4x^6+4x^5+6x^4+4x^3+2"),
        ((4, 4), "4x+4"),
        ((1, 1), "x+1"),
        ((), "0"),
        ((1,), "1"),
        ((0, 0, 1), "x^2"),
    ],
)
def test_text_form(coeffs, text):
    f = P(coeffs)
    assert to_text(f) == text
    assert parse_poly(text, Z8) == f


def test_json_form():
    assert P([1, 2, 5, 1]).to_json() == [1, 2, 5, 1]


@settings(max_examples=50)
@given(coeff_lists)
def test_text_roundtrip(a):
    f = P(a, Z9)
    assert parse_poly(to_text(f), Z9) == f
