import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from rsgmd.gf import FieldError, build_field
from rsgmd.poly import (
    NEG_INF,
    FieldMismatchError,
    Poly,
    poly_add,
    poly_divmod,
    poly_eval,
    poly_eval_many,
    poly_gcd,
    poly_mul,
    poly_scale,
    proportional,
)

F = build_field(4, 0x13)

coeff_lists = st.lists(st.integers(0, 15), max_size=9)
polys = coeff_lists.map(lambda c: Poly(F, c))


def naive_mul(a, b):
    out = [0] * (len(a.coeffs) + len(b.coeffs))
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            out[i + j] ^= F.mul(int(x), int(y))
    return Poly(F, out)


def test_zero_degree_and_trimming():
    assert Poly(F, [0, 0]).degree == NEG_INF
    assert Poly(F, [1, 2, 0, 0]).degree == 1


def test_self_addition_cancels():
    p = Poly(F, [3, 7, 1])
    assert poly_add(p, p).is_zero()


def test_multiplicative_identity():
    p = Poly(F, [3, 7, 1])
    assert poly_mul(p, Poly.one(F)) == p


def test_scale_by_zero():
    z = poly_scale(Poly(F, [1, 0, 1]), 0)
    assert z.is_zero() and z.degree == NEG_INF


def test_square_of_x_plus_one():
    # (x+1)^2 = x^2 + 1 over any field of characteristic 2
    q, r = poly_divmod(Poly(F, [1, 0, 1]), Poly(F, [1, 1]))
    assert q == Poly(F, [1, 1]) and r.is_zero()


def test_divmod_small_dividend():
    a, b = Poly(F, [5, 1]), Poly(F, [1, 2, 3])
    q, r = poly_divmod(a, b)
    assert q.is_zero() and r == a


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(Poly(F, [1]), Poly.zero(F))


@given(polys, polys)
def test_mul_matches_schoolbook(a, b):
    assert poly_mul(a, b) == naive_mul(a, b)


@given(polys, polys)
def test_divmod_round_trip(a, b):
    assume(not b.is_zero())
    q, r = poly_divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, st.integers(0, 15))
def test_eval_matches_horner(p, x0):
    want = 0
    for c in reversed(p.coeffs):
        want = F.mul(want, x0) ^ int(c)
    assert poly_eval(p, x0) == want
    assert poly_eval_many(p, np.array([x0]))[0] == want


def test_eval_basics():
    assert poly_eval(Poly.zero(F), 7) == 0
    assert poly_eval(Poly(F, [9, 1]), 9) == 0  # x - a at a
    gf4 = build_field(2, 0x7)
    assert poly_eval(Poly(gf4, [1, 1, 1]), gf4.alpha) == 0


def test_from_roots():
    roots = [2, 5, 11]
    p = Poly.from_roots(F, roots)
    assert p.degree == 3 and p.lead == 1
    assert all(poly_eval(p, a) == 0 for a in roots)


def test_gcd_examples():
    p = Poly(F, [4, 0, 2])
    assert poly_gcd(p, Poly.zero(F)) == p.monic()
    a, b, c = 3, 6, 9
    g = poly_gcd(Poly.from_roots(F, [a, b]), Poly.from_roots(F, [a, c]))
    assert g == Poly.from_roots(F, [a])
    with pytest.raises(FieldError):
        poly_gcd(Poly.zero(F), Poly.zero(F))


@given(polys, polys, polys)
def test_gcd_divides_both(a, b, h):
    assume(not h.is_zero() and not (a.is_zero() and b.is_zero()))
    g = poly_gcd(a * h, b * h)
    assert poly_divmod(a * h, g)[1].is_zero()
    assert poly_divmod(b * h, g)[1].is_zero()
    assert poly_divmod(g, h.monic())[1].is_zero()


def test_proportional():
    p = Poly(F, [1, 2, 3])
    assert proportional(p, p * 7)
    assert not proportional(p, p + Poly.one(F))


def test_text_round_trip():
    p = Poly(F, [0, 0xB, 7])
    assert Poly.from_text(F, p.to_text()) == p


def test_mixed_fields_rejected():
    g = build_field(3, 0xB)
    with pytest.raises(FieldMismatchError):
        Poly(F, [1]) + Poly(g, [1])


def test_derivative_char2():
    from rsgmd import build_field
    from rsgmd.poly import Poly

    f = build_field(4)
    p = Poly(f, [7, 3, 5, 2, 9])  # 7 + 3x + 5x^2 + 2x^3 + 9x^4
    assert p.derivative() == Poly(f, [3, 0, 2])
    assert Poly(f, [4]).derivative().is_zero()
    a, b = Poly(f, [1, 2, 3]), Poly(f, [5, 0, 7, 1])
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()
