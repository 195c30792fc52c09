"""Integer polynomials, Weil-polynomial arithmetic and normalized roots."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st
from sympy import Poly, cyclotomic_poly, resultant, symbols

from ssweil.errors import (CountOutOfRange, InputError, NonExactDivision,
                           NonIntegerCoefficient, NotSupersingular, OddMultiplicity)
from ssweil.intpoly import (IntPoly, abelian_count, counts_from_lpoly, cyclotomic, e_vector,
                            functional_equation_ok, graeffe_power, is_supersingular,
                            lpoly_from_counts, negate_roots, nwn_orders, ord2, ord_p,
                            period_parity, period_parity_from_e, split_prime_power,
                            weil_data_from_lpoly)
from ssweil.rootsofunity import nwn_exponents

T, X = symbols("T X")


def sym(P: IntPoly):
    return Poly(list(reversed(P.coeffs)), T)


def test_arithmetic_and_reverse():
    P = IntPoly((2, 0, 1))
    assert str(P) == "T^2 + 2"
    assert (P * P).coeffs == (4, 0, 4, 0, 1)
    assert P(3) == 11
    assert P.reverse().coeffs == (1, 0, 2)
    assert (P * P).exact_div(P) == P
    with pytest.raises(NonExactDivision):
        P.exact_div(IntPoly((1, 1)))


@pytest.mark.parametrize("n", list(range(1, 40)))
def test_cyclotomic_matches_sympy(n):
    assert sym(cyclotomic(n)) == Poly(cyclotomic_poly(n, T), T)


@pytest.mark.parametrize("P,m", [((2, 0, 1), 2), ((2, 2, 1), 3), ((4, 2, 1), 2),
                                 ((4, 0, 2, 1, 1), 6), ((9, 3, 3, 1, 1), 5)])
def test_graeffe_matches_resultant_oracle(P, m):
    P = IntPoly(P)
    Px = Poly(list(reversed(P.coeffs)), X)
    want = Poly(resultant(Px.as_expr(), T - X ** m, X), T)
    if want.LC() < 0:
        want = -want
    assert sym(graeffe_power(P, m)) == want


def test_graeffe_frozen():
    assert graeffe_power(IntPoly((2, 0, 1)), 1) == IntPoly((2, 0, 1))
    assert graeffe_power(IntPoly((2, 0, 1)), 2) == IntPoly((4, 4, 1))


def test_negate_roots_frozen():
    assert negate_roots(IntPoly((2, 0, 1))) == IntPoly((2, 0, 1))
    assert negate_roots(IntPoly((4, 2, 2, 1, 1))) == IntPoly((4, -2, 2, -1, 1))


# (charpoly, q) -> normalized orders, exponents; values checked by hand
NWN_ORACLE = [
    ((2, 0, 1), 2, (4, 4), (Fraction(1, 4), Fraction(3, 4))),
    ((2, 2, 1), 2, (8, 8), (Fraction(3, 8), Fraction(5, 8))),
    ((7, 0, 1), 7, (4, 4), (Fraction(1, 4), Fraction(3, 4))),
    ((4, -4, 1), 4, (1, 1), (Fraction(0), Fraction(0))),
    ((4, 2, 1), 4, (3, 3), (Fraction(1, 3), Fraction(2, 3))),
    ((3, 3, 1), 3, (12, 12), (Fraction(5, 12), Fraction(7, 12))),
    ((9, 3, 1), 9, (3, 3), (Fraction(1, 3), Fraction(2, 3))),
]


@pytest.mark.parametrize("P,q,orders,exps", NWN_ORACLE)
def test_nwn_oracle(P, q, orders, exps):
    P = IntPoly(P)
    assert nwn_orders(P, q) == orders
    assert nwn_exponents(P, q) == exps


def test_period_parity_frozen():
    assert period_parity((4, 4), 1) == (2, 1)
    assert period_parity((8, 8), 1) == (4, 1)
    assert period_parity((1, 1), 2) == (1, -1)
    assert period_parity((3, 3), 2) == (3, -1)
    assert period_parity((12, 12), 1) == (6, 1)
    for orders, r in [((4, 4), 1), ((8, 8), 1), ((3, 3), 2), ((12, 12), 1), ((1, 1, 2, 2), 1)]:
        e = e_vector(orders, len(orders) // 2)
        assert period_parity_from_e(e, orders, r) == period_parity(orders, r)[0]


def test_e_vector_and_valuations():
    assert e_vector((4, 4, 12, 12, 12, 12), 3) == (2, 2, 2)
    assert e_vector((1, 1, 2, 2), 2) == (0, 1)
    with pytest.raises(OddMultiplicity):
        e_vector((1, 2, 2, 2), 2)
    assert ord2(48) == 4 and ord_p(250, 5) == 3
    assert split_prime_power(3 ** 5) == (3, 5)


def test_not_supersingular():
    P = IntPoly((5, -2, 1))          # y^2 = x^3 + x over F_5: ordinary
    assert functional_equation_ok(P, 5)
    assert not is_supersingular(P, 5)
    with pytest.raises(NotSupersingular):
        nwn_orders(P, 5)


def test_lpoly_from_counts_frozen():
    # y^2 = x^3 + x over F_3: 4 points; y^2 = x^5 - 1 over F_7: counts 8, 50
    assert lpoly_from_counts([4], 3, 1) == IntPoly((1, 0, 3))
    assert lpoly_from_counts([8, 50], 7, 2) == IntPoly((1, 0, 0, 0, 49))
    # Z^4 + Z = S^3 over F_2
    assert lpoly_from_counts([3, 5, 9], 2, 3) == IntPoly((1, 0, 0, 0, 0, 0, 8))
    with pytest.raises(CountOutOfRange):
        lpoly_from_counts([100], 3, 1)
    with pytest.raises(InputError):
        lpoly_from_counts([4, 10], 3, 1)


def test_non_integer_coefficient():
    # counts (3, 4) over q = 2 satisfy the Weil bounds but give a_2 = -1/2
    with pytest.raises(NonIntegerCoefficient):
        lpoly_from_counts([3, 4], 2, 2)


def test_abelian_count_and_weil_data():
    P = IntPoly((2, 0, 1))
    assert abelian_count(P, 1, 2) == 3 and abelian_count(P, 2, 2) == 9
    assert not weil_data_from_lpoly(IntPoly((1, 5, 2)), 2, 1).supersingular
    w = weil_data_from_lpoly(IntPoly((1, 0, 2)), 2, 1)
    assert (w.supersingular, w.nwn_orders, w.e_vector, w.period, w.parity) == \
        (True, (4, 4), (2,), 2, 1)
    with pytest.raises(InputError):
        weil_data_from_lpoly(IntPoly((1, 5, 3)), 2, 1)


def weil_product(q, betas):
    P = IntPoly((1,))
    for b in betas:
        P = P * IntPoly((q, -b, 1))
    return P


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11]), st.data())
def test_counts_roundtrip(q, data):
    g = data.draw(st.integers(1, 3))
    bound = int(2 * q ** 0.5)
    betas = [data.draw(st.integers(-bound, bound)) for _ in range(g)]
    L = weil_product(q, betas).reverse()
    counts = [counts_from_lpoly(L, q, g, m) for m in range(1, g + 1)]
    assume(all(N >= 0 for N in counts))
    assert lpoly_from_counts(counts, q, g) == L
    # power sums of a product of quadratics are additive in the factors
    for m in range(1, 4):
        s_m = sum(sum_powers_quadratic(q, b, m) for b in betas)
        assert counts_from_lpoly(L, q, g, m) == q ** m + 1 - s_m


def sum_powers_quadratic(q, beta, m):
    # alpha^m + alpha_bar^m by the linear recurrence s_m = beta s_{m-1} - q s_{m-2}
    s = [2, beta]
    for _ in range(m - 1):
        s.append(beta * s[-1] - q * s[-2])
    return s[m]
