"""Acceptance suite: eleven criteria, one PASS/FAIL line each at the end of the run.

Run with ``pytest tests/test_acceptance.py`` (or ``python tests/test_acceptance.py``).
Cases that are known to disagree with the printed source values are marked
``xfail(strict=True)``: the assertion is the exact criterion, the case still
counts as FAIL in the summary, and notes/decisions.md records the analysis.
"""

from __future__ import annotations

import math
import random
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from ssweil import curves as cv
from ssweil import finitefield as ff
from ssweil.errors import SingularModel
from ssweil.intpoly import (IntPoly, counts_from_lpoly, graeffe_power, lpoly_from_counts,
                            negate_roots, newton_polygon_supersingular,
                            roots_of_unity_supersingular)
from ssweil.rootsofunity import order_of
from ssweil.weilclass import (ELLIPTIC_TABLE, FULLY_MAXIMAL, FULLY_MINIMAL, MIXED,
                              SURFACE_TABLE, admissible_instances, check_surface_row,
                              elliptic_e_signed, elliptic_table, surface_table)
from ssweil.twistlab import elliptic as el
from ssweil.twistlab.fermat import fermat_mixed
from ssweil.twistlab.genus2 import quintic_type
from ssweil.twistlab.genus3 import chi_factor, genus3_pipeline, lpoly_over_square
from ssweil.twistlab.groups import build_as34_group, frobenius_classes

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def criterion(n, title):
    return pytest.mark.criterion(n, title)


# -- 1: elliptic trace table -------------------------------------------------------------------

def _float_orders(beta, q):
    """Orders of z, z-bar with z + z-bar = beta / sqrt(q), from the angle."""
    theta = math.acos(max(-1.0, min(1.0, beta / (2 * math.sqrt(q)))))
    frac = Fraction(theta / (2 * math.pi)).limit_denominator(200)
    return (frac.denominator, frac.denominator)


def _census_betas(p, r):
    F = ff.make_field(p, r)
    out = set()
    for a in el.family_models(F):
        beta = F.q + 1 - cv.count_points(cv.weierstrass(F, *a))
        if beta % p == 0:
            out.add(beta)
    return out


@criterion(1, "elliptic trace table: orders, ord2, period, parity")
@pytest.mark.parametrize("p", SMALL_PRIMES)
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_c01_elliptic_table(p, r):
    q = p ** r
    rows = elliptic_table(p, r)
    admissible = [row for row in ELLIPTIC_TABLE if row.condition(p, r)]
    assert [ec.case for ec in rows] == [row.label for row in admissible]
    for ec, row in zip(rows, admissible):
        printed_orders = tuple(sorted(order_of(x) for x in row.nwn))
        assert ec.orders == printed_orders == _float_orders(ec.beta, q)
        assert ec.e == elliptic_e_signed(row)
        assert (ec.period, ec.parity) == (row.period, row.parity)
    # every admissible trace occurs, and no other supersingular trace does
    n_models = q ** (2 if p >= 5 else 3 if p == 3 else 4)
    if n_models <= 1 << 15:
        assert _census_betas(p, r) == {ec.beta for ec in rows}


# -- 2: surface table --------------------------------------------------------------------------

KNOWN_SURFACE = {
    "2b": "printed NWN, parity and E/L column disagree with the charpoly (0, q)",
    "7b": "Graeffe square is the W1- polynomial, the row prints another case",
}


def _surface_cases():
    out = []
    for row in SURFACE_TABLE:
        for p, r in admissible_instances(row, 2):
            marks = []
            if row.case in KNOWN_SURFACE:
                marks = [pytest.mark.xfail(strict=True, reason=KNOWN_SURFACE[row.case])]
            out.append(pytest.param(row, p, r, id=f"{row.case}-q{p ** r}", marks=marks))
    return out


@criterion(2, "surface table: NWN, mu, delta and the Graeffe square")
@pytest.mark.parametrize("row,p,r", _surface_cases())
def test_c02_surface_table(row, p, r):
    chk = check_surface_row(row, p, r)
    assert chk.nwn_ok and chk.mu_ok and chk.delta_ok and chk.w_ok, chk
    a1, a2 = row.coeffs(p, r)
    assert surface_table(p, r, a1, a2).case == row.case


# -- 3: elliptic type by field of the invariant --------------------------------------------------

@criterion(3, "supersingular elliptic curves: j in F_p fully maximal, else mixed")
@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_c03_elliptic_types(p):
    F2 = ff.make_field(p, 2)
    js = el.supersingular_j(p)
    assert len(js) == el.expected_supersingular_count(p)
    for j in js:
        rep = el.elliptic_type(p, j)
        if ff.contains(F2, j, 1):
            assert rep.field_r == 1 and rep.verdict.label == FULLY_MAXIMAL
            assert all(par == 1 for _, _, par in rep.twists)
        else:
            assert rep.field_r == 2 and rep.verdict.label == MIXED
            assert {par for _, _, par in rep.twists} == {1, -1}


@criterion(3, "supersingular elliptic curves: j in F_p fully maximal, else mixed")
def test_c03_invariant_outside_prime_field():
    """No supersingular j lies outside F_p for p <= 13; p = 37 is the first
    prime where one does, and there the verdict over F_{p^2} is mixed."""
    for p in SMALL_PRIMES:
        F2 = ff.make_field(p, 2)
        assert all(ff.contains(F2, j, 1) for j in el.supersingular_j(p))
    F2 = ff.make_field(37, 2)
    outside = [j for j in el.supersingular_j(37) if not ff.contains(F2, j, 1)]
    assert outside
    for j in outside:
        rep = el.elliptic_type(37, j)
        assert rep.verdict.label == MIXED
        assert {par for _, _, par in rep.twists} == {1, -1}


# -- 4, 5, 6: the genus-3 family -------------------------------------------------------------------

def _pairs(r):
    q = 2 ** r
    return [(c, d) for c in range(1, q) for d in range(1, q)]


@criterion(4, "genus-3 family: pipeline verdict equals the closed form")
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_c04_genus3_verdicts(r):
    K = ff.make_field(2, r)
    for c, d in _pairs(r):
        rep = genus3_pipeline(c, d, r)
        h_rational = K.trace(c) == 0
        if r % 2:
            want = (FULLY_MAXIMAL, FULLY_MAXIMAL) if h_rational else (MIXED, MIXED)
        elif r % 4 == 2:
            want = (MIXED, MIXED) if h_rational else (FULLY_MINIMAL, FULLY_MINIMAL)
        else:
            want = (FULLY_MINIMAL, MIXED) if h_rational else (FULLY_MINIMAL, FULLY_MINIMAL)
        assert (rep.curve.label, rep.jacobian.label) == want, (c, d)
        discrepancy = rep.curve.label != rep.jacobian.label
        assert discrepancy == (r % 4 == 0 and h_rational)


@criterion(5, "genus-3 family: e-vector equals the table cell")
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_c05_genus3_e_vectors(r):
    K = ff.make_field(2, r)
    for c, d in _pairs(r):
        rep = genus3_pipeline(c, d, r)
        h_rational = K.trace(c) == 0
        if r % 2:
            want = (2, 2, 2)
        elif r % 4 == 2:
            want = (1, 1, 1) if h_rational else (0, 1, 1)
        else:
            want = (0, 0, 0) if h_rational else (0, 0, 1)
        assert rep.e_vector == rep.e_table == want, (c, d)


def _split_inert_brute(K, c, d):
    """Split/inert K-points of E1: R^2 + R = (d/c^2) S^3, by counting Z with Z^2 + Z = c R."""
    c1 = K.div(d, K.mul(c, c))
    S1 = I1 = 0
    for S in K.elements():
        rhs = K.mul(c1, K.pow(S, 3))
        for R in K.elements():
            if K.add(K.mul(R, R), R) != rhs:
                continue
            w = K.mul(c, R)
            n = sum(1 for Z in K.elements() if K.add(K.mul(Z, Z), Z) == w)
            assert n in (0, 2)
            if n:
                S1 += 1
            else:
                I1 += 1
    return S1, I1


@criterion(6, "genus-3 family: L-polynomial factorisations and the split/inert count")
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_c06_genus3_identities(r):
    K = ff.make_field(2, r)
    for c, d in _pairs(r):
        spec = cv.as34(K, c, d)
        L_X = cv.lpoly(spec)
        E1, E2, E3 = cv.quotient_curves(spec)
        Kp = E2.field
        L_Xp = L_X if Kp.r == r else lpoly_over_square(L_X)
        E1p = E1 if Kp.r == r else cv.base_change(E1, 2)
        assert L_Xp == cv.lpoly(E1p) * cv.lpoly(E2) * cv.lpoly(E3)
        data = chi_factor(spec)
        assert L_X == cv.lpoly(E1) * data.L_chi
        S1, I1 = _split_inert_brute(K, c, d)
        assert (S1, I1) == (data.S1, data.I1)
        assert data.L_chi[1] == S1 - I1
        if K.trace(c) == 1:
            assert S1 == I1


# -- 7: Frobenius class counts -----------------------------------------------------------------

# printed class lists in the group's own labels
PRINTED_1B = [{"id", "tau"}, {"ups", "ups*tau"}, {"sigma", "tau*sigma"},
              {"ups*sigma", "ups*tau*sigma"}, {"sigma^2", "tau*sigma^2"},
              {"ups*sigma^2", "ups*tau*sigma^2"}]
PRINTED_1C = [{"id", "sigma", "sigma^2"}, {"ups", "ups*sigma", "ups*sigma^2"},
              {"tau", "tau*sigma", "tau*sigma^2"},
              {"ups*tau", "ups*tau*sigma", "ups*tau*sigma^2"}]
PRINTED_1D = [{"id", "sigma", "sigma^2", "tau", "tau*sigma", "tau*sigma^2"},
              {"ups", "ups*sigma", "ups*sigma^2", "ups*tau", "ups*tau*sigma",
               "ups*tau*sigma^2"}]
PRINTED_2B_FIRST = {"id", "tau"} | {"kappa"} | {f"kappa^{j}" for j in range(2, 9)} | {
    "ups*tau*kappa", "ups*kappa^2", "tau*kappa^3", "ups*tau*kappa^4", "ups*kappa^5",
    "tau*kappa^6", "ups*tau*kappa^7", "ups*kappa^8"}


def _class_sets(G):
    return sorted((set(c.labels) for c in frobenius_classes(G)), key=sorted)


def _c7_cases():
    out = []
    for r in range(1, 7):
        for h_rational in (True, False):
            want = (12 if h_rational else 6) if r % 2 == 0 else (4 if h_rational else 2)
            out.append(pytest.param(False, r, h_rational, want,
                                    id=f"c!=1-r{r}-h{'in' if h_rational else 'out'}"))
    for r in range(1, 7):
        marks = []
        if r % 2 == 0:
            marks = [pytest.mark.xfail(strict=True, reason="generic count is 6 or 12, not 10")]
        out.append(pytest.param(True, r, r % 2 == 0, 10 if r % 2 == 0 else 2,
                                id=f"c=1-r{r}", marks=marks))
    return out


@criterion(7, "genus-3 automorphism group: Frobenius class counts and memberships")
@pytest.mark.parametrize("c_is_one,r,h_rational,want", _c7_cases())
def test_c07_class_counts(c_is_one, r, h_rational, want):
    G, _ = build_as34_group(c_is_one, r, h_rational)
    assert len(frobenius_classes(G)) == want


@criterion(7, "genus-3 automorphism group: Frobenius class counts and memberships")
def test_c07_memberships():
    for r, h_rational, printed in [(2, False, PRINTED_1B), (4, False, PRINTED_1B),
                                   (1, True, PRINTED_1C), (3, True, PRINTED_1C),
                                   (1, False, PRINTED_1D), (3, False, PRINTED_1D)]:
        G, _ = build_as34_group(False, r, h_rational)
        assert _class_sets(G) == sorted(printed, key=sorted)
    for r in (1, 3, 5):
        G, _ = build_as34_group(True, r, False, h_f4=2)
        sets = _class_sets(G)
        assert PRINTED_2B_FIRST in sets and len(sets) == 2
        assert not any({"id", "ups"} <= s for s in sets)


# -- 8: Fermat quartic ---------------------------------------------------------------------------

@criterion(8, "Fermat quartic: supersingular, maximal over F_{p^2}, mixed")
@pytest.mark.parametrize("p,n", [(3, 28), (7, 92)])
def test_c08_fermat_quartic(p, n):
    verdict, ev = fermat_mixed(4, p)
    assert ev.count_p2 == ev.expected_p2 == p * p + 6 * p + 1 == n
    assert ev.weil is not None and ev.weil.supersingular
    assert sorted(ev.eigenvalues) == [-1, -1, 1]
    assert verdict.label == MIXED


# -- 9: genus-2 curve y^2 = x^5 - 1 over F_7 -------------------------------------------------------

@criterion(9, "y^2 = x^5 - 1 over F_7: (a1, a2) = (0, 0), fully maximal")
def test_c09_quintic_f7():
    F = ff.make_field(7, 1)
    rep = quintic_type(F, F.neg(1))
    assert (rep.weil.lpoly[1], rep.weil.lpoly[2]) == (0, 0)
    assert rep.weil.parity == 1 and rep.twist_weil.parity == 1
    assert rep.verdict.label == FULLY_MAXIMAL


# -- 10: isomorphism-class census -------------------------------------------------------------------

@criterion(10, "elliptic census: parity balance 1 - (-1/p), odd r all +1")
@pytest.mark.parametrize("p,r", [(3, 2), (5, 2), (7, 2)])
def test_c10_census_even(p, r):
    rec = el.census_elliptic(p, r)
    assert rec.plus - rec.minus == 1 - el.kronecker_minus4(p)


@criterion(10, "elliptic census: parity balance 1 - (-1/p), odd r all +1")
@pytest.mark.parametrize("p,r", [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1),
                                 (2, 3), (3, 3), (5, 3)])
def test_c10_census_odd(p, r):
    rec = el.census_elliptic(p, r)
    assert rec.rows and all(row.parity == 1 for row in rec.rows)


# -- 11: property suites ---------------------------------------------------------------------------

PROPS = settings(max_examples=200, deadline=None, derandomize=True,
                 suppress_health_check=[HealthCheck.filter_too_much])

monic = st.lists(st.integers(-6, 6), min_size=1, max_size=4).map(lambda cs: IntPoly(cs + [1]))


@criterion(11, "property suites")
@PROPS
@given(monic, st.integers(1, 4), st.integers(1, 4))
def test_c11_graeffe_composition(P, a, b):
    assert graeffe_power(graeffe_power(P, a), b) == graeffe_power(P, a * b)


@criterion(11, "property suites")
@PROPS
@given(monic)
def test_c11_negate_roots_involution(P):
    assert negate_roots(negate_roots(P)) == P
    assert graeffe_power(negate_roots(P), 2) == graeffe_power(P, 2)


PRIME_POWERS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (2, 4),
                (11, 1), (13, 1), (3, 3)]


def _ge_sqrt(X, Y, q):
    """X >= Y sqrt(q), exactly."""
    if Y <= 0:
        return X >= 0 or X * X <= Y * Y * q
    return X >= 0 and X * X >= Y * Y * q


def _is_weil_g2(a1, a2, q):
    # T^4 + a1 T^3 + a2 T^2 + q a1 T + q^2 = (T^2 + b1 T + q)(T^2 + b2 T + q) with
    # b1, b2 the roots of f(x) = x^2 - a1 x + (a2 - 2q), both real in [-2 sqrt q, 2 sqrt q]
    c0 = a2 - 2 * q
    return (a1 * a1 - 4 * c0 >= 0 and a1 * a1 <= 16 * q
            and _ge_sqrt(4 * q + c0, 2 * a1, q) and _ge_sqrt(4 * q + c0, -2 * a1, q))


@st.composite
def weil_polys(draw):
    p, r = draw(st.sampled_from(PRIME_POWERS))
    q = p ** r
    g = draw(st.integers(1, 2))
    pk = p ** ((r + 1) // 2)
    biased = draw(st.booleans())
    if g == 1:
        bound = math.isqrt(4 * q)
        a = draw(st.integers(-(bound // pk), bound // pk)) * pk if biased else \
            draw(st.integers(-bound, bound))
        return IntPoly((q, a, 1)), q
    b1 = math.isqrt(16 * q)
    if biased:
        a1 = draw(st.integers(-(b1 // pk), b1 // pk)) * pk
        a2 = draw(st.integers(-2, 6)) * q
    else:
        a1 = draw(st.integers(-b1, b1))
        a2 = draw(st.integers(-2 * q, 6 * q))
    assume(_is_weil_g2(a1, a2, q))
    return IntPoly((q * q, q * a1, a2, a1, 1)), q


@criterion(11, "property suites")
@settings(max_examples=1000, deadline=None, derandomize=True,
          suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(weil_polys())
def test_c11_newton_polygon_vs_roots_of_unity(Pq):
    P, q = Pq
    assert newton_polygon_supersingular(P, q) == roots_of_unity_supersingular(P, q)


@criterion(11, "property suites")
@PROPS
@given(weil_polys(), st.integers(1, 4))
def test_c11_lpoly_counts_round_trip(Pq, m):
    P, q = Pq
    g = P.degree // 2
    L = P.reverse()
    counts = [counts_from_lpoly(L, q, g, k) for k in range(1, g + 1)]
    assume(all(N >= 0 for N in counts))
    assert lpoly_from_counts(counts, q, g) == L
    # counts over F_{q^m} agree with the Graeffe transform
    Lm = graeffe_power(P, m).reverse()
    assert counts_from_lpoly(Lm, q ** m, g, 1) == counts_from_lpoly(L, q, g, m)


@criterion(11, "property suites")
def test_c11_odd_order_twists_keep_parity():
    checked = 0
    for r in (1, 2, 3, 4):
        for c, d in _pairs(r):
            rep = genus3_pipeline(c, d, r)
            for ct in rep.classes:
                if ct.twist_order % 2:
                    assert ct.parity == rep.parity
                    checked += 1
    assert checked > 0


def _sample_curves(n, seed=20240611):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        kind = rng.choice(["weierstrass", "weierstrass", "hyperelliptic", "as34"])
        try:
            if kind == "weierstrass":
                p, r = rng.choice([(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (7, 1), (11, 1)])
                F = ff.make_field(p, r)
                spec = cv.weierstrass(F, *[rng.randrange(F.q) for _ in range(5)])
            elif kind == "hyperelliptic":
                p = rng.choice([3, 5])
                F = ff.make_field(p, 1)
                deg = rng.choice([5, 6])
                f = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
                spec = cv.hyperelliptic(F, f)
            else:
                r = rng.choice([1, 2])
                F = ff.make_field(2, r)
                spec = cv.as34(F, rng.randrange(1, F.q), rng.randrange(1, F.q))
        except (SingularModel, ValueError):
            continue
        out.append((spec, rng.randint(1, 3)))
    return out


@criterion(11, "property suites")
@pytest.mark.parametrize("spec,m", _sample_curves(50))
def test_c11_base_change(spec, m):
    by_count = cv.lpoly(cv.base_change(spec, m))
    by_graeffe = graeffe_power(cv.lpoly(spec).reverse(), m).reverse()
    assert by_count == by_graeffe


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
