"""Finite field arithmetic against a sympy polynomial-quotient oracle."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st
from sympy import GF, Poly, symbols

from ssweil import finitefield as ff
from ssweil.errors import NotPrime, UnsupportedField, WrongCharacteristic, ZeroInput

x = symbols("x")
FIELDS = [(2, 1), (2, 3), (2, 4), (3, 2), (5, 2), (7, 1), (7, 2), (13, 2), (2, 8), (3, 5)]


def to_poly(F, a):
    return Poly(list(reversed(F.digits(a))) or [0], x, domain=GF(F.p))


def from_poly(F, P):
    cs = [int(c) % F.p for c in reversed(P.all_coeffs())]
    return F.from_digits(cs + [0] * (F.r - len(cs)))


def modulus_poly(F):
    return Poly(list(reversed(F.modulus)), x, domain=GF(F.p))


@pytest.mark.parametrize("pr", FIELDS)
def test_mul_matches_sympy(pr):
    F = ff.make_field(*pr)
    M = modulus_poly(F)
    step = max(1, F.q // 40)
    for a in range(0, F.q, step):
        for b in range(1, F.q, step + 1):
            want = from_poly(F, (to_poly(F, a) * to_poly(F, b)).rem(M))
            assert F.mul(a, b) == want
            want = from_poly(F, (to_poly(F, a) + to_poly(F, b)).rem(M))
            assert F.add(a, b) == want


@pytest.mark.parametrize("pr", FIELDS)
def test_generator_is_primitive(pr):
    F = ff.make_field(*pr)
    g = F.generator()
    n = F.q - 1
    for ell in {d for d in range(2, n + 1) if n % d == 0 and all(d % e for e in range(2, d))}:
        assert F.pow(g, n // ell) != 1
    assert F.pow(g, n) == 1


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(pr, data):
    F = ff.make_field(*pr)
    a, b, c = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(F.mul(a, b), a) == b
    # Frobenius is additive and the trace lands in F_p
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
    assert 0 <= F.trace(a) < F.p


@pytest.mark.parametrize("pr", FIELDS)
def test_trace_kernel_size(pr):
    F = ff.make_field(*pr)
    if F.q > 1 << 12:
        pytest.skip("large field")
    assert sum(1 for a in F.elements() if F.trace(a) == 0) == F.q // F.p


@pytest.mark.parametrize("pr", [(3, 2), (5, 1), (7, 2), (13, 1)])
def test_squares_and_sqrt(pr):
    F = ff.make_field(*pr)
    squares = {F.mul(a, a) for a in F.elements()}
    for a in F.elements():
        assert F.is_square(a) == (a in squares)
        s = F.sqrt(a)
        assert (s is None) == (a not in squares)
        if s is not None:
            assert F.mul(s, s) == a
    assert not F.is_square(F.least_nonsquare())


@pytest.mark.parametrize("r", [1, 2, 3, 4, 6])
def test_artin_schreier(r):
    F = ff.make_field(2, r)
    for c in F.elements():
        h = ff.solve_artin_schreier_int(F, c)
        assert (h is None) == (F.trace(c) == 1)
        if h is not None:
            assert F.add(F.mul(h, h), h) == c
    assert F.trace(F.least_trace_one()) == 1


@pytest.mark.parametrize("small,big", [((2, 2), (2, 4)), ((2, 3), (2, 6)), ((3, 1), (3, 2)),
                                       ((2, 2), (2, 6)), ((5, 1), (5, 2))])
def test_embedding_is_a_homomorphism(small, big):
    S, B = ff.make_field(*small), ff.make_field(*big)
    emb = ff.embedding(S, B)
    images = [emb(a) for a in S.elements()]
    assert len(set(images)) == S.q
    for a in S.elements():
        assert ff.contains(B, emb(a), S.r)
        for b in S.elements():
            assert emb(S.mul(a, b)) == B.mul(emb(a), emb(b))
            assert emb(S.add(a, b)) == B.add(emb(a), emb(b))


def test_field_elem_wrapper():
    F = ff.make_field(2, 2)
    w = F.elem(2)
    assert (w * w + w + 1).value == 0          # omega^2 + omega + 1 = 0
    assert ff.trace_to_prime(w) == 1
    assert ff.solve_artin_schreier(F.elem(1)).value in (2, 3)


def test_errors():
    with pytest.raises(NotPrime):
        ff.make_field(4, 1)
    with pytest.raises(UnsupportedField):
        ff.make_field(2, 400)
    with pytest.raises(WrongCharacteristic):
        ff.solve_artin_schreier_int(ff.make_field(3, 1), 1)
    with pytest.raises(ZeroInput):
        ff.is_power_residue(ff.make_field(7, 1).elem(0), 3)
