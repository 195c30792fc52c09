"""Exact identification of normalized Weil numbers as roots of unity.

A root of unity exp(2 pi i k/n) is represented by the Fraction k/n reduced
mod 1.  Identification happens inside the cyclotomic field Q(zeta_M), with
elements stored as coefficient vectors modulo Phi_M.  When q is not a square
the normalized polynomial has coefficients in Q(sqrt p), and sqrt p is placed
in Q(zeta_M) through a Gauss sum, using the complex embedding
zeta_M = exp(2 pi i / M) and sqrt p > 0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache, lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import NotSupersingular
from .intpoly import (IntPoly, cyclotomic, euler_phi, lcm_all, normalize_weil,
                      nwn_orders, split_prime_power)


class CycloField:
    """Q(zeta_M) in the power basis 1, zeta, ..., zeta^{phi(M)-1}."""

    def __init__(self, M: int):
        self.M = M
        self.n = euler_phi(M)
        self.phi = cyclotomic(M).coeffs  # monic, ascending

    def reduce(self, cs) -> tuple:
        cs = [Fraction(c) for c in cs]
        n = self.n
        for k in range(len(cs) - 1, n - 1, -1):
            c = cs[k]
            if c:
                for i in range(n + 1):
                    cs[k - n + i] -= c * self.phi[i]
        cs = cs[:n] + [Fraction(0)] * max(0, n - len(cs))
        return tuple(cs)

    def zero(self) -> tuple:
        return (Fraction(0),) * self.n

    def const(self, c) -> tuple:
        return self.reduce([c])

    def zeta(self, k: int) -> tuple:
        k %= self.M
        return self.reduce([0] * k + [1])

    def add(self, a, b) -> tuple:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b) -> tuple:
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a, b) -> tuple:
        out = [Fraction(0)] * (2 * self.n)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return self.reduce(out)

    def is_zero(self, a) -> bool:
        return not any(a)


@cache
def cyclo_field(M: int) -> CycloField:
    return CycloField(M)


def sqrt_p_level(p: int) -> int:
    if p == 2:
        return 8
    return p if p % 4 == 1 else 4 * p


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_p(F: CycloField, p: int) -> tuple:
    """The positive square root of p as an element of F."""
    M = F.M
    if M % sqrt_p_level(p):
        raise ValueError(f"sqrt {p} is not in Q(zeta_{M})")
    if p == 2:
        return F.add(F.zeta(M // 8), F.zeta(7 * M // 8))
    gauss = F.zero()
    for a in range(1, p):
        gauss = F.add(gauss, F.mul(F.const(legendre(a, p)), F.zeta(a * M // p)))
    if p % 4 == 1:
        return gauss
    # gauss sum is i*sqrt(p); multiply by -i
    return F.mul(gauss, F.zeta(3 * M // 4))


def root_sum(exps: Iterable[Fraction]) -> tuple:
    """Sum of the roots of unity with the given exponents, in Q(zeta_M)."""
    exps = [Fraction(e) % 1 for e in exps]
    M = lcm_all([e.denominator for e in exps] or [1])
    F = cyclo_field(M)
    acc = F.zero()
    for e in exps:
        acc = F.add(acc, F.zeta(e.numerator * (M // e.denominator)))
    return acc


def roots_sum_to_zero(exps: Iterable[Fraction]) -> bool:
    return not any(root_sum(exps))


def order_of(e: Fraction) -> int:
    return (Fraction(e) % 1).denominator


@lru_cache(maxsize=4096)
def nwn_exponents(P: IntPoly, q: int) -> tuple:
    """Sorted exponents k/n (in [0, 1)) of the normalized Weil numbers."""
    p, r = split_prime_power(q)
    orders = nwn_orders(P, q)
    N = normalize_weil(P, q)
    M = lcm_all(orders)
    if not N.is_rational():
        M = lcm_all([M, sqrt_p_level(p)])
    F = cyclo_field(M)
    s = sqrt_p(F, p) if not N.is_rational() else None
    coeffs = []
    for u, v in N.coeffs:
        c = F.const(u)
        if v:
            c = F.add(c, F.mul(F.const(v), s))
        coeffs.append(c)
    found = []
    for n in sorted(set(orders)):
        for k in range(n):
            if gcd(k, n) != 1:
                continue
            z = F.zeta(k * (M // n))
            while len(coeffs) > 1:
                # synthetic division by (T - z)
                quo = [None] * (len(coeffs) - 1)
                acc = coeffs[-1]
                for i in range(len(coeffs) - 2, -1, -1):
                    quo[i] = acc
                    acc = F.add(coeffs[i], F.mul(acc, z))
                if not F.is_zero(acc):
                    break
                coeffs = quo
                found.append(Fraction(k, n))
    if len(found) != P.degree:
        raise NotSupersingular(f"could not identify all normalized roots of {P}")
    return tuple(sorted(found))


def negate_exponents(exps: Sequence[Fraction]) -> tuple:
    return tuple(sorted((Fraction(e) + Fraction(1, 2)) % 1 for e in exps))


def conjugation_closed(exps: Sequence[Fraction]) -> bool:
    from collections import Counter
    c = Counter(Fraction(e) % 1 for e in exps)
    return all(c[(-e) % 1] == k for e, k in c.items())


def exponents_e_vector(exps: Sequence[Fraction]) -> tuple:
    """e-vector from an exponent multiset (pairs by order, as e_vector does)."""
    from .intpoly import e_vector
    return e_vector([order_of(e) for e in exps], len(exps) // 2)
