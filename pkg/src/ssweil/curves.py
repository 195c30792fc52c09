"""Curve families over small finite fields and exact point counting.

Supported families (coefficients are integer-encoded field elements):

* ``weierstrass``: y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, genus 1;
* ``hyperelliptic``: y^2 = f(x) with deg f in {5, 6}, odd p, genus 2;
* ``as34``: Z^4 + (1+c) Z^2 + c Z = d S^3 in characteristic 2, genus 3;
* ``fermat``: x^s + y^s + z^s = 0, genus (s-1)(s-2)/2.

``count_points(spec, m)`` counts projective points of the smooth model over
F_{q^m}; ``weil_data`` turns counts into an L-polynomial and the
root-of-unity data of ``intpoly``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import finitefield as ff
from .errors import (FieldTooLarge, SingularModel, UnsupportedField, UnsupportedFamily,
                     WrongCharacteristic)
from .intpoly import (IntPoly, WeilData, check_curve_count, lpoly_from_counts,
                      weil_data_from_lpoly)

FAMILIES = ("weierstrass", "hyperelliptic", "as34", "fermat")
FERMAT_SCAN_LIMIT = 1 << 12


@dataclass(frozen=True)
class CurveSpec:
    family: str
    p: int
    r: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.family not in FAMILIES:
            raise UnsupportedFamily(f"unknown family {self.family!r}")
        F = self.field
        if self.family != "fermat" and any(not 0 <= c < F.q for c in self.coeffs):
            raise ValueError(f"coefficients {self.coeffs} are not encodings in {F!r}")
        _validate(self)

    @property
    def field(self) -> ff.FiniteField:
        return ff.make_field(self.p, self.r)

    @property
    def q(self) -> int:
        return self.p ** self.r

    def to_json(self) -> dict:
        return {"family": self.family, "field": {"p": self.p, "r": self.r},
                "coeffs": list(self.coeffs)}


def weierstrass(F, a1=0, a2=0, a3=0, a4=0, a6=0) -> CurveSpec:
    return CurveSpec("weierstrass", F.p, F.r, (a1, a2, a3, a4, a6))


def hyperelliptic(F, f) -> CurveSpec:
    return CurveSpec("hyperelliptic", F.p, F.r, tuple(f))


def as34(F, c, d) -> CurveSpec:
    return CurveSpec("as34", F.p, F.r, (c, d))


def fermat(F, s) -> CurveSpec:
    return CurveSpec("fermat", F.p, F.r, (s,))


# -- Weierstrass invariants ------------------------------------------------------

def b_invariants(F, a):
    a1, a2, a3, a4, a6 = a
    m, ad, k = F.mul, F.add, F.from_int
    b2 = ad(m(a1, a1), m(k(4), a2))
    b4 = ad(m(k(2), a4), m(a1, a3))
    b6 = ad(m(a3, a3), m(k(4), a6))
    b8 = ad(ad(ad(m(m(a1, a1), a6), m(k(4), m(a2, a6))), F.neg(m(a1, m(a3, a4)))),
            ad(m(a2, m(a3, a3)), F.neg(m(a4, a4))))
    return b2, b4, b6, b8


def discriminant(F, a) -> int:
    b2, b4, b6, b8 = b_invariants(F, a)
    m, ad, k = F.mul, F.add, F.from_int
    terms = [F.neg(m(m(b2, b2), b8)), F.neg(m(k(8), m(b4, m(b4, b4)))),
             F.neg(m(k(27), m(b6, b6))), m(k(9), m(b2, m(b4, b6)))]
    out = 0
    for t in terms:
        out = ad(out, t)
    return out


def c4_invariant(F, a) -> int:
    b2, b4, _, _ = b_invariants(F, a)
    return F.sub(F.mul(b2, b2), F.mul(F.from_int(24), b4))


def j_invariant(F, a) -> int:
    c4 = c4_invariant(F, a)
    return F.div(F.mul(c4, F.mul(c4, c4)), discriminant(F, a))


# -- polynomials over F_q (ascending lists of encoded elements) ----------------

def fpoly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def fpoly_mod(F, a, b):
    a = list(a)
    inv = F.inv(b[-1])
    n = len(b) - 1
    for k in range(len(a) - 1, n - 1, -1):
        c = F.mul(a[k], inv)
        if c:
            for i in range(n + 1):
                a[k - n + i] = F.sub(a[k - n + i], F.mul(c, b[i]))
    return fpoly_trim(a[:n])


def fpoly_gcd(F, a, b):
    a, b = fpoly_trim(a), fpoly_trim(b)
    while b:
        a, b = b, fpoly_mod(F, a, b)
    return a


def fpoly_deriv(F, a):
    return fpoly_trim(F.mul(F.from_int(k), c) for k, c in enumerate(a))[1:] if len(a) > 1 else []


def _validate(spec: CurveSpec) -> None:
    F = spec.field
    fam = spec.family
    if fam == "weierstrass":
        if len(spec.coeffs) != 5:
            raise ValueError("weierstrass needs (a1, a2, a3, a4, a6)")
        if discriminant(F, spec.coeffs) == 0:
            raise SingularModel(f"singular Weierstrass model {spec.coeffs}")
    elif fam == "hyperelliptic":
        if F.p == 2:
            raise WrongCharacteristic("hyperelliptic family needs odd characteristic")
        f = fpoly_trim(spec.coeffs)
        if len(f) - 1 not in (5, 6):
            raise ValueError("hyperelliptic family needs deg f in {5, 6}")
        g = fpoly_gcd(F, f, fpoly_deriv(F, f))
        if len(g) != 1:
            raise SingularModel("f is not squarefree")
    elif fam == "as34":
        if F.p != 2:
            raise WrongCharacteristic("as34 family needs characteristic 2")
        if len(spec.coeffs) != 2 or 0 in spec.coeffs:
            raise ValueError("as34 needs nonzero (c, d)")
    else:
        if len(spec.coeffs) != 1 or spec.coeffs[0] < 1:
            raise ValueError("fermat needs one exponent s >= 1")
        if spec.coeffs[0] % F.p == 0:
            raise SingularModel("fermat curve is singular when p divides s")


def genus(spec: CurveSpec) -> int:
    if spec.family == "weierstrass":
        return 1
    if spec.family == "hyperelliptic":
        return 2
    if spec.family == "as34":
        return 3
    s = spec.coeffs[0]
    return (s - 1) * (s - 2) // 2


# -- counting ---------------------------------------------------------------------

def extension(spec: CurveSpec, m: int):
    """(E, coefficients embedded in E) for E = F_{q^m}."""
    F = spec.field
    try:
        E = ff.make_field(spec.p, spec.r * m)
    except UnsupportedField as exc:
        raise FieldTooLarge(f"F_{spec.q}^{m} is outside the field table") from exc
    if spec.family == "fermat":
        return E, spec.coeffs
    emb = ff.embedding(F, E)
    return E, tuple(emb(c) for c in spec.coeffs)


def _count_weierstrass(E, a) -> int:
    a1, a2, a3, a4, a6 = a
    mul, add = E.mul, E.add
    n = 1
    for x in range(E.q):
        b = add(mul(a1, x), a3)
        c = add(mul(add(mul(add(x, a2), x), a4), x), a6)
        if E.p == 2:
            if b == 0:
                n += 1
            elif E.trace(E.div(c, mul(b, b))) == 0:
                n += 2
        else:
            n += 1 + E.chi2(add(mul(b, b), mul(E.from_int(4), c)))
    return n


def _count_hyperelliptic(E, f) -> int:
    f = fpoly_trim(f)
    n = 0
    for x in range(E.q):
        n += 1 + E.chi2(E.eval_poly(f, x))
    if len(f) - 1 == 5:
        n += 1
    else:
        lead = E.chi2(f[-1])
        assert lead != 0
        n += 2 if lead == 1 else 0
    return n


class AdditiveMap:
    """An F_2-linear map on F_{2^n}, given by the images of basis vectors."""

    def __init__(self, E, columns):
        self.n = E.r
        self.pivots = {}  # pivot bit -> reduced basis vector of the image
        rank = 0
        for col in columns:
            v = self.reduce(col)
            if v:
                self.pivots[v.bit_length() - 1] = v
                rank += 1
        self.rank = rank
        self.kernel_size = 1 << (self.n - rank)

    def reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            b = self.pivots.get(top)
            if b is None:
                return v
            v ^= b
        return 0

    def in_image(self, v: int) -> bool:
        return self.reduce(v) == 0


def as34_additive_map(E, c) -> AdditiveMap:
    """A(Z) = Z^4 + (1+c) Z^2 + c Z on F_{2^n}."""
    c1 = E.add(1, c)
    cols = []
    for i in range(E.r):
        z = 1 << i
        z2 = E.mul(z, z)
        cols.append(E.mul(z2, z2) ^ E.mul(c1, z2) ^ E.mul(c, z))
    return AdditiveMap(E, cols)


def _count_as34(E, coeffs) -> int:
    c, d = coeffs
    A = as34_additive_map(E, c)
    hits = 0
    if E.has_tables:
        exp, log, _ = E.tables()
        n1 = E.q - 1
        ld = log[d]
        for S in range(1, E.q):
            if A.in_image(exp[(ld + 3 * log[S]) % n1]):
                hits += 1
    else:
        for S in range(1, E.q):
            if A.in_image(E.mul(d, E.pow(S, 3))):
                hits += 1
    hits += 1  # S = 0: the right side is 0, always in the image
    return hits * A.kernel_size + 1


def _count_fermat(E, s) -> int:
    if E.q > FERMAT_SCAN_LIMIT:
        raise FieldTooLarge(f"fermat scan over {E!r} exceeds the scan limit")
    pw = [E.pow(x, s) for x in range(E.q)]
    one = 1
    n = 0
    for x in range(E.q):
        px = pw[x]
        for y in range(E.q):
            if E.add(E.add(px, pw[y]), one) == 0:
                n += 1
    for x in range(E.q):  # z = 0, y = 1
        if E.add(pw[x], one) == 0:
            n += 1
    return n


@lru_cache(maxsize=None)
def count_points(spec: CurveSpec, m: int = 1) -> int:
    E, a = extension(spec, m)
    fam = spec.family
    if fam == "weierstrass":
        n = _count_weierstrass(E, a)
    elif fam == "hyperelliptic":
        n = _count_hyperelliptic(E, a)
    elif fam == "as34":
        n = _count_as34(E, a)
    else:
        n = _count_fermat(E, a[0])
    check_curve_count(n, spec.q, genus(spec), m)
    return n


@lru_cache(maxsize=None)
def lpoly(spec: CurveSpec) -> IntPoly:
    g = genus(spec)
    counts = [count_points(spec, m) for m in range(1, g + 1)]
    return lpoly_from_counts(counts, spec.q, g)


@lru_cache(maxsize=None)
def weil_data(spec: CurveSpec) -> WeilData:
    g = genus(spec)
    counts = [count_points(spec, m) for m in range(1, g + 1)]
    L = lpoly_from_counts(counts, spec.q, g)
    return weil_data_from_lpoly(L, spec.p, spec.r, counts)


def base_change(spec: CurveSpec, m: int) -> CurveSpec:
    """The same equation with coefficients read in F_{q^m}."""
    E, a = extension(spec, m)
    return CurveSpec(spec.family, E.p, E.r, a)


# -- the genus-3 family: quotients and h ------------------------------------------

def as34_h(spec: CurveSpec):
    """(K', h) with K' = K(h) and h the least encoded root of h^2 + h = c."""
    if spec.family != "as34":
        raise UnsupportedFamily("as34_h needs the as34 family")
    K = spec.field
    c = spec.coeffs[0]
    h = ff.solve_artin_schreier_int(K, c)
    if h is not None:
        return K, h
    K2 = ff.make_field(2, 2 * K.r)
    c2 = ff.embedding(K, K2)(c)
    h = ff.solve_artin_schreier_int(K2, c2)
    assert h is not None
    return K2, h


def quotient_curves(spec: CurveSpec):
    """E1 over K and E2, E3 over K' = K(h), as Weierstrass models.

    E_i is R^2 + R = c_i S^3, written as y^2 + c_i y = x^3 via
    y = c_i R, x = c_i S, with c1 = d/c^2, c2 = d/(h+1)^2, c3 = d/h^2."""
    if spec.family != "as34":
        raise UnsupportedFamily("quotient_curves needs the as34 family")
    K = spec.field
    c, d = spec.coeffs
    c1 = K.div(d, K.mul(c, c))
    Kp, h = as34_h(spec)
    emb = ff.embedding(K, Kp)
    dp = emb(d)
    h1 = Kp.add(h, 1)
    c2 = Kp.div(dp, Kp.mul(h1, h1))
    c3 = Kp.div(dp, Kp.mul(h, h))
    return (weierstrass(K, a3=c1), weierstrass(Kp, a3=c2), weierstrass(Kp, a3=c3))


def as34_quotient_coefficients(spec: CurveSpec):
    """(c1 in K, c2 and c3 in K', K')."""
    E1, E2, E3 = quotient_curves(spec)
    return E1.coeffs[2], E2.coeffs[2], E3.coeffs[2], E2.field


# -- quadratic twists ------------------------------------------------------------------

def quadratic_twist(spec: CurveSpec) -> CurveSpec:
    F = spec.field
    if spec.family == "hyperelliptic":
        u = F.least_nonsquare()
        return hyperelliptic(F, [F.mul(u, c) for c in spec.coeffs])
    if spec.family != "weierstrass":
        raise UnsupportedFamily(f"no quadratic twist model for {spec.family}")
    a1, a2, a3, a4, a6 = spec.coeffs
    if F.p == 2:
        th = F.least_trace_one()
        return weierstrass(F, a1, F.add(a2, F.mul(th, F.mul(a1, a1))), a3, a4,
                           F.add(a6, F.mul(th, F.mul(a3, a3))))
    u = F.least_nonsquare()
    if a1 or a3:
        # complete the square: y -> y - (a1 x + a3)/2
        i4 = F.inv(F.from_int(4))
        a2 = F.add(a2, F.mul(i4, F.mul(a1, a1)))
        a4 = F.add(a4, F.mul(F.inv(F.from_int(2)), F.mul(a1, a3)))
        a6 = F.add(a6, F.mul(i4, F.mul(a3, a3)))
    u2 = F.mul(u, u)
    return weierstrass(F, 0, F.mul(u, a2), 0, F.mul(u2, a4), F.mul(u2, F.mul(u, a6)))
