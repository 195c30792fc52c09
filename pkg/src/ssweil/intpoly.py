"""Exact polynomial arithmetic for Weil polynomials.

``IntPoly`` holds integer coefficients in ascending order.  Two forms of the
same data occur: the L-polynomial L(T) = prod(1 - a_i T) with constant term 1,
and the characteristic polynomial P(T) = prod(T - a_i) = T^{2g} L(1/T).  They
are coefficient reversals of each other (``IntPoly.reverse``).

``QuadPoly`` has coefficients u + v*sqrt(p) with rational u, v.  It carries
the normalized polynomial prod(T - z_i), z_i = a_i / sqrt(q), which is
rational when q is a square and lives over Q(sqrt p) otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, lru_cache
from math import comb, gcd
from typing import Iterable, Optional, Sequence

from .errors import (CountOutOfRange, InputError, Inconsistent, NonExactDivision,
                     NonIntegerCoefficient, NotSupersingular, OddMultiplicity)


def _trim(cs) -> tuple:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, o: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPoly(self[k] + o[k] for k in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, o: "IntPoly") -> "IntPoly":
        return self + (-o)

    def __mul__(self, o) -> "IntPoly":
        if isinstance(o, int):
            return IntPoly(c * o for c in self.coeffs)
        if not self.coeffs or not o.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        out = IntPoly((1,))
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, d: "IntPoly"):
        """Division over Q; returns (quotient, remainder) as Fraction lists."""
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        quo = [Fraction(0)] * max(0, len(rem) - d.degree)
        lead = d.coeffs[-1]
        for k in range(len(rem) - 1, d.degree - 1, -1):
            c = rem[k] / lead
            if c:
                quo[k - d.degree] = c
                for i, dc in enumerate(d.coeffs):
                    rem[k - d.degree + i] -= c * dc
        return quo, rem[:d.degree]

    def exact_div(self, d: "IntPoly") -> "IntPoly":
        quo, rem = self.divmod(d)
        if any(rem) or any(c.denominator != 1 for c in quo):
            raise NonExactDivision(f"{d} does not divide {self} in Z[T]")
        return IntPoly(int(c) for c in quo)

    def reverse(self, n: Optional[int] = None) -> "IntPoly":
        """T^n f(1/T); n defaults to the degree."""
        n = self.degree if n is None else n
        return IntPoly(self[n - k] for k in range(n + 1))

    def monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def T_poly() -> IntPoly:
    return IntPoly((0, 1))


# -- valuations ---------------------------------------------------------------

def ord_p(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def ord2(n: int) -> int:
    return ord_p(n, 2)


def split_prime_power(q: int) -> tuple:
    for p in range(2, q + 1):
        if q % p == 0:
            r = ord_p(q, p)
            if p ** r != q:
                raise InputError(f"{q} is not a prime power")
            return p, r
    raise InputError(f"{q} is not a prime power")


# -- counts <-> L-polynomials ----------------------------------------------------

def _sqrt_bound_ok(dev: int, g: int, qm: int) -> bool:
    return dev * dev <= 4 * g * g * qm


def check_curve_count(N: int, q: int, g: int, m: int = 1) -> None:
    qm = q ** m
    if N < 0 or not _sqrt_bound_ok(N - qm - 1, g, qm):
        raise CountOutOfRange(f"N_{m} = {N} violates the Hasse-Weil bound for q^{m} = {qm}, g = {g}")


def _nonneg(x: int, y: int, Q: int) -> bool:
    """Exact test x + y*sqrt(Q) >= 0."""
    if x >= 0 and y >= 0:
        return True
    if x <= 0 and y <= 0:
        return x == 0 and y == 0
    if x > 0:  # y < 0
        return x * x >= y * y * Q
    return y * y * Q >= x * x


def check_abelian_count(N: int, q: int, g: int, m: int = 1) -> None:
    """(sqrt Q - 1)^{2g} <= N <= (sqrt Q + 1)^{2g} with Q = q^m, exactly."""
    Q = q ** m
    # (sqrt Q + s)^{2g} = A + s*B*sqrt(Q) with integers A, B
    A = sum(comb(2 * g, k) * Q ** (k // 2) for k in range(0, 2 * g + 1, 2))
    B = sum(comb(2 * g, k) * Q ** (k // 2) for k in range(1, 2 * g + 1, 2))
    if not (_nonneg(N - A, B, Q) and _nonneg(A - N, B, Q)):
        raise CountOutOfRange(f"|A(F_{Q})| = {N} violates the abelian variety bound")


def _elementary_from_power_sums(s: Sequence[int], k: int) -> list:
    """e_0..e_k from power sums s[1..k] by Newton's identities."""
    e = [Fraction(1)]
    for j in range(1, k + 1):
        acc = Fraction(0)
        for i in range(1, j + 1):
            acc += (-1) ** (i - 1) * e[j - i] * s[i]
        e.append(acc / j)
    return e


def lpoly_from_counts(counts: Sequence[int], q: int, g: int) -> IntPoly:
    if len(counts) != g:
        raise InputError(f"need exactly g = {g} counts, got {len(counts)}")
    for m, N in enumerate(counts, 1):
        check_curve_count(N, q, g, m)
    s = [0] + [q ** m + 1 - N for m, N in enumerate(counts, 1)]
    e = _elementary_from_power_sums(s, g)
    a = []
    for k, ek in enumerate(e):
        if ek.denominator != 1:
            raise NonIntegerCoefficient(f"coefficient a_{k} = {(-1) ** k * ek} is not an integer")
        a.append((-1) ** k * int(ek))
    a += [q ** (k - g) * a[2 * g - k] for k in range(g + 1, 2 * g + 1)]
    return IntPoly(a)


def power_sums(lpoly: IntPoly, upto: int) -> list:
    """s_1..s_upto of the inverse roots of an L-polynomial (index 0 unused)."""
    n = lpoly.degree
    e = [(-1) ** k * lpoly[k] for k in range(n + 1)]
    s = [0]
    for m in range(1, upto + 1):
        # s_m = sum_{i<m} (-1)^{i-1} e_i s_{m-i} + (-1)^{m-1} m e_m
        acc = (-1) ** (m - 1) * m * (e[m] if m <= n else 0)
        for i in range(1, min(m - 1, n) + 1):
            acc += (-1) ** (i - 1) * e[i] * s[m - i]
        s.append(acc)
    return s


def counts_from_lpoly(lpoly: IntPoly, q: int, g: int, m: int) -> int:
    if lpoly.degree != 2 * g:
        raise InputError(f"L-polynomial of degree {lpoly.degree}, expected {2 * g}")
    return q ** m + 1 - power_sums(lpoly, m)[m]


def abelian_count(charpoly: IntPoly, m: int = 1, q: Optional[int] = None) -> int:
    """|A(F_{q^m})| = P_m(1), optionally validated against the abelian bound."""
    N = graeffe_power(charpoly, m)(1)
    if q is not None:
        check_abelian_count(N, q, charpoly.degree // 2, m)
    return N


def functional_equation_ok(charpoly: IntPoly, q: int) -> bool:
    n = charpoly.degree
    if n % 2 or not charpoly.monic():
        return False
    g = n // 2
    c = [charpoly[n - i] for i in range(n + 1)]  # c_i is the coefficient of T^{n-i}
    return all(c[2 * g - i] == q ** (g - i) * c[i] for i in range(g + 1))


# -- resultants and Graeffe powering --------------------------------------------

def _det_bareiss(M) -> IntPoly:
    """Determinant of a square matrix with IntPoly entries (fraction-free)."""
    M = [list(row) for row in M]
    n = len(M)
    sign = 1
    prev = IntPoly((1,))
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return IntPoly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num.exact_div(prev)
        prev = M[k][k]
    return M[n - 1][n - 1] * sign


def resultant_power(P: IntPoly, ell: int) -> IntPoly:
    """Res_x(P(x), T - x^ell) as a polynomial in T; for monic P this is
    prod (T - a^ell) over the roots a of P."""
    n = P.degree
    size = n + ell
    zero = IntPoly()
    Pdesc = [IntPoly((c,)) for c in reversed(P.coeffs)]
    Qdesc = [IntPoly((-1,))] + [zero] * (ell - 1) + [T_poly()]
    rows = []
    for i in range(ell):
        rows.append([zero] * i + Pdesc + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + Qdesc + [zero] * (size - ell - 1 - i))
    R = _det_bareiss(rows)
    if R.coeffs and R.coeffs[-1] == -1:
        R = -R
    if not R.monic() or R.degree != n:
        raise Inconsistent(f"resultant of unexpected shape: {R}")
    return R


def prime_factors(m: int) -> list:
    out, d = [], 2
    while d * d <= m:
        while m % d == 0:
            out.append(d)
            m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


@lru_cache(maxsize=4096)
def graeffe_power(P: IntPoly, m: int) -> IntPoly:
    """Monic polynomial with roots a^m for the roots a of the monic P."""
    if m < 1:
        raise InputError("graeffe exponent must be >= 1")
    if not P.monic():
        raise InputError("graeffe_power needs a monic polynomial")
    for ell in prime_factors(m):
        P = resultant_power(P, ell)
    return P


def negate_roots(P: IntPoly) -> IntPoly:
    n = P.degree
    return IntPoly(c if (n - k) % 2 == 0 else -c for k, c in enumerate(P.coeffs))


@cache
def cyclotomic(n: int) -> IntPoly:
    if n < 1:
        raise InputError("cyclotomic index must be >= 1")
    f = IntPoly((-1,) + (0,) * (n - 1) + (1,))
    for d in range(1, n):
        if n % d == 0:
            f = f.exact_div(cyclotomic(d))
    return f


def euler_phi(n: int) -> int:
    out = n
    for p in set(prime_factors(n)):
        out = out // p * (p - 1)
    return out


# -- the field Q(sqrt p) -------------------------------------------------------

QZERO = (Fraction(0), Fraction(0))
QONE = (Fraction(1), Fraction(0))


def qadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def qsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def qmul(a, b, p):
    return (a[0] * b[0] + p * a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def qinv(a, p):
    n = a[0] * a[0] - p * a[1] * a[1]
    if n == 0:
        raise ZeroDivisionError("inverse of 0 in Q(sqrt p)")
    return (a[0] / n, -a[1] / n)


def _qtrim(cs):
    cs = list(cs)
    while cs and cs[-1] == QZERO:
        cs.pop()
    return cs


@dataclass(frozen=True)
class QuadPoly:
    """Polynomial over Q(sqrt base); coeffs are (u, v) pairs, ascending."""

    base: int
    coeffs: tuple = ()

    def __post_init__(self):
        cs = tuple((Fraction(u), Fraction(v)) for u, v in self.coeffs)
        object.__setattr__(self, "coeffs", tuple(_qtrim(cs)))

    @classmethod
    def from_int(cls, P: IntPoly, p: int) -> "QuadPoly":
        return cls(p, tuple((c, 0) for c in P.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_rational(self) -> bool:
        return all(v == 0 for _, v in self.coeffs)

    def _divmod(self, d: "QuadPoly"):
        p = self.base
        rem = list(self.coeffs)
        quo = [QZERO] * max(0, len(rem) - d.degree)
        inv = qinv(d.coeffs[-1], p)
        for k in range(len(rem) - 1, d.degree - 1, -1):
            c = qmul(rem[k], inv, p)
            if c != QZERO:
                quo[k - d.degree] = c
                for i, dc in enumerate(d.coeffs):
                    rem[k - d.degree + i] = qsub(rem[k - d.degree + i], qmul(c, dc, p))
        return QuadPoly(p, tuple(quo)), QuadPoly(p, tuple(rem[:d.degree]))

    def __floordiv__(self, d):
        return self._divmod(d)[0]

    def __mod__(self, d):
        return self._divmod(d)[1]

    def make_monic(self) -> "QuadPoly":
        inv = qinv(self.coeffs[-1], self.base)
        return QuadPoly(self.base, tuple(qmul(c, inv, self.base) for c in self.coeffs))

    def gcd(self, o: "QuadPoly") -> "QuadPoly":
        a, b = self, o
        while b.coeffs:
            a, b = b, a % b
        return a.make_monic() if a.coeffs else a

    def __str__(self):
        def num(c):
            u, v = c
            if v == 0:
                return str(u)
            return f"({u}{'+' if v >= 0 else '-'}{abs(v)}*sqrt{self.base})"
        return " + ".join(f"{num(c)}*T^{k}" for k, c in enumerate(self.coeffs) if c != QZERO)


def normalize_weil(P: IntPoly, q: int) -> QuadPoly:
    """P(sqrt(q) T) / q^g with exact coefficients in Q(sqrt p)."""
    p, r = split_prime_power(q)
    n = P.degree
    if n % 2:
        raise InputError("Weil polynomial of odd degree")
    g = n // 2
    out = []
    for k, c in enumerate(P.coeffs):
        # c * q^{k/2} / q^g
        if k % 2 == 0:
            out.append((Fraction(c * q ** (k // 2), q ** g), 0))
        elif r % 2 == 0:
            out.append((Fraction(c * q ** (k // 2) * p ** (r // 2), q ** g), 0))
        else:
            out.append((0, Fraction(c * q ** (k // 2) * p ** ((r - 1) // 2), q ** g)))
    return QuadPoly(p, tuple(out))


@cache
def order_candidates(g: int) -> tuple:
    bound = 2 * (4 * g) ** 2
    return tuple(n for n in range(1, bound + 1) if euler_phi(n) <= 4 * g)


@lru_cache(maxsize=8192)
def nwn_orders(P: IntPoly, q: int) -> tuple:
    """Sorted multiset of the orders of the normalized Weil numbers."""
    N = normalize_weil(P, q)
    g = P.degree // 2
    p = N.base
    orders = []
    for n in order_candidates(g):
        phi = QuadPoly.from_int(cyclotomic(n), p)
        while N.degree > 0:
            d = N.gcd(phi)
            if d.degree <= 0:
                break
            orders += [n] * d.degree
            N = N // d
    if len(orders) != 2 * g or N.degree != 0:
        raise NotSupersingular(f"normalized roots of {P} are not all roots of unity")
    return tuple(sorted(orders))


def e_vector(orders: Sequence[int], g: int) -> tuple:
    if len(orders) != 2 * g:
        raise InputError(f"need {2 * g} orders, got {len(orders)}")
    out = []
    for o in sorted(set(orders)):
        k = list(orders).count(o)
        if k % 2:
            raise OddMultiplicity(f"order {o} occurs {k} times; cannot pair conjugates")
        out += [ord2(o)] * (k // 2)
    return tuple(sorted(out))


def lcm_all(xs: Iterable[int]) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


def period_parity(orders: Sequence[int], r: int) -> tuple:
    """Least m with q^m square and all z^m = -1 (parity +1) or all = 1 (-1)."""
    L = lcm_all(orders)
    for m in range(1, 2 * L + 1):
        if (r * m) % 2:
            continue
        if all((2 * m) % o == 0 and m % o for o in orders):
            return m, 1
        if all(m % o == 0 for o in orders):
            return m, -1
    raise AssertionError("period scan did not terminate")


def period_parity_from_e(e: Sequence[int], orders: Sequence[int], r: int) -> tuple:
    """Closed form of the period used as a cross-check of the scan."""
    L = lcm_all(orders)
    es = set(e)
    if len(es) == 1:
        (k,) = es
        E = max(k - 1, 0)
    else:
        E = max(es)
    # the period is the odd part of L times 2^E, adjusted so that q^m is square
    m = (L >> ord2(L)) << E
    if (r * m) % 2:
        m *= 2
    return m


def newton_polygon_supersingular(P: IntPoly, q: int) -> bool:
    p, r = split_prime_power(q)
    n = P.degree
    for i in range(1, n + 1):
        c = P[n - i]
        if c == 0:
            if i == n:
                return False
            continue
        v = ord_p(c, p)
        if 2 * v < i * r:
            return False
        if i == n and 2 * v != i * r:
            return False
    return True


def roots_of_unity_supersingular(P: IntPoly, q: int) -> bool:
    try:
        nwn_orders(P, q)
    except NotSupersingular:
        return False
    return True


def is_supersingular(P: IntPoly, q: int) -> bool:
    """Newton polygon test, cross-checked against root-of-unity extraction."""
    if not functional_equation_ok(P, q):
        raise InputError(f"{P} is not a monic Weil-shaped polynomial for q = {q}")
    a = newton_polygon_supersingular(P, q)
    b = roots_of_unity_supersingular(P, q)
    if a != b:
        raise Inconsistent(f"Newton polygon ({a}) and root-of-unity ({b}) tests disagree on {P}")
    return a


# -- WeilData ------------------------------------------------------------------

@dataclass(frozen=True)
class WeilData:
    p: int
    r: int
    g: int
    lpoly: IntPoly
    counts: Optional[tuple] = None
    supersingular: bool = False
    nwn_orders: Optional[tuple] = None
    e_vector: Optional[tuple] = None
    period: Optional[int] = None
    parity: Optional[int] = None

    @property
    def q(self) -> int:
        return self.p ** self.r

    @property
    def charpoly(self) -> IntPoly:
        return self.lpoly.reverse()


def weil_data_from_lpoly(lpoly: IntPoly, p: int, r: int, counts=None) -> WeilData:
    q = p ** r
    g = lpoly.degree // 2
    P = lpoly.reverse()
    if lpoly[0] != 1 or not functional_equation_ok(P, q):
        raise InputError(f"{lpoly} is not an L-polynomial over F_{q}")
    ss = is_supersingular(P, q)
    if not ss:
        return WeilData(p, r, g, lpoly, tuple(counts) if counts else None, False)
    orders = nwn_orders(P, q)
    e = e_vector(orders, g)
    mu, delta = period_parity(orders, r)
    if r % 2 and len(set(e)) == 1 and e[0] in (0, 1):
        raise Inconsistent(f"e-vector {e} is impossible for odd r")
    if period_parity_from_e(e, orders, r) != mu:
        raise Inconsistent(f"period scan {mu} disagrees with the closed form")
    return WeilData(p, r, g, lpoly, tuple(counts) if counts else None, True,
                    orders, e, mu, delta)
