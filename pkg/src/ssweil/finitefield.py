"""Arithmetic in small finite fields F_{p^r}.

An element of F_{p^r} = F_p[x]/(f) is stored as a plain ``int``: the base-p
digits of the integer, least significant first, are the coordinates in the
basis 1, x, ..., x^{r-1}.  So in F_4 = F_2[x]/(x^2+x+1) the element x is 2
and x+1 is 3.  The same encoding is used on the command line and in JSON.

Every (p, r) has exactly one modulus, taken from a fixed table of primitive
polynomials, so that x generates the multiplicative group.  Fields with at
most ``TABLE_LIMIT`` elements build exp/log (and, for odd p, Zech) tables on
first use; larger fields fall back to schoolbook polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import gcd
from typing import Iterator, Optional

from ._moduli import MODULI
from .errors import NotPrime, UnsupportedField, WrongCharacteristic, ZeroInput

TABLE_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- polynomials over F_p as ascending coefficient lists ---------------------

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    a = list(a)
    n = len(f) - 1
    inv = pow(f[-1], -1, p)
    for k in range(len(a) - 1, n - 1, -1):
        c = a[k] * inv % p
        if c:
            for i in range(n + 1):
                a[k - n + i] = (a[k - n + i] - c * f[i]) % p
    return _ptrim(a[:n] if len(a) > n else a)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def check_irreducible(f, p) -> bool:
    """gcd(x^{p^i} - x, f) = 1 for 0 < i < r and x^{p^r} = x mod f."""
    r = len(f) - 1
    x = _pmod([0, 1], f, p)
    xpow = x
    for i in range(1, r + 1):
        # xpow <- xpow^p
        acc, base, e = [1], xpow, p
        while e:
            if e & 1:
                acc = _pmod(_pmul(acc, base, p), f, p)
            base = _pmod(_pmul(base, base, p), f, p)
            e >>= 1
        xpow = acc
        n = max(len(xpow), len(x))
        diff = _ptrim([((xpow[k] if k < len(xpow) else 0)
                        - (x[k] if k < len(x) else 0)) % p for k in range(n)])
        if i < r:
            if len(_pgcd(f, diff, p)) != 1:
                return False
        elif diff:
            return False
    return True


# -- fields --------------------------------------------------------------------

class FiniteField:
    """F_{p^r} with a fixed modulus; operations act on integer-encoded elements."""

    def __init__(self, p: int, r: int, modulus: tuple):
        self.p = p
        self.r = r
        self.q = p ** r
        self.modulus = tuple(modulus)
        if len(self.modulus) != r + 1 or self.modulus[-1] != 1:
            raise UnsupportedField(f"bad modulus for ({p}, {r})")
        if not check_irreducible(list(self.modulus), p):
            raise UnsupportedField(f"modulus for ({p}, {r}) is reducible")
        self._pw = [p ** i for i in range(r + 1)]
        if p == 2:
            self._modmask = sum(1 << i for i, c in enumerate(self.modulus) if c)
        self._exp = self._log = self._zech = None
        self._trace_basis = None

    def __repr__(self):
        return f"F_{self.p}^{self.r}" if self.r > 1 else f"F_{self.p}"

    def __reduce__(self):
        return (make_field, (self.p, self.r))

    # encoding helpers
    def digits(self, a: int) -> list:
        p = self.p
        out = []
        for _ in range(self.r):
            a, d = divmod(a, p)
            out.append(d)
        return out

    def from_digits(self, ds) -> int:
        v = 0
        for d in reversed(list(ds)):
            v = v * self.p + d % self.p
        return v

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def elem(self, value: int) -> "FieldElem":
        if self.r == 1:
            value %= self.p
        elif not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element encoding for {self!r}")
        return FieldElem(self, value)

    @property
    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime field."""
        return n % self.p

    def generator(self) -> int:
        """The class of x, a primitive element by choice of modulus."""
        if self.r == 1:
            return (-self.modulus[0]) % self.p
        return self.p

    # -- tables
    @property
    def has_tables(self) -> bool:
        return self.q <= TABLE_LIMIT

    def tables(self):
        """(exp, log, zech); exp has length 2(q-1), log[0] = -1."""
        if self._exp is None:
            if not self.has_tables:
                raise UnsupportedField(f"{self!r} is too large for tables")
            self._build_tables()
        return self._exp, self._log, self._zech

    def _build_tables(self):
        q, p = self.q, self.p
        n = q - 1
        exp = [0] * (2 * n)
        log = [-1] * q
        g = self.generator()
        v = 1
        for k in range(n):
            exp[k] = v
            log[v] = k
            v = self._mul_slow(v, g)
        if v != 1 or any(log[a] < 0 for a in range(1, q)):
            raise UnsupportedField(f"modulus for {self!r} is not primitive")
        exp[n:] = exp[:n]
        zech = None
        if p != 2:
            zech = [-1] * n
            for k in range(n):
                v = exp[k]
                d0 = v % p
                w = v - d0 + (d0 + 1) % p
                zech[k] = log[w] if w else -1
        self._exp, self._log, self._zech = exp, log, zech

    # -- slow paths
    def _add_slow(self, a, b):
        p = self.p
        v, pw = 0, 1
        for _ in range(self.r):
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            v += ((da + db) % p) * pw
            pw *= p
        return v

    def _neg_slow(self, a):
        p = self.p
        v, pw = 0, 1
        for _ in range(self.r):
            a, da = divmod(a, p)
            v += ((-da) % p) * pw
            pw *= p
        return v

    def _mul_slow(self, a, b):
        if self.p == 2:
            r, out = self.r, 0
            while b:
                if b & 1:
                    out ^= a
                b >>= 1
                a <<= 1
                if (a >> r) & 1:
                    a ^= self._modmask
            return out
        prod = _pmul(self.digits(a), self.digits(b), self.p)
        return self.from_digits(_pmod(prod, list(self.modulus), self.p))

    # -- arithmetic
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % self.p
        if self._exp is None and self.has_tables:
            self._build_tables()
        if self._exp is None:
            return self._add_slow(a, b)
        if a == 0:
            return b
        if b == 0:
            return a
        la, lb = self._log[a], self._log[b]
        z = self._zech[(lb - la) % (self.q - 1)]
        return 0 if z < 0 else self._exp[la + z]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        if self.r == 1:
            return (-a) % self.p
        if self._exp is None and self.has_tables:
            self._build_tables()
        if self._exp is not None:
            return self._exp[self._log[a] + (self.q - 1) // 2]
        return self._neg_slow(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.r == 1:
            return a * b % self.p
        if self._exp is None and self.has_tables:
            self._build_tables()
        if self._exp is None:
            return self._mul_slow(a, b)
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 0 if e else 1
        if self.r == 1:
            return pow(a, e, self.p)
        if self._exp is None and self.has_tables:
            self._build_tables()
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        out = 1
        while e:
            if e & 1:
                out = self._mul_slow(out, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return out

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroInput("log of 0")
        return self.tables()[1][a]

    def frobenius(self, a: int, k: int = 1) -> int:
        """a^{p^k}, by repeated p-th powering."""
        for _ in range(k % self.r if self.r else 0):
            a = self.pow(a, self.p)
        return a

    def _trace_slow(self, a: int) -> int:
        t, x = 0, a
        for _ in range(self.r):
            t = self.add(t, x)
            x = self.pow(x, self.p)
        if t >= self.p:
            raise AssertionError("trace left the prime field")
        return t

    def trace(self, a: int) -> int:
        """Absolute trace to F_p, returned as an integer in [0, p).

        The trace is F_p-linear, so it is evaluated from the traces of the
        basis vectors, which are computed once by summing conjugates."""
        tb = self._trace_basis
        if tb is None:
            tb = self._trace_basis = [self._trace_slow(self.p ** i) for i in range(self.r)]
            if self.p == 2:
                self._trace_mask = sum(1 << i for i, t in enumerate(tb) if t)
        if self.p == 2:
            return bin(a & self._trace_mask).count("1") & 1
        return sum(d * t for d, t in zip(self.digits(a), tb)) % self.p

    def is_square(self, a: int) -> bool:
        if a == 0:
            return True
        if self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def chi2(self, a: int) -> int:
        """Quadratic character (0 at 0); odd characteristic only."""
        if a == 0:
            return 0
        if self.has_tables:
            return -1 if self.tables()[1][a] & 1 else 1
        return 1 if self.pow(a, (self.q - 1) // 2) == 1 else -1

    def sqrt(self, a: int) -> Optional[int]:
        """Some square root of a, or None; brute force via logs."""
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, self.q // 2)
        if not self.is_square(a):
            return None
        exp, log, _ = self.tables()
        return exp[log[a] // 2]

    def least_nonsquare(self) -> int:
        for a in range(1, self.q):
            if not self.is_square(a):
                return a
        raise WrongCharacteristic("every element is a square in characteristic 2")

    def least_trace_one(self) -> int:
        for a in range(self.q):
            if self.trace(a) == 1:
                return a
        raise AssertionError("trace is onto")

    def eval_poly(self, coeffs, x: int) -> int:
        """Horner evaluation of an ascending list of encoded coefficients."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc


def _gf2_solve(columns, target) -> Optional[int]:
    """Solve sum_i h_i * columns[i] = target over F_2 (vectors as ints)."""
    rows = {}  # pivot bit -> (vector, combination)
    for i, col in enumerate(columns):
        v, comb = col, 1 << i
        while v:
            top = v.bit_length() - 1
            if top not in rows:
                rows[top] = (v, comb)
                break
            pv, pc = rows[top]
            v ^= pv
            comb ^= pc
    v, comb = target, 0
    while v:
        top = v.bit_length() - 1
        if top not in rows:
            return None
        pv, pc = rows[top]
        v ^= pv
        comb ^= pc
    return comb


@cache
def make_field(p: int, r: int) -> FiniteField:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if (p, r) not in MODULI:
        raise UnsupportedField(f"no modulus for ({p}, {r}) in the table")
    return FiniteField(p, r, MODULI[(p, r)])


@dataclass(frozen=True)
class FieldElem:
    """An element with its field attached; convenience wrapper for the API."""

    field: FiniteField
    value: int

    @property
    def coeffs(self) -> list:
        return self.field.digits(self.value)

    def _v(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.value
        return self.field.from_int(other)

    def __add__(self, o):
        return FieldElem(self.field, self.field.add(self.value, self._v(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return FieldElem(self.field, self.field.sub(self.value, self._v(o)))

    def __rsub__(self, o):
        return FieldElem(self.field, self.field.sub(self._v(o), self.value))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __mul__(self, o):
        return FieldElem(self.field, self.field.mul(self.value, self._v(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return FieldElem(self.field, self.field.div(self.value, self._v(o)))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}@{self.field!r}"


def trace_to_prime(a: FieldElem) -> int:
    return a.field.trace(a.value)


def is_power_residue(a: FieldElem, n: int) -> bool:
    F = a.field
    if a.value == 0:
        raise ZeroInput("power residue test of 0")
    return F.pow(a.value, (F.q - 1) // gcd(n, F.q - 1)) == 1


def solve_artin_schreier_int(F: FiniteField, c: int) -> Optional[int]:
    """Least encoded h with h^2 + h = c, or None."""
    if F.p != 2:
        raise WrongCharacteristic("Artin-Schreier equation h^2+h=c needs p = 2")
    cols = [F.add(F.mul(1 << i, 1 << i), 1 << i) for i in range(F.r)]
    h = _gf2_solve(cols, c)
    if h is None:
        return None
    # the two solutions differ by 1; pick the one with low bit clear
    return h & ~1


def solve_artin_schreier(c: FieldElem) -> Optional[FieldElem]:
    h = solve_artin_schreier_int(c.field, c.value)
    return None if h is None else FieldElem(c.field, h)


class FieldEmbedding:
    """The embedding F_{p^a} -> F_{p^{ab}} sending x to a fixed root of the
    small modulus (the least encoded one)."""

    def __init__(self, small: FiniteField, big: FiniteField):
        if small.p != big.p or big.r % small.r:
            raise UnsupportedField(f"{small!r} does not embed in {big!r}")
        self.small, self.big = small, big
        self.root = self._find_root()
        powers = [1]
        for _ in range(small.r - 1):
            powers.append(big.mul(powers[-1], self.root))
        self._powers = powers
        self._table = None
        if small.q <= 1 << 16:
            self._table = [self._map(a) for a in range(small.q)]

    def _find_root(self) -> int:
        small, big = self.small, self.big
        f = [big.from_int(c) for c in small.modulus]
        if small.r == 1:
            return big.neg(f[0])
        w = big.pow(big.generator(), (big.q - 1) // (small.q - 1))
        cand = 1
        for _ in range(small.q - 1):
            cand = big.mul(cand, w)
            if big.eval_poly(f, cand) == 0:
                roots = [cand]
                for _ in range(small.r - 1):
                    roots.append(big.pow(roots[-1], small.p))
                return min(roots)
        raise AssertionError("small modulus has no root in the big field")

    def _map(self, a: int) -> int:
        big = self.big
        out = 0
        for d, pw in zip(self.small.digits(a), self._powers):
            if d:
                out = big.add(out, big.mul(big.from_int(d), pw))
        return out

    def __call__(self, a: int) -> int:
        if self._table is not None:
            return self._table[a]
        return self._map(a)


@cache
def embedding(small: FiniteField, big: FiniteField) -> FieldEmbedding:
    return FieldEmbedding(small, big)


def embed(a: FieldElem, big: FiniteField) -> FieldElem:
    return FieldElem(big, embedding(a.field, big)(a.value))


def contains(big: FiniteField, a: int, sub_r: int) -> bool:
    """Whether a lies in the subfield of degree sub_r."""
    return big.pow(a, big.p ** sub_r) == a
