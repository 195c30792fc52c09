"""Finite groups with a Frobenius action, and their twisted conjugacy classes.

Two elements g, h are K-Frobenius conjugate when g = t^-1 h Fr(t) for some t.
Twists of an object over K correspond to these classes.  For a class we also
record the twist order: for an element g, T_g is the least T with
g Fr(g) ... Fr^{T-1}(g) = id; it is computed directly and through the
(c_g, |G|) factorisation, and the order of the twist is the minimum of T_g
over the class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Optional, Sequence

from .. import finitefield as ff
from ..errors import Inconsistent, NotAutomorphism


@dataclass(frozen=True)
class FiniteGroupWithFrobenius:
    elements: tuple          # hashable element descriptions
    table: tuple             # table[i][j] = index of elements[i] * elements[j]
    frob: tuple              # frob[i] = index of Fr(elements[i])
    identity: int
    labels: tuple

    @classmethod
    def build(cls, elements: Sequence[Hashable], op: Callable, frob: Callable,
              label: Optional[Callable] = None) -> "FiniteGroupWithFrobenius":
        elements = tuple(elements)
        index = {x: i for i, x in enumerate(elements)}
        if len(index) != len(elements):
            raise ValueError("duplicate group elements")
        try:
            table = tuple(tuple(index[op(x, y)] for y in elements) for x in elements)
            fr = tuple(index[frob(x)] for x in elements)
        except KeyError as exc:
            raise NotAutomorphism(f"group is not closed: {exc}") from exc
        ids = [i for i in range(len(elements))
               if all(table[i][j] == j for j in range(len(elements)))]
        if len(ids) != 1:
            raise ValueError("no unique identity element")
        labels = tuple(label(x) if label else str(x) for x in elements)
        G = cls(elements, table, fr, ids[0], labels)
        G.check()
        return G

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        row = self.table[i]
        return row.index(self.identity)

    def check(self) -> None:
        n = self.order
        for i in range(n):
            for j in range(n):
                for k in (0, n // 2, n - 1):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise NotAutomorphism("multiplication is not associative")
        if sorted(self.frob) != list(range(n)):
            raise NotAutomorphism("Frobenius action is not a bijection")
        for i in range(n):
            for j in range(n):
                if self.frob[self.table[i][j]] != self.table[self.frob[i]][self.frob[j]]:
                    raise NotAutomorphism("Frobenius action is not a homomorphism")

    def elem_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.table[x][i]
            k += 1
        return k

    def frob_power(self, i: int, c: int) -> int:
        for _ in range(c):
            i = self.frob[i]
        return i

    def frob_order(self) -> int:
        c, cur = 1, list(self.frob)
        while any(cur[i] != i for i in range(self.order)):
            cur = [self.frob[x] for x in cur]
            c += 1
        return c

    def is_rational(self, i: int) -> bool:
        return self.frob[i] == i

    def cocycle(self, i: int, c: int) -> int:
        """xi_g(Fr^c) = g Fr(g) ... Fr^{c-1}(g)."""
        acc, x = self.identity, i
        for _ in range(c):
            acc = self.table[acc][x]
            x = self.frob[x]
        return acc

    def twist_order_factored(self, i: int) -> tuple:
        """(c_g, |G|): c_g is the least c with G = xi_g(Fr^c) fixed by Fr^c."""
        c = 1
        while True:
            Gc = self.cocycle(i, c)
            if self.frob_power(Gc, c) == Gc:
                return c, self.elem_order(Gc)
            c += 1


@dataclass(frozen=True)
class FrobeniusClass:
    members: tuple           # element indices, sorted
    representative: int
    twist_order: int         # minimum of T_g over the class
    labels: tuple

    def to_json(self) -> dict:
        return {"members": list(self.labels), "twist_order": self.twist_order}


def twist_order(G: FiniteGroupWithFrobenius, i: int) -> int:
    """T_g: least T with xi_g(Fr^T) = id and g fixed by Fr^T.

    Computed by a direct scan and as c_g * |G|; the two must agree."""
    c, n = G.twist_order_factored(i)
    acc, x = G.identity, i
    direct = None
    for t in range(1, G.order * G.frob_order() + 1):
        acc = G.table[acc][x]
        x = G.frob[x]
        if acc == G.identity and x == i:
            direct = t
            break
    if direct != c * n:
        raise Inconsistent(f"twist order of {G.labels[i]}: factored {c}*{n}, direct {direct}")
    return direct


def frobenius_classes(G: FiniteGroupWithFrobenius) -> list:
    """Partition of G into K-Frobenius conjugacy classes."""
    n = G.order
    seen = [False] * n
    classes = []
    for start in range(n):
        if seen[start]:
            continue
        cls = set()
        for t in range(n):
            cls.add(G.table[G.table[G.inv(t)][start]][G.frob[t]])
        for x in cls:
            seen[x] = True
        members = tuple(sorted(cls))
        orders = {x: twist_order(G, x) for x in members}
        T = min(orders.values())
        rep = min(members, key=lambda x: (orders[x], x))
        classes.append(FrobeniusClass(members, rep, T, tuple(G.labels[x] for x in members)))
    return classes


# -- the automorphism group of the genus-3 family -----------------------------------

# S0 = {id, tau, ups, ups*tau} is stored as a 2-bit vector: bit 0 is tau,
# bit 1 is ups.  For c != 1 the group is S0 x <sigma>, sigma of order 3.
# For c = 1 elements are (a, j) with a in F_4 and j mod 9, acting by
# (S, Z) -> (zeta_9^j S, zeta_3^j Z + a); zeta_3 is the F_4 element 2 and
# sigma = kappa^6.

def s0_label(bits: int) -> str:
    return {0: "", 1: "tau", 2: "ups", 3: "ups*tau"}[bits]


def _join(*parts) -> str:
    parts = [x for x in parts if x]
    return "*".join(parts) if parts else "id"


@dataclass(frozen=True)
class AS34Element:
    """Decomposition used by the twist pipeline: s in S0 and sigma^k, when the
    element lies in S0 x <sigma>; both None otherwise."""
    s: Optional[int]
    k: Optional[int]


@lru_cache(maxsize=None)
def build_as34_group(c_is_one: bool, r: int, h_rational: bool, h_f4: int = 2):
    """(group, decomposition list) for the automorphism group of X_{c,d} over F_{2^r}.

    ``h_f4`` (c = 1 only) is the F_4 element, in the integer encoding, that the
    translation ups adds."""
    q3 = pow(2, r, 3)
    if not c_is_one:
        elems = [(s, k) for s in range(4) for k in range(3)]

        def op(x, y):
            return (x[0] ^ y[0], (x[1] + y[1]) % 3)

        def frob(x):
            s, k = x
            if not h_rational and s & 2:
                s ^= 1
            return (s, (k * q3) % 3)

        def label(x):
            s, k = x
            return _join(s0_label(s), {0: "", 1: "sigma", 2: "sigma^2"}[k])

        G = FiniteGroupWithFrobenius.build(elems, op, frob, label)
        decomp = tuple(AS34Element(s, k) for s, k in elems)
        return G, decomp

    F4 = ff.make_field(2, 2)
    z3 = 2
    if h_f4 not in (2, 3):
        raise ValueError("h must lie in F_4 minus F_2 when c = 1")
    q9 = pow(2, r, 9)
    elems = [(a, j) for a in range(4) for j in range(9)]

    def op(x, y):
        a1, j1 = x
        a2, j2 = y
        return (F4.add(a1, F4.mul(F4.pow(z3, j1), a2)), (j1 + j2) % 9)

    def frob(x):
        a, j = x
        return (F4.frobenius(a, r), (j * q9) % 9)

    a_bits = {0: 0, 1: 1, h_f4: 2, F4.add(h_f4, 1): 3}

    def label(x):
        a, j = x
        kap = "" if j == 0 else ("kappa" if j == 1 else f"kappa^{j}")
        return _join(s0_label(a_bits[a]), kap)

    G = FiniteGroupWithFrobenius.build(elems, op, frob, label)
    decomp = []
    for a, j in elems:
        if j % 3:
            decomp.append(AS34Element(None, None))
        else:
            decomp.append(AS34Element(a_bits[a], {0: 0, 6: 1, 3: 2}[j]))
    return G, tuple(decomp)


def expected_class_count(c_is_one: bool, r: int, h_rational: bool) -> int:
    """Class counts of the genus-3 automorphism group, by case."""
    if c_is_one:
        return 10 if r % 2 == 0 else 2
    if r % 2 == 0:
        return 12 if h_rational else 6
    return 4 if h_rational else 2
