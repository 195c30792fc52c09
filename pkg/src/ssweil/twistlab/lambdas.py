"""Root multipliers between an object and one of its twists.

If A' is a twist of A of order T, then after reordering the normalized Weil
numbers satisfy w_i = l_i z_i with every l_i a T-th root of unity.  Here the
matchings are found by brute force over permutations (2g <= 6), and the
record keeps the multiset of orders o(l_i) and t = lcm of those orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from ..errors import NoValidMatching
from ..intpoly import IntPoly, lcm_all, ord2, period_parity, nwn_orders
from ..rootsofunity import nwn_exponents, order_of


@dataclass(frozen=True)
class TwistRecord:
    lambda_orders: tuple
    t: int
    T: int
    matching: tuple           # matching[i] = index in the twist's root list

    def to_json(self) -> dict:
        return {"lambda_orders": list(self.lambda_orders), "t": self.t, "T": self.T}


def _exps(L: IntPoly, q: int) -> tuple:
    return nwn_exponents(L.reverse(), q)


def valid_matchings(L: IntPoly, L_twist: IntPoly, q: int, T: int):
    """Every matching z_i -> w_pi(i) with (w/z)^T = 1, as TwistRecords."""
    z = _exps(L, q)
    w = _exps(L_twist, q)
    if len(z) != len(w):
        raise NoValidMatching("the two polynomials have different degrees")
    seen = set()
    out = []
    for perm in permutations(range(len(w))):
        lam = [(w[j] - z[i]) % 1 for i, j in enumerate(perm)]
        if any((T * x) % 1 for x in lam):
            continue
        key = tuple(sorted(zip(z, (w[j] for j in perm))))
        if key in seen:
            continue
        seen.add(key)
        orders = tuple(sorted(order_of(x) for x in lam))
        out.append(TwistRecord(orders, lcm_all(orders), T, tuple(perm)))
    return out


def lambda_multiset(L: IntPoly, L_twist: IntPoly, q: int, T: int) -> TwistRecord:
    """A matching with the least t (ties broken by the order multiset)."""
    recs = valid_matchings(L, L_twist, q, T)
    if not recs:
        raise NoValidMatching(f"no matching by {T}-th roots of unity")
    rec = min(recs, key=lambda x: (x.t, x.lambda_orders, x.matching))
    if T % rec.t:
        raise NoValidMatching(f"t = {rec.t} does not divide T = {T}")
    return rec


def parity_change_valuation_ok(L_plus: IntPoly, L_minus: IntPoly, p: int, r: int,
                               T: int) -> bool:
    """For a parity +1 object (period M) and a parity -1 twist (period N) of
    order T: every valid matching has ord_2(t) = 1 + ord_2(M) when
    ord_2(N) <= ord_2(M), and ord_2(t) = ord_2(N) otherwise."""
    q = p ** r
    M, dM = period_parity(nwn_orders(L_plus.reverse(), q), r)
    N, dN = period_parity(nwn_orders(L_minus.reverse(), q), r)
    if (dM, dN) != (1, -1):
        raise ValueError("need a parity +1 object and a parity -1 twist")
    eM, eN = ord2(M), ord2(N)
    want = 1 + eM if eN <= eM else eN
    recs = valid_matchings(L_plus, L_minus, q, T)
    if not recs:
        raise NoValidMatching("no matching for the twist pair")
    return all(ord2(rec.t) == want for rec in recs)
