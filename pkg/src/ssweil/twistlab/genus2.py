"""Genus-2 curves y^2 = x^5 + a whose twists are only X and its quadratic twist.

For p > 5 the geometric automorphism group of y^2 = x^5 + a is mu_10, with
zeta acting by (x, y) -> (zeta^2 x, zeta^5 y); Frobenius raises zeta to the
q-th power.  When every K-Frobenius class of that group contains id or the
hyperelliptic involution zeta^5, the twists are exactly X and X_iota and the
type follows from their two parities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import curves as cv
from ..errors import PreconditionFailed
from ..intpoly import WeilData
from ..weilclass import TypeVerdict, verdict_from_parities
from .groups import FiniteGroupWithFrobenius, frobenius_classes


def cyclic_group(n: int, q: int) -> FiniteGroupWithFrobenius:
    """Z/n written additively, with Frobenius k -> q k."""
    return FiniteGroupWithFrobenius.build(
        range(n), lambda x, y: (x + y) % n, lambda x: (q * x) % n,
        label=lambda k: "id" if k == 0 else f"zeta^{k}")


@dataclass(frozen=True)
class QuinticReport:
    spec: cv.CurveSpec
    twist: cv.CurveSpec
    weil: WeilData
    twist_weil: WeilData
    class_count: int
    verdict: TypeVerdict

    def to_json(self) -> dict:
        def w(x):
            return {"lpoly": list(x.lpoly.coeffs), "a1a2": [x.lpoly[1], x.lpoly[2]],
                    "orders": list(x.nwn_orders), "parity": x.parity}
        return {"curve": self.spec.to_json(), "twist": self.twist.to_json(),
                "weil": w(self.weil), "twist_weil": w(self.twist_weil),
                "frobenius_classes": self.class_count, "type": self.verdict.to_json()}


def quintic_type(F, a: int) -> QuinticReport:
    """Type of y^2 = x^5 + a over F (a encoded, nonzero)."""
    if F.p <= 5:
        raise PreconditionFailed("needs p > 5")
    if a == 0:
        raise PreconditionFailed("a must be nonzero")
    G = cyclic_group(10, F.q)
    classes = frobenius_classes(G)
    if not all(0 in c.members or 5 in c.members for c in classes):
        raise PreconditionFailed("twists beyond the quadratic twist exist for this q")
    spec = cv.hyperelliptic(F, [a, 0, 0, 0, 0, 1])
    tw = cv.quadratic_twist(spec)
    wd, wt = cv.weil_data(spec), cv.weil_data(tw)
    if not (wd.supersingular and wt.supersingular):
        raise PreconditionFailed("the curve is not supersingular over this field")
    verdict = verdict_from_parities([wd.parity, wt.parity], "quadratic-twists-exhaust",
                                    (f"{len(classes)} Frobenius classes",))
    return QuinticReport(spec, tw, wd, wt, len(classes), verdict)
