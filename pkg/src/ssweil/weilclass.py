"""Type rules for supersingular objects and the elliptic and surface tables.

A type is one of FullyMaximal (every twist has parity +1), FullyMinimal
(every twist has parity -1) or Mixed.  Verdicts carry a short rule tag saying
which criterion produced them, plus the assumptions the caller vouched for.

The two tables are stored as data, with their conditions as predicates on
(p, r), and every row is re-derived from its Weil polynomial by ``intpoly``.
A disagreement raises ``TableMismatch``; it is never papered over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Fr
from math import isqrt
from typing import Callable, Optional

from .errors import (AmbiguousTableMatch, ExcludedCase, Inconsistent, NotInTable,
                     TableMismatch)
from .intpoly import (IntPoly, e_vector, graeffe_power, nwn_orders, ord2,
                      period_parity)
from .rootsofunity import nwn_exponents, order_of

FULLY_MAXIMAL = "FullyMaximal"
FULLY_MINIMAL = "FullyMinimal"
MIXED = "Mixed"
LABELS = (FULLY_MAXIMAL, FULLY_MINIMAL, MIXED)


@dataclass(frozen=True)
class TypeVerdict:
    label: str
    rule: str
    assumptions: tuple = ()

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"unknown type label {self.label!r}")
        object.__setattr__(self, "assumptions", tuple(self.assumptions))

    def to_json(self) -> dict:
        return {"label": self.label, "rule": self.rule, "assumptions": list(self.assumptions)}


# -- parity and type rules ----------------------------------------------------------

def parity_from_e(e, r: int) -> int:
    """Parity +1 iff the e-vector is constant {e} with e >= 1 (e >= 2 for odd r)."""
    es = set(e)
    if len(es) != 1:
        return -1
    (k,) = es
    return 1 if k >= (2 if r % 2 else 1) else -1


def negate_e(e) -> tuple:
    """Effect of z -> -z on 2-valuations: 0 and 1 swap, larger values stay."""
    return tuple(sorted({0: 1, 1: 0}.get(k, k) for k in e))


def verdict_from_parities(parities, rule: str, assumptions=()) -> TypeVerdict:
    ps = set(parities)
    if ps == {1}:
        return TypeVerdict(FULLY_MAXIMAL, rule, assumptions)
    if ps == {-1}:
        return TypeVerdict(FULLY_MINIMAL, rule, assumptions)
    if ps == {1, -1}:
        return TypeVerdict(MIXED, rule, assumptions)
    raise ValueError(f"no parities to classify: {parities!r}")


def classify_aut2(e, r: int) -> TypeVerdict:
    """Type from the e-vector alone, valid when the automorphism group is {1, -1}."""
    es = set(e)
    assume = ("Aut = Z/2Z",)
    if len(es) > 1:
        return TypeVerdict(FULLY_MINIMAL, "aut2-criterion", assume)
    (k,) = es
    if k >= 2:
        return TypeVerdict(FULLY_MAXIMAL, "aut2-criterion", assume)
    if r % 2 == 0:
        return TypeVerdict(MIXED, "aut2-criterion", assume)
    raise Inconsistent(f"constant e-vector {{{k}}} cannot occur for odd r")


def necessary_conditions(e, r: int, simple: bool = False) -> frozenset:
    """Labels ruled out by the e-vector (and simplicity when r is even)."""
    es = set(e)
    out = set()
    constant = len(es) == 1
    if not (constant and min(es) >= 2):
        out.add(FULLY_MAXIMAL)
    if constant:
        out.add(FULLY_MINIMAL)
    if constant and min(es) <= 1 and r % 2 == 0:
        out.update((FULLY_MAXIMAL, FULLY_MINIMAL))
    if simple and r % 2 == 0:
        out.add(FULLY_MINIMAL)
    return frozenset(out)


def parity_change_admissible(T: int, e_M: int, e_N: int) -> bool:
    """False when a twist of order T provably keeps the parity.

    e_M (resp. e_N) is ord_2 of the period on the parity +1 (resp. -1) side."""
    t = ord2(T)
    if t <= e_M:
        return False
    if t < e_N or t == e_N == 0:
        return False
    return True


def curve_vs_jacobian_type(e, r: int, hyperelliptic: bool, jacobian: TypeVerdict):
    """(curve verdict, Jacobian verdict).

    The two differ exactly when the curve is not hyperelliptic, the Jacobian is
    mixed, r is even and e = {e0} with e0 <= 1; then all curve twists share
    the curve's own parity.  The converse direction is asserted, not derived."""
    es = set(e)
    if (not hyperelliptic and jacobian.label == MIXED and r % 2 == 0
            and len(es) == 1 and min(es) <= 1):
        label = FULLY_MAXIMAL if parity_from_e(e, r) == 1 else FULLY_MINIMAL
        curve = TypeVerdict(label, "curve-jacobian-discrepancy",
                            ("non-hyperelliptic", "converse asserted"))
        return curve, jacobian
    curve = TypeVerdict(jacobian.label, "curve-jacobian-agree", jacobian.assumptions)
    return curve, jacobian


def period_one_type(hyperelliptic: bool, parity: int) -> TypeVerdict:
    """Type of a curve whose period is 1 (maximal or minimal over K)."""
    if hyperelliptic:
        return TypeVerdict(MIXED, "period-one", ("hyperelliptic",))
    label = FULLY_MAXIMAL if parity == 1 else FULLY_MINIMAL
    return TypeVerdict(label, "period-one", ("non-hyperelliptic",))


def trivial_aut_type(parity: int) -> TypeVerdict:
    label = FULLY_MAXIMAL if parity == 1 else FULLY_MINIMAL
    return TypeVerdict(label, "trivial-aut", ("Aut trivial",))


# -- helpers on q = p^r ---------------------------------------------------------------

def exact_sqrt(n: int) -> Optional[int]:
    if n < 0:
        return None
    s = isqrt(n)
    return s if s * s == n else None


# -- elliptic table ------------------------------------------------------------------------

@dataclass(frozen=True)
class EllipticRow:
    case: str            # printed case label, e.g. "W2"
    sign: int            # +1, -1, or 0 for unsigned rows
    condition: Callable  # (p, r) -> bool
    beta: Callable       # (p, r) -> int
    nwn: tuple           # exponents of the printed normalized Weil numbers
    e_printed: int
    period: int
    parity: int

    @property
    def label(self) -> str:
        return self.case + {1: "+", -1: "-", 0: ""}[self.sign]


def _w1(s):
    return lambda p, r: s * 2 * exact_sqrt(p ** r)


def _w2(s):
    return lambda p, r: s * exact_sqrt(p ** r)


def _w4a(s):
    return lambda p, r: s * exact_sqrt(2 * p ** r)


def _w4b(s):
    return lambda p, r: s * exact_sqrt(3 * p ** r)


# One entry per sign of each printed row.  NWN exponents follow the printed
# column with the sign substituted (W2+ is -zeta_3, W4a- is -zeta_8, ...).
ELLIPTIC_TABLE = (
    EllipticRow("W1", 1, lambda p, r: r % 2 == 0, _w1(1), (Fr(0), Fr(0)), 0, 1, -1),
    EllipticRow("W1", -1, lambda p, r: r % 2 == 0, _w1(-1), (Fr(1, 2), Fr(1, 2)), 0, 1, 1),
    EllipticRow("W2", 1, lambda p, r: r % 2 == 0 and p % 3 != 1, _w2(1),
                (Fr(1, 6), Fr(5, 6)), 1, 3, 1),
    EllipticRow("W2", -1, lambda p, r: r % 2 == 0 and p % 3 != 1, _w2(-1),
                (Fr(1, 3), Fr(2, 3)), 1, 3, -1),
    EllipticRow("W3", 0, lambda p, r: (r % 2 == 0 and p % 4 != 1) or r % 2 == 1,
                lambda p, r: 0, (Fr(1, 4), Fr(3, 4)), 2, 2, 1),
    EllipticRow("W4a", 1, lambda p, r: r % 2 == 1 and p == 2, _w4a(1),
                (Fr(1, 8), Fr(7, 8)), 3, 4, 1),
    EllipticRow("W4a", -1, lambda p, r: r % 2 == 1 and p == 2, _w4a(-1),
                (Fr(3, 8), Fr(5, 8)), 3, 4, 1),
    EllipticRow("W4b", 1, lambda p, r: r % 2 == 1 and p == 3, _w4b(1),
                (Fr(1, 12), Fr(11, 12)), 2, 6, 1),
    EllipticRow("W4b", -1, lambda p, r: r % 2 == 1 and p == 3, _w4b(-1),
                (Fr(5, 12), Fr(7, 12)), 2, 6, 1),
)

ELLIPTIC_ROWS = {row.label: row for row in ELLIPTIC_TABLE}


def elliptic_e_signed(row: EllipticRow) -> int:
    """ord_2 of the row's printed NWN orders with the sign substituted.

    The printed ord_2 column carries no sign; it is the upper-sign value for
    W1 and W2, while the lower sign is read off the signed NWN column."""
    return ord2(order_of(row.nwn[0]))


def elliptic_charpoly(beta: int, q: int) -> IntPoly:
    return IntPoly((q, -beta, 1))


@dataclass(frozen=True)
class EllipticClass:
    case: str
    beta: int
    orders: tuple
    e: int
    period: int
    parity: int
    row: EllipticRow = field(compare=False, repr=False)

    def to_json(self) -> dict:
        return {"case": self.case, "beta": self.beta, "orders": list(self.orders),
                "e": self.e, "period": self.period, "parity": self.parity}


def elliptic_class_from_beta(p: int, r: int, beta: int) -> EllipticClass:
    """The table row with this beta, re-derived through the pipeline."""
    for row in ELLIPTIC_TABLE:
        if row.condition(p, r) and row.beta(p, r) == beta:
            return _check_elliptic_row(row, p, r)
    raise NotInTable(f"beta = {beta} is not a supersingular trace over F_{p}^{r}")


def _check_elliptic_row(row: EllipticRow, p: int, r: int) -> EllipticClass:
    q = p ** r
    beta = row.beta(p, r)
    P = elliptic_charpoly(beta, q)
    orders = nwn_orders(P, q)
    exps = nwn_exponents(P, q)
    (e,) = e_vector(orders, 1)
    mu, delta = period_parity(orders, r)
    printed_orders = tuple(sorted(order_of(x) for x in row.nwn))
    if (exps != tuple(sorted(row.nwn)) or orders != printed_orders
            or e != elliptic_e_signed(row) or mu != row.period or delta != row.parity):
        raise TableMismatch(
            f"{row.label} at q={q}: pipeline orders={orders} e={e} period={mu} parity={delta}, "
            f"table orders={printed_orders} e={elliptic_e_signed(row)} "
            f"period={row.period} parity={row.parity}")
    return EllipticClass(row.label, beta, orders, e, mu, delta, row)


def elliptic_table(p: int, r: int) -> list:
    """All admissible signed rows for (p, r), each checked against the pipeline."""
    return [_check_elliptic_row(row, p, r) for row in ELLIPTIC_TABLE if row.condition(p, r)]


# -- surface table ----------------------------------------------------------------------------

def _fr(*xs):
    return tuple(Fr(n, d) for n, d in xs)


@dataclass(frozen=True)
class SurfaceRow:
    case: str
    coeffs: Callable      # (p, r) -> (a1, a2) or None when a square root fails
    condition: Callable   # (p, r) -> bool
    t0: int
    W: int
    z_L: Fr               # exponent of the printed z/L
    nwn: tuple            # printed NWN exponents
    mu: int
    delta: int

    @property
    def w_label(self) -> str:
        """Signed elliptic-table label of E/L implied by the printed W and z/L."""
        key = (self.W, self.z_L % 1)
        return {(1, Fr(0)): "W1+", (1, Fr(1, 2)): "W1-", (2, Fr(1, 3)): "W2-",
                (2, Fr(5, 6)): "W2+", (3, Fr(1, 4)): "W3"}.get(key, f"W{self.W}?")


def _c(f):
    def g(p, r):
        q = p ** r
        return f(p, r, q)
    return g


def _sq(n):
    return exact_sqrt(n)


def _pair(a1, a2):
    return None if a1 is None else (a1, a2)


SURFACE_TABLE = (
    SurfaceRow("1a", _c(lambda p, r, q: (0, 0)),
               lambda p, r: (r % 2 == 1 and p % 4 == 3) or (r % 2 == 0 and p % 4 != 1),
               2, 3, Fr(1, 4), _fr((1, 8), (7, 8), (3, 8), (5, 8)), 4, 1),
    SurfaceRow("1b", _c(lambda p, r, q: (0, 0)),
               lambda p, r: (r % 2 == 1 and p % 4 == 1) or (r % 2 == 0 and p % 8 == 5),
               4, 1, Fr(1, 2), _fr((1, 8), (7, 8), (3, 8), (5, 8)), 4, 1),
    SurfaceRow("2a", _c(lambda p, r, q: (0, q)),
               lambda p, r: r % 2 == 1 and p % 3 != 1,
               2, 2, Fr(1, 3), _fr((1, 6), (5, 6), (2, 6), (4, 6)), 6, -1),
    SurfaceRow("2b", _c(lambda p, r, q: (0, q)),
               lambda p, r: r % 2 == 1 and p % 3 == 1,
               6, 1, Fr(1, 2), _fr((1, 12), (11, 12), (5, 12), (7, 12)), 6, 1),
    SurfaceRow("3a", _c(lambda p, r, q: (0, -q)),
               lambda p, r: (r % 2 == 1 and p % 3 == 2) or (r % 2 == 0 and p % 3 != 1),
               2, 2, Fr(5, 6), _fr((1, 12), (11, 12), (5, 12), (7, 12)), 6, 1),
    SurfaceRow("3b", _c(lambda p, r, q: (0, -q)),
               lambda p, r: (r % 2 == 1 and p % 3 == 1) or (r % 2 == 0 and p % 12 in (4, 7, 10)),
               3, 3, Fr(1, 4), _fr((1, 12), (11, 12), (5, 12), (7, 12)), 6, 1),
    SurfaceRow("4a", _c(lambda p, r, q: _pair(_sq(q), q)),
               lambda p, r: r % 2 == 0 and p % 5 != 1,
               5, 1, Fr(0), _fr((1, 5), (4, 5), (2, 5), (3, 5)), 5, -1),
    SurfaceRow("4b", _c(lambda p, r, q: _pair(None if _sq(q) is None else -_sq(q), q)),
               lambda p, r: r % 2 == 0 and p % 5 != 1,
               5, 1, Fr(1, 2), _fr((1, 10), (9, 10), (3, 10), (7, 10)), 5, 1),
    SurfaceRow("5a", _c(lambda p, r, q: _pair(_sq(5 * q), 3 * q)),
               lambda p, r: r % 2 == 1 and p == 5,
               10, 1, Fr(0), _fr((3, 10), (7, 10), (2, 5), (3, 5)), 10, -1),
    SurfaceRow("5b", _c(lambda p, r, q: _pair(None if _sq(5 * q) is None else -_sq(5 * q), 3 * q)),
               lambda p, r: r % 2 == 1 and p == 5,
               10, 1, Fr(0), _fr((1, 10), (9, 10), (1, 5), (4, 5)), 10, -1),
    SurfaceRow("6a", _c(lambda p, r, q: _pair(_sq(2 * q), q)),
               lambda p, r: r % 2 == 1 and p == 2,
               4, 2, Fr(5, 6), _fr((13, 24), (11, 24), (19, 24), (5, 24)), 12, 1),
    SurfaceRow("6b", _c(lambda p, r, q: _pair(None if _sq(2 * q) is None else -_sq(2 * q), q)),
               lambda p, r: r % 2 == 1 and p == 2,
               4, 2, Fr(5, 6), _fr((1, 24), (23, 24), (7, 24), (17, 24)), 12, 1),
    SurfaceRow("7a", _c(lambda p, r, q: (0, -2 * q)),
               lambda p, r: r % 2 == 1,
               2, 1, Fr(0), _fr((0, 1), (0, 1), (1, 2), (1, 2)), 2, -1),
    SurfaceRow("7b", _c(lambda p, r, q: (0, 2 * q)),
               lambda p, r: r % 2 == 0 and p % 4 == 1,
               2, 2, Fr(1, 2), _fr((1, 4), (3, 4), (1, 4), (3, 4)), 2, 1),
    SurfaceRow("8a", _c(lambda p, r, q: _pair(None if _sq(q) is None else 2 * _sq(q), 3 * q)),
               lambda p, r: r % 2 == 0 and p % 3 == 1,
               3, 1, Fr(0), _fr((1, 3), (2, 3), (1, 3), (2, 3)), 3, -1),
    SurfaceRow("8b", _c(lambda p, r, q: _pair(None if _sq(q) is None else -2 * _sq(q), 3 * q)),
               lambda p, r: r % 2 == 0 and p % 3 == 1,
               3, 1, Fr(1, 2), _fr((1, 6), (5, 6), (1, 6), (5, 6)), 3, 1),
)

SURFACE_ROWS = {row.case: row for row in SURFACE_TABLE}


def surface_charpoly(a1: int, a2: int, q: int) -> IntPoly:
    return IntPoly((q * q, q * a1, a2, a1, 1))


@dataclass(frozen=True)
class SurfaceClass:
    case: str
    p: int
    r: int
    a1: int
    a2: int
    t0: int
    W: str
    nwn: tuple
    mu: int
    delta: int
    row: SurfaceRow = field(compare=False, repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.r

    @property
    def e_vector(self) -> tuple:
        return e_vector([order_of(x) for x in self.nwn], 2)

    def to_json(self) -> dict:
        return {"case": self.case, "a1": self.a1, "a2": self.a2, "t0": self.t0,
                "W": self.W, "nwn": [str(x) for x in self.nwn], "mu": self.mu,
                "delta": self.delta}


def surface_rows(p: int, r: int, a1: int, a2: int) -> list:
    """All rows whose (a1, a2) pattern and conditions match."""
    out = []
    for row in SURFACE_TABLE:
        if row.condition(p, r) and row.coeffs(p, r) == (a1, a2):
            out.append(row)
    return out


@dataclass(frozen=True)
class SurfaceCheck:
    """Pipeline values for a row, and whether each agrees with the table."""
    nwn: tuple
    mu: int
    delta: int
    w_found: Optional[str]
    nwn_ok: bool
    mu_ok: bool
    delta_ok: bool
    w_ok: bool

    @property
    def ok(self) -> bool:
        return self.nwn_ok and self.mu_ok and self.delta_ok and self.w_ok


def _elliptic_case_of_square(P: IntPoly, p: int, r: int) -> Optional[str]:
    """Signed elliptic-table label of E if P = (T^2 - beta T + Q)^2 for an admissible row."""
    Q = p ** r
    for row in ELLIPTIC_TABLE:
        if not row.condition(p, r):
            continue
        E = elliptic_charpoly(row.beta(p, r), Q)
        if E * E == P:
            return row.label
    return None


def check_surface_row(row: SurfaceRow, p: int, r: int) -> SurfaceCheck:
    q = p ** r
    a1, a2 = row.coeffs(p, r)
    P = surface_charpoly(a1, a2, q)
    exps = nwn_exponents(P, q)
    mu, delta = period_parity(nwn_orders(P, q), r)
    G = graeffe_power(P, row.t0)
    w_found = _elliptic_case_of_square(G, p, r * row.t0)
    return SurfaceCheck(exps, mu, delta, w_found,
                        exps == tuple(sorted(x % 1 for x in row.nwn)),
                        mu == row.mu, delta == row.delta, w_found == row.w_label)


def surface_table(p: int, r: int, a1: int, a2: int) -> SurfaceClass:
    rows = surface_rows(p, r, a1, a2)
    if not rows:
        raise NotInTable(f"(a1, a2) = ({a1}, {a2}) over F_{p}^{r} matches no row")
    if len(rows) > 1:
        raise AmbiguousTableMatch(f"rows {[x.case for x in rows]} all match")
    row = rows[0]
    chk = check_surface_row(row, p, r)
    if not chk.ok:
        raise TableMismatch(
            f"row {row.case} at q={p ** r}: pipeline NWN={[str(x) for x in chk.nwn]} "
            f"mu={chk.mu} delta={chk.delta} E/L={chk.w_found}; table NWN="
            f"{[str(x) for x in sorted(row.nwn)]} mu={row.mu} delta={row.delta} "
            f"E/L={row.w_label}")
    return SurfaceClass(row.case, p, r, a1, a2, row.t0, row.w_label,
                        tuple(sorted(x % 1 for x in row.nwn)), row.mu, row.delta, row)


def admissible_instances(row: SurfaceRow, count: int = 2, primes=None, max_r: int = 8):
    """The `count` smallest (p, r) satisfying the row's conditions."""
    if primes is None:
        primes = [n for n in range(2, 50) if all(n % d for d in range(2, n))]
    found = []
    for p in primes:
        for r in range(1, max_r + 1):
            if row.condition(p, r) and row.coeffs(p, r) is not None:
                found.append((p ** r, p, r))
    found.sort()
    return [(p, r) for _, p, r in found[:count]]


_SURFACE_MAXIMAL_ODD = {"1a", "1b", "2b", "3a", "6a", "6b"}
_SURFACE_MINIMAL_ODD = {"2a", "5a", "5b", "7a"}
_SURFACE_MAXIMAL_EVEN = {"1a", "1b", "3a", "7b"}
_SURFACE_MIXED_EVEN = {"4a", "4b", "8a", "8b"}


def surface_type(sc, r: Optional[int] = None) -> TypeVerdict:
    """Type of a principally polarized surface with Aut = Z/2Z in a table row.

    ``sc`` is a SurfaceClass or a row label.  The case list is cross-checked
    against ``classify_aut2`` on the row's own printed NWN."""
    case = sc if isinstance(sc, str) else sc.case
    if r is None:
        r = sc.r
    if case == "3b":
        raise ExcludedCase("row 3b admits no principal polarization with Aut = Z/2Z")
    row = SURFACE_ROWS[case]
    if r % 2:
        if case in _SURFACE_MAXIMAL_ODD:
            label = FULLY_MAXIMAL
        elif case in _SURFACE_MINIMAL_ODD:
            label = FULLY_MINIMAL
        else:
            raise NotInTable(f"row {case} does not occur for odd r")
    else:
        if case in _SURFACE_MAXIMAL_EVEN:
            label = FULLY_MAXIMAL
        elif case in _SURFACE_MIXED_EVEN:
            label = MIXED
        else:
            raise NotInTable(f"row {case} does not occur for even r")
    assume = ("principally polarized", "Aut = Z/2Z", "simple")
    e = e_vector([order_of(x) for x in row.nwn], 2)
    cross = classify_aut2(e, r)
    if cross.label != label:
        raise Inconsistent(f"row {case}: case list says {label}, e-vector rule says {cross.label}")
    return TypeVerdict(label, "surface-table-cases", assume)
