"""Supersingular elliptic curves: twists, types and isomorphism-class censuses.

Models are Weierstrass 5-tuples of encoded field elements.  An isomorphism is
a substitution x = u^2 x' + r, y = u^3 y' + s u^2 x' + t, acting on the
coefficients by the standard transformation formulas.  Every curve over F_q
is isomorphic to a model of a reduced family:

* p >= 5: y^2 = x^3 + a x + b, moved only by u;
* p = 3: y^2 = x^3 + a2 x^2 + a4 x + a6, moved by u and r;
* p = 2, supersingular: a1 = 0, moved by all (u, r, s, t).

Twists over K of a curve with invariant j are the K-isomorphism classes of
models over K with that invariant; they are enumerated directly and their
number is checked against the K-Frobenius classes of the geometric
automorphism group.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .. import curves as cv
from .. import finitefield as ff
from ..errors import (FieldTooLarge, Inconsistent, InputError, NotSupersingular,
                      UnsupportedField)
from ..weilclass import (FULLY_MAXIMAL, MIXED, TypeVerdict, elliptic_class_from_beta,
                         verdict_from_parities)
from ..rootsofunity import legendre
from .groups import FiniteGroupWithFrobenius, frobenius_classes

CENSUS_MODEL_LIMIT = 1 << 17


# -- Weierstrass isomorphisms -----------------------------------------------------------

def transform(F, a, T):
    """Coefficients of the model obtained from ``a`` by T = (u, r, s, t)."""
    u, r, s, t = T
    a1, a2, a3, a4, a6 = a
    m, ad, sb, k = F.mul, F.add, F.sub, F.from_int
    ui = F.inv(u)
    u2 = m(ui, ui)
    u3 = m(u2, ui)
    u4 = m(u2, u2)
    u6 = m(u4, u2)
    n1 = ad(a1, m(k(2), s))
    n2 = sb(ad(sb(a2, m(s, a1)), m(k(3), r)), m(s, s))
    n3 = ad(ad(a3, m(r, a1)), m(k(2), t))
    n4 = sb(ad(sb(a4, m(s, a3)), m(k(2), m(r, a2))), m(ad(t, m(r, s)), a1))
    n4 = sb(ad(n4, m(k(3), m(r, r))), m(k(2), m(s, t)))
    n6 = ad(ad(ad(a6, m(r, a4)), m(m(r, r), a2)), m(r, m(r, r)))
    n6 = sb(sb(sb(n6, m(t, a3)), m(t, t)), m(m(r, t), a1))
    return (m(n1, ui), m(n2, u2), m(n3, u3), m(n4, u4), m(n6, u6))


def compose(F, T1, T2):
    """The substitution equal to applying T1 and then T2."""
    u1, r1, s1, t1 = T1
    u2, r2, s2, t2 = T2
    m, ad = F.mul, F.add
    u1s = m(u1, u1)
    return (m(u1, u2), ad(r1, m(u1s, r2)), ad(s1, m(u1, s2)),
            ad(ad(t1, m(m(u1s, u1), t2)), m(m(s1, u1s), r2)))


def frob_transform(F, T, q: int):
    return tuple(F.pow(x, q) for x in T)


def family_transforms(F):
    """Substitutions over F that keep the reduced family of F's characteristic."""
    units = range(1, F.q)
    if F.p >= 5:
        return [(u, 0, 0, 0) for u in units]
    if F.p == 3:
        return [(u, r, 0, 0) for u in units for r in range(F.q)]
    return [(u, r, s, t) for u in units for r in range(F.q)
            for s in range(F.q) for t in range(F.q)]


def family_models(F):
    """All smooth models of the reduced family over F (supersingular only for p = 2)."""
    q = F.q
    if F.p >= 5:
        it = ((0, 0, 0, a, b) for a in range(q) for b in range(q))
    elif F.p == 3:
        it = ((0, a2, 0, a4, a6) for a2 in range(q) for a4 in range(q) for a6 in range(q))
    else:
        it = ((0, a2, a3, a4, a6) for a2 in range(q) for a3 in range(q)
              for a4 in range(q) for a6 in range(q))
    return [a for a in it if cv.discriminant(F, a) != 0]


def models_with_j(F, j: int):
    """All smooth models of the reduced family over F with invariant j."""
    if F.p >= 5:
        k = F.from_int
        if j == 0:
            return [(0, 0, 0, 0, b) for b in range(1, F.q)]
        if j == k(1728):
            return [(0, 0, 0, a, 0) for a in range(1, F.q)]
        m = F.mul
        c = F.sub(k(1728), j)
        a0 = m(k(3), m(j, c))
        b0 = m(k(2), m(j, m(c, c)))
        out = []
        for lam in range(1, F.q):
            l2 = m(lam, lam)
            out.append((0, 0, 0, m(a0, l2), m(b0, m(l2, lam))))
        return sorted(set(out))
    return [a for a in family_models(F) if cv.j_invariant(F, a) == j]


def isomorphism_classes(F, models):
    """Partition of ``models`` into F-isomorphism classes (sorted lists)."""
    index = {a: i for i, a in enumerate(models)}
    Ts = family_transforms(F)
    seen = set()
    classes = []
    for a in models:
        if a in seen:
            continue
        orbit = {transform(F, a, T) for T in Ts}
        missing = orbit - set(index)
        if missing:
            raise Inconsistent(f"transforms left the model list: {sorted(missing)[:1]}")
        seen |= orbit
        classes.append(sorted(orbit))
    return classes


# -- the automorphism group and its Frobenius classes ---------------------------------------

def automorphism_group(K, a) -> FiniteGroupWithFrobenius:
    """Geometric automorphisms of the model ``a`` over K, with Fr_K acting.

    The search runs over F_{p^2} (F_4 for p = 2) when that contains K and all
    automorphisms; otherwise over the next extension listed below."""
    p = K.p
    for m in (2, 4, 6):
        if m % K.r:
            continue
        try:
            L = ff.make_field(p, m)
        except UnsupportedField:
            continue
        emb = ff.embedding(K, L)
        aL = tuple(emb(x) for x in a)
        auts = [T for T in family_transforms_full(L, aL) if transform(L, aL, T) == aL]
        want = _aut_order(K, a)
        if len(auts) == want:
            break
    else:
        raise FieldTooLarge(f"automorphisms of {a} over {K!r} lie beyond F_{p}^6")
    q = K.q
    return FiniteGroupWithFrobenius.build(
        auts, lambda x, y: compose(L, x, y), lambda x: frob_transform(L, x, q),
        label=lambda T: "(" + ",".join(map(str, T)) + ")")


def _aut_order(K, a) -> int:
    """|Aut| by j: 24, 12 for j = 0 when p = 2, 3; else 6, 4 or 2."""
    j = cv.j_invariant(K, a)
    if K.p in (2, 3):
        return {2: 24, 3: 12}[K.p] if j == 0 else 2
    if j == 0:
        return 6
    return 4 if j == K.from_int(1728) else 2


def family_transforms_full(F, a=None):
    """Automorphism candidates for the model ``a``.

    An automorphism scales the invariant differential by a root of unity of
    order dividing 4 or 6, so u^12 = 1.  For p >= 5 only u moves a short model
    to itself; for p = 3 and a1 = a3 = 0 also s = t = 0; for p = 2 and a1 = 0
    the a2 coefficient forces r = a2 (u^2 + 1) + s^2."""
    us = [u for u in range(1, F.q) if F.pow(u, 12) == 1]
    if F.p >= 5:
        return [(u, 0, 0, 0) for u in us]
    if F.p == 3 and a is not None and a[0] == 0 and a[2] == 0:
        return [(u, r, 0, 0) for u in us for r in range(F.q)]
    if F.p == 2 and a is not None and a[0] == 0:
        a2 = a[1]
        return [(u, F.add(F.mul(a2, F.add(F.mul(u, u), 1)), F.mul(s, s)), s, t)
                for u in us for s in range(F.q) for t in range(F.q)]
    return [(u, r, s, t) for u in us for r in range(F.q)
            for s in range(F.q) for t in range(F.q)]


# -- supersingular j-invariants --------------------------------------------------------------

def model_for_j(F, j: int):
    """A smooth model over F with invariant j."""
    k = F.from_int
    if F.p == 2:
        return (0, 0, 1, 0, 0) if j == 0 else (1, 0, 0, 0, F.inv(j))
    if F.p == 3:
        return (0, 0, 0, 1, 0) if j == 0 else (0, 1, 0, 0, F.neg(F.inv(j)))
    if j == 0:
        return (0, 0, 0, 0, 1)
    if j == k(1728):
        return (0, 0, 0, 1, 0)
    return models_with_j(F, j)[0]


def is_supersingular_model(F, a) -> bool:
    N = cv.count_points(cv.weierstrass(F, *a))
    return (F.q + 1 - N) % F.p == 0


def supersingular_j(p: int) -> list:
    """Encoded invariants in F_{p^2} of the supersingular curves."""
    F = ff.make_field(p, 2)
    return [j for j in range(F.q) if is_supersingular_model(F, model_for_j(F, j))]


def expected_supersingular_count(p: int) -> int:
    """floor(p/12) + (0, 1, 1, 2) for p = 1, 5, 7, 11 mod 12; 1 for p = 2, 3."""
    if p in (2, 3):
        return 1
    return p // 12 + {1: 0, 5: 1, 7: 1, 11: 2}[p % 12]


# -- type of a supersingular curve by its invariant --------------------------------------------

@dataclass(frozen=True)
class EllipticTypeReport:
    p: int
    j: int                 # encoded in F_{p^2}
    field_r: int           # 1 if j lies in F_p, else 2
    twists: tuple          # (model, beta, parity) per K-isomorphism class
    frobenius_class_count: int
    verdict: TypeVerdict

    def to_json(self) -> dict:
        return {"p": self.p, "j": self.j, "field": {"p": self.p, "r": self.field_r},
                "twists": [{"model": list(m), "beta": b, "parity": d} for m, b, d in self.twists],
                "frobenius_classes": self.frobenius_class_count,
                "type": self.verdict.to_json()}


def _to_subfield(big, small, x: int) -> int:
    emb = ff.embedding(small, big)
    for y in range(small.q):
        if emb(y) == x:
            return y
    raise InputError(f"{x} is not in the subfield F_{small.q}")


def elliptic_type(p: int, j: int) -> EllipticTypeReport:
    """Type of the supersingular curves with invariant j (encoded in F_{p^2}).

    Over F_p when j lies in F_p (expected fully maximal), else over F_{p^2}
    (expected mixed); checked by enumerating every twist."""
    F2 = ff.make_field(p, 2)
    if not 0 <= j < F2.q:
        raise InputError(f"j = {j} is not an encoding in F_{p}^2")
    r = 1 if ff.contains(F2, j, 1) else 2
    K = ff.make_field(p, r)
    jK = _to_subfield(F2, K, j) if r == 1 else j
    base = model_for_j(K, jK)
    if not is_supersingular_model(K, base):
        raise NotSupersingular(f"j = {j} is not supersingular in characteristic {p}")
    models = models_with_j(K, jK)
    classes = isomorphism_classes(K, models)
    twists = []
    for cls in classes:
        a = cls[0]
        N = cv.count_points(cv.weierstrass(K, *a))
        beta = K.q + 1 - N
        ec = elliptic_class_from_beta(p, r, beta)
        twists.append((a, beta, ec.parity))
    G = automorphism_group(K, base)
    nclasses = len(frobenius_classes(G))
    if nclasses != len(classes):
        raise Inconsistent(f"{len(classes)} twists enumerated, {nclasses} Frobenius classes")
    verdict = verdict_from_parities([d for _, _, d in twists], "elliptic-j-field",
                                    (f"j in F_{p}" if r == 1 else f"j not in F_{p}",))
    expected = FULLY_MAXIMAL if r == 1 else MIXED
    if verdict.label != expected:
        raise Inconsistent(f"j = {j}: enumeration gives {verdict.label}, expected {expected}")
    return EllipticTypeReport(p, j, r, tuple(twists), nclasses, verdict)


# -- census of isomorphism classes ------------------------------------------------------------

@dataclass(frozen=True)
class CensusRow:
    beta: int
    class_count: int
    period: int
    parity: int


@dataclass(frozen=True)
class CensusRecord:
    p: int
    r: int
    rows: tuple
    plus: int
    minus: int
    n0: Optional[int]          # 1 - (-4/p) when r is even

    def to_json(self) -> dict:
        return {"p": self.p, "r": self.r,
                "rows": [vars(row) for row in self.rows],
                "parity_plus": self.plus, "parity_minus": self.minus, "N0": self.n0}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["beta", "class_count", "period", "parity"])
        for row in self.rows:
            w.writerow([row.beta, row.class_count, row.period, row.parity])
        return buf.getvalue()


def kronecker_minus4(p: int) -> int:
    """(-4/p): 0 for p = 2, otherwise the Legendre symbol (-1/p)."""
    return 0 if p == 2 else legendre(-1, p)


def _betas(args):
    p, r, chunk = args
    F = ff.make_field(p, r)
    return [F.q + 1 - cv.count_points(cv.weierstrass(F, *a)) for a in chunk]


def census_elliptic(p: int, r: int, threads: int = 1) -> CensusRecord:
    F = ff.make_field(p, r)
    n_models = F.q ** (2 if p >= 5 else 3 if p == 3 else 4)
    if n_models > CENSUS_MODEL_LIMIT:
        raise FieldTooLarge(f"census over F_{F.q} needs {n_models} models")
    models = family_models(F)
    size = max(1, len(models) // (4 * max(threads, 1)))
    chunks = [models[i:i + size] for i in range(0, len(models), size)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            betas = [b for part in ex.map(_betas, [(p, r, c) for c in chunks]) for b in part]
    else:
        betas = [b for c in chunks for b in _betas((p, r, c))]
    ss = [a for a, b in zip(models, betas) if b % p == 0]
    beta_of = dict(zip(models, betas))
    by_beta = {}
    for cls in isomorphism_classes(F, ss):
        bs = {beta_of[a] for a in cls}
        if len(bs) != 1:
            raise Inconsistent("isomorphic models with different traces")
        by_beta.setdefault(bs.pop(), []).append(cls)
    rows = []
    for beta in sorted(by_beta):
        ec = elliptic_class_from_beta(p, r, beta)
        rows.append(CensusRow(beta, len(by_beta[beta]), ec.period, ec.parity))
    plus = sum(row.class_count for row in rows if row.parity == 1)
    minus = sum(row.class_count for row in rows if row.parity == -1)
    n0 = None
    if r % 2 == 0:
        n0 = 1 - kronecker_minus4(p)
        if plus - minus != n0:
            raise Inconsistent(f"parity difference {plus - minus} but N(0) = {n0}")
    if r % 2 and minus:
        raise Inconsistent("odd r with a parity -1 class")
    return CensusRecord(p, r, tuple(rows), plus, minus, n0)
