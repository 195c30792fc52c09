"""Command-line front end: ``ssweil <subcommand> ...``.

Field elements are given in the integer encoding of ``finitefield`` (the
base-p digits of the integer are the coefficients in the power basis of the
field's defining polynomial).  Over a prime field, negative integers are
reduced mod p, so ``-1`` and ``6`` mean the same element of F_7.

Every report is a dict with a fixed key order; ``--format json`` prints it,
``csv`` prints the tabular part (or one row of scalar fields), and ``table``
prints an aligned human-readable view.  Exit codes: 0 ok, 2 bad input, 3 two
independent computations disagreed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import curves as cv
from . import finitefield as ff
from .errors import ConsistencyError, ExcludedCase, InputError, NotSupersingular, SsweilError
from .intpoly import IntPoly, e_vector, graeffe_power
from .rootsofunity import nwn_exponents, order_of
from .weilclass import (elliptic_charpoly, elliptic_class_from_beta, elliptic_table,
                        surface_charpoly, surface_table, surface_type)
from .twistlab.elliptic import census_elliptic, elliptic_type
from .twistlab.fermat import fermat_mixed
from .twistlab.genus2 import quintic_type
from .twistlab.genus3 import genus3_pipeline

SCHEMA = 1


# -- report assembly -----------------------------------------------------------------------

def _report(sub, p, r, inputs, weil=None, type_=None, evidence=None):
    rep = {"schema": SCHEMA, "subcommand": sub, "field": {"p": p, "r": r},
           "inputs": inputs, "lpoly": None, "counts": None, "supersingular": None,
           "orders": None, "e_vector": None, "period": None, "parity": None,
           "type": type_, "evidence": evidence if evidence is not None else {}}
    if weil is not None:
        rep.update(_weil_fields(weil))
    return rep


def _weil_fields(w) -> dict:
    return {"lpoly": list(w.lpoly.coeffs),
            "counts": list(w.counts) if w.counts else None,
            "supersingular": w.supersingular,
            "orders": list(w.nwn_orders) if w.nwn_orders else None,
            "e_vector": list(w.e_vector) if w.e_vector else None,
            "period": w.period, "parity": w.parity}


def _charpoly_fields(P: IntPoly, q: int, orders, period, parity) -> dict:
    g = P.degree // 2
    return {"lpoly": list(P.reverse().coeffs), "supersingular": True,
            "orders": list(orders), "e_vector": list(e_vector(orders, g)),
            "period": period, "parity": parity}


def _verdict(v) -> dict:
    return {"label": v.label, "rule": v.rule}


# -- argument parsing helpers ----------------------------------------------------------------

def _field(p: int, r: int) -> ff.FiniteField:
    if p < 2 or not ff.is_prime(p):
        raise InputError(f"p = {p} is not prime")
    if r < 1:
        raise InputError(f"r = {r} must be positive")
    return ff.make_field(p, r)


def _element(F, n: int) -> int:
    if F.r == 1:
        return n % F.p
    if not 0 <= n < F.q:
        raise InputError(f"{n} is not an element encoding in F_{F.q}")
    return n


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected a comma-separated list of integers, got {text!r}")


# -- subcommands -----------------------------------------------------------------------------

def cmd_elliptic(a) -> tuple:
    F = _field(a.p, a.r)
    p, r, q = a.p, a.r, F.q
    if a.beta is not None:
        if a.beta % p:
            raise NotSupersingular(f"p = {p} does not divide beta = {a.beta}")
        ec = elliptic_class_from_beta(p, r, a.beta)
        rep = _report("elliptic", p, r, {"beta": a.beta},
                      evidence={"case": ec.case, "e": ec.e})
        rep.update(_charpoly_fields(elliptic_charpoly(a.beta, q), q, ec.orders,
                                    ec.period, ec.parity))
        rep["type"] = {"label": None, "rule": "elliptic-trace-table"}
        return rep, None
    if a.enumerate:
        rows = [{"case": ec.case, "beta": ec.beta, "orders": list(ec.orders), "e": ec.e,
                 "period": ec.period, "parity": ec.parity} for ec in elliptic_table(p, r)]
        rep = _report("elliptic", p, r, {"enumerate": True},
                      type_={"label": None, "rule": "elliptic-trace-table"},
                      evidence={"rows": rows})
        return rep, rows
    if a.j is not None:
        er = elliptic_type(p, a.j)
        K = ff.make_field(p, er.field_r)
        _, beta, _ = er.twists[0]
        ec = elliptic_class_from_beta(p, er.field_r, beta)
        rep = _report("elliptic", p, er.field_r, {"j": a.j}, type_=_verdict(er.verdict),
                      evidence=er.to_json())
        rep.update(_charpoly_fields(elliptic_charpoly(beta, K.q), K.q, ec.orders,
                                    ec.period, ec.parity))
        return rep, None
    coeffs = [_element(F, c) for c in _int_list(a.coeffs)]
    if len(coeffs) != 5:
        raise InputError("--coeffs takes a1,a2,a3,a4,a6")
    spec = cv.weierstrass(F, *coeffs)
    wd = cv.weil_data(spec)
    ev = {"j": cv.j_invariant(F, spec.coeffs)}
    type_ = None
    if wd.supersingular and r <= 2:
        F2 = ff.make_field(p, 2)
        j2 = ff.embedding(F, F2)(ev["j"]) if r == 1 else ev["j"]
        er = elliptic_type(p, j2)
        ev["j_type"] = er.to_json()
        if er.field_r == r:
            type_ = _verdict(er.verdict)
    return _report("elliptic", p, r, {"coeffs": list(spec.coeffs)}, wd, type_, ev), None


def cmd_surface(a) -> tuple:
    _field(a.p, a.r)
    sc = surface_table(a.p, a.r, a.a1, a.a2)
    q = sc.q
    P = surface_charpoly(a.a1, a.a2, q)
    orders = tuple(sorted(order_of(x) for x in nwn_exponents(P, q)))
    try:
        type_ = _verdict(surface_type(sc))
    except ExcludedCase as exc:
        type_ = {"label": None, "rule": "surface-table-cases", "excluded": str(exc)}
    rep = _report("surface", a.p, a.r, {"a1": a.a1, "a2": a.a2}, type_=type_,
                  evidence=sc.to_json())
    rep.update(_charpoly_fields(P, q, orders, sc.mu, sc.delta))
    return rep, None


def _genus3_row(args) -> dict:
    c, d, r = args
    g3 = genus3_pipeline(c, d, r)
    return {"c": c, "d": d, "h_rational": g3.h_rational, "e_vector": list(g3.e_vector),
            "e_table_ok": g3.e_table_ok, "parity": g3.parity, "curve": g3.curve.label,
            "jacobian": g3.jacobian.label, "classes": len(g3.classes)}


def cmd_genus3(a) -> tuple:
    K = _field(2, a.r)
    rule = "genus3-twist-pipeline"
    if not a.all:
        if a.c is None or a.d is None:
            raise InputError("genus3 needs --c and --d, or --all")
        c, d = _element(K, a.c), _element(K, a.d)
        g3 = genus3_pipeline(c, d, a.r)
        wd = cv.weil_data(cv.as34(K, c, d))
        ev = g3.to_json()
        return _report("genus3", 2, a.r, {"c": c, "d": d}, wd, _verdict(g3.curve), ev), None
    jobs = [(c, d, a.r) for c in range(1, K.q) for d in range(1, K.q)]
    if a.threads > 1:
        with ProcessPoolExecutor(max_workers=a.threads) as ex:
            rows = list(ex.map(_genus3_row, jobs, chunksize=8))
    else:
        rows = [_genus3_row(j) for j in jobs]
    summary = {}
    for row in rows:
        key = f"{row['curve']}/{row['jacobian']}"
        summary[key] = summary.get(key, 0) + 1
    ev = {"pairs": len(rows), "type_counts": dict(sorted(summary.items())),
          "e_table_ok": all(row["e_table_ok"] for row in rows), "rows": rows}
    return _report("genus3", 2, a.r, {"all": True}, type_={"label": None, "rule": rule},
                   evidence=ev), rows


def _curve_type(spec, F):
    """A verdict for the families that have a classifier, else None."""
    fam = spec.family
    if fam == "hyperelliptic":
        f = spec.coeffs
        if len(f) == 6 and f[5] == F.one and not any(f[1:5]) and f[0] and F.p > 5:
            rep = quintic_type(F, f[0])
            return _verdict(rep.verdict), rep.to_json()
    elif fam == "as34":
        g3 = genus3_pipeline(spec.coeffs[0], spec.coeffs[1], spec.r)
        return _verdict(g3.curve), {"jacobian": _verdict(g3.jacobian)}
    elif fam == "fermat" and spec.r == 1:
        verdict, ev = fermat_mixed(spec.coeffs[0], spec.p)
        return _verdict(verdict), ev.to_json()
    return None, {}


def cmd_curve(a) -> tuple:
    F = _field(a.p, a.r)
    raw = _int_list(a.coeffs)
    if a.family == "fermat":
        coeffs = raw
    else:
        coeffs = [_element(F, c) for c in raw]
    spec = cv.CurveSpec(a.family, a.p, a.r, tuple(coeffs))
    wd = cv.weil_data(spec)
    ev = {"genus": cv.genus(spec)}
    if a.ext:
        m = a.ext
        N = cv.count_points(spec, m)
        P_m = graeffe_power(wd.charpoly, m)
        ev["ext"] = {"m": m, "count": N, "lpoly": list(P_m.reverse().coeffs)}
    type_ = None
    if wd.supersingular:
        try:
            type_, extra = _curve_type(spec, F)
            ev.update(extra)
        except InputError as exc:
            ev["type_unavailable"] = str(exc)
    if a.family == "hyperelliptic" and wd.g == 2:
        ev["a1a2"] = [wd.lpoly[1], wd.lpoly[2]]
    return _report("curve", a.p, a.r, {"family": a.family, "coeffs": list(spec.coeffs),
                                       "ext": a.ext}, wd, type_, ev), None


def cmd_census(a) -> tuple:
    _field(a.p, a.r)
    rec = census_elliptic(a.p, a.r, threads=a.threads)
    rows = [{"beta": x.beta, "class_count": x.class_count, "period": x.period,
             "parity": x.parity} for x in rec.rows]
    rep = _report("census", a.p, a.r, {}, type_={"label": None, "rule": "census-parity-balance"},
                  evidence=rec.to_json())
    return rep, rows


# -- rendering ------------------------------------------------------------------------------

def _plain(x):
    if isinstance(x, Fraction):
        return str(x)
    raise TypeError(f"cannot serialise {type(x).__name__}")


def _cell(v) -> str:
    if isinstance(v, (list, tuple)) and not any(isinstance(x, (list, tuple, dict)) for x in v):
        return " ".join(str(x) for x in v)
    if isinstance(v, (dict, list, tuple)):
        return json.dumps(v, default=_plain, separators=(",", ":"))
    return "-" if v is None else str(v)


def render(rep: dict, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep, indent=2, default=_plain) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if rows:
            keys = list(rows[0])
            w.writerow(keys)
            for row in rows:
                w.writerow([_cell(row[k]) for k in keys])
        else:
            keys = [k for k, v in rep.items() if k not in ("inputs", "evidence")]
            w.writerow(keys)
            w.writerow([_cell(rep[k]) for k in keys])
        return buf.getvalue()
    lines = []
    for k, v in rep.items():
        if k in ("schema", "evidence") or v is None:
            continue
        if k == "type":
            v = v["label"] or "-"
            lines.append(f"{'type':<14}{v}  [{rep['type']['rule']}]")
            continue
        lines.append(f"{k:<14}{_cell(v)}")
    if rows:
        keys = list(rows[0])
        table = [keys] + [[_cell(row[k]) for k in keys] for row in rows]
        widths = [max(len(t[i]) for t in table) for i in range(len(keys))]
        lines.append("")
        for t in table:
            lines.append("  ".join(s.ljust(wd) for s, wd in zip(t, widths)).rstrip())
    else:
        for k, v in rep["evidence"].items():
            lines.append(f"{k:<{max(14, len(k) + 2)}}{_cell(v)}")
    return "\n".join(lines) + "\n"


# -- entry point ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="ssweil", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="table")
    common.add_argument("--threads", type=int, default=1)
    sub = top.add_subparsers(dest="subcommand", required=True)

    e = sub.add_parser("elliptic", parents=[common], help="supersingular elliptic curves")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--r", type=int, default=1)
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("--beta", type=int)
    g.add_argument("--enumerate", action="store_true")
    g.add_argument("--coeffs", help="a1,a2,a3,a4,a6")
    g.add_argument("--j", type=int, help="invariant, encoded in F_{p^2}")
    e.set_defaults(func=cmd_elliptic)

    s = sub.add_parser("surface", parents=[common], help="abelian surfaces by (a1, a2)")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--a1", type=int, required=True)
    s.add_argument("--a2", type=int, required=True)
    s.set_defaults(func=cmd_surface)

    t = sub.add_parser("genus3", parents=[common], help="Z^4 + (1+c)Z^2 + cZ = dS^3 over F_{2^r}")
    t.add_argument("--r", type=int, required=True)
    t.add_argument("--c", type=int)
    t.add_argument("--d", type=int)
    t.add_argument("--all", action="store_true")
    t.set_defaults(func=cmd_genus3)

    c = sub.add_parser("curve", parents=[common], help="counts and L-polynomial of a curve")
    c.add_argument("--family", choices=cv.FAMILIES, required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--r", type=int, default=1)
    c.add_argument("--coeffs", required=True,
                   help="weierstrass a1..a6; hyperelliptic f0..fn; as34 c,d; fermat s")
    c.add_argument("--ext", type=int, default=0, help="also count over F_{q^m}")
    c.set_defaults(func=cmd_curve)

    k = sub.add_parser("census", parents=[common], help="isomorphism-class census")
    k.add_argument("--p", type=int, required=True)
    k.add_argument("--r", type=int, default=1)
    k.set_defaults(func=cmd_census)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        args.threads = 1
    try:
        rep, rows = args.func(args)
    except (ConsistencyError, AssertionError) as exc:
        return _fail(args, exc, 3)
    except (SsweilError, ValueError) as exc:
        return _fail(args, exc, 2)
    sys.stdout.write(render(rep, rows, args.format))
    return 0


def _fail(args, exc, code: int) -> int:
    err = {"schema": SCHEMA, "subcommand": args.subcommand,
           "error": {"kind": type(exc).__name__, "message": str(exc), "exit": code}}
    if args.format == "json":
        sys.stdout.write(json.dumps(err, indent=2) + "\n")
    sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
