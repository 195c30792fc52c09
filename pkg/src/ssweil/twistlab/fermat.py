"""Fermat curves x^s + y^s + z^s = 0 over F_p with s = 0 mod 4 and p = -1 mod s.

Such a curve is maximal over F_{p^2}, so it has F_p-parity +1.  The twist by
h(x, y, z) = (l1 y, x, z), with l1 of order s/2 in F_{p^2}, becomes over
F_{p^2} the twist by h Fr(h) = (l1 x, l1^{-1} y, z).  On the monomial basis
x^{-k1} y^{-k2} z^{-k3} (k_i >= 1, k1 + k2 + k3 = s) of H^1(X, O) that
automorphism acts by l1^{k2 - k1}.  The eigenvalues include 1 and l1, so
the twist has normalized Weil numbers -1 and -l1 over F_{p^2}; their
2-valuations differ and the twist has parity -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .. import curves as cv
from .. import finitefield as ff
from ..errors import FieldTooLarge, NotMaximal, PreconditionFailed
from ..intpoly import WeilData, ord2
from ..rootsofunity import negate_exponents, order_of
from ..weilclass import MIXED, TypeVerdict, parity_from_e


@dataclass(frozen=True)
class FermatEvidence:
    s: int
    p: int
    count_p2: int
    expected_p2: int
    eigen_exponents: tuple        # exponents of l1^{k2 - k1} as fractions of a turn
    twist_e_p2: tuple             # 2-valuations of the twist's roots over F_{p^2}
    twist_parity: int
    weil: Optional[WeilData]      # over F_p when the counts are within reach

    @property
    def eigenvalues(self) -> tuple:
        """Eigenvalues written as +1 / -1 when they are real, else as exponents."""
        out = []
        for e in self.eigen_exponents:
            out.append({Fraction(0): 1, Fraction(1, 2): -1}.get(e, e))
        return tuple(out)

    def to_json(self) -> dict:
        d = {"s": self.s, "p": self.p, "count_p2": self.count_p2,
             "expected_p2": self.expected_p2,
             "eigen_exponents": [str(e) for e in self.eigen_exponents],
             "twist_e_p2": list(self.twist_e_p2), "twist_parity": self.twist_parity}
        if self.weil is not None:
            d["lpoly"] = list(self.weil.lpoly.coeffs)
            d["parity"] = self.weil.parity
        return d


def monomial_basis(s: int) -> list:
    """(k1, k2, k3) with every k_i >= 1 and k1 + k2 + k3 = s."""
    return [(k1, k2, s - k1 - k2) for k1 in range(1, s - 1)
            for k2 in range(1, s - k1)]


def fermat_mixed(s: int, p: int):
    """(verdict, evidence) for the Fermat curve of degree s over F_p."""
    if not ff.is_prime(p):
        raise PreconditionFailed(f"{p} is not prime")
    if s % 4 or s < 4:
        raise PreconditionFailed(f"s = {s} is not a positive multiple of 4")
    if (p + 1) % s:
        raise PreconditionFailed(f"p = {p} is not -1 mod {s}")
    g = (s - 1) * (s - 2) // 2
    spec = cv.fermat(ff.make_field(p, 1), s)
    N2 = cv.count_points(spec, 2)
    want = p * p + 1 + 2 * g * p
    if N2 != want:
        raise NotMaximal(f"#X(F_{p}^2) = {N2}, maximal count is {want}")
    # l1 of order s1 = s/2 exists in F_{p^2} since s | p + 1
    s1 = s // 2
    basis = monomial_basis(s)
    if len(basis) != g:
        raise AssertionError("monomial basis has the wrong size")
    eig = tuple(sorted(Fraction(k2 - k1, s1) % 1 for k1, k2, _ in basis))
    if Fraction(0) not in eig or Fraction(1, s1) not in eig:
        raise AssertionError("eigenvalues miss 1 or l1")
    # over F_{p^2} X has all normalized roots -1; the twist multiplies them by
    # the eigenvalues, so each basis vector contributes a conjugate pair
    tw = negate_exponents(eig)
    twist_e = tuple(sorted(ord2(order_of(e)) for e in tw))
    twist_parity = parity_from_e(twist_e, 2)
    if twist_parity != -1:
        raise AssertionError(f"twist e-vector {twist_e} is not parity changing")
    try:
        wd = cv.weil_data(spec)
    except FieldTooLarge:
        wd = None
    if wd is not None and (not wd.supersingular or wd.parity != 1):
        raise NotMaximal("the Fermat curve does not have F_p-parity +1")
    ev = FermatEvidence(s, p, N2, want, eig, twist_e, twist_parity, wd)
    verdict = TypeVerdict(MIXED, "fermat-eigenvalue", (f"s = {s}", f"p = -1 mod {s}"))
    return verdict, ev
