"""Riemann-Roch spaces on reduced curves.

Functions are ratios A/B of sections of the same power of the hyperplane
bundle H (H = K on canonical models, H = the divisor at infinity on
hyperelliptic ones).  Sections are handled through their power series at
points: at a place of degree d a section of R_m becomes a series over
F_{p^d}, and its vanishing conditions split into F_p-linear conditions digit
by digit.

For an effective divisor the dimension follows from Riemann-Roch and the rank
of the canonical sections restricted to D, which is what the gonality search
uses.  For a general D = D+ - D-, the denominator B is a degree-m section
vanishing on D+; write div(B) = D+ + E.  A numerator A gives an element of
L(D) exactly when A vanishes on E + D-.  E is not computed: that holds iff
A*C lies in B*R_m'(-D-) for every section C of the base-point-free system
R_m'(-D+), a linear condition checked in series at a base point.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .curve import (
    CurveError,
    CurveOverFp,
    Divisor,
    HyperellipticCurveFp,
    Place,
    ProjectiveCurveFp,
    smul,
)


# --------------------------------------------------------------------------
# section data at places

class _SectionCache:
    """Per-curve cache of section series at places, split into F_p digits."""

    def __init__(self, curve: CurveOverFp):
        self.curve = curve
        self.lock = threading.RLock()
        self.rows: dict = {}

    def digits(self, place: Place, m: int, prec: int) -> np.ndarray:
        """Array (prec, d, dim R_m): digit c of coefficient j of each basis section."""
        key = (place, m)
        with self.lock:
            hit = self.rows.get(key)
            if hit is not None and hit.shape[0] >= prec:
                return hit[:prec]
            want = max(prec, 2 * hit.shape[0] if hit is not None else prec)
            mons = section_basis(self.curve, m)
            F, S = self.curve.sections_at(place, mons, want)
            D = F.digits(S)  # dim x prec x d
            arr = np.ascontiguousarray(D.transpose(1, 2, 0))
            self.rows[key] = arr
            return arr[:prec]


_CACHES: dict = {}
_CACHE_LOCK = threading.Lock()


def _cache(curve: CurveOverFp) -> _SectionCache:
    with _CACHE_LOCK:
        c = _CACHES.get(id(curve))
        if c is None or c.curve is not curve:
            c = _SectionCache(curve)
            _CACHES[id(curve)] = c
        return c


def section_basis(curve: CurveOverFp, m: int) -> list:
    """Exponent vectors of a basis of R_m."""
    if isinstance(curve, HyperellipticCurveFp):
        return curve.section_monomials(m)
    return curve.graded(m)[0]


def canonical_weight(curve: CurveOverFp) -> int:
    """The m with R_m = H^0(K)."""
    return curve.canonical_degree


def vanishing_conditions(curve: CurveOverFp, D: Divisor, m: int) -> np.ndarray:
    """F_p matrix whose kernel is the set of sections of R_m vanishing on D (D effective)."""
    dim = len(section_basis(curve, m))
    blocks = [np.zeros((0, dim), dtype=np.int64)]
    cache = _cache(curve)
    for place, k in D.items():
        if k <= 0:
            continue
        arr = cache.digits(place, m, k)
        blocks.append(arr.reshape(-1, dim))
    return np.vstack(blocks)


def canonical_rank(curve: CurveOverFp, D: Divisor) -> int:
    """Rank of the conditions that canonical sections vanish on D."""
    M = vanishing_conditions(curve, D, canonical_weight(curve))
    return linalg.rank(curve.F, M) if M.size else 0


# --------------------------------------------------------------------------
# public operations

def canonical_divisor(curve: CurveOverFp) -> Divisor:
    if isinstance(curve, HyperellipticCurveFp):
        return (curve.genus - 1) * curve.infinity_divisor()
    return hyperplane_divisor(curve)


def hyperplane_divisor(curve: CurveOverFp, linear_form=None) -> Divisor:
    """Divisor of zeros of a linear form.

    On projective models the form is a vector of coefficients of the
    coordinates.  On hyperelliptic models it is (a, b) for a*X + b*Z.
    """
    p = curve.p
    if isinstance(curve, HyperellipticCurveFp):
        a, b = (0, 1) if linear_form is None else [int(c) % p for c in linear_form]
        if a == 0 and b == 0:
            raise CurveError("linear form vanishes identically on the curve")
        if a == 0:
            return curve.infinity_divisor()
        return curve.fibre_divisor_at(curve.F.neg(curve.F.div(b, a)))
    if linear_form is None:
        errors = []
        for j in range(curve.n):
            form = [int(i == j) for i in range(curve.n)]
            try:
                return hyperplane_divisor(curve, form)
            except CurveError as exc:
                errors.append(str(exc))
        raise CurveError("no coordinate hyperplane could be decomposed: " + "; ".join(errors))
    u = np.array([int(c) % p for c in linear_form], dtype=np.int64)
    if len(u) != curve.n:
        raise CurveError(f"linear form needs {curve.n} coefficients")
    if not u.any():
        raise CurveError("linear form vanishes identically on the curve")
    D = curve.fibration(tuple(u)).fibre_divisor((0, 1))
    if D.degree != curve.degH:
        raise CurveError("hyperplane divisor has the wrong degree")
    return D


@dataclass
class LinearSystem:
    """L(D) with a basis of functions A_i / B, all of degree m in the graded ring."""

    curve: CurveOverFp = field(repr=False)
    divisor: Divisor
    dimension: int
    m: int
    monomials: list = field(repr=False)
    numerators: np.ndarray = field(repr=False)   # dimension x len(monomials), over F_p
    denominator: np.ndarray = field(repr=False)  # len(monomials)

    @property
    def basis(self) -> list:
        return [(self.numerators[i], self.denominator) for i in range(self.dimension)]

    def valuation(self, index: int, place: Place) -> int:
        return form_valuation(self.curve, self.m, self.numerators[index], place) - \
            form_valuation(self.curve, self.m, self.denominator, place)

    def evaluate(self, index: int, place: Place):
        """Value of basis function ``index`` at a degree-1 place, or None at a pole."""
        return evaluate_ratio(self.curve, self.m, self.numerators[index], self.denominator, place)


def form_valuation(curve: CurveOverFp, m: int, coeffs, place: Place) -> int:
    """Order of vanishing of the section sum c_i * basis_i at a place."""
    coeffs = np.asarray(coeffs, dtype=np.int64) % curve.p
    if not coeffs.any():
        raise CurveError("zero section has no valuation")
    cap = m * curve.degH + 1
    arr = _cache(curve).digits(place, m, cap)  # prec x d x dim
    vals = (arr @ coeffs) % curve.p             # prec x d
    nz = np.nonzero(vals.any(axis=1))[0]
    if nz.size == 0:
        raise CurveError("section vanishes beyond its degree (equations do not cut out the curve)")
    return int(nz[0])


def evaluate_ratio(curve, m, num, den, place: Place):
    vn = form_valuation(curve, m, num, place)
    vd = form_valuation(curve, m, den, place)
    if vn < vd:
        return None
    if vn > vd:
        return 0
    F = curve.field(place.degree)
    arr = _cache(curve).digits(place, m, vd + 1)
    a = F.from_digits((arr[vd] @ (np.asarray(num) % curve.p)) % curve.p)
    b = F.from_digits((arr[vd] @ (np.asarray(den) % curve.p)) % curve.p)
    return F.div(int(a), int(b))


def _min_weight(curve: CurveOverFp, need: int) -> int:
    """Least m >= 1 with m * deg H >= need."""
    m = max(1, -(-need // curve.degH))
    return m


def rr_space(curve: CurveOverFp, D: Divisor) -> LinearSystem:
    """L(D) = {f : div f + D >= 0} with an explicit basis."""
    g = curve.genus
    Dp, Dm = D.positive, D.negative
    m = _min_weight(curve, Dp.degree + 2 * g - 1)
    mons = section_basis(curve, m)
    dim_m = len(mons)
    if D.degree < 0:
        return LinearSystem(curve, D, 0, m, mons, np.zeros((0, dim_m), dtype=np.int64), _first_vanishing(curve, Dp, m))
    Fp = curve.F
    B = _first_vanishing(curve, Dp, m)
    # sections C_j of R_m' vanishing on D+, base-point free off D+
    m2 = _min_weight(curve, Dp.degree + 2 * g)
    K2 = linalg.nullspace(Fp, vanishing_conditions(curve, Dp, m2)) if Dp else np.eye(len(section_basis(curve, m2)), dtype=np.int64)
    prec = (m + m2) * curve.degH + 1
    S_m = _base_series(curve, m, prec)
    S_m2 = _base_series(curve, m2, prec)
    Bser = (B @ S_m) % curve.p
    # A*C must land in B * R_m'(-D-): then ord A >= E + D- wherever B vanishes
    W = (linalg.nullspace(Fp, vanishing_conditions(curve, Dm, m2)) @ S_m2) % curve.p if Dm else S_m2
    V = np.array([smul(Fp, Bser, row, prec) for row in W], dtype=np.int64).reshape(-1, prec)
    Lam = linalg.nullspace(Fp, V) if V.size else np.eye(prec, dtype=np.int64)
    conds = []
    Cser = (K2 @ S_m2) % curve.p
    for c in Cser:
        prods = np.array([smul(Fp, row, c, prec) for row in S_m], dtype=np.int64)  # dim_m x prec
        conds.append((Lam @ prods.T) % curve.p)
    if Dm:
        conds.append(vanishing_conditions(curve, Dm, m))
    M = np.vstack(conds) if conds else np.zeros((0, dim_m), dtype=np.int64)
    sol = linalg.nullspace(Fp, M) if M.size else np.eye(dim_m, dtype=np.int64)
    return LinearSystem(curve, D, sol.shape[0], m, mons, sol, B)


def _first_vanishing(curve, Dp: Divisor, m: int) -> np.ndarray:
    dim = len(section_basis(curve, m))
    if not Dp:
        # 1 as a function: any fixed nonzero section, the first basis element
        out = np.zeros(dim, dtype=np.int64)
        out[0] = 1
        return out
    K = linalg.nullspace(curve.F, vanishing_conditions(curve, Dp, m))
    if K.shape[0] == 0:
        raise CurveError("no denominator section found (degree bookkeeping failed)")
    return K[0]


def _base_series(curve, m: int, prec: int) -> np.ndarray:
    """Series of the basis of R_m at the rational base place, over F_p."""
    arr = _cache(curve).digits(curve.base_place, m, prec)
    return np.ascontiguousarray(arr[:, 0, :].T)


def rr_dim(curve: CurveOverFp, D: Divisor) -> int:
    """l(D); effective divisors use the canonical-rank shortcut."""
    g = curve.genus
    deg = D.degree
    if deg < 0:
        return 0
    if not D:
        return 1
    if deg > 2 * g - 2:
        return deg - g + 1
    if D.is_effective():
        return deg + 1 - canonical_rank(curve, D)
    return rr_space(curve, D).dimension


def function_divisor(system: LinearSystem, index: int, max_place_degree: int | None = None) -> Divisor:
    """div(f) for a basis function, assembled from valuations.

    The zeros of f + D form an effective divisor of degree deg D; it is found
    by scanning places up to ``max_place_degree`` (default deg D).
    """
    curve = system.curve
    D = system.divisor
    cap = max_place_degree or max(1, D.degree)
    terms = {}
    found = 0
    for pl, c in D.items():
        v = system.valuation(index, pl)
        if v:
            terms[pl] = v
        found += pl.degree * (v + c)
    for d in range(1, cap + 1):
        if found == D.degree:
            break
        for pl in curve.places(d):
            if pl in D.terms:
                continue
            v = system.valuation(index, pl)
            if v:
                terms[pl] = v
                found += d * v
    if found != D.degree:
        raise CurveError("zeros of the function lie on places beyond the scanned degree")
    return Divisor(terms)
