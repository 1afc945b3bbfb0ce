"""Curve fixtures, their reductions mod p, places and local expansions.

Three model kinds are supported:

* ``canonical``: a canonically embedded curve in P^{g-1}, cut out by
  quadrics (and cubics when needed);
* ``plane``: a smooth plane quartic, i.e. a canonical genus-3 curve;
* ``hyperelliptic``: ``y^2 + h(x) y = f(x)`` in weighted coordinates
  (X : Y : Z) of weights (1, g+1, 1), affine points being (x : y : 1).

Both projective kinds share one engine.  Points over F_{p^k} are found by
fibring the curve over P^1 with a pencil of linear forms (u : v): the
coordinate ring is a free F_p[u, v]-module of rank 2g-2, so each fibre is a
(2g-2)-dimensional algebra on which the coordinate functions act by
commuting matrices, and the fibre's points are their joint eigenvectors.
The module structure itself is solved for in power series at a rational
base point, where truncated expansions represent forms of bounded degree
faithfully.
"""
from __future__ import annotations

import itertools
import json
import math
import os
import random
import re
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path

import numpy as np

from . import linalg
from .ffield import (
    FieldDesc,
    embed_value,
    factor_univariate,
    embedding_image,
    make_extension,
    pmonic,
    roots,
)

FIXTURE_ENV = "X0GONALITY_FIXTURES"
MAX_PLACE_DEGREE = 8
MAX_COUNT_DEGREE = 8


class CurveError(ValueError):
    """Malformed fixture or failed model invariant."""


class SingularPointError(CurveError):
    """A point where the reduced model is not smooth."""


class BadPrimeError(CurveError):
    pass


# --------------------------------------------------------------------------
# polynomial strings

_TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")


def parse_polynomial(text: str, nvars: int | None, var: str = "x") -> dict:
    """Parse ``"3*x0^2*x1 - x2^3 + 7"`` into ``{exponent tuple: coefficient}``.

    With ``nvars=None`` the polynomial is univariate in the bare symbol
    ``var`` and exponents are ints.
    """
    src = text.replace(" ", "")
    if not src:
        raise CurveError("empty polynomial")
    if src[0] not in "+-":
        src = "+" + src
    out: dict = {}
    pos = 0
    for m in re.finditer(r"([+-])([^+-]+)", src):
        if m.start() != pos:
            raise CurveError(f"cannot parse polynomial {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coef = sign
        exps = [0] * (nvars or 1)
        for factor in m.group(2).split("*"):
            if not factor:
                raise CurveError(f"empty factor in {text!r}")
            base, _, e = factor.partition("^")
            e = int(e) if e else 1
            if base.isdigit():
                coef *= int(base) ** e
                continue
            if nvars is None:
                if base != var:
                    raise CurveError(f"unknown symbol {base!r} in {text!r}")
                exps[0] += e
            else:
                mm = re.fullmatch(rf"{var}(\d+)", base)
                if not mm or int(mm.group(1)) >= nvars:
                    raise CurveError(f"unknown variable {base!r} in {text!r}")
                exps[int(mm.group(1))] += e
        key = exps[0] if nvars is None else tuple(exps)
        out[key] = out.get(key, 0) + coef
    if pos != len(src):
        raise CurveError(f"cannot parse polynomial {text!r}")
    return {k: v for k, v in out.items() if v}


def _eval_int(poly: dict, point) -> int:
    total = 0
    for e, c in poly.items():
        t = c
        for x, k in zip(point, e):
            if k:
                t *= x**k
        total += t
    return total


def _degree(poly: dict) -> int:
    return max(sum(e) for e in poly)


# --------------------------------------------------------------------------
# fixtures

@dataclass(frozen=True)
class TorsionSpec:
    """Generators of a subgroup of the rational torsion, as marked-point divisors."""

    generators: tuple          # each: tuple of (coefficient, marked point name)
    group_shape: tuple
    multiplier: int
    rank_zero_source: str

    @staticmethod
    def parse(d: dict) -> "TorsionSpec":
        gens = []
        for s in d["generators"]:
            terms = []
            for m in re.finditer(r"([+-]?)\s*(\d*)\s*\*?\s*([A-Za-z0-9_]+)", s.replace(" ", "")):
                sign = -1 if m.group(1) == "-" else 1
                k = int(m.group(2)) if m.group(2) else 1
                terms.append((sign * k, m.group(3)))
            gens.append(tuple(terms))
        if len(gens) != len(d["group_shape"]):
            raise CurveError("torsion: one cyclic order per generator expected")
        cite = d.get("rank_zero_source", "")
        return TorsionSpec(tuple(gens), tuple(int(x) for x in d["group_shape"]), int(d.get("multiplier", 1)), cite)


@dataclass
class CurveModel:
    label: str
    genus: int
    model_kind: str
    ambient_dim: int
    equations: list
    marked_points: dict
    involutions: dict
    good_primes: list
    N: int | None = None
    torsion: TorsionSpec | None = None
    polys: list = field(default_factory=list, repr=False)

    @property
    def nvars(self) -> int:
        return self.ambient_dim + 1


def model_from_dict(d: dict) -> CurveModel:
    try:
        m = CurveModel(
            label=str(d["label"]),
            genus=int(d["genus"]),
            model_kind=str(d["model_kind"]),
            ambient_dim=int(d["ambient_dim"]),
            equations=list(d["equations"]),
            marked_points={k: [int(x) for x in v] for k, v in d.get("marked_points", {}).items()},
            involutions={k: [[int(x) for x in r] for r in v] for k, v in d.get("involutions", {}).items()},
            good_primes=[int(p) for p in d.get("good_primes", [])],
            N=int(d["N"]) if d.get("N") is not None else None,
            torsion=TorsionSpec.parse(d["torsion"]) if d.get("torsion") else None,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CurveError(f"fixture does not match the schema: {exc}") from exc
    if m.model_kind == "hyperelliptic":
        if len(m.equations) != 2:
            raise CurveError("hyperelliptic fixture needs the pair [h, f]")
        m.polys = [parse_polynomial(s, None) if s.strip() not in ("0", "") else {} for s in m.equations]
    elif m.model_kind in ("canonical", "plane"):
        m.polys = [parse_polynomial(s, m.nvars) for s in m.equations]
    else:
        raise CurveError(f"unknown model kind {m.model_kind!r}")
    validate_model(m)
    return m


def load_model(path) -> CurveModel:
    """Read a JSON fixture and check its invariants."""
    try:
        d = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CurveError(f"{path}: not valid JSON ({exc})") from exc
    return model_from_dict(d)


def fixture_dir() -> Path:
    env = os.environ.get(FIXTURE_ENV)
    return Path(env) if env else Path(__file__).with_name("fixtures")


def fixture_labels(directory=None) -> dict:
    """Map label -> fixture path for every fixture in the directory."""
    out = {}
    for p in sorted(Path(directory or fixture_dir()).glob("*.json")):
        try:
            out[json.loads(p.read_text())["label"]] = p
        except (KeyError, json.JSONDecodeError):
            continue
    return out


_MODEL_CACHE: dict = {}


def load_curve(label: str, directory=None) -> CurveModel:
    key = (label, str(directory or fixture_dir()))
    if key not in _MODEL_CACHE:
        labels = fixture_labels(directory)
        if label not in labels:
            raise CurveError(f"unknown curve label {label!r}")
        _MODEL_CACHE[key] = load_model(labels[label])
    return _MODEL_CACHE[key]


def _linear_substitute(poly: dict, A, P: int) -> dict:
    """poly(A x) mod P, for a square integer matrix A."""
    n = len(A)
    rows = [{tuple(int(i == j) for i in range(n)): A[r][j] % P for j in range(n) if A[r][j] % P} for r in range(n)]
    out: dict = {}
    for e, c in poly.items():
        term = {tuple([0] * n): c % P}
        for var, k in enumerate(e):
            for _ in range(k):
                nt: dict = {}
                for m1, c1 in term.items():
                    for m2, c2 in rows[var].items():
                        key = tuple(a + b for a, b in zip(m1, m2))
                        nt[key] = (nt.get(key, 0) + c1 * c2) % P
                term = nt
        for m1, c1 in term.items():
            out[m1] = (out.get(m1, 0) + c1) % P
    return {k: v for k, v in out.items() if v}


def _quadric_substitute(poly: dict, A, P: int) -> dict:
    """Same as _linear_substitute for a quadric, via A^T U A."""
    n = len(A)
    U = np.zeros((n, n), dtype=np.int64)
    for e, c in poly.items():
        i, j = [k for k, a in enumerate(e) for _ in range(a)]
        U[i, j] = (U[i, j] + c) % P
    An = np.array(A, dtype=np.int64) % P
    M = (An.T @ ((U @ An) % P)) % P
    out = {}
    for i in range(n):
        for j in range(i, n):
            c = int(M[i, i]) if i == j else int(M[i, j] + M[j, i]) % P
            if c:
                out[tuple(int(k == i) + int(k == j) for k in range(n))] = c
    return out


def _all_in_span_mod(targets: list, gens: list, P: int) -> bool:
    keys = sorted({k for t in targets for k in t} | {k for g in gens for k in g})
    idx = {k: i for i, k in enumerate(keys)}
    M = np.zeros((len(gens) + len(targets), len(keys)), dtype=np.int64)
    for r, g in enumerate(gens + targets):
        for k, v in g.items():
            M[r, idx[k]] = v % P
    F = FieldDesc(P, 1, (0, 1))
    return linalg.rank(F, M[:len(gens)]) == linalg.rank(F, M)


def validate_model(m: CurveModel) -> None:
    """Check the fixture invariants, raising CurveError with the offending item."""
    g = m.genus
    if g < 0:
        raise CurveError("negative genus")
    if m.model_kind == "hyperelliptic":
        h, f = m.polys
        if (max(h) if h else 0) > g + 1 or (max(f) if f else 0) > 2 * g + 2:
            raise CurveError("hyperelliptic degrees exceed the genus bound")
        for name, pt in m.marked_points.items():
            if len(pt) != 3:
                raise CurveError(f"marked point {name}: need weighted coordinates [X, Y, Z]")
            X, Y, Z = pt
            hh = sum(c * X**i * Z ** (g + 1 - i) for i, c in h.items())
            ff = sum(c * X**i * Z ** (2 * g + 2 - i) for i, c in f.items())
            if Y * Y + hh * Y - ff != 0:
                raise CurveError(f"marked point {name} not on curve")
        return
    n = m.nvars
    degs = []
    for s, poly in zip(m.equations, m.polys):
        ds = {sum(e) for e in poly}
        if len(ds) != 1:
            raise CurveError(f"equation is not homogeneous: {s}")
        degs.append(ds.pop())
    if m.model_kind == "canonical":
        if m.ambient_dim != g - 1:
            raise CurveError("canonical model must live in P^{g-1}")
        if any(d not in (2, 3) for d in degs):
            raise CurveError("canonical model equations must have degree 2 or 3")
    else:
        if m.ambient_dim != 2 or len(m.polys) != 1:
            raise CurveError("plane model: one equation in P^2")
        d = degs[0]
        if (d - 1) * (d - 2) // 2 != g or d != 4:
            raise CurveError("plane model must be a smooth quartic of genus 3")
    for name, pt in m.marked_points.items():
        if len(pt) != n or not any(pt):
            raise CurveError(f"marked point {name}: wrong number of coordinates")
        for s, poly in zip(m.equations, m.polys):
            if _eval_int(poly, pt) != 0:
                raise CurveError(f"marked point {name} not on curve (fails {s})")
    for name, A in m.involutions.items():
        if len(A) != n or any(len(r) != n for r in A):
            raise CurveError(f"involution {name}: matrix must be {n}x{n}")
        A2 = [[sum(A[i][k] * A[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        c = A2[0][0]
        if c == 0 or any(A2[i][j] != (c if i == j else 0) for i in range(n) for j in range(n)):
            raise CurveError(f"involution {name} does not square to a scalar")
        by_deg: dict = {}
        for poly, d in zip(m.polys, degs):
            by_deg.setdefault(d, []).append(poly)
        for P in (1048573, 1048571):
            for d, polys in by_deg.items():
                gens = list(polys)
                if d == 3:
                    for q in by_deg.get(2, []):
                        for i in range(n):
                            gens.append({tuple(a + (j == i) for j, a in enumerate(e)): c for e, c in q.items()})
                sub = _quadric_substitute if d == 2 else _linear_substitute
                imgs = [sub(poly, A, P) for poly in polys]
                if not _all_in_span_mod(imgs, gens, P):
                    raise CurveError(f"involution {name} does not preserve the degree-{d} part of the ideal")


# --------------------------------------------------------------------------
# places and divisors

@dataclass(frozen=True)
class Place:
    """A closed point: a Frobenius orbit of degree ``degree``.

    ``point`` is the representative with lexicographically least
    coordinates, as ints of F_{p^degree}.
    """

    degree: int
    point: tuple

    def __repr__(self):
        return f"Place(deg={self.degree}, {list(self.point)})"

    def __lt__(self, other):
        return (self.degree, self.point) < (other.degree, other.point)


class Divisor:
    """A finite formal sum of places with integer coefficients (immutable)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        d: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for pl, c in items:
                if c:
                    d[pl] = d.get(pl, 0) + int(c)
        self._terms = {k: v for k, v in sorted(d.items()) if v}
        self._hash = None

    @staticmethod
    def of(place: Place, mult: int = 1) -> "Divisor":
        return Divisor({place: mult})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self):
        return list(self._terms)

    @property
    def degree(self) -> int:
        return sum(c * p.degree for p, c in self._terms.items())

    def is_effective(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    @property
    def positive(self) -> "Divisor":
        return Divisor({p: c for p, c in self._terms.items() if c > 0})

    @property
    def negative(self) -> "Divisor":
        return Divisor({p: -c for p, c in self._terms.items() if c < 0})

    def __getitem__(self, place) -> int:
        return self._terms.get(place, 0)

    def __add__(self, other):
        out = dict(self._terms)
        for p, c in other.items():
            out[p] = out.get(p, 0) + c
        return Divisor(out)

    def __neg__(self):
        return Divisor({p: -c for p, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return Divisor({p: k * c for p, c in self._terms.items()})

    __mul__ = __rmul__

    def __le__(self, other):
        return (other - self).is_effective() or not (other - self)._terms

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "Divisor(0)"
        return "Divisor(" + " + ".join(f"{c}*{p!r}" for p, c in self._terms.items()) + ")"


# --------------------------------------------------------------------------
# power series

def smul(F: FieldDesc, a, b, n: int):
    """Product of two power series truncated to n terms."""
    a = np.asarray(a[:n], dtype=np.int64)
    b = np.asarray(b[:n], dtype=np.int64)
    if F.k == 1:
        if len(a) == 0 or len(b) == 0:
            return np.zeros(n, dtype=np.int64)
        out = np.convolve(a, b)[:n] % F.p
        if len(out) < n:
            out = np.concatenate([out, np.zeros(n - len(out), dtype=np.int64)])
        return out
    out = np.zeros(n, dtype=np.int64)
    for i in np.nonzero(a)[0]:
        m = min(len(b), n - i)
        out[i:i + m] = F.vadd(out[i:i + m], F.vmul(b[:m], int(a[i])))
    return out


class PolySystem:
    """A list of polynomials stacked for vectorised evaluation over any F_{p^k}."""

    def __init__(self, polys: list, nvars: int, p: int):
        self.nvars = nvars
        self.p = p
        self.polys = [{e: c % p for e, c in poly.items() if c % p} for poly in polys]
        terms = [(i, e, c) for i, poly in enumerate(self.polys) for e, c in poly.items()]
        self.eq = np.array([t[0] for t in terms], dtype=np.int64)
        self.exps = np.array([t[1] for t in terms], dtype=np.int64).reshape(len(terms), nvars)
        self.coefs = np.array([t[2] for t in terms], dtype=np.int64)
        dterms = []
        for i, e, c in terms:
            for v in range(nvars):
                if e[v]:
                    cv = c * e[v] % p
                    if cv:
                        e2 = list(e)
                        e2[v] -= 1
                        dterms.append((i, v, tuple(e2), cv))
        self.d_eq = np.array([t[0] for t in dterms], dtype=np.int64)
        self.d_var = np.array([t[1] for t in dterms], dtype=np.int64)
        self.d_exps = np.array([t[2] for t in dterms], dtype=np.int64).reshape(len(dterms), nvars)
        self.d_coefs = np.array([t[3] for t in dterms], dtype=np.int64)
        self.maxdeg = int(self.exps.max()) if len(terms) else 0

    def _monomials(self, F, x, exps):
        x = np.asarray(x, dtype=np.int64)
        vals = np.ones(len(exps), dtype=np.int64)
        for v in range(self.nvars):
            col = exps[:, v]
            if col.any():
                vals = F.vmul(vals, F.vpow(np.full(len(exps), x[v]), 1) if False else _pow_vec(F, int(x[v]), col))
        return vals

    def evaluate(self, F: FieldDesc, x) -> np.ndarray:
        vals = F.vmul(self._monomials(F, x, self.exps), self.coefs)
        return _group_sum(F, vals, self.eq, len(self.polys))

    def jacobian(self, F: FieldDesc, x) -> np.ndarray:
        vals = F.vmul(self._monomials(F, x, self.d_exps), self.d_coefs)
        idx = self.d_eq * self.nvars + self.d_var
        return _group_sum(F, vals, idx, len(self.polys) * self.nvars).reshape(len(self.polys), self.nvars)


def _pow_vec(F: FieldDesc, base: int, exps):
    exps = np.asarray(exps, dtype=np.int64)
    top = int(exps.max()) if exps.size else 0
    table = [1]
    for _ in range(top):
        table.append(F.mul(table[-1], base))
    return np.array(table, dtype=np.int64)[exps]


def _group_sum(F: FieldDesc, vals, idx, n):
    """Field sums of vals grouped by idx into n bins."""
    if F.k == 1:
        out = np.zeros(n, dtype=np.int64)
        np.add.at(out, idx, vals)
        return out % F.p
    d = F.digits(vals)
    out = np.zeros((n, F.k), dtype=np.int64)
    np.add.at(out, idx, d)
    return F.from_digits(out)


class Lifter:
    """Power-series parametrisation of a smooth point of a curve.

    ``x_v(t)`` for every coordinate, with ``x_a = a_0 + t`` for the
    uniformiser index a and constant series for the ``fixed`` coordinates;
    the rest are solved coefficient by coefficient from a square subsystem
    whose Jacobian is invertible at the point.
    """

    def __init__(self, F: FieldDesc, system: PolySystem, point, fixed, uniformiser: int, rows):
        self.F = F
        self.sys = system
        n = system.nvars
        self.n = n
        self.a = uniformiser
        self.fixed = set(fixed)
        self.free = [v for v in range(n) if v != uniformiser and v not in self.fixed]
        J = system.jacobian(F, point)
        self.rows = list(rows)
        J0 = J[np.ix_(self.rows, self.free)] if self.free else np.zeros((0, 0), dtype=np.int64)
        self.J0inv = linalg.inverse(F, J0) if self.free else J0
        polys = [system.polys[r] for r in self.rows]
        self.eq_terms = polys
        # monomial tree over every monomial used by the selected equations
        mons = set()
        for poly in polys:
            for e in poly:
                mons.add(tuple(e))
        tree = {}
        stack = list(mons)
        while stack:
            e = stack.pop()
            if e in tree or sum(e) <= 1:
                continue
            v = max(i for i, k in enumerate(e) if k)
            parent = list(e)
            parent[v] -= 1
            parent = tuple(parent)
            tree[e] = (parent, v)
            stack.append(parent)
        self.levels = {}
        for e, (par, v) in tree.items():
            self.levels.setdefault(sum(e), []).append(e)
        self.tree = tree
        self.cap = 0
        self.X = np.zeros((n, 0), dtype=np.int64)
        self.P = {}
        self.point = np.asarray(point, dtype=np.int64)
        self.prec = 0
        # coefficient layout per equation: (monomial, coef)
        self._eq_mons = [[(tuple(e), c) for e, c in poly.items()] for poly in polys]

    def _grow(self, cap):
        if cap <= self.cap:
            return
        X = np.zeros((self.n, cap), dtype=np.int64)
        X[:, : self.cap] = self.X
        self.X = X
        for e in list(self.P):
            arr = np.zeros(cap, dtype=np.int64)
            arr[: self.cap] = self.P[e]
            self.P[e] = arr
        for e in self.tree:
            if e not in self.P:
                self.P[e] = np.zeros(cap, dtype=np.int64)
        self.cap = cap

    def _mono(self, e):
        s = sum(e)
        if s == 0:
            return None
        if s == 1:
            return self.X[e.index(1)]
        return self.P[e]

    def _update_products(self, n):
        F = self.F
        for d in sorted(self.levels):
            es = self.levels[d]
            parents = np.stack([self._series_of(self.tree[e][0])[: n + 1] for e in es])
            vs = np.stack([self.X[self.tree[e][1], n::-1] for e in es])
            vals = F.vdot(parents, vs)
            for e, val in zip(es, vals):
                self.P[e][n] = val

    def _series_of(self, e):
        s = sum(e)
        if s == 0:
            out = np.zeros(self.cap, dtype=np.int64)
            out[0] = 1
            return out
        if s == 1:
            return self.X[e.index(1)]
        return self.P[e]

    def _residuals(self, n):
        F = self.F
        out = []
        for mons in self._eq_mons:
            vals = np.array([self._series_of(e)[n] for e, _ in mons], dtype=np.int64)
            cs = np.array([c for _, c in mons], dtype=np.int64)
            out.append(F.vsum(F.vmul(vals, cs)))
        return np.array(out, dtype=np.int64)

    def extend(self, prec: int):
        """Make the first ``prec`` coefficients of every coordinate available."""
        if prec <= self.prec:
            return
        self._grow(max(prec, 2 * self.cap))
        F = self.F
        if self.prec == 0:
            self.X[:, 0] = self.point
            self._update_products(0)
            self.prec = 1
        for n in range(self.prec, prec):
            self.X[self.free, n] = 0
            self.X[self.a, n] = 1 if n == 1 else 0
            self._update_products(n)
            if self.free:
                r = self._residuals(n)
                c = linalg.matmul(F, self.J0inv, r[:, None])[:, 0]
                self.X[self.free, n] = F.vneg(c)
                self._update_products(n)
            self.prec = n + 1

    def series(self, prec: int) -> np.ndarray:
        self.extend(prec)
        return self.X[:, :prec].copy()

    def check(self, prec: int) -> bool:
        """Every equation of the full system vanishes to O(t^prec)."""
        X = self.series(prec)
        F = self.F
        for poly in self.sys.polys:
            acc = np.zeros(prec, dtype=np.int64)
            for e, c in poly.items():
                acc = F.vadd(acc, F.vmul(monomial_series(F, X, e, prec), c))
            if acc.any():
                return False
        return True


def monomial_series(F: FieldDesc, X, e, prec, cache=None):
    """Series of the monomial x^e given coordinate series X."""
    e = tuple(e)
    if cache is not None and e in cache:
        return cache[e]
    s = sum(e)
    if s == 0:
        out = np.zeros(prec, dtype=np.int64)
        out[0] = 1
    elif s == 1:
        out = np.asarray(X[e.index(1)][:prec], dtype=np.int64)
    else:
        v = max(i for i, k in enumerate(e) if k)
        par = list(e)
        par[v] -= 1
        out = smul(F, monomial_series(F, X, tuple(par), prec, cache), X[v], prec)
    if cache is not None:
        cache[e] = out
    return out


@dataclass
class LocalExpansion:
    """Series of the coordinates at a place, in the chart where ``chart`` = 1."""

    place: Place
    field: FieldDesc
    chart: int
    uniformiser: int
    series: np.ndarray  # n_coords x precision, over ``field``

    @property
    def precision(self) -> int:
        return self.series.shape[1]


# --------------------------------------------------------------------------
# reductions

class CurveOverFp:
    """Common interface of a curve fixture reduced modulo a good prime."""

    kind = ""

    def __init__(self, model: CurveModel, p: int):
        if p not in model.good_primes:
            raise BadPrimeError(f"{p} is not a declared good prime of {model.label}")
        self.model = model
        self.p = p
        self.F = make_extension(p, 1)
        self.genus = model.genus
        self._lock = threading.RLock()
        self._places: dict = {}
        self._expansions: dict = {}
        self._counts: dict = {}

    @property
    def label(self) -> str:
        return self.model.label

    def __repr__(self):
        return f"<{self.model.label} mod {self.p}>"

    def field(self, d: int) -> FieldDesc:
        return make_extension(self.p, d)

    # subclasses provide: _normalise, _places_of_degree, count_points,
    # _expand, section grading data
    def places(self, d: int) -> list:
        """All places of degree exactly d, sorted."""
        if d > MAX_PLACE_DEGREE:
            raise CurveError(f"place degree {d} exceeds the supported cap {MAX_PLACE_DEGREE}")
        with self._lock:
            if d not in self._places:
                self._places[d] = sorted(self._places_of_degree(d))
            return list(self._places[d])

    def places_up_to(self, d: int) -> dict:
        return {e: self.places(e) for e in range(1, d + 1)}

    def rational_places(self) -> list:
        return self.places(1)

    def conjugates(self, place: Place) -> list:
        F = self.field(place.degree)
        out = [place.point]
        for _ in range(place.degree - 1):
            out.append(tuple(F.frobenius(x) for x in out[-1]))
        return out

    def place_of(self, coords, F: FieldDesc) -> Place:
        """The place through a point with coordinates in F."""
        pt = self._normalise([int(c) for c in coords], F)
        d = 1
        for c in pt:
            d = math.lcm(d, F.degree_of(c))
        if d < F.k:
            small = self.field(d)
            pt = [restrict_value(F, small, c) for c in pt]
            F = small
        conj = [tuple(pt)]
        for _ in range(d - 1):
            conj.append(tuple(F.frobenius(x) for x in conj[-1]))
        return Place(d, min(conj))

    def on_curve(self, coords, F: FieldDesc) -> bool:
        raise NotImplementedError

    def marked_place(self, name: str) -> Place:
        if name not in self.model.marked_points:
            raise CurveError(f"{self.label} has no marked point {name!r}")
        pt = [c % self.p for c in self.model.marked_points[name]]
        if not any(pt):
            raise CurveError(f"marked point {name} vanishes mod {self.p}")
        return self.place_of(pt, self.F)

    def local_expansion(self, place: Place, precision: int) -> LocalExpansion:
        if precision < 1:
            raise ValueError("precision must be positive")
        with self._lock:
            key = place
            if key not in self._expansions:
                self._expansions[key] = self._make_lifter(place)
            chart, a, lifter, F = self._expansions[key]
            return LocalExpansion(place, F, chart, a, lifter.series(precision))

    def divisor_of_marked(self, terms) -> Divisor:
        return Divisor({self.marked_place(name): c for c, name in terms})


def restrict_value(big: FieldDesc, small: FieldDesc, a: int) -> int:
    """Preimage of a under the fixed embedding small -> big."""
    if big == small:
        return a
    key = (big, small)
    tab = _RESTRICT.get(key)
    if tab is None:
        img = embed_value(small, big, np.arange(small.q, dtype=np.int64))
        tab = {int(v): i for i, v in enumerate(np.asarray(img))}
        _RESTRICT[key] = tab
    if a not in tab:
        raise CurveError("element is not in the subfield")
    return tab[a]


_RESTRICT: dict = {}


def _irreducible_orbits(F: FieldDesc, e: int):
    """One root (in F = F_{p^e}) per monic irreducible of degree e over F_p."""
    seen = set()
    out = []
    for a in range(F.q):
        if a in seen:
            continue
        orb = [a]
        for _ in range(e - 1):
            orb.append(F.frobenius(orb[-1]))
        seen.update(orb)
        if len(set(orb)) == e:
            out.append(min(orb))
    return out


class ProjectiveCurveFp(CurveOverFp):
    """Canonical curve (or plane quartic) over F_p."""

    kind = "projective"

    def __init__(self, model: CurveModel, p: int):
        super().__init__(model, p)
        self.n = model.nvars
        self.system = PolySystem(model.polys, self.n, p)
        self.degH = 2 * self.genus - 2
        self.canonical_degree = 1  # K = 1 * H
        self.inv_mod_p = {}
        for name, A in model.involutions.items():
            A = np.array(A, dtype=np.int64) % p
            c = int((A @ A % p)[0, 0])
            if c:
                self.inv_mod_p[name] = A
        self._graded: dict = {}
        self._fibrations: dict = {}

    # --- points
    def _normalise(self, pt, F: FieldDesc):
        i = next((j for j, c in enumerate(pt) if c), None)
        if i is None:
            raise CurveError("zero vector is not a projective point")
        inv = F.inv(pt[i])
        return [F.mul(c, inv) for c in pt]

    def on_curve(self, coords, F: FieldDesc) -> bool:
        return not self.system.evaluate(F, coords).any()

    def check_smooth(self, coords, F: FieldDesc):
        J = self.system.jacobian(F, coords)
        r = linalg.rank(F, J)
        if r != self.n - 2:
            raise SingularPointError(f"{self.label} mod {self.p}: singular point {list(coords)} over {F!r}")

    def apply_involution(self, name: str, place: Place) -> Place:
        if name not in self.model.involutions:
            raise CurveError(f"{self.label} has no involution {name!r}")
        if name not in self.inv_mod_p:
            raise BadPrimeError(f"involution {name} degenerates mod {self.p}")
        A = self.inv_mod_p[name]
        F = self.field(place.degree)
        x = np.array(place.point, dtype=np.int64)
        img = linalg.matmul(F, A, x[:, None])[:, 0]
        return self.place_of(img, F)

    def apply_involution_divisor(self, name: str, D: Divisor) -> Divisor:
        return Divisor({self.apply_involution(name, pl): c for pl, c in D.items()})

    # --- local expansions
    def _make_lifter(self, place: Place):
        F = self.field(place.degree)
        pt = list(place.point)
        if not self.on_curve(pt, F):
            raise CurveError(f"{place} is not on {self.label}")
        chart = next(j for j, c in enumerate(pt) if c)
        J = self.system.jacobian(F, pt)
        if linalg.rank(F, J) != self.n - 2:
            raise SingularPointError(f"{self.label} mod {self.p}: singular at {place}")
        # tangent direction: kernel of J restricted to the affine chart
        cols = [j for j in range(self.n) if j != chart]
        K = linalg.nullspace(F, J[:, cols])
        # K has the Euler direction removed by the chart, so it is 1-dimensional
        if K.shape[0] != 1:
            raise SingularPointError(f"tangent space at {place} is not a line")
        tan = K[0]
        a = cols[int(np.nonzero(tan)[0][0])]
        free = [j for j in cols if j != a]
        rows = []
        basis = np.zeros((0, len(free)), dtype=np.int64)
        for r in range(J.shape[0]):
            trial = np.vstack([basis, J[r, free][None, :]])
            if linalg.rank(F, trial) > basis.shape[0]:
                basis = trial
                rows.append(r)
            if len(rows) == len(free):
                break
        if len(rows) != len(free):
            raise SingularPointError(f"cannot select a regular subsystem at {place}")
        lifter = Lifter(F, self.system, pt, [chart], a, rows)
        return chart, a, lifter, F

    # --- graded pieces R_m of the homogeneous coordinate ring
    @cached_property
    def base_place(self) -> Place:
        """Rational base point for faithful series: a marked point, else the first rational place."""
        for name in sorted(self.model.marked_points, key=lambda s: (s != "inf", s)):
            try:
                return self.marked_place(name)
            except CurveError:
                continue
        for a in itertools.product(range(self.p), repeat=self.n - 1):
            pt = [1] + list(a)
            if self.on_curve(pt, self.F):
                return self.place_of(pt, self.F)
        raise CurveError("no rational point found for a base point")

    def hilbert(self, m: int) -> int:
        if m == 0:
            return 1
        if m == 1:
            return self.genus
        return m * self.degH - self.genus + 1

    def base_series(self, prec: int) -> np.ndarray:
        exp = self.local_expansion(self.base_place, prec)
        return exp.series

    def graded(self, m: int):
        """(monomials, series matrix) for a basis of R_m, series at the base point."""
        with self._lock:
            if m in self._graded:
                return self._graded[m]
            prec = m * self.degH + 1
            X = self.base_series(prec)
            if m == 0:
                mons = [tuple([0] * self.n)]
            elif m == 1:
                mons = [tuple(int(i == j) for j in range(self.n)) for i in range(self.n)]
            else:
                prev, _ = self.graded(m - 1)
                cand = sorted({tuple(a + (j == v) for j, a in enumerate(e)) for e in prev for v in range(self.n)},
                              reverse=True)
                mons = cand
            cache: dict = {}
            S = np.array([monomial_series(self.F, X, e, prec, cache) for e in mons], dtype=np.int64)
            # greedy independent subset
            chosen = []
            ech = linalg.Echelon(self.p, prec)
            for e, row in zip(mons, S):
                new = ech.add(row[None, :])
                if new.rank > ech.rank:
                    ech = new
                    chosen.append(e)
                if ech.rank == self.hilbert(m):
                    break
            if ech.rank != self.hilbert(m):
                raise CurveError(
                    f"{self.label} mod {self.p}: degree-{m} forms give {ech.rank} functions, "
                    f"expected {self.hilbert(m)} (equations do not match the curve)")
            Smat = np.array([monomial_series(self.F, X, e, prec, cache) for e in chosen], dtype=np.int64)
            self._graded[m] = (chosen, Smat)
            return self._graded[m]

    def section_monomials(self, m: int):
        return self.graded(m)[0]

    def sections_at(self, place: Place, monomials, precision: int):
        """Series, at ``place`` and over its residue field, of the given degree-m monomials."""
        exp = self.local_expansion(place, precision)
        cache: dict = {}
        return exp.field, np.array([monomial_series(exp.field, exp.series, e, precision, cache)
                                    for e in monomials], dtype=np.int64).reshape(len(monomials), precision)

    # --- fibration by a pencil of linear forms
    def fibration(self, u=None):
        """A pencil (u : v) without base points and the induced module structure."""
        key = None if u is None else tuple(int(c) % self.p for c in u)
        with self._lock:
            if key not in self._fibrations:
                self._fibrations[key] = Fibration.build(self, key)
            return self._fibrations[key]

    # --- enumeration
    def _places_of_degree(self, d: int):
        fib = self.fibration()
        return fib.places_of_degree(d)

    def count_points(self, k: int) -> int:
        if k > MAX_COUNT_DEGREE:
            raise CurveError(f"extension degree {k} exceeds the cap {MAX_COUNT_DEGREE}")
        with self._lock:
            if k not in self._counts:
                self._counts[k] = self.fibration().count_points(k)
            return self._counts[k]


@dataclass
class Fibration:
    """Coordinate ring as a free module over F_p[u, v], with multiplication matrices."""

    curve: ProjectiveCurveFp
    u: np.ndarray
    v: np.ndarray
    basis: list                  # monomials e_i (degree 0..3)
    degrees: list
    mult: list                   # per coordinate j: dict (i, k) -> coeff list over v-power
    lin: np.ndarray              # coordinate j = lin[j] . (u, v, degree-1 basis elements)

    @staticmethod
    def build(curve: ProjectiveCurveFp, u_key=None, seed: int = 0):
        n, p, F = curve.n, curve.p, curve.F
        g = curve.genus
        rng = random.Random(seed)
        eye = np.eye(n, dtype=np.int64)
        cands = []
        if u_key is None:
            for i, j in itertools.combinations(range(n), 2):
                cands.append((eye[i], eye[j]))
        else:
            uu = np.array(u_key, dtype=np.int64)
            for j in range(n):
                cands.append((uu, eye[j]))
        for _ in range(60):
            a = np.array([rng.randrange(p) for _ in range(n)], dtype=np.int64)
            b = np.array([rng.randrange(p) for _ in range(n)], dtype=np.int64)
            cands.append((a if u_key is None else np.array(u_key, dtype=np.int64), b))
        for u, v in cands:
            if linalg.rank(F, np.vstack([u, v])) < 2:
                continue
            fib = Fibration._try(curve, u, v)
            if fib is not None:
                return fib
        raise CurveError(f"{curve.label} mod {p}: no base-point-free pencil found")

    @staticmethod
    def _try(curve, u, v):
        F, n, p = curve.F, curve.n, curve.p
        g = curve.genus
        top = 4
        prec = top * curve.degH + 1
        X = curve.base_series(prec)
        useries = np.zeros(prec, dtype=np.int64)
        vseries = np.zeros(prec, dtype=np.int64)
        for j in range(n):
            useries = (useries + u[j] * X[j, :prec]) % p
            vseries = (vseries + v[j] * X[j, :prec]) % p
        cache: dict = {}

        def ser(e):
            return monomial_series(F, X, e, prec, cache)

        # module generators: pick monomials independent of u*R + v*R degree by degree
        zero = tuple([0] * n)
        basis = [zero]
        degrees = [0]
        elems = {zero: ser(zero)}

        def span_deg(m):
            # series of u^a v^c e_k for a + c + deg e_k = m
            out = []
            labels = []
            for k, (e, dk) in enumerate(zip(basis, degrees)):
                if dk > m:
                    continue
                s = m - dk
                for c in range(s + 1):
                    term = elems[e]
                    for _ in range(s - c):
                        term = smul(F, term, useries, prec)
                    for _ in range(c):
                        term = smul(F, term, vseries, prec)
                    out.append(term)
                    labels.append((k, c))
            return out, labels

        hil = [1, g] + [m * curve.degH - g + 1 for m in range(2, top + 1)]
        for m in (1, 2, 3):
            rows, _ = span_deg(m)
            ech = linalg.Echelon(p, prec)
            if rows:
                ech = ech.add(np.array(rows))
            if m == 1:
                if ech.rank != 2:
                    return None
            mons = curve.section_monomials(m)
            for e in mons:
                if ech.rank == hil[m]:
                    break
                s = ser(e)
                new = ech.add(s[None, :])
                if new.rank > ech.rank:
                    ech = new
                    basis.append(e)
                    degrees.append(m)
                    elems[e] = s
            if ech.rank != hil[m]:
                return None
        if len(basis) != 2 * g - 2:
            return None
        # freeness in degree 4 certifies that u, v have no common zero
        rows4, labels4 = span_deg(4)
        if len(rows4) != hil[4] or linalg.rank(F, np.array(rows4)) != hil[4]:
            return None
        # solve x_j * e_i in terms of u^a v^c e_k
        systems = {}
        for m in range(1, top + 1):
            rows, labels = span_deg(m)
            systems[m] = (np.array(rows, dtype=np.int64), labels)
        # one multi-column solve per degree of e_i
        mult = [{} for _ in range(n)]
        by_deg: dict = {}
        for i, di in enumerate(degrees):
            by_deg.setdefault(di, []).append(i)
        for di, idxs in sorted(by_deg.items()):
            A, labels = systems[di + 1]
            targets = [(j, i) for j in range(n) for i in idxs]
            B = np.array([smul(F, elems[basis[i]], X[j, :prec], prec) for j, i in targets], dtype=np.int64)
            sol = linalg.solve(F, A.T, B.T)
            if sol is None:
                raise CurveError("module structure solve failed")
            for col, (j, i) in enumerate(targets):
                for coef, (k, c) in zip(sol[:, col], labels):
                    if coef:
                        delta = di + 1 - degrees[k]
                        lst = mult[j].setdefault((i, k), [0] * (delta + 1))
                        lst[c] = int(coef)
        # express coordinates via (u, v, degree-1 basis)
        deg1 = [e for e, d in zip(basis, degrees) if d == 1]
        Bm = np.vstack([u, v] + [np.array(e, dtype=np.int64) for e in deg1])  # rows = linear forms
        lin = linalg.solve(F, Bm.T, np.eye(n, dtype=np.int64))  # columns: coords in that basis
        lin = lin.T  # lin[j] = coefficients of x_j
        return Fibration(curve, u, v, basis, degrees, mult, lin)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def tensor(self):
        """(P, delta): P[j, c, i, k] is the coefficient of u^(delta_ik - c) v^c in (x_j e_i)_k."""
        r, n = self.rank, len(self.mult)
        delta = np.array([[self.degrees[i] + 1 - self.degrees[k] for k in range(r)] for i in range(r)])
        P = np.zeros((n, 5, r, r), dtype=np.int64)
        for j, entries in enumerate(self.mult):
            for (i, k), coeffs in entries.items():
                P[j, : len(coeffs), i, k] = coeffs
        return P, delta

    def _weights(self, F: FieldDesc, uv):
        """W[c, i, k] = u0^(delta_ik - c) v0^c, zero where c > delta_ik."""
        u0, v0 = uv
        P, delta = self.tensor
        pw = np.zeros((6, 5), dtype=np.int64)
        for d in range(5):
            for c in range(d + 1):
                pw[d, c] = F.mul(F.pow(u0, d - c), F.pow(v0, c))
        dl = np.clip(delta, 0, 5)
        W = np.stack([pw[dl, c] for c in range(5)])
        W[:, delta < 0] = 0
        return W

    def matrices(self, F: FieldDesc, uv):
        """Matrices of x_j / w on the fibre over (u : v) = uv, w being u if uv[0] else v."""
        P, _ = self.tensor
        W = self._weights(F, uv)
        vals = F.vmul(P, W[None])
        return list(F.vsum(np.moveaxis(vals, 1, -1), axis=-1))

    def combination(self, F: FieldDesc, uv, coeffs):
        """sum_j coeffs[j] * M_j over the fibre, coefficients in F."""
        P, _ = self.tensor
        W = self._weights(F, uv)
        c = np.asarray(coeffs, dtype=np.int64)
        if F.k == 1:
            comb = np.tensordot(c, P, axes=(0, 0)) % F.p
        else:
            comb = F.vsum(np.moveaxis(F.vmul(P, c[:, None, None, None]), 0, -1), axis=-1)
        return F.vsum(np.moveaxis(F.vmul(comb, W), 0, -1), axis=-1)

    def _fibre_points(self, F: FieldDesc, uv, rng: random.Random):
        """Points of the fibre over uv with coordinates in F, with multiplicities.

        The points are the eigenvectors of a random combination of the
        multiplication matrices.  Over a small field a combination may fail
        to separate the points, so later attempts draw the combination from
        an extension and keep only the eigenvalues whose point lies in F.
        """
        n = self.curve.n
        r = self.rank
        plan = [1] * 8
        for s in (2, 3, 4):
            if F.k * s <= 12:
                plan += [s] * 8
        for s in plan:
            G = self.curve.field(F.k * s)
            coeffs = [rng.randrange(G.q) for _ in range(n)]
            guv = tuple(embed_value(F, G, x) for x in uv)
            Z = self.combination(G, guv, coeffs)
            cp = linalg.charpoly(G, Z)
            pts = []
            ok = True
            for lam in roots(G, cp):
                A = G.vsub(Z, G.vmul(np.eye(r, dtype=np.int64), lam))
                K = linalg.nullspace(G, A)
                if K.shape[0] != 1 or K[0][0] == 0:
                    ok = False
                    break
                w = G.vmul(K[0], G.inv(int(K[0][0])))
                coords = self._coords(G, guv, w)
                if s > 1:
                    if any(F.k % G.degree_of(c) for c in coords):
                        continue
                    coords = [restrict_value(G, F, c) for c in coords]
                pts.append((coords, _root_multiplicity(G, cp, lam)))
            if ok:
                return pts
        raise CurveError(f"{self.curve.label} mod {self.curve.p}: could not separate a fibre "
                         "(the reduction may be singular)")

    def _coords(self, F, uv, w):
        u0, v0 = uv
        # value of (u/w0, v/w0, e_k/w0) where w0 is the dehomogenising form
        if u0:
            t = F.div(v0, u0)
            vals = [1, t]
        else:
            vals = [0, 1]
        deg1 = [i for i, d in enumerate(self.degrees) if d == 1]
        vals = np.array(vals + [int(w[i]) for i in deg1], dtype=np.int64)
        coords = F.vsum(F.vmul(self.lin, vals[None, :]), axis=1)
        return [int(c) for c in coords]

    def places_of_degree(self, d: int):
        curve = self.curve
        F = curve.field(d)
        rng = random.Random(1000 + d)
        found = {}
        for e in [x for x in range(1, d + 1) if d % x == 0]:
            Fe = curve.field(e)
            t_reps = _irreducible_orbits(Fe, e) if e > 1 else list(range(curve.p))
            fibres = [embed_value(Fe, F, t) for t in t_reps]
            uvs = [(1, t) for t in fibres]
            if e == 1:
                uvs.append((0, 1))
            for uv in uvs:
                for coords, _ in self._fibre_points(F, uv, rng):
                    pl = curve.place_of(coords, F)
                    if pl.degree != d or pl in found:
                        continue
                    if not curve.on_curve(list(coords), F):
                        raise CurveError("eigenvector is not a point of the curve")
                    curve.check_smooth(coords, F)
                    found[pl] = True
        return list(found)

    def count_points(self, k: int) -> int:
        curve = self.curve
        F = curve.field(k)
        rng = random.Random(2000 + k)
        total = 0
        uvs = [(1, t) for t in range(F.q)] + [(0, 1)]
        for uv in uvs:
            pts = self._fibre_points(F, uv, rng)
            for coords, _ in pts:
                curve.check_smooth(coords, F)
            total += len(pts)
        return total

    def fibre_divisor(self, uv_over_Fp=(0, 1)) -> Divisor:
        """div of the linear form vanishing on the fibre over a rational point of P^1."""
        curve = self.curve
        Fp = curve.F
        rng = random.Random(7)
        n, r = curve.n, self.rank
        for attempt in range(40):
            coeffs = [rng.randrange(curve.p) for _ in range(n)]
            Z = self.combination(Fp, uv_over_Fp, coeffs)
            cp = linalg.charpoly(Fp, Z)
            try:
                terms = {}
                for fac, mult in factor_univariate(Fp, cp):
                    f = len(fac) - 1
                    Ff = curve.field(f)
                    fac_f = [embed_value(Fp, Ff, c) for c in fac]
                    lam = roots(Ff, fac_f)[0]
                    Zf = embed_value(Fp, Ff, Z)
                    A = Ff.vsub(Zf, Ff.vmul(np.eye(r, dtype=np.int64), lam))
                    K = linalg.nullspace(Ff, A)
                    if K.shape[0] != 1 or K[0][0] == 0:
                        raise _Retry()
                    w = Ff.vmul(K[0], Ff.inv(int(K[0][0])))
                    coords = self._coords(Ff, tuple(embed_value(Fp, Ff, x) for x in uv_over_Fp), w)
                    pl = curve.place_of(coords, Ff)
                    if pl.degree != f:
                        raise _Retry()
                    curve.check_smooth(list(pl.point), curve.field(pl.degree))
                    terms[pl] = terms.get(pl, 0) + mult
                D = Divisor(terms)
                if D.degree != curve.degH:
                    raise CurveError("hyperplane divisor has the wrong degree")
                return D
            except _Retry:
                continue
        raise CurveError("could not separate the hyperplane section")


class _Retry(Exception):
    pass


def _root_multiplicity(F: FieldDesc, poly, lam) -> int:
    from .ffield import pdivmod
    m = 0
    cur = list(poly)
    while True:
        q, r = pdivmod(F, cur, [F.neg(lam), 1])
        if r:
            return m
        m += 1
        cur = q


# --------------------------------------------------------------------------
# hyperelliptic curves

class HyperellipticCurveFp(CurveOverFp):
    """y^2 + h(x) y = f(x) over F_p, points in weighted coordinates (X : Y : Z)."""

    kind = "hyperelliptic"

    def __init__(self, model: CurveModel, p: int):
        super().__init__(model, p)
        g = self.genus
        h, f = model.polys
        self.h = [h.get(i, 0) % p for i in range(g + 2)]
        self.f = [f.get(i, 0) % p for i in range(2 * g + 3)]
        Fp = self.F
        # affine equation G(x, y) and the chart at infinity (reversed coefficients)
        self.n = 3
        self.degH = 2
        self.canonical_degree = g - 1
        self._sys_affine = self._system(self.h, self.f)
        self._sys_inf = self._system(self.h[::-1][: g + 2], self.f[::-1][: 2 * g + 3])
        self.inv_mod_p = {}

    def _system(self, h, f):
        # variables (s, w, one): w^2 + h(s) w - f(s), homogenised with 'one'
        poly = {(0, 2, 0): 1}
        g = self.genus
        deg = 2
        terms = {}
        terms[(0, 2, 0)] = 1
        for i, c in enumerate(h):
            if c:
                terms[(i, 1, 0)] = terms.get((i, 1, 0), 0) + c
        for i, c in enumerate(f):
            if c:
                terms[(i, 0, 0)] = terms.get((i, 0, 0), 0) - c
        return PolySystem([terms], 3, self.p)

    def hilbert(self, m: int) -> int:
        return m + 1 + max(0, m - self.genus)

    def section_monomials(self, m: int):
        """Weighted monomials X^a Y^j Z^(m - a - (g+1) j) as exponent triples."""
        g = self.genus
        out = []
        for j in (0, 1):
            for a in range(0, m - (g + 1) * j + 1):
                out.append((a, j, m - a - (g + 1) * j))
        return out

    def _normalise(self, pt, F):
        X, Y, Z = pt
        g = self.genus
        if Z:
            inv = F.inv(Z)
            return [F.mul(X, inv), F.mul(Y, F.pow(inv, g + 1)), 1]
        if not X:
            raise CurveError("not a point of the weighted plane")
        inv = F.inv(X)
        return [1, F.mul(Y, F.pow(inv, g + 1)), 0]

    def _affine_eval(self, F, x, y):
        hx = 0
        for c in reversed(self.h):
            hx = F.add(F.mul(hx, x), c)
        fx = 0
        for c in reversed(self.f):
            fx = F.add(F.mul(fx, x), c)
        return hx, fx

    def on_curve(self, coords, F) -> bool:
        X, Y, Z = self._normalise(list(coords), F)
        if Z:
            hx, fx = self._affine_eval(F, X, Y)
        else:
            hx, fx = self.h[self.genus + 1], self.f[2 * self.genus + 2]
        return F.sub(F.add(F.mul(Y, Y), F.mul(hx, Y)), fx) == 0

    def check_smooth(self, coords, F):
        X, Y, Z = self._normalise(list(coords), F)
        sys = self._sys_affine if Z else self._sys_inf
        s = X if Z else Z
        J = sys.jacobian(F, [s, Y, 1])
        if not J[0, :2].any():
            raise SingularPointError(f"{self.label} mod {self.p}: singular point {coords}")

    def _solve_y(self, F, b, c):
        """Roots y in F of y^2 + b y - c."""
        return roots(F, pmonic(F, [F.neg(c), b, 1]))

    def _places_of_degree(self, d: int):
        F = self.field(d)
        found = set()
        for e in [x for x in range(1, d + 1) if d % x == 0]:
            Fe = self.field(e)
            xs = _irreducible_orbits(Fe, e) if e > 1 else list(range(self.p))
            pts = [(embed_value(Fe, F, x), 1) for x in xs]
            if e == 1:
                pts.append((1, 0))
            for X, Z in pts:
                if Z:
                    b, c = self._affine_eval(F, X, 0)
                else:
                    b, c = self.h[self.genus + 1], self.f[2 * self.genus + 2]
                for y in self._solve_y(F, b, c):
                    pl = self.place_of([X, y, Z], F)
                    if pl.degree == d and pl not in found:
                        self.check_smooth(list(pl.point), self.field(d))
                        found.add(pl)
        return list(found)

    def count_points(self, k: int) -> int:
        if k > MAX_COUNT_DEGREE:
            raise CurveError(f"extension degree {k} exceeds the cap {MAX_COUNT_DEGREE}")
        with self._lock:
            if k in self._counts:
                return self._counts[k]
            F = self.field(k)
            xs = F.elements()
            hx = np.zeros(F.q, dtype=np.int64)
            for c in reversed(self.h):
                hx = F.vadd(F.vmul(hx, xs), c)
            fx = np.zeros(F.q, dtype=np.int64)
            for c in reversed(self.f):
                fx = F.vadd(F.vmul(fx, xs), c)
            total = int(self._count_quadratic(F, hx, fx).sum())
            b, c = self.h[self.genus + 1], self.f[2 * self.genus + 2]
            total += int(self._count_quadratic(F, np.array([b]), np.array([c])).sum())
            self._counts[k] = total
            return total

    def _count_quadratic(self, F, b, c):
        """Number of y in F with y^2 + b y = c, elementwise."""
        b = np.asarray(b, dtype=np.int64)
        c = np.asarray(c, dtype=np.int64)
        if self.p != 2:
            four = F.from_coeffs([4])
            disc = F.vadd(F.vmul(b, b), F.vmul(c, four))
            chi = F.vpow(disc, (F.q - 1) // 2)
            out = np.where(disc == 0, 1, np.where(chi == 1, 2, 0))
            return out
        out = np.zeros(len(b), dtype=np.int64)
        zero = b == 0
        out[zero] = 1
        nz = ~zero
        if nz.any():
            bb = b[nz]
            z = F.vmul(c[nz], F.vinv(F.vmul(bb, bb)))
            tr = z.copy()
            cur = z.copy()
            for _ in range(F.k - 1):
                cur = F.vmul(cur, cur)
                tr = F.vadd(tr, cur)
            out[nz] = np.where(tr == 0, 2, 0)
        return out

    def _make_lifter(self, place: Place):
        F = self.field(place.degree)
        X, Y, Z = place.point
        sys = self._sys_affine if Z else self._sys_inf
        s = X if Z else Z
        pt = [s, Y, 1]
        if sys.evaluate(F, pt).any():
            raise CurveError(f"{place} is not on {self.label}")
        J = sys.jacobian(F, pt)
        if J[0, 1]:
            a = 0  # s is a uniformiser
        elif J[0, 0]:
            a = 1
        else:
            raise SingularPointError(f"singular point {place}")
        lifter = Lifter(F, sys, pt, [2], a, [0])
        return (2 if Z else 0), a, lifter, F

    def local_expansion(self, place: Place, precision: int) -> LocalExpansion:
        # series of the chart coordinates (s, w, 1): s = x, w = y when Z = 1,
        # s = Z/X, w = Y/X^(g+1) at infinity
        return super().local_expansion(place, precision)

    def sections_at(self, place: Place, monomials, precision: int):
        exp = self.local_expansion(place, precision)
        F = exp.field
        s, w, one = exp.series
        X = np.vstack([s, w])
        cache: dict = {}
        rows = []
        at_inf = exp.chart == 0
        for (a, j, c) in monomials:
            e = (c, j) if at_inf else (a, j)
            rows.append(monomial_series(F, X, e, precision, cache))
        return F, np.array(rows, dtype=np.int64).reshape(len(monomials), precision)

    @cached_property
    def base_place(self) -> Place:
        pls = self.places(1)
        if not pls:
            raise CurveError("no rational point for a base point")
        return pls[0]

    def graded(self, m: int):
        mons = self.section_monomials(m)
        prec = m * self.degH + 1
        F, S = self.sections_at(self.base_place, mons, prec)
        return mons, S

    def infinity_divisor(self) -> Divisor:
        """x^*(infinity): the divisor of the section Z, degree 2."""
        F = self.F
        terms = {}
        b, c = self.h[self.genus + 1], self.f[2 * self.genus + 2]
        ys = self._solve_y(F, b, c)
        if ys:
            for y in ys:
                terms[self.place_of([1, y, 0], F)] = 2 if len(ys) == 1 else 1
        else:
            F2 = self.field(2)
            y = self._solve_y(F2, b, c)[0]
            terms[self.place_of([1, y, 0], F2)] = 1
        return Divisor(terms)

    def fibre_divisor_at(self, x0: int) -> Divisor:
        """x^*(x0) for a rational x0."""
        F = self.F
        b, c = self._affine_eval(F, x0, 0)
        ys = self._solve_y(F, b, c)
        if len(ys) == 2:
            return Divisor({self.place_of([x0, y, 1], F): 1 for y in ys})
        if len(ys) == 1:
            return Divisor({self.place_of([x0, ys[0], 1], F): 2})
        F2 = self.field(2)
        y = self._solve_y(F2, b, c)[0]
        return Divisor({self.place_of([x0, y, 1], F2): 1})


def reduce_mod_p(model: CurveModel, p: int) -> CurveOverFp:
    """The reduction of a fixture at a declared good prime."""
    key = (id(model), p)
    if key in _REDUCTIONS:
        return _REDUCTIONS[key]
    if model.model_kind == "hyperelliptic":
        c = HyperellipticCurveFp(model, p)
    else:
        c = ProjectiveCurveFp(model, p)
    _REDUCTIONS[key] = c
    return c


_REDUCTIONS: dict = {}


def enumerate_places(curve: CurveOverFp, max_degree: int) -> dict:
    if max_degree > MAX_PLACE_DEGREE:
        raise CurveError(f"place degree {max_degree} exceeds the supported cap {MAX_PLACE_DEGREE}")
    return curve.places_up_to(max_degree)


def count_points(curve: CurveOverFp, k: int) -> int:
    return curve.count_points(k)


def local_expansion(curve: CurveOverFp, place: Place, precision: int, target=None):
    """Series of coordinate functions at a place.

    Without ``target`` returns the :class:`LocalExpansion` of all chart
    coordinates.  With ``target`` (a list of exponent vectors of equal
    degree), returns their series divided by the chart coordinate's power.
    """
    if target is None:
        return curve.local_expansion(place, precision)
    return curve.sections_at(place, target, precision)[1]
