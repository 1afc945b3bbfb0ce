"""Divisor classes over F_p and the Mordell-Weil sieve on W_d^1.

A rational degree-d divisor class with l >= 2 reduces, at every good prime,
to such a class over F_p.  The map D -> m(D - w(D)) sends it into the
minus part of the rational torsion, a small group with explicit generators.
Reduction is injective on torsion, so the images found modulo different
primes must agree as exponent vectors; an empty intersection rules out
rational classes.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .curve import CurveError, CurveModel, CurveOverFp, Divisor, TorsionSpec, reduce_mod_p
from .gonsearch import BudgetExceeded, SupportPattern, _Searcher, rational_anchor, support_patterns
from .rrspace import rr_space


def is_principal(curve: CurveOverFp, Z: Divisor) -> bool:
    """Whether the degree-0 divisor Z is principal."""
    if Z.degree != 0:
        raise ValueError("is_principal needs a degree-0 divisor")
    if not Z:
        return True
    return rr_space(curve, Z).dimension >= 1


def class_order(curve: CurveOverFp, Z: Divisor, cap: int):
    """Least k >= 1 with kZ principal; raises if no k <= cap works."""
    if Z.degree != 0:
        raise ValueError("class_order needs a degree-0 divisor")
    for k in range(1, cap + 1):
        if is_principal(curve, k * Z):
            return k
    raise OrderCapExceeded(f"class order exceeds {cap}")


class OrderCapExceeded(Exception):
    pass


def w_d1_points(curve: CurveOverFp, d: int, restriction=None, max_divisors=None, max_seconds=None) -> list:
    """Effective degree-d divisors with l(D) >= 2, optionally only those matching patterns."""
    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    curve.places_up_to(d)
    pats = [None] if restriction is None else list(restriction)
    anchor = rational_anchor(curve)
    out = []
    used = 0
    for pat in pats:
        budget = None if max_divisors is None else max_divisors - used
        s = _Searcher(curve, d, budget, deadline, collect=True)
        try:
            s.run(pat, anchor if pat is not None and pat.anchored else None)
        finally:
            used += s.count
        out.extend(s.found)
    return out


def mu_image(curve: CurveOverFp, D: Divisor, w: str, multiplier: int = 1) -> Divisor:
    """multiplier * (D - w(D))."""
    return multiplier * (D - curve.apply_involution_divisor(w, D))


@dataclass
class SieveResult:
    d: int
    primes: list
    group_shape: tuple
    per_prime: dict = field(default_factory=dict)     # p -> sorted list of exponent vectors
    witnesses: dict = field(default_factory=dict)     # p -> {vector: example divisor}
    counts: dict = field(default_factory=dict)        # p -> number of W_d^1 divisors scanned
    elapsed: dict = field(default_factory=dict)

    @property
    def intersection(self) -> list:
        sets = [set(v) for v in self.per_prime.values()]
        if not sets:
            return []
        return sorted(set.intersection(*sets))

    @property
    def conclusion(self) -> str:
        return "empty" if not self.intersection else "nonempty_with_witnesses"

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "primes": self.primes,
            "group_shape": list(self.group_shape),
            "per_prime": {str(p): [list(v) for v in vs] for p, vs in self.per_prime.items()},
            "intersection": [list(v) for v in self.intersection],
            "conclusion": self.conclusion,
            "divisors_scanned": {str(p): n for p, n in self.counts.items()},
            "elapsed_seconds": {str(p): round(t, 2) for p, t in self.elapsed.items()},
        }


def torsion_generators(curve: CurveOverFp, torsion: TorsionSpec) -> list:
    return [curve.divisor_of_marked(g) for g in torsion.generators]


def check_torsion(curve: CurveOverFp, torsion: TorsionSpec) -> None:
    """Each generator must have exactly its declared order modulo p."""
    for gen, order in zip(torsion_generators(curve, torsion), torsion.group_shape):
        got = class_order(curve, gen, order)
        if got != order:
            raise CurveError(f"torsion generator has order {got} mod {curve.p}, expected {order}")


def _involution_name(model: CurveModel) -> str:
    if len(model.involutions) != 1:
        raise CurveError("sieve needs exactly one involution in the fixture")
    return next(iter(model.involutions))


def sieve(model: CurveModel, d: int, torsion: TorsionSpec | None = None, primes=(), restrict: bool = False,
          max_seconds: float | None = None) -> SieveResult:
    """Sieve W_d^1(X)(Q) through the torsion of the minus part.

    With ``restrict`` the divisor scan at each prime uses the support
    patterns of polar divisors; the default scans every effective divisor.
    """
    torsion = torsion or model.torsion
    if torsion is None:
        raise CurveError(f"{model.label} has no torsion data")
    w = _involution_name(model)
    res = SieveResult(d, list(primes), torsion.group_shape)
    for p in primes:
        if p not in model.good_primes:
            raise CurveError(f"{p} is not a good prime of {model.label}")
        t0 = time.monotonic()
        curve = reduce_mod_p(model, p)
        check_torsion(curve, torsion)
        gens = torsion_generators(curve, torsion)
        pats = None
        if restrict:
            pats = support_patterns(len(curve.places(1)), p, d)
        divs = w_d1_points(curve, d, pats, max_seconds=max_seconds)
        found = {}
        images = {}
        for D in divs:
            img = mu_image(curve, D, w, torsion.multiplier)
            if img in images:
                vec = images[img]
            else:
                vec = _locate(curve, img, gens, torsion.group_shape)
                images[img] = vec
            if vec is not None and vec not in found:
                found[vec] = D
        res.per_prime[p] = sorted(found)
        res.witnesses[p] = found
        res.counts[p] = len(divs)
        res.elapsed[p] = time.monotonic() - t0
    return res


def _locate(curve, Z: Divisor, gens: list, shape) -> tuple | None:
    """Exponent vector a with Z ~ sum a_i gens_i, or None when Z is outside the subgroup."""
    for vec in itertools.product(*[range(n) for n in shape]):
        T = Z
        for a, g in zip(vec, gens):
            if a:
                T = T - a * g
        if is_principal(curve, T):
            return vec
    return None
