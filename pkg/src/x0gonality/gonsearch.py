"""Lower bounds for F_p-gonality by exhausting effective divisors.

A function f of degree e over F_p has q+1 = p+1 disjoint fibres over the
rational points of P^1, and together they contain all n rational points of
the curve.  So some fibre meets fewer than n/(p+1) rational points, or else
every fibre meets exactly n/(p+1) of them and one of the fibres contains any
chosen rational place.  After a Moebius transformation that fibre is the
polar divisor, which restricts the supports worth searching.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import linalg
from .curve import CurveOverFp, Divisor, Place
from .rrspace import _cache, canonical_weight, rr_dim, rr_space, section_basis


@dataclass(frozen=True)
class SupportPattern:
    """Exactly ``s`` distinct rational places in the support; ``anchored``: one is the anchor."""

    s: int
    anchored: bool = False

    def __post_init__(self):
        if self.s < 0 or (self.anchored and self.s < 1):
            raise ValueError("invalid support pattern")


def support_patterns(n: int, p: int, e: int) -> list:
    """Sound support patterns for polar divisors of degree-e functions."""
    if n < 0 or p < 2 or e < 1:
        raise ValueError("need n >= 0, p >= 2, e >= 1")
    if n == 0:
        return [SupportPattern(0)]
    out = [SupportPattern(s) for s in range(0, -(-n // (p + 1)))]
    if n % (p + 1) == 0:
        out.append(SupportPattern(n // (p + 1), True))
    return out


class BudgetExceeded(Exception):
    pass


@dataclass
class SearchStats:
    divisors: int = 0
    elapsed: float = 0.0
    per_degree: dict = field(default_factory=dict)


@dataclass
class Witness:
    degree: int
    divisor: Divisor
    numerator: np.ndarray
    denominator: np.ndarray
    m: int

    def describe(self) -> str:
        return f"f = A/B in R_{self.m}, polar divisor {self.divisor!r}"


@dataclass
class GonalityVerdict:
    label: str
    p: int
    claim: str                       # proven_lower_bound | function_found | inconclusive
    bound: int | None = None         # the proven d, or the witness degree
    witness: Witness | None = None
    stats: SearchStats = field(default_factory=SearchStats)
    reason: str = ""

    @property
    def conclusive(self) -> bool:
        return self.claim != "inconclusive"

    def as_dict(self) -> dict:
        d = {
            "curve": self.label,
            "p": self.p,
            "claim": self.claim,
            "bound": self.bound,
            "divisors_examined": self.stats.divisors,
            "elapsed_seconds": round(self.stats.elapsed, 3),
        }
        if self.witness is not None:
            d["witness_divisor"] = repr(self.witness.divisor)
        if self.reason:
            d["reason"] = self.reason
        return d


# --------------------------------------------------------------------------
# enumeration

def _ordered_places(curve: CurveOverFp, e: int) -> list:
    """Places of degree <= e: degree descending, then index ascending."""
    out = []
    for d in range(e, 0, -1):
        out.extend(curve.places(d))
    return out


def enumerate_divisors(curve: CurveOverFp, e: int, pattern: SupportPattern | None = None,
                       anchor: Place | None = None) -> Iterator[Divisor]:
    """Effective divisors of degree e matching the pattern, without repetition.

    ``pattern=None`` yields every effective divisor of degree e.
    """
    if pattern is not None and pattern.anchored:
        if anchor is None or anchor.degree != 1:
            raise ValueError("anchored pattern needs a rational anchor")
    places = _ordered_places(curve, e)
    for terms in _compositions(places, e, pattern, anchor):
        yield Divisor(terms)


def _compositions(places, e, pattern, anchor):
    s = None if pattern is None else pattern.s
    need_anchor = pattern is not None and pattern.anchored
    n = len(places)

    def rec(i, remaining, terms, rat):
        if remaining == 0:
            if s is None or rat == s:
                if not need_anchor or anchor in terms:
                    yield dict(terms)
            return
        for j in range(i, n):
            pl = places[j]
            d = pl.degree
            if d > remaining:
                continue
            if d == 1:
                if s is not None and rat >= s:
                    return
                if need_anchor and anchor not in terms and pl > anchor:
                    return
            for k in range(1, remaining // d + 1):
                terms[pl] = k
                yield from rec(j + 1, remaining - k * d, terms, rat + (d == 1))
                del terms[pl]

    yield from rec(0, e, {}, 0)


class _Searcher:
    """Depth-first search for effective divisors with l(D) >= 2.

    Each prefix keeps an echelon form of the canonical vanishing conditions;
    all completions of a prefix by one more place are checked in one batch.
    """

    def __init__(self, curve: CurveOverFp, e: int, budget_divisors=None, deadline=None, collect=False):
        self.curve = curve
        self.e = e
        self.p = curve.p
        self.m = canonical_weight(curve)
        self.g = len(section_basis(curve, self.m))
        self.places = _ordered_places(curve, e)
        self.cache = _cache(curve)
        self.blocks = {}
        self.count = 0
        self.budget = budget_divisors
        self.deadline = deadline
        self.collect = collect
        self.found = []

    def block(self, j, k):
        """Vanishing conditions for multiplicity k at place j, as (k * deg) x g rows."""
        key = (j, k)
        b = self.blocks.get(key)
        if b is None:
            arr = self.cache.digits(self.places[j], self.m, k)
            b = np.ascontiguousarray(arr.reshape(-1, self.g))
            self.blocks[key] = b
        return b

    def _tick(self, n):
        self.count += n
        if self.budget is not None and self.count > self.budget:
            raise BudgetExceeded("divisor budget exhausted")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("wall-clock budget exhausted")

    def run(self, pattern: SupportPattern | None, anchor: Place | None):
        s = None if pattern is None else pattern.s
        ech = linalg.Echelon(self.p, self.g)
        terms = {}
        rat = 0
        start_remaining = self.e
        forbidden = set()
        if pattern is not None and pattern.anchored:
            ai = self.places.index(anchor)
            forbidden.add(ai)
            for k in range(1, self.e + 1):
                terms = {ai: k}
                ech_a = ech.add(self.block(ai, k))
                if self._rec(0, self.e - k, ech_a, terms, 1, s, forbidden):
                    return True
            return False
        return self._rec(0, start_remaining, ech, terms, rat, s, forbidden)

    def _leaf(self, ech, terms, j, k):
        D = Divisor({self.places[i]: c for i, c in terms.items()} | {self.places[j]: k})
        return D

    def _rec(self, i, remaining, ech, terms, rat, s, forbidden) -> bool:
        places = self.places
        n = len(places)
        if remaining == 0:
            if s is None or rat == s:
                self._tick(1)
                if self.e + 1 - ech.rank >= 2:
                    D = Divisor({places[a]: c for a, c in terms.items()})
                    self.found.append(D)
                    return not self.collect
            return False
        t = None if s is None else s - rat
        if t is not None and remaining < t:
            return False
        # batch of one-step completions
        leaves = []
        for j in range(i, n):
            if j in forbidden:
                continue
            d = places[j].degree
            if remaining % d:
                continue
            if d == 1 and t is not None and t != 1:
                continue
            if d > 1 and t is not None and t != 0:
                continue
            leaves.append((j, remaining // d))
        if leaves:
            self._tick(len(leaves))
            need = self.e - 1 - ech.rank   # completions need rank(block mod prefix) <= need
            if need >= remaining:
                hits = list(range(len(leaves)))
            else:
                stack = np.stack([self.block(j, k) for j, k in leaves])
                red = ech.reduce(stack.reshape(-1, self.g)).reshape(stack.shape)
                ranks = linalg.batched_rank(self.p, red)
                hits = [a for a in range(len(leaves)) if ranks[a] <= need]
            for a in hits:
                j, k = leaves[a]
                self.found.append(self._leaf(ech, terms, j, k))
                if not self.collect:
                    return True
        # extensions that leave degree to spare
        for j in range(i, n):
            if j in forbidden:
                continue
            d = places[j].degree
            if d >= remaining:
                continue
            is_rat = d == 1
            if t is not None and is_rat and t == 0:
                break  # remaining places are all rational
            for k in range(1, (remaining - 1) // d + 1):
                left = remaining - k * d
                nt = None if t is None else t - is_rat
                if nt is not None and (left < nt or (nt == 0 and not self._has_nonrational(j + 1, left))):
                    continue
                terms[j] = k
                if self._rec(j + 1, left, ech.add(self.block(j, k)), terms, rat + is_rat, s, forbidden):
                    del terms[j]
                    return True
                del terms[j]
        return False

    def _has_nonrational(self, j, left):
        return j < len(self.places) and self.places[j].degree > 1 if left else True


def _witness(curve, D: Divisor) -> Witness:
    L = rr_space(curve, D)
    if L.dimension < 2:
        raise AssertionError("search claimed l(D) >= 2 but the basis disagrees")
    B = L.denominator % curve.p
    for i in range(L.dimension):
        A = L.numerators[i] % curve.p
        if linalg.rank(curve.F, np.vstack([A, B])) == 2:
            return Witness(D.degree, D, A, B, L.m)
    raise AssertionError("no nonconstant basis function")


def rational_anchor(curve: CurveOverFp) -> Place | None:
    pts = curve.places(1)
    return min(pts) if pts else None


def prove_gonality_lower_bound(curve: CurveOverFp, d: int, max_divisors: int | None = None,
                               max_seconds: float | None = None) -> GonalityVerdict:
    """Show there is no function of degree < d over F_p, or exhibit one."""
    t0 = time.monotonic()
    deadline = None if max_seconds is None else t0 + max_seconds
    stats = SearchStats()
    n = len(curve.places(1))
    anchor = rational_anchor(curve)
    verdict = GonalityVerdict(curve.label, curve.p, "inconclusive", stats=stats)
    try:
        for e in range(2, d):
            curve.places_up_to(e)
            before = stats.divisors
            for pat in support_patterns(n, curve.p, e):
                remaining = None if max_divisors is None else max_divisors - stats.divisors
                srch = _Searcher(curve, e, remaining, deadline)
                try:
                    hit = srch.run(pat, anchor)
                finally:
                    stats.divisors += srch.count
                if hit:
                    w = _witness(curve, srch.found[0])
                    verdict.claim, verdict.bound, verdict.witness = "function_found", e, w
                    return verdict
            stats.per_degree[e] = stats.divisors - before
        verdict.claim, verdict.bound = "proven_lower_bound", d
        return verdict
    except BudgetExceeded as exc:
        verdict.reason = str(exc)
        return verdict
    finally:
        stats.elapsed = time.monotonic() - t0


def find_function_of_degree(curve: CurveOverFp, e: int, max_divisors: int | None = None,
                            max_seconds: float | None = None) -> GonalityVerdict:
    """Scan every effective degree-e divisor for l(D) >= 2."""
    t0 = time.monotonic()
    deadline = None if max_seconds is None else t0 + max_seconds
    stats = SearchStats()
    verdict = GonalityVerdict(curve.label, curve.p, "inconclusive", stats=stats)
    try:
        curve.places_up_to(e)
        srch = _Searcher(curve, e, max_divisors, deadline)
        try:
            hit = srch.run(None, None)
        finally:
            stats.divisors = srch.count
        if hit:
            w = _witness(curve, srch.found[0])
            verdict.claim, verdict.bound, verdict.witness = "function_found", e, w
        else:
            verdict.claim, verdict.bound = "none", e
        return verdict
    except BudgetExceeded as exc:
        verdict.reason = str(exc)
        return verdict
    finally:
        stats.elapsed = time.monotonic() - t0


def effective_divisors_with_pencil(curve: CurveOverFp, e: int, pattern: SupportPattern | None = None,
                                   max_divisors: int | None = None, max_seconds: float | None = None) -> list:
    """All effective degree-e divisors (pattern-restricted if given) with l(D) >= 2."""
    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    curve.places_up_to(e)
    srch = _Searcher(curve, e, max_divisors, deadline, collect=True)
    srch.run(pattern, rational_anchor(curve) if pattern is not None and pattern.anchored else None)
    return srch.found


def count_effective(curve: CurveOverFp, e: int) -> int:
    """Number of effective divisors of degree e, from place counts (generating function)."""
    coeff = [1] + [0] * e
    for d in range(1, e + 1):
        a = len(curve.places(d))
        for _ in range(a):
            for k in range(d, e + 1):
                coeff[k] += coeff[k - d]
    return coeff[e]
