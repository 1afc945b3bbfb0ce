"""Regenerate the curve fixtures shipped in src/x0gonality/fixtures.

Development tool only: needs the ``cypari`` package, which the library
itself never imports.  Every model is built from weight-2 cusp forms:

* canonical models use an integral echelon basis f_1, ..., f_g of
  S_2(Gamma_0(N)) (or of its w_d = +1 part for a quotient), the coordinate
  x_i being f_i; relations are integral kernels of product q-expansions,
  taken past the Sturm bound of the relevant weight;
* genus-2 curves get the model y^2 = F(x) with x = f_1/f_2 and
  y = q (dx/dq) / f_2, then a change of variables that improves it at 2.

Alongside the fixtures it writes tests/data/hecke_counts.json with
#X(F_{p^k}) computed from Hecke traces, an oracle that shares no code with
the library's point enumeration.

Usage: python3 tools/make_fixtures.py [--counts-only] [label-or-N ...]
"""
from __future__ import annotations

import itertools
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from cypari import pari

pari.allocatemem(4 * 10**9)

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "src" / "x0gonality" / "fixtures"
COUNTS = ROOT / "tests" / "data" / "hecke_counts.json"

PRIMES = [2, 3, 5, 7, 11, 13]


def psi(N):
    out = N
    for q in pari(f"factor({N})[,1]~"):
        q = int(q)
        out = out * (q + 1) // q
    return out


def to_int_rows(M):
    """PARI matrix (columns = forms) -> list of integer rows, one per form."""
    rows, cols = (int(x) for x in pari("matsize")(M))
    return [[int(M[i, j]) for i in range(rows)] for j in range(cols)]


def echelon(rows):
    """Integer row echelon form by leading q-exponent (unimodular ops only)."""
    rows = [list(r) for r in rows]
    n = len(rows[0])
    out = []
    col = 0
    while rows and col < n:
        nz = [r for r in rows if r[col] != 0]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                c = r[col] // piv[col]
                for k in range(n):
                    r[k] -= c * piv[k]
            nz = [r for r in nz if r[col] != 0]
            rows = [r for r in rows if any(r)]
        piv = nz[0]
        if piv[col] < 0:
            for k in range(n):
                piv[k] = -piv[k]
        rows = [r for r in rows if r is not piv]
        for r in out:
            c = r[col] // piv[col]
            if c:
                for k in range(n):
                    r[k] -= c * piv[k]
        out.append(piv)
        col += 1
    return out


def series_mul(a, b, L):
    out = [0] * (L + 1)
    for i, x in enumerate(a[: L + 1]):
        if x:
            for j in range(0, L + 1 - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def monomials(g, m):
    return list(itertools.combinations_with_replacement(range(g), m))


def mono_series(forms, mons, L, cache):
    full = len(forms[0]) - 1
    out = []
    for mon in mons:
        if mon not in cache:
            if len(mon) == 1:
                cache[mon] = forms[mon[0]]
            else:
                cache[mon] = series_mul(mono_series(forms, [mon[:-1]], full, cache)[0], forms[mon[-1]], full)
        out.append(cache[mon][: L + 1])
    return out


def int_kernel(vectors):
    """Integral kernel of the linear map sending basis vector i to vectors[i]."""
    A = pari.matrix(len(vectors[0]), len(vectors), [v[i] for i in range(len(vectors[0])) for v in vectors])
    K = pari("matkerint")(A)
    return to_int_rows(K)


def rank_mod(vectors, p=1000003):
    if not vectors:
        return 0
    A = pari.matrix(len(vectors), len(vectors[0]), [x for v in vectors for x in v])
    return int(pari("(A,p)->matrank(A*Mod(1,p))")(A, p))


def poly_string(coeffs, mons, var="x"):
    terms = []
    for c, mon in zip(coeffs, mons):
        if c == 0:
            continue
        parts = []
        for i in sorted(set(mon)):
            e = mon.count(i)
            parts.append(f"{var}{i}" + (f"^{e}" if e > 1 else ""))
        body = "*".join(parts)
        if c == 1:
            t = body
        elif c == -1:
            t = "-" + body
        else:
            t = f"{c}*{body}"
        terms.append(t)
    s = " + ".join(terms).replace("+ -", "- ")
    return s


def mul_poly_by_var(coeffs, mons, i, target):
    idx = {m: k for k, m in enumerate(target)}
    out = [0] * len(target)
    for c, mon in zip(coeffs, mons):
        if c:
            out[idx[tuple(sorted(mon + (i,)))]] += c
    return out


def primitive(v):
    g = 0
    for x in v:
        g = math.gcd(g, x)
    if g == 0:
        return v
    v = [x // g for x in v]
    for x in v:
        if x:
            if x < 0:
                v = [-y for y in v]
            break
    return v


def rat_matrix(M):
    rows, cols = (int(x) for x in pari("matsize")(M))
    return [[Fraction(int(pari("numerator")(M[i, j])), int(pari("denominator")(M[i, j]))) for j in range(cols)]
            for i in range(rows)]


def mat_inv(A):
    n = len(A)
    M = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(A)]
    for c in range(n):
        piv = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [r[n:] for r in M]


def mat_mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def solve_coords(basis_rows, target, L):
    """Coefficients c with target = sum c_i basis_i (basis in echelon form)."""
    t = [Fraction(x) for x in target[: L + 1]]
    out = []
    for r in basis_rows:
        lead = next(k for k, x in enumerate(r) if x)
        c = t[lead] / r[lead]
        out.append(c)
        t = [x - c * y for x, y in zip(t, r)]
    assert all(x == 0 for x in t), "not in span"
    return out


class Space:
    """Integral echelon basis of S_2(Gamma_0(N)) or an Atkin-Lehner eigenspace, with operators."""

    def __init__(self, N, L, plus=()):
        self.N = N
        self.L = L
        self.mf = pari(f"mfinit([{N},2],1)")
        self.full_dim = int(pari("mfdim")(self.mf))
        M = pari("mfcoefs")(self.mf, L)
        B = rat_matrix(M)  # (L+1) x dim, columns = mfbasis
        self.B = B
        # subspace = intersection of +1 eigenspaces
        sub = [[Fraction(int(i == j)) for j in range(self.full_dim)] for i in range(self.full_dim)]  # columns
        for d in plus:
            W = self.atkin_matrix(d)
            # keep vectors v (in mfbasis coords) with W v = v: solve on current subspace
            S = [[sub[i][j] for i in range(self.full_dim)] for j in range(len(sub[0]))]  # list of columns
            imgs = [[sum(W[i][k] * s[k] for k in range(self.full_dim)) - s[i] for i in range(self.full_dim)] for s in S]
            # kernel of combination coefficients
            K = _rat_kernel(imgs)
            newcols = [[sum(c[j] * S[j][i] for j in range(len(S))) for i in range(self.full_dim)] for c in K]
            sub = [[col[i] for col in newcols] for i in range(self.full_dim)]
        self.sub = sub
        cols = len(sub[0])
        qrows = []
        for j in range(cols):
            qrows.append([sum(B[n][k] * sub[k][j] for k in range(self.full_dim)) for n in range(L + 1)])
        # saturate: Q-span intersected with Z^(L+1)
        den = 1
        for r in qrows:
            for x in r:
                den = den * x.denominator // math.gcd(den, x.denominator)
        Zc = pari.matrix(L + 1, cols, [int(qrows[j][n] * den) for n in range(L + 1) for j in range(cols)])
        Zs = pari("matrixqz")(Zc, -2)
        self.rows = echelon(to_int_rows(Zs))
        self.g = len(self.rows)

    def atkin_matrix(self, d):
        at = pari("mfatkininit")(self.mf, d)
        M = rat_matrix(at[1])
        return M

    def operator_on_rows(self, Mfull):
        """Matrix A (columns = images) of an operator given on mfbasis, in echelon coordinates."""
        B = self.B
        out_cols = []
        for r in self.rows:
            c_full = _coords_in_mfbasis(B, r, self.L)
            img = [sum(Mfull[i][k] * c_full[k] for k in range(self.full_dim)) for i in range(self.full_dim)]
            qimg = [sum(B[n][k] * img[k] for k in range(self.full_dim)) for n in range(self.L + 1)]
            out_cols.append(solve_coords(self.rows, qimg, self.L))
        # A[i][j] = coefficient of row i in image of row j
        return [[out_cols[j][i] for j in range(self.g)] for i in range(self.g)]

    def hecke(self, p):
        return self.operator_on_rows(rat_matrix(pari("mfheckemat")(self.mf, p)))


_B_SOLVE_CACHE = {}


def _coords_in_mfbasis(B, target, L):
    key = id(B)
    if key not in _B_SOLVE_CACHE:
        # pick independent rows of B to solve square system
        dim = len(B[0])
        chosen = []
        mat = []
        for n in range(L + 1):
            trial = mat + [B[n]]
            if _rank(trial) > len(mat):
                mat = trial
                chosen.append(n)
            if len(chosen) == dim:
                break
        _B_SOLVE_CACHE[key] = (chosen, mat_inv(mat))
    chosen, inv = _B_SOLVE_CACHE[key]
    rhs = [Fraction(target[n]) for n in chosen]
    return [sum(inv[i][k] * rhs[k] for k in range(len(rhs))) for i in range(len(rhs))]


def _rank(rows):
    M = [list(r) for r in rows]
    rank = 0
    ncols = len(M[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                f = M[r][c] / M[rank][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def _rat_kernel(vectors):
    """Kernel of c -> sum c_j vectors[j] over Q (vectors as lists)."""
    n = len(vectors)
    m = len(vectors[0])
    # matrix m x n
    M = [[vectors[j][i] for j in range(n)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -M[i][f]
        out.append(v)
    return out


def involution_matrix(space, d):
    A = space.operator_on_rows(space.atkin_matrix(d))
    At = [[A[j][i] for j in range(space.g)] for i in range(space.g)]
    den = 1
    for r in At:
        for x in r:
            den = den * x.denominator // math.gcd(den, x.denominator)
    Mi = [[int(x * den) for x in r] for r in At]
    g = 0
    for r in Mi:
        for x in r:
            g = math.gcd(g, x)
    return [[x // g for x in r] for r in Mi]


def point_counts(space, N, primes, kmax=4):
    """#X(F_{p^k}) = p^k + 1 - tr(alpha^k + conj) from the Hecke matrix of T_p."""
    out = {}
    for p in primes:
        if N % p == 0:
            continue
        T = space.hecke(p)
        g = space.g
        I = [[Fraction(int(i == j)) for j in range(g)] for i in range(g)]
        s_prev = [[2 * x for x in r] for r in I]
        s_cur = T
        counts = []
        for k in range(1, kmax + 1):
            tr = sum(s_cur[i][i] for i in range(g))
            counts.append(int(p**k + 1 - tr))
            s_next = [[a - p * b for a, b in zip(ra, rb)] for ra, rb in zip(mat_mul(T, s_cur), s_prev)]
            s_prev, s_cur = s_cur, s_next
        out[str(p)] = counts
    return out


def canonical_fixture(label, N, plus=(), involutions=None, extra_cubic_check=True):
    ps = psi(N)
    g_guess = None
    # precision past the Sturm bound for weight 6 (cubics) or 8 (plane quartic)
    L = ps // 2 + 20
    sp = Space(N, ps * 2 // 3 + 20 if True else L, plus)
    g = sp.g
    L = sp.L
    forms = sp.rows
    cache = {}
    eqs = []
    if g == 3:
        mons = monomials(3, 4)
        K = int_kernel(mono_series(forms, mons, min(L, 4 * ps // 6 + 12), cache))
        assert len(K) == 1, f"{label}: expected one quartic, got {len(K)}"
        eqs = [poly_string(primitive(K[0]), mons)]
        kind = "plane"
    else:
        mons2 = monomials(g, 2)
        Lq = 2 * ps // 6 + 12
        K2 = [primitive(v) for v in int_kernel(mono_series(forms, mons2, Lq, cache))]
        expected = (g - 2) * (g - 3) // 2
        assert len(K2) == expected, f"{label}: {len(K2)} quadrics, expected {expected} (hyperelliptic?)"
        eqs = [poly_string(v, mons2) for v in K2]
        mons3 = monomials(g, 3)
        span = [mul_poly_by_var(q, mons2, i, mons3) for q in K2 for i in range(g)]
        need = math.comb(g + 2, 3) - (5 * g - 5)
        # too large to rank here; the library's Jacobian check at every lifted
        # point fails if the quadrics only cut out a surface
        r = rank_mod(span) if len(span) * len(mons3) < 5 * 10**6 else need
        if r < need:
            Lc = 3 * ps // 6 + 12
            K3 = [primitive(v) for v in int_kernel(mono_series(forms, mons3, Lc, cache))]
            assert len(K3) == need
            K3.sort(key=lambda v: (sum(abs(x) for x in v), v))
            for v in K3:
                if rank_mod(span + [v]) > r:
                    span.append(v)
                    r += 1
                    eqs.append(poly_string(v, mons3))
                if r == need:
                    break
        kind = "canonical"
    inf = primitive([r[next(k for k, x in enumerate(forms[0]) if x)] for r in forms])
    invs = {}
    for name, d in (involutions or {}).items():
        invs[name] = involution_matrix(sp, d)
    marked = {"inf": inf}
    if f"w{N}" in invs:
        W = invs[f"w{N}"]
        zero = primitive([sum(W[i][j] * inf[j] for j in range(g)) for i in range(g)])
        marked["0"] = zero
    good = []
    for p in PRIMES + [17, 19]:
        if N % p == 0:
            continue
        # the mod-p products must keep the characteristic-zero rank
        mons2 = monomials(g, 2)
        vecs = mono_series(forms, mons2, 2 * ps // 6 + 12, cache)
        if rank_mod(vecs, p) != rank_mod(vecs):
            continue
        good.append(p)
    fx = {
        "label": label,
        "N": N,
        "genus": g,
        "model_kind": kind,
        "ambient_dim": g - 1,
        "equations": eqs,
        "marked_points": marked,
        "involutions": invs,
        "good_primes": good,
    }
    counts = point_counts(sp, N, [p for p in good if p <= 13])
    return fx, counts


def genus2_fixture(label, N, plus=(), involutions=None):
    ps = psi(N)
    sp = Space(N, ps + 40, plus)
    assert sp.g == 2
    L = sp.L
    f1, f2 = sp.rows  # f1 = q + ..., f2 = q^2 + ...
    # Laurent series with rational coefficients: x = f1/f2, y = q x'/f2
    prec = L - 10
    x = _laurent_div(f1, f2, prec)  # (valuation, coeffs)
    dx = _laurent_qderiv(x)
    y = _laurent_div_l(dx, (2, [Fraction(c) for c in f2[2:]]), prec)
    # y^2 = sum_{i<=6} c_i x^i
    powers = [(0, [Fraction(1)] + [Fraction(0)] * prec)]
    for i in range(6):
        powers.append(_laurent_mul(powers[-1], x, prec))
    y2 = _laurent_mul(y, y, prec)
    lo = -6
    hi = 20
    def coeffs_of(s):
        v, c = s
        return [c[n - v] if 0 <= n - v < len(c) else Fraction(0) for n in range(lo, hi)]
    cols = [coeffs_of(s) for s in powers]
    tgt = coeffs_of(y2)
    sol = _solve_least(cols, tgt)
    F = [int(c) for c in sol]
    assert all(Fraction(c) == s for c, s in zip(F, sol)), sol
    h, Fm = improve_at_2(F)
    return {
        "label": label,
        "N": N,
        "genus": 2,
        "model_kind": "hyperelliptic",
        "ambient_dim": 2,
        "equations": [_upoly(h), _upoly(Fm)],
        "marked_points": {},
        "involutions": {},
        "good_primes": [],
        "_raw": F,
    }, sp


def improve_at_2(F):
    """Find y = 2Y + h(x) with F - h^2 divisible by 4 (coefficients of h in {0,1})."""
    for bits in itertools.product([0, 1], repeat=4):
        h = list(bits)
        hh = [0] * 7
        for i, a in enumerate(h):
            for j, b in enumerate(h):
                hh[i + j] += a * b
        diff = [f - e for f, e in zip(F + [0] * (7 - len(F)), hh)]
        if all(d % 4 == 0 for d in diff):
            # 4Y^2 + 4hY + h^2 = F  ->  Y^2 + hY = (F - h^2)/4
            return h, [d // 4 for d in diff]
    return [0], F


def _upoly(c):
    terms = []
    for i, a in enumerate(c):
        if a == 0:
            continue
        mon = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if i == 0:
            t = str(a)
        elif a == 1:
            t = mon
        elif a == -1:
            t = "-" + mon
        else:
            t = f"{a}*{mon}"
        terms.append(t)
    return (" + ".join(terms) or "0").replace("+ -", "- ")


def _laurent_div(a, b, prec):
    va = next(k for k, x in enumerate(a) if x)
    vb = next(k for k, x in enumerate(b) if x)
    return _laurent_div_l((va, [Fraction(x) for x in a[va:]]), (vb, [Fraction(x) for x in b[vb:]]), prec)


def _laurent_div_l(a, b, prec):
    va, ca = a
    vb, cb = b
    out = []
    rem = list(ca[:prec]) + [Fraction(0)] * max(0, prec - len(ca))
    for n in range(prec):
        c = rem[n] / cb[0]
        out.append(c)
        for k in range(1, prec - n):
            if k < len(cb):
                rem[n + k] -= c * cb[k]
    return (va - vb, out)


def _laurent_mul(a, b, prec):
    va, ca = a
    vb, cb = b
    out = [Fraction(0)] * prec
    for i, x in enumerate(ca[:prec]):
        if x:
            for j in range(prec - i):
                if j < len(cb):
                    out[i + j] += x * cb[j]
    return (va + vb, out)


def _laurent_qderiv(a):
    v, c = a
    return (v, [(v + k) * x for k, x in enumerate(c)])


def _solve_least(cols, tgt):
    # exact solve of overdetermined consistent system
    n = len(cols)
    rows = [[cols[j][i] for j in range(n)] + [tgt[i]] for i in range(len(tgt))]
    M = rows
    r = 0
    piv = []
    for c in range(n):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv.append(c)
        r += 1
    for i in range(r, len(M)):
        assert M[i][n] == 0, "inconsistent genus-2 relation"
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv):
        sol[c] = M[i][n]
    return sol


CANONICAL = {
    # label: (N, plus, involutions)
    "X0(34)": (34, (), {"w34": 34}),
    "X0(38)": (38, (), {"w38": 38, "w2": 2, "w19": 19}),
    "X0(43)": (43, (), {"w43": 43}),
    "X0(44)": (44, (), {"w44": 44}),
    "X0(45)": (45, (), {"w45": 45}),
    "X0(53)": (53, (), {"w53": 53}),
    "X0(61)": (61, (), {"w61": 61}),
    "X0(64)": (64, (), {"w64": 64}),
    "X0(93)": (93, (), {"w93": 93}),
    "X0(97)": (97, (), {"w97": 97}),
    "X0(97)/w97": (97, (97,), {}),
    "X0(99)": (99, (), {"w99": 99}),
    "X0(109)": (109, (), {"w109": 109}),
    "X0(113)": (113, (), {"w113": 113}),
    "X0(130)": (130, (), {"w130": 130}),
    "X0(133)": (133, (), {"w133": 133, "w7": 7, "w19": 19}),
    "X0(182)": (182, (), {"w182": 182}),
    "X0(216)": (216, (), {"w216": 216}),
    "X0(110)/w55": (110, (55,), {"w110": 110}),
    "X0(188)/w47": (188, (47,), {"w188": 188}),
}

GENUS2 = {
    "X0(23)": (23, ()),
    "X0(29)": (29, ()),
    "X0(31)": (31, ()),
    "X0(37)": (37, ()),
    "X0(67)/w67": (67, (67,)),
}


def fname(label):
    return label.replace("(", "_").replace(")", "").replace("/", "_") + ".json"


def _hyper_counts(sp, N, primes):
    return point_counts(sp, N, primes)


def refresh_counts(wanted):
    """Recompute oracle counts for the shipped fixtures' primes, leaving the fixtures alone."""
    counts = json.loads(COUNTS.read_text()) if COUNTS.exists() else {}
    table = {**{k: (v[0], v[1]) for k, v in CANONICAL.items()}, **GENUS2}
    for label, (N, plus) in table.items():
        if wanted and label not in wanted and str(N) not in wanted:
            continue
        fx = json.loads((FIXTURES / fname(label)).read_text())
        sp = Space(N, psi(N) + 40, plus)
        counts[label] = point_counts(sp, N, fx["good_primes"])
        print(label, counts[label], flush=True)
    COUNTS.write_text(json.dumps(counts, indent=1, sort_keys=True) + "\n")


def main(argv):
    if argv[:1] == ["--counts-only"]:
        return refresh_counts(set(argv[1:]))
    wanted = set(argv)
    counts = json.loads(COUNTS.read_text()) if COUNTS.exists() else {}
    for label, (N, plus, invs) in CANONICAL.items():
        if wanted and label not in wanted and str(N) not in wanted:
            continue
        fx, c = canonical_fixture(label, N, plus, invs)
        if label == "X0(97)":
            fx["torsion"] = {
                "generators": ["0 - inf"],
                "group_shape": [8],
                "multiplier": 1,
                "rank_zero_source": "Mazur 1977, Theorem 4 (J0(97)^- (Q) cyclic of order 8 generated by [0 - inf])",
            }
        (FIXTURES / fname(label)).write_text(json.dumps(fx, indent=1) + "\n")
        counts[label] = c
        print(label, fx["genus"], fx["model_kind"], len(fx["equations"]), fx["good_primes"], flush=True)
    for label, (N, plus) in GENUS2.items():
        if wanted and label not in wanted and str(N) not in wanted:
            continue
        fx, sp = genus2_fixture(label, N, plus)
        raw = fx.pop("_raw")
        disc = int(pari("(f)->poldisc(Pol(Vecrev(f)))")(raw))
        good = [p for p in PRIMES + [17, 19] if N % p and (disc % p if p != 2 else None)]
        fx["good_primes"] = [p for p in PRIMES + [17, 19] if N % p]
        (FIXTURES / fname(label)).write_text(json.dumps(fx, indent=1) + "\n")
        counts[label] = point_counts(sp, N, [p for p in fx["good_primes"] if p <= 13])
        print(label, fx["equations"], fx["good_primes"], disc, flush=True)
    COUNTS.write_text(json.dumps(counts, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main(sys.argv[1:])
