"""Dense linear algebra over a :class:`~x0gonality.ffield.FieldDesc`.

Matrices are 2-d int64 numpy arrays of field elements.  Over a prime field
the row operations are plain modular numpy arithmetic; over extensions they
go through the field's vectorised table arithmetic.
"""
from __future__ import annotations

import numpy as np

from .ffield import FieldDesc, ptrim


def _as(M):
    return np.array(M, dtype=np.int64, copy=True, ndmin=2) if np.size(M) else np.zeros((0, 0), dtype=np.int64)


def rref(F: FieldDesc, M, max_col: int | None = None):
    """Reduced row echelon form.  Returns (R, pivot_columns); zero rows dropped.

    Only columns ``< max_col`` are used as pivots (default: all).
    """
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        A = A.reshape(-1, A.shape[-1] if A.ndim else 0)
    rows, cols = A.shape
    ncol = cols if max_col is None else max_col
    pivots = []
    r = 0
    p = F.p
    prime = F.k == 1
    for c in range(ncol):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        piv = int(A[r, c])
        if prime:
            if piv != 1:
                A[r] = A[r] * pow(piv, p - 2, p) % p
            col = A[:, c].copy()
            col[r] = 0
            nzr = np.nonzero(col)[0]
            if nzr.size:
                A[nzr] = (A[nzr] - col[nzr, None] * A[r][None, :]) % p
        else:
            if piv != 1:
                A[r] = F.vmul(A[r], F.inv(piv))
            col = A[:, c].copy()
            col[r] = 0
            nzr = np.nonzero(col)[0]
            if nzr.size:
                A[nzr] = F.vsub(A[nzr], F.vmul(col[nzr, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: FieldDesc, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def nullspace(F: FieldDesc, M, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of {v : M v = 0}."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1] if M.ndim == 2 and M.size else (ncols or 0)
    if M.size == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(F, M)
    free = [c for c in range(n) if c not in piv]
    out = np.zeros((len(free), n), dtype=np.int64)
    for j, f in enumerate(free):
        out[j, f] = 1
        for i, pc in enumerate(piv):
            out[j, pc] = F.neg(int(R[i, f])) if F.k > 1 else (-int(R[i, f])) % F.p
    return out


def left_kernel(F: FieldDesc, M) -> np.ndarray:
    """Basis (as rows) of {v : v M = 0}."""
    M = np.asarray(M, dtype=np.int64)
    return nullspace(F, M.T, ncols=M.shape[0])


def solve(F: FieldDesc, A, B):
    """One solution X of A X = B (B a vector or matrix), or None if inconsistent."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    vec = B.ndim == 1
    if vec:
        B = B[:, None]
    n = A.shape[1]
    aug = np.concatenate([A, B], axis=1)
    R, piv = rref(F, aug, max_col=n)
    # inconsistent iff the augmented matrix has larger rank
    if rank(F, aug) > len(piv):
        return None
    X = np.zeros((n, B.shape[1]), dtype=np.int64)
    for i, c in enumerate(piv):
        X[c] = R[i, n:]
    return X[:, 0] if vec else X


def inverse(F: FieldDesc, A):
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    R, piv = rref(F, np.concatenate([A, np.eye(n, dtype=np.int64)], axis=1), max_col=n)
    if piv != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return R[:, n:]


def matmul(F: FieldDesc, A, B):
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if F.k == 1:
        if A.shape[1] * (F.p - 1) ** 2 < (1 << 62):
            return (A @ B) % F.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        out = F.vadd(out, F.vmul(A[:, j][:, None], B[j][None, :]))
    return out


def charpoly(F: FieldDesc, M) -> list:
    """Characteristic polynomial det(xI - M), low to high, via Hessenberg reduction."""
    H = np.array(M, dtype=np.int64, copy=True)
    n = H.shape[0]
    vadd, vsub, vmul = F.vadd, F.vsub, F.vmul
    for m in range(1, n - 1):
        nz = np.nonzero(H[m:, m - 1])[0]
        if nz.size == 0:
            continue
        i = m + nz[0]
        if i != m:
            H[[i, m]] = H[[m, i]]
            H[:, [i, m]] = H[:, [m, i]]
        inv = F.inv(int(H[m, m - 1]))
        below = H[m + 1:, m - 1]
        idx = np.nonzero(below)[0]
        if idx.size == 0:
            continue
        rows = m + 1 + idx
        u = vmul(H[rows, m - 1], inv)  # multipliers
        # row_i -= u_i row_m ; then col_m += sum u_i col_i
        H[rows] = vsub(H[rows], vmul(u[:, None], H[m][None, :]))
        H[:, m] = vadd(H[:, m], F.vsum(vmul(H[:, rows], u[None, :]), axis=1))
    # recurrence for the characteristic polynomials of leading blocks:
    # p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_i
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    sub = [int(H[j, j - 1]) for j in range(1, n)]
    for k in range(n):
        pk = polys[k]
        nxt = np.zeros(n + 1, dtype=np.int64)
        nxt[1:] = pk[:-1]
        nxt = vsub(nxt, vmul(pk, int(H[k, k])))
        if k:
            cs = np.zeros(k, dtype=np.int64)
            prod = 1
            for i in range(k - 1, -1, -1):
                prod = F.mul(prod, sub[i])
                if prod == 0:
                    break
                cs[i] = F.mul(int(H[i, k]), prod)
            if cs.any():
                nxt = vsub(nxt, F.vsum(vmul(cs[:, None], polys[:k]), axis=0))
        polys[k + 1] = nxt
    return ptrim([int(c) for c in polys[n]])


def _padd(F, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return [int(x) for x in F.vadd(np.array(a), np.array(b))]


def _psub(F, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return [int(x) for x in F.vsub(np.array(a), np.array(b))]


def _pscale(F, c, a):
    return [int(x) for x in F.vmul(np.array(a, dtype=np.int64), c)]


class Echelon:
    """Incrementally maintained row echelon basis over a prime field.

    ``add`` returns a new object; the old one stays valid, which is what a
    depth-first divisor search wants.
    """

    __slots__ = ("p", "rows", "pivots", "ncols")

    def __init__(self, p: int, ncols: int, rows=None, pivots=()):
        self.p = p
        self.ncols = ncols
        self.rows = rows if rows is not None else np.zeros((0, ncols), dtype=np.int64)
        self.pivots = tuple(pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, V):
        """Reduce the rows of V against the basis."""
        V = np.array(V, dtype=np.int64, copy=True) % self.p
        if not self.pivots:
            return V
        # rows are fully reduced with unit pivots, so one product clears every pivot column
        return (V - V[:, list(self.pivots)] @ self.rows) % self.p

    def add(self, V) -> "Echelon":
        V = self.reduce(V)
        rows = list(self.rows)
        pivots = list(self.pivots)
        p = self.p
        for v in V:
            if len(rows) > self.rank:
                v = (v - v[pivots[self.rank:]] @ np.array(rows[self.rank:])) % p
            nz = np.nonzero(v)[0]
            if nz.size == 0:
                continue
            c = int(nz[0])
            v = v * pow(int(v[c]), p - 2, p) % p
            rows = [(r - r[c] * v) % p if r[c] else r for r in rows]
            rows.append(v)
            pivots.append(c)
            if len(pivots) == self.ncols:
                break
        arr = np.array(rows, dtype=np.int64).reshape(len(rows), self.ncols)
        return Echelon(p, self.ncols, arr, pivots)


def batched_rank(p: int, A) -> np.ndarray:
    """Ranks over F_p of a stack of matrices, shape (b, r, c) -> (b,)."""
    A = np.array(A, dtype=np.int64, copy=True) % p
    b, r, c = A.shape
    ranks = np.zeros(b, dtype=np.int64)
    used = np.zeros((b, r), dtype=bool)
    inv = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int64)
    ar = np.arange(b)
    for col in range(c):
        if (ranks == r).all():
            break
        cand = (A[:, :, col] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        idx = ar[has]
        piv = cand[has].argmax(axis=1)
        prow = A[idx, piv] * inv[A[idx, piv, col]][:, None] % p
        sub = A[idx]
        sub = (sub - sub[:, :, col][:, :, None] * prow[:, None, :]) % p
        sub[np.arange(len(idx)), piv] = prow
        A[idx] = sub
        used[idx, piv] = True
        ranks[idx] += 1
    return ranks
