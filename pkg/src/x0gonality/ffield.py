"""Finite fields F_{p^k} for small p and k, plus univariate polynomials over them.

Elements are plain Python ints in ``range(q)``: the base-p digits of an
element are the coefficients of its polynomial representative, lowest
degree first.  So ``a = sum(c_i * p**i)`` stands for ``sum(c_i * x**i)``
modulo the field's defining polynomial.  Arithmetic lives on the
:class:`FieldDesc` object, with scalar methods (``add``, ``mul``, ...) and
numpy-vectorised ones (``vadd``, ``vmul``, ...) that the linear algebra
uses.  :class:`FFElement` wraps an int with operator overloading for
interactive use and tests.

Polynomials over a field are lists of ints, lowest coefficient first, with
no trailing zeros (the zero polynomial is ``[]``).
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field

import numpy as np

MAX_P = 13
MAX_K = 12
# Full q x q addition/multiplication tables below this size.
FULL_TABLE_LIMIT = 2500
# Log/antilog tables below this size; above it, plain polynomial arithmetic.
LOG_TABLE_LIMIT = 1 << 21


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- arithmetic on coefficient lists over the prime field (used to set up fields)

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mulmod(a, b, mod, p):
    """Product of two coefficient lists modulo a monic ``mod``."""
    k = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i] % p
        if c:
            for j in range(k + 1):
                out[i - k + j] -= c * mod[j]
        out[i] = 0
    return _fp_trim([x % p for x in out[:k]])


def _fp_powmod(a, e, mod, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, mod, p)
        base = _fp_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _fp_gcd(a, b, p):
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        inv = pow(b[-1], p - 2, p)
        # remainder of a by b
        a = list(a)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            s = len(a) - len(b)
            for j, y in enumerate(b):
                a[s + j] = (a[s + j] - c * y) % p
            _fp_trim(a)
            if not a:
                break
        a, b = b, a
    return a


def _is_irreducible_fp(f, p):
    """Rabin's test for a monic f over F_p."""
    n = len(f) - 1
    x = [0, 1]
    for r in _prime_factors(n):
        h = _fp_powmod(x, p ** (n // r), f, p)
        h = list(h) + [0] * max(0, 2 - len(h))
        h[1] = (h[1] - 1) % p
        if len(_fp_gcd(f, _fp_trim(h), p)) != 1:
            return False
    h = _fp_powmod(x, p**n, f, p)
    return _fp_trim(list(h)) == [0, 1]


@functools.lru_cache(maxsize=None)
def least_irreducible(p: int, k: int) -> tuple:
    """Least monic irreducible of degree k over F_p, ordered by its integer encoding."""
    if k == 1:
        return (0, 1)
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        if low[0] == 0:
            continue
        f = low + [1]
        if _is_irreducible_fp(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


class FieldError(ValueError):
    pass


@dataclass(eq=False)
class FieldDesc:
    """The field F_{p^k} with the given defining polynomial (coefficients low to high)."""

    p: int
    k: int
    modulus: tuple
    q: int = field(init=False)

    def __post_init__(self):
        self.q = self.p**self.k
        self._pw = np.array([self.p**i for i in range(self.k)], dtype=np.int64)
        self._tables = None

    # identity is (p, k): make_extension returns cached instances
    def __eq__(self, other):
        return isinstance(other, FieldDesc) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"F_{self.p}^{self.k}" if self.k > 1 else f"F_{self.p}"

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    # --- digit conversion
    def to_coeffs(self, a: int) -> list:
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def from_coeffs(self, c) -> int:
        c = list(c)
        c_red = _fp_trim([x % self.p for x in c])
        if len(c_red) > self.k:
            c_red = _fp_mulmod(c_red, [1], list(self.modulus), self.p)
        return sum(int(x) * self.p**i for i, x in enumerate(c_red))

    def digits(self, arr) -> np.ndarray:
        """Base-p digits of an int array, shape arr.shape + (k,)."""
        arr = np.asarray(arr, dtype=np.int64)
        return (arr[..., None] // self._pw) % self.p

    def from_digits(self, d) -> np.ndarray:
        return (np.asarray(d, dtype=np.int64) % self.p) @ self._pw

    # --- table setup
    def _build(self):
        if self._tables is not None:
            return self._tables
        t = {}
        q, p = self.q, self.p
        self._tables = {"kind": "poly"}  # placeholder while building
        if self.k == 1:
            t["kind"] = "prime"
        elif q <= LOG_TABLE_LIMIT:
            gen = self._find_generator()
            exp = np.zeros(q - 1, dtype=np.int64)
            # powers of gen, computed blockwise with a linear "multiply by c" map
            block = min(q - 1, 256)
            cur = 1
            for i in range(block):
                exp[i] = cur
                cur = self._poly_mul(cur, gen)
            step = self._poly_pow(gen, block)
            mstep = self._mul_matrix(step)
            i = block
            while i < q - 1:
                n = min(block, q - 1 - i)
                prev = exp[i - block:i - block + n]
                exp[i:i + n] = self.from_digits(self.digits(prev) @ mstep.T)
                i += n
            log = np.full(q, -1, dtype=np.int64)
            log[exp] = np.arange(q - 1, dtype=np.int64)
            if len(set(exp.tolist())) != q - 1:
                raise AssertionError("generator search failed")
            t["exp"], t["log"], t["gen"] = exp, log, gen
            # Zech table: log(1 + g^n)
            one_plus = self.from_digits(self.digits(exp) + self.digits(np.ones(q - 1, dtype=np.int64)))
            t["zech"] = log[one_plus]
            if q <= FULL_TABLE_LIMIT:
                a = np.arange(q, dtype=np.int64)
                da = self.digits(a)
                add = self.from_digits(da[:, None, :] + da[None, :, :])
                la = log
                mul = np.zeros((q, q), dtype=np.int64)
                nz = a[1:]
                mul[1:, 1:] = exp[(la[nz][:, None] + la[nz][None, :]) % (q - 1)]
                neg = self.from_digits(-da)
                t["add"] = add.astype(np.int32)
                t["mul"] = mul.astype(np.int32)
                t["neg"] = neg
                t["kind"] = "full"
            else:
                t["neg"] = None
                t["kind"] = "log"
        else:
            t["kind"] = "poly"
        self._tables = t
        return t

    def _mul_matrix(self, c):
        """k x k matrix over F_p of multiplication by c on digit vectors (columns = images)."""
        cols = [self.to_coeffs(self._poly_mul(c, self.p**i)) for i in range(self.k)]
        return np.array(cols, dtype=np.int64).T

    def _poly_mul(self, a, b):
        return self.from_coeffs(_fp_mulmod(self.to_coeffs(a), self.to_coeffs(b), list(self.modulus), self.p))

    def _poly_pow(self, a, e):
        return self.from_coeffs(_fp_powmod(self.to_coeffs(a), e, list(self.modulus), self.p))

    def _find_generator(self):
        q = self.q
        fac = _prime_factors(q - 1)
        for a in range(2 if self.k == 1 else self.p, q):
            if all(self._poly_pow(a, (q - 1) // r) != 1 for r in fac):
                return a
        raise AssertionError("no generator")

    # --- scalar arithmetic
    def _combine(self, a: int, b: int, sign: int) -> int:
        p, out, pw = self.p, 0, 1
        for _ in range(self.k):
            out += ((a % p + sign * (b % p)) % p) * pw
            a //= p
            b //= p
            pw *= p
        return out

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        t = self._build()
        if t["kind"] == "full":
            return int(t["add"][a, b])
        return self._combine(a, b, 1)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self._combine(0, a, -1)

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self._combine(a, b, -1)

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        t = self._build()
        if t["kind"] == "full":
            return int(t["mul"][a, b])
        if t["kind"] == "log":
            return int(t["exp"][(t["log"][a] + t["log"][b]) % (self.q - 1)])
        return self._poly_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        t = self._build()
        if t["kind"] in ("full", "log"):
            return int(t["exp"][(-t["log"][a]) % (self.q - 1)])
        return self._poly_pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.k == 1:
            return pow(a, e, self.p)
        t = self._build()
        if t["kind"] in ("full", "log"):
            return int(t["exp"][(t["log"][a] * (e % (self.q - 1))) % (self.q - 1)])
        return self._poly_pow(a, e % (self.q - 1))

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p ** (times % self.k)) if self.k > 1 else a

    def generator(self) -> int:
        """A fixed primitive element."""
        if self.k == 1:
            return self._find_generator() if self.q > 2 else 1
        t = self._build()
        return t["gen"] if "gen" in t else self._find_generator()

    def order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        for r in _prime_factors(self.q - 1):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.q)

    def degree_of(self, a: int) -> int:
        """Degree over F_p of the subfield generated by a."""
        for d in _divisors(self.k):
            if self.pow(a, self.p**d) == a:
                return d
        return self.k

    # --- vectorised arithmetic on int64 arrays
    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        t = self._build()
        if t["kind"] == "full":
            return t["add"][a, b].astype(np.int64)
        return self.from_digits(self.digits(a) + self.digits(b))

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        t = self._build()
        if t["kind"] == "full":
            return t["neg"][a]
        return self.from_digits(-self.digits(a))

    def vsub(self, a, b):
        if self.k == 1:
            return (np.asarray(a, dtype=np.int64) - np.asarray(b, dtype=np.int64)) % self.p
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a * b) % self.p
        t = self._build()
        if t["kind"] == "full":
            return t["mul"][a, b].astype(np.int64)
        if t["kind"] == "log":
            a, b = np.broadcast_arrays(a, b)
            out = t["exp"][(t["log"][a] + t["log"][b]) % (self.q - 1)]
            return np.where((a == 0) | (b == 0), 0, out)
        a, b = np.broadcast_arrays(a, b)
        flat = [self._poly_mul(int(x), int(y)) for x, y in zip(a.ravel(), b.ravel())]
        return np.array(flat, dtype=np.int64).reshape(a.shape)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return np.array([pow(int(x), self.p - 2, self.p) for x in a.ravel()], dtype=np.int64).reshape(a.shape)
        t = self._build()
        if t["kind"] in ("full", "log"):
            return t["exp"][(-t["log"][a]) % (self.q - 1)]
        return np.array([self.inv(int(x)) for x in a.ravel()], dtype=np.int64).reshape(a.shape)

    def vpow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        t = self._build()
        if t["kind"] in ("full", "log"):
            out = t["exp"][(t["log"][a] * (e % (self.q - 1))) % (self.q - 1)]
            return np.where(a == 0, 0, out)
        result = np.ones_like(a)
        base = a.copy()
        while e:
            if e & 1:
                result = self.vmul(result, base)
            base = self.vmul(base, base)
            e >>= 1
        return result

    def vdot(self, a, b):
        """Sum over the last axis of a*b."""
        if self.k == 1:
            return (np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64)).sum(axis=-1) % self.p
        prod = self.vmul(a, b)
        return self.vsum(prod, axis=-1)

    def vsum(self, a, axis=-1):
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1:
            return a.sum(axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis) if a.shape[axis] else np.zeros(np.delete(a.shape, axis), dtype=np.int64)
        return self.from_digits(self.digits(a).sum(axis=axis if axis >= 0 else axis - 1))

    def __call__(self, value) -> "FFElement":
        if isinstance(value, FFElement):
            return embed(value, self)
        if isinstance(value, (list, tuple)):
            return FFElement(self, self.from_coeffs(value))
        return FFElement(self, int(value) % self.p if self.k == 1 else self.from_coeffs([int(value)]))


@functools.lru_cache(maxsize=None)
def make_extension(p: int, k: int) -> FieldDesc:
    """F_{p^k} defined by the least irreducible monic polynomial of degree k."""
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if p > MAX_P:
        raise FieldError(f"characteristic {p} exceeds the supported bound {MAX_P}")
    if not isinstance(k, int) or not 1 <= k <= MAX_K:
        raise FieldError(f"extension degree {k} outside 1..{MAX_K}")
    return FieldDesc(p, k, least_irreducible(p, k))


def prime_field(p: int) -> FieldDesc:
    return make_extension(p, 1)


class FFElement:
    """An element of a :class:`FieldDesc`, with arithmetic operators."""

    __slots__ = ("field", "value")

    def __init__(self, fld: FieldDesc, value: int):
        self.field = fld
        self.value = int(value)

    @property
    def coeffs(self) -> list:
        return self.field.to_coeffs(self.value)

    def _other(self, o):
        if isinstance(o, FFElement):
            if o.field != self.field:
                raise FieldError("elements of different fields")
            return o.value
        return self.field(o).value

    def __add__(self, o):
        return FFElement(self.field, self.field.add(self.value, self._other(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return FFElement(self.field, self.field.sub(self.value, self._other(o)))

    def __rsub__(self, o):
        return FFElement(self.field, self.field.sub(self._other(o), self.value))

    def __neg__(self):
        return FFElement(self.field, self.field.neg(self.value))

    def __mul__(self, o):
        return FFElement(self.field, self.field.mul(self.value, self._other(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return FFElement(self.field, self.field.div(self.value, self._other(o)))

    def __pow__(self, e: int):
        return FFElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FFElement(self.field, self.field.inv(self.value))

    def frobenius(self, times: int = 1):
        return FFElement(self.field, self.field.frobenius(self.value, times))

    def order(self) -> int:
        return self.field.order(self.value)

    def minimal_polynomial(self) -> list:
        return minimal_polynomial(self.field, self.value)

    def __eq__(self, o):
        if isinstance(o, FFElement):
            return self.field == o.field and self.value == o.value
        if isinstance(o, int):
            return self.value == self.field(o).value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FFElement({self.field!r}, {self.coeffs})"


# --- univariate polynomials over a FieldDesc (lists of ints, low to high)

def ptrim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(F: FieldDesc, a, b):
    n = max(len(a), len(b))
    out = [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return ptrim(out)


def psub(F: FieldDesc, a, b):
    n = max(len(a), len(b))
    out = [F.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return ptrim(out)


def pscale(F: FieldDesc, c, a):
    return ptrim([F.mul(c, x) for x in a])


def pmul(F: FieldDesc, a, b):
    if not a or not b:
        return []
    A = np.asarray(a, dtype=np.int64)
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    for j, y in enumerate(b):
        if y:
            seg = out[j:j + len(a)]
            out[j:j + len(a)] = F.vadd(seg, F.vmul(A, y))
    return ptrim([int(x) for x in out])


def pdivmod(F: FieldDesc, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = F.inv(b[-1])
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], ptrim(a)
    quot = [0] * (len(a) - db)
    B = np.asarray(b, dtype=np.int64)
    A = np.asarray(a, dtype=np.int64)
    for i in range(len(a) - 1, db - 1, -1):
        c = F.mul(int(A[i]), inv)
        if c:
            quot[i - db] = c
            A[i - db:i + 1] = F.vsub(A[i - db:i + 1], F.vmul(B, c))
    return ptrim(quot), ptrim([int(x) for x in A[:db]])


def pmod(F, a, b):
    return pdivmod(F, a, b)[1]


def pmonic(F: FieldDesc, a):
    if not a:
        return []
    return pscale(F, F.inv(a[-1]), a)


def pgcd(F: FieldDesc, a, b):
    a, b = ptrim(list(a)), ptrim(list(b))
    while b:
        a, b = b, pmod(F, a, b)
    return pmonic(F, a)


def ppowmod(F: FieldDesc, a, e: int, m):
    result = [1]
    base = pmod(F, a, m)
    while e:
        if e & 1:
            result = pmod(F, pmul(F, result, base), m)
        base = pmod(F, pmul(F, base, base), m)
        e >>= 1
    return result


def pderiv(F: FieldDesc, a):
    return ptrim([F.mul(F.from_coeffs([i]), a[i]) for i in range(1, len(a))])


def peval(F: FieldDesc, a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def peval_many(F: FieldDesc, a, xs):
    """Horner evaluation at an array of points."""
    xs = np.asarray(xs, dtype=np.int64)
    acc = np.zeros_like(xs)
    for c in reversed(a):
        acc = F.vadd(F.vmul(acc, xs), c)
    return acc


def _pth_root_poly(F: FieldDesc, a):
    """g with g^p = a, for a with only exponents divisible by p."""
    e = F.p ** (F.k - 1) if F.k > 1 else 1
    return ptrim([F.pow(a[i], e) for i in range(0, len(a), F.p)])


def squarefree_factorization(F: FieldDesc, f):
    """List of (g_i, i) with f = lc * prod g_i^i and each g_i squarefree."""
    f = pmonic(F, f)
    out = []

    def rec(f, mult):
        i = 1
        df = pderiv(F, f)
        c = pgcd(F, f, df)
        w = pdivmod(F, f, c)[0]
        while len(w) > 1:
            y = pgcd(F, w, c)
            z = pdivmod(F, w, y)[0]
            if len(z) > 1:
                out.append((z, i * mult))
            i += 1
            w = y
            c = pdivmod(F, c, y)[0]
        if len(c) > 1:
            rec(_pth_root_poly(F, c), mult * F.p)

    rec(f, 1)
    return out


def distinct_degree_factorization(F: FieldDesc, f):
    """For squarefree monic f: list of (product of all degree-d factors, d)."""
    out = []
    h = [0, 1]
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = ppowmod(F, h, F.q, f)
        g = pgcd(F, f, psub(F, h, [0, 1]))
        if len(g) > 1:
            out.append((g, d))
            f = pdivmod(F, f, g)[0]
            h = pmod(F, h, f)
    if len(f) > 1:
        out.append((pmonic(F, f), len(f) - 1))
    return out


def equal_degree_splitting(F: FieldDesc, f, d: int, rng: random.Random):
    """Split a monic product of distinct degree-d irreducibles (Cantor-Zassenhaus)."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = ptrim([rng.randrange(F.q) for _ in range(n)])
        if len(a) < 2:
            continue
        if F.p == 2:
            # trace map from F_{q^d} down to F_2
            t = list(a)
            acc = list(a)
            for _ in range(F.k * d - 1):
                t = pmod(F, pmul(F, t, t), f)
                acc = padd(F, acc, t)
            b = acc
        else:
            b = psub(F, ppowmod(F, a, (F.q**d - 1) // 2, f), [1])
        g = pgcd(F, f, b)
        if 1 < len(g) < len(f):
            h = pdivmod(F, f, g)[0]
            return equal_degree_splitting(F, g, d, rng) + equal_degree_splitting(F, pmonic(F, h), d, rng)


def factor_univariate(F: FieldDesc, f, seed: int = 0):
    """Factor f over F into monic irreducibles: sorted list of (factor, multiplicity)."""
    f = ptrim(list(f))
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out = []
    for g, mult in squarefree_factorization(F, f):
        for h, d in distinct_degree_factorization(F, g):
            for irr in equal_degree_splitting(F, h, d, rng):
                out.append((pmonic(F, irr), mult))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    return out


def roots(F: FieldDesc, f, seed: int = 0):
    """Distinct roots of f in F, sorted."""
    f = ptrim(list(f))
    if not f:
        raise ValueError("zero polynomial")
    if len(f) == 1:
        return []
    if F.q <= 4096:
        vals = peval_many(F, f, F.elements())
        return [int(x) for x in np.nonzero(vals == 0)[0]]
    f = pmonic(F, f)
    g = pgcd(F, f, psub(F, ppowmod(F, [0, 1], F.q, f), [0, 1]))
    if len(g) <= 1:
        return []
    lin = equal_degree_splitting(F, g, 1, random.Random(seed))
    return sorted(F.neg(h[0]) for h in lin)


def minimal_polynomial(F: FieldDesc, a: int) -> list:
    """Minimal polynomial over F_p of a, as a list of F_p coefficients."""
    d = F.degree_of(a)
    conj = [a]
    for _ in range(d - 1):
        conj.append(F.pow(conj[-1], F.p))
    poly = [1]
    for c in conj:
        poly = pmul(F, poly, [F.neg(c), 1])
    out = []
    for c in poly:
        cc = F.to_coeffs(c)
        if any(cc[1:]):
            raise AssertionError("minimal polynomial not over the prime field")
        out.append(cc[0])
    return out


@functools.lru_cache(maxsize=None)
def embedding_image(src: FieldDesc, dst: FieldDesc) -> int:
    """Image of the generator x of src in dst: the least root of src.modulus in dst."""
    if src.p != dst.p:
        raise FieldError("different characteristics")
    if dst.k % src.k:
        raise FieldError(f"degree {src.k} does not divide {dst.k}")
    mod = [dst.from_coeffs([c]) for c in src.modulus]
    r = roots(dst, mod)
    if not r:
        raise AssertionError("defining polynomial has no root in the target")
    return r[0]


@functools.lru_cache(maxsize=None)
def _embedding_table(src: FieldDesc, dst: FieldDesc):
    if src.q > LOG_TABLE_LIMIT:
        return None
    img = embedding_image(src, dst)
    powers = [1]
    for _ in range(src.k - 1):
        powers.append(dst.mul(powers[-1], img))
    digits = src.digits(np.arange(src.q, dtype=np.int64))  # q x k
    out = np.zeros(src.q, dtype=np.int64)
    for i, pw in enumerate(powers):
        scaled = dst.vmul(np.full(src.p, pw, dtype=np.int64), np.array([dst.from_coeffs([j]) for j in range(src.p)]))
        out = dst.vadd(out, scaled[digits[:, i]])
    return out


def embed_value(src: FieldDesc, dst: FieldDesc, a):
    """Embed an int or int array from src into dst."""
    if src == dst:
        return a
    tab = _embedding_table(src, dst)
    if tab is not None:
        if isinstance(a, (int, np.integer)):
            return int(tab[a])
        return tab[np.asarray(a, dtype=np.int64)]
    img = embedding_image(src, dst)
    def one(x):
        acc = 0
        for c in reversed(src.to_coeffs(int(x))):
            acc = dst.add(dst.mul(acc, img), dst.from_coeffs([c]))
        return acc
    if isinstance(a, (int, np.integer)):
        return one(a)
    arr = np.asarray(a, dtype=np.int64)
    return np.array([one(x) for x in arr.ravel()], dtype=np.int64).reshape(arr.shape)


def embed(e: FFElement, target: FieldDesc) -> FFElement:
    """Image of e under the fixed embedding of its field into target."""
    src = e.field
    if src.p != target.p:
        raise FieldError("incompatible characteristics")
    if target.k % src.k:
        raise FieldError(f"F_{src.p}^{src.k} does not embed in F_{target.p}^{target.k}")
    return FFElement(target, embed_value(src, target, e.value))
