"""Small finite fields with table arithmetic, and dense linear algebra over them.

Elements of a field of order Q are the integers 0..Q-1.  For a non-prime
field built as base[x]/(f), the integer encodes the coefficient vector of
the residue in base-|base| digits (constant term lowest).
"""
from functools import lru_cache
from itertools import product

import numpy as np


def factor_prime_power(q):
    """Return (p, k) with q = p**k, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


def is_prime_power(q):
    try:
        factor_prime_power(q)
    except ValueError:
        return False
    return True


class FiniteField:
    """A finite field given by add/mul tables.

    `base` is None for a prime field; otherwise the field is base[x]/(modulus)
    and `degree` is the extension degree over base.
    """

    def __init__(self, order, add, mul, base=None, modulus=None):
        self.order = order
        self.add = add
        self.mul = mul
        self.base = base
        self.modulus = modulus
        self.degree = 1 if base is None else len(modulus) - 1
        self.neg = [add[a].index(0) for a in range(order)]
        self.inv = [None] + [mul[a].index(1) for a in range(1, order)]
        neg = self.neg
        self.sub = [[row[neg[b]] for b in range(order)] for row in add]

    def __repr__(self):
        if self.base is None:
            return f"GF({self.order})"
        return f"GF({self.order})/GF({self.base.order})"

    # coordinates over the base field -------------------------------------

    def digits(self, e):
        b = self.base.order
        out = []
        for _ in range(self.degree):
            out.append(e % b)
            e //= b
        return out

    def from_digits(self, ds):
        b = self.base.order
        e = 0
        for d in reversed(ds):
            e = e * b + d
        return e

    @property
    def generator(self):
        """The class of x in base[x]/(modulus)."""
        return self.base.order if self.degree > 1 else 0

    def power(self, a, n):
        r = 1
        for _ in range(n):
            r = self.mul[r][a]
        return r

    def companion(self):
        """Matrix over base of multiplication by the generator, acting on digit columns."""
        s = self.degree
        cols = [self.digits(self.power(self.generator, j + 1)) if s > 1 else [0] for j in range(s)]
        return [[cols[j][i] for j in range(s)] for i in range(s)]


@lru_cache(maxsize=None)
def prime_field(p):
    add = [[(a + b) % p for b in range(p)] for a in range(p)]
    mul = [[(a * b) % p for b in range(p)] for a in range(p)]
    return FiniteField(p, add, mul)


def _poly_mulmod(F, a, b, f):
    # a, b: digit lists of length s over F; f monic, length s+1
    s = len(f) - 1
    prod_ = [0] * (2 * s - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod_[i + j] = F.add[prod_[i + j]][F.mul[ai][bj]]
    for k in range(len(prod_) - 1, s - 1, -1):
        c = prod_[k]
        if c:
            for j in range(s + 1):
                prod_[k - s + j] = F.sub[prod_[k - s + j]][F.mul[c][f[j]]]
    return prod_[:s]


def _poly_divides(F, d, f):
    # d, f coefficient lists low->high, d monic
    r = list(f)
    n = len(d) - 1
    for k in range(len(r) - 1, n - 1, -1):
        c = r[k]
        if c:
            for j in range(n + 1):
                r[k - n + j] = F.sub[r[k - n + j]][F.mul[c][d[j]]]
    return not any(r[:n])


def irreducible_poly(F, s):
    """First monic irreducible polynomial of degree s over F (lexicographic search)."""
    for tail in product(range(F.order), repeat=s):
        f = list(tail) + [1]
        if s > 1 and f[0] == 0:
            continue
        ok = True
        for dgr in range(1, s // 2 + 1):
            for dt in product(range(F.order), repeat=dgr):
                if _poly_divides(F, list(dt) + [1], f):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return tuple(f)
    raise ValueError(f"no irreducible polynomial of degree {s} over {F}")


@lru_cache(maxsize=None)
def extension(base, s):
    """The field base[x]/(f) for the first irreducible f of degree s."""
    if s == 1:
        return base
    f = irreducible_poly(base, s)
    B, Q = base.order, base.order ** s
    digs = np.array([ext_digits(base, e, s) for e in range(Q)], dtype=np.int64)
    weights = B ** np.arange(s, dtype=np.int64)
    badd = np.array(base.add, dtype=np.int64)
    add = (badd[digs[:, None, :], digs[None, :, :]] * weights).sum(axis=2)

    # multiplication through discrete logs of a primitive element
    exp_ = None
    for g in range(2, Q):
        seq, x = [1], digs[g].tolist()
        cur = [1] + [0] * (s - 1)
        for _ in range(Q - 2):
            cur = _poly_mulmod(base, cur, x, f)
            e = _from_digits(base, cur)
            if e == 1:
                break
            seq.append(e)
        if len(seq) == Q - 1:
            exp_ = np.array(seq + seq, dtype=np.int64)
            break
    log = np.zeros(Q, dtype=np.int64)
    log[exp_[:Q - 1]] = np.arange(Q - 1)
    mul = exp_[(log[:, None] + log[None, :]) % (Q - 1)]
    mul[0, :] = 0
    mul[:, 0] = 0

    ext = FiniteField.__new__(FiniteField)
    FiniteField.__init__(ext, Q, add.tolist(), mul.tolist(), base=base, modulus=f)
    return ext


def ext_digits(base, e, s):
    out = []
    for _ in range(s):
        out.append(e % base.order)
        e //= base.order
    return out


def _from_digits(base, ds):
    e = 0
    for d in reversed(ds):
        e = e * base.order + d
    return e


@lru_cache(maxsize=None)
def GF(q):
    """The field with q elements (a fixed model)."""
    p, k = factor_prime_power(q)
    return extension(prime_field(p), k)


# linear algebra ------------------------------------------------------------

def rref(F, rows, ncols=None):
    """Row-reduce a list of rows in place-safe fashion. Returns (rows, pivots)."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    add, mul, inv, neg = F.add, F.mul, F.inv, F.neg
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        iv = inv[m[r][c]]
        if iv != 1:
            m[r] = [mul[iv][x] for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = neg[m[i][c]]
                mf = mul[f]
                m[i] = [add[x][mf[y]] for x, y in zip(m[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(F, rows, ncols=None):
    return len(rref(F, rows, ncols)[1])


def matmul(F, A, B):
    add, mul = F.add, F.mul
    if not A:
        return []
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * n
        for a, brow in zip(row, B):
            if a:
                ma = mul[a]
                acc = [add[x][ma[y]] for x, y in zip(acc, brow)]
        out.append(acc)
    return out


def transpose(A, ncols=None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*A)]


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def inverse(F, A):
    n = len(A)
    aug = [list(A[i]) + identity(n)[i] for i in range(n)]
    red, piv = rref(F, aug, n)
    if piv != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def nullspace(F, rows, ncols):
    """Basis (list of vectors) of {x : rows @ x = 0}."""
    red, piv = rref(F, rows, ncols)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for r, pc in enumerate(piv):
            x[pc] = F.neg[red[r][fc]]
        basis.append(x)
    return basis


def subspaces(F, n, k):
    """Yield all k-dim subspaces of F^n as RREF row lists, with their pivot tuples."""
    Q = F.order
    for piv in _combinations(n, k):
        free = [(r, c) for r in range(k) for c in range(piv[r] + 1, n) if c not in piv]
        for vals in product(range(Q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r in range(k):
                rows[r][piv[r]] = 1
            for (r, c), v in zip(free, vals):
                rows[r][c] = v
            yield rows, piv


def _combinations(n, k):
    from itertools import combinations
    return combinations(range(n), k)


def count_subspaces(q, n, k):
    """Gaussian binomial [n choose k]_q."""
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
