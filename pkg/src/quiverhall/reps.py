"""Representations of folded (species) quivers of finite type over finite fields.

A folded vertex i with orbit size s_i carries an F_{q^s_i}-vector space, stored
as F_q^(s_i * dim_i) with the standard block-companion action of the field
generator.  Each arrow orbit carries one F_q-linear map; this is the fixed-point
form of a Frobenius-twisted representation of the unfolded quiver.
"""
import random
from dataclasses import dataclass
from functools import lru_cache, cached_property
from math import gcd

from . import fields
from .fields import GF, extension, rref, matmul, identity, inverse
from .laurent import QPoly, gl_order
from .quiver import catalog, fold, validate_admissible, euler_exponent, twist_exponent


class NotFiniteType(ValueError):
    pass


class CycleDetected(RuntimeError):
    pass


class UnsupportedFieldSize(ValueError):
    pass


class UnsupportedSpecies(ValueError):
    pass


class SizeLimitExceeded(RuntimeError):
    pass


class ParseError(ValueError):
    pass


# roots ---------------------------------------------------------------------

def positive_roots(cartan):
    """Positive roots of a finite-type Cartan matrix, by closure under simple reflections.

    Roots are coordinate tuples in the simple-root basis, sorted by height then lexicographically.
    """
    C = cartan.cartan if hasattr(cartan, "cartan") else cartan
    s = cartan.orbit_sizes if hasattr(cartan, "orbit_sizes") else (1,) * len(C)
    n = len(C)
    _check_finite(C, s)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots, frontier = set(simple), list(simple)
    while frontier:
        nxt = []
        for a in frontier:
            for i in range(n):
                k = sum(C[i][j] * a[j] for j in range(n))
                b = tuple(a[j] - (k if j == i else 0) for j in range(n))
                if all(x >= 0 for x in b) and any(b) and b not in roots:
                    roots.add(b)
                    nxt.append(b)
        if len(roots) > 500:
            raise NotFiniteType("reflection closure does not terminate")
        frontier = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def _check_finite(C, s):
    # diag(s) C must be symmetric positive definite
    n = len(C)
    B = [[s[i] * C[i][j] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if B[i][j] != B[j][i]:
                raise NotFiniteType("Cartan matrix is not symmetrized by the orbit sizes")
    from fractions import Fraction
    M = [[Fraction(x) for x in row] for row in B]
    for k in range(n):
        if M[k][k] <= 0:
            raise NotFiniteType("symmetrized Cartan matrix is not positive definite")
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            for j in range(k, n):
                M[i][j] -= f * M[k][j]


# the folded datum ----------------------------------------------------------

class TypeData:
    """Everything about one catalog type that does not depend on q."""

    def __init__(self, quiver):
        rep = validate_admissible(quiver)
        if not rep.ok:
            raise ValueError("; ".join(rep.violations))
        self.quiver = quiver
        self.label = quiver.label
        self.cartan = fold(quiver)
        self.s = self.cartan.orbit_sizes
        self.n = len(self.s)
        self.o = quiver.order()
        where = {w: k for k, orb in enumerate(self.cartan.orbit_index) for w in orb}
        self.arrows = []
        for orb in quiver.arrow_orbits():
            a = quiver.arrow(orb[0])
            i, j = where[a.src], where[a.tgt]
            if gcd(self.s[i], self.s[j]) != 1 or len(orb) != self.s[i] * self.s[j]:
                raise UnsupportedSpecies(f"arrow orbit {orb}: only coprime orbit sizes are supported")
            self.arrows.append((i, j))
        self.roots = positive_roots(self.cartan)
        self._build_order()

    def __repr__(self):
        return f"TypeData({self.label})"

    # forms ----------------------------------------------------------------

    def euler(self, m, n):
        """Euler form of the species: sum_i s_i m_i n_i - sum_arrows s_i s_j m_i n_j."""
        return sum(self.s[i] * m[i] * n[i] for i in range(self.n)) - \
            sum(self.s[i] * self.s[j] * m[i] * n[j] for i, j in self.arrows)

    def tits(self, a):
        return self.euler(a, a)

    def sq_norm(self, dim):
        """sum_i s_i dim_i^2 = dim G_V."""
        return sum(si * d * d for si, d in zip(self.s, dim))

    def twist(self, d1, d2):
        return twist_exponent(self.quiver, d1, d2)

    def euler_unfolded(self, d1, d2):
        return euler_exponent(self.quiver, d1, d2)

    # indecomposables and order --------------------------------------------

    def _build_order(self):
        H = {}
        reps = {r: realize(self, r, 2) for r in self.roots}
        for a in self.roots:
            for b in self.roots:
                H[a, b] = hom_dim_reps(reps[a], reps[b])
        self.order = directed_order(self.roots, H)
        self.indec = [self.roots[t] for t in self.order]
        m = len(self.indec)
        self.H = [[H[self.indec[t], self.indec[u]] for u in range(m)] for t in range(m)]
        self.end_indec = [self.H[t][t] for t in range(m)]
        self.position = {r: t for t, r in enumerate(self.indec)}

    # module classes --------------------------------------------------------

    def module(self, mult):
        return ModuleClass(self.label, tuple(mult))

    def zero(self):
        return self.module((0,) * len(self.indec))

    def indecomposable(self, root):
        m = [0] * len(self.indec)
        m[self.position[tuple(root)]] = 1
        return self.module(m)

    def simple(self, i):
        return self.indecomposable(tuple(int(j == i) for j in range(self.n)))


@lru_cache(maxsize=None)
def type_data(label):
    return TypeData(catalog(label))


def directed_order(roots, H):
    """Order roots so that Hom(I_s, I_t) = 0 for s > t; ties broken lexicographically."""
    remaining = list(roots)
    out = []
    while remaining:
        avail = [a for a in remaining if not any(H[b, a] for b in remaining if b != a)]
        if not avail:
            raise CycleDetected("hom relation among indecomposables has a cycle")
        pick = min(avail)
        out.append(roots.index(pick))
        remaining.remove(pick)
    return out


@dataclass(frozen=True, order=True)
class ModuleClass:
    """Isomorphism class = multiplicities of indecomposables in directed order."""
    label: str
    mult: tuple

    @property
    def data(self):
        return type_data(self.label)

    @cached_property
    def dim(self):
        d = [0] * self.data.n
        for m, r in zip(self.mult, self.data.indec):
            for i in range(len(d)):
                d[i] += m * r[i]
        return tuple(d)

    @cached_property
    def fingerprint(self):
        H = self.data.H
        return tuple(sum(H[t][u] * self.mult[u] for u in range(len(self.mult))) for t in range(len(self.mult)))

    @cached_property
    def end_dim(self):
        H = self.data.H
        m = self.mult
        return sum(m[t] * m[u] * H[t][u] for t in range(len(m)) for u in range(len(m)))

    @property
    def orbit_dim(self):
        return self.data.sq_norm(self.dim) - self.end_dim

    def __add__(self, other):
        return ModuleClass(self.label, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def summands(self):
        return [(self.data.indec[t], m) for t, m in enumerate(self.mult) if m]

    def is_zero(self):
        return not any(self.mult)

    def __str__(self):
        return canonical_string(self)

    def __repr__(self):
        return f"<{self.label}: {canonical_string(self)}>"


def hom_dim(m, n):
    """dim over F_q of Hom(M, N), from the hom table between indecomposables."""
    H = m.data.H
    return sum(m.mult[t] * n.mult[u] * H[t][u] for t in range(len(m.mult)) for u in range(len(n.mult)))


def end_dim(m):
    return m.end_dim


def orbit_dim(m):
    return m.orbit_dim


def aut_poly(m):
    """|Aut(M)| as a polynomial in q."""
    q = QPoly((0, 1))
    d = m.data
    rad = m.end_dim - sum(k * k * d.end_indec[t] for t, k in enumerate(m.mult))
    r = QPoly.q_power(rad)
    for t, k in enumerate(m.mult):
        if k:
            r = r * gl_order(q ** d.end_indec[t], k)
    return r


def aut_order(m, q):
    return aut_poly(m)(q)


def enumerate_modules(data, dim, limit=10000):
    """All module classes of dimension vector `dim` (Kostant partitions), graded-lex ordered."""
    dim = tuple(dim)
    indec = data.indec
    out = []

    def rec(t, rest, mult):
        if len(out) > limit:
            raise SizeLimitExceeded(f"more than {limit} classes at {dim}")
        if not any(rest):
            out.append(tuple(mult) + (0,) * (len(indec) - len(mult)))
            return
        if t == len(indec):
            return
        r = indec[t]
        k = 0
        while all(x >= k * y for x, y in zip(rest, r)):
            rec(t + 1, tuple(x - k * y for x, y in zip(rest, r)), mult + [k])
            k += 1

    rec(0, dim, [])
    out.sort(key=lambda m: (sum(m), m))
    return [data.module(m) for m in out]


def dims_up_to(data, total):
    """All nonzero folded dimension vectors with unfolded total dimension <= total."""
    out = []

    def rec(i, cur, used):
        if i == data.n:
            if any(cur):
                out.append(tuple(cur))
            return
        k = 0
        while used + k * data.s[i] <= total:
            rec(i + 1, cur + [k], used + k * data.s[i])
            k += 1

    rec(0, [], 0)
    return sorted(out, key=lambda d: (sum(si * x for si, x in zip(data.s, d)), d))


# canonical strings ---------------------------------------------------------

def root_token(r):
    return "(" + ",".join(map(str, r)) + ")"


def canonical_string(m):
    if m.is_zero():
        return "0"
    return " + ".join(f"{root_token(r)}^{k}" for r, k in m.summands())


def parse_module(data, text):
    """Parse a module class: terms joined by '+', each `token[^mult]`.

    Tokens: `(a,b,..)` root coordinates, `S<i>` simple at folded vertex i (1-based),
    `P<i><j>..` the sum of the listed simples (must be a root).
    """
    text = text.replace("⊕", "+").strip()
    mult = [0] * len(data.indec)
    if text == "0":
        return data.module(mult)
    for term in _split_terms(text):
        term = term.strip()
        if not term:
            continue
        tok, _, k = term.partition("^")
        k = int(k) if k else 1
        tok = tok.strip()
        if tok.startswith("("):
            root = tuple(int(x) for x in tok.strip("()").split(","))
        elif tok[0] in "SP" and tok[1:].isdigit():
            idx = [int(ch) - 1 for ch in tok[1:]]
            if tok[0] == "S" and len(idx) != 1:
                raise ParseError(f"bad simple token {tok}")
            root = tuple(idx.count(i) for i in range(data.n))
        else:
            raise ParseError(f"cannot parse module token {tok!r}")
        if root not in data.position:
            raise ParseError(f"{tok} is not a positive root of {data.label}")
        mult[data.position[root]] += k
    return data.module(mult)


def _split_terms(text):
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out


# explicit representations ----------------------------------------------------

class Rep:
    """An explicit representation over F_q: folded dims plus one F_q-matrix per arrow orbit."""

    __slots__ = ("data", "q", "dim", "maps")

    def __init__(self, data, q, dim, maps):
        self.data, self.q, self.dim, self.maps = data, q, tuple(dim), list(maps)

    @property
    def F(self):
        return GF(self.q)

    def fq_dim(self, i):
        return self.data.s[i] * self.dim[i]

    def __repr__(self):
        return f"Rep({self.data.label}, q={self.q}, dim={self.dim}, maps={self.maps})"


@lru_cache(maxsize=None)
def field_powers(q, s):
    """Matrices C^k (k < s) over F_q of multiplication by generator powers of F_{q^s}."""
    F = GF(q)
    if s == 1:
        return ([[1]],)
    C = extension(F, s).companion()
    out = [identity(s)]
    for _ in range(s - 1):
        out.append(matmul(F, out[-1], C))
    return tuple(out)


def zero_rep(data, q, dim):
    maps = [[[0] * (data.s[i] * dim[i]) for _ in range(data.s[j] * dim[j])] for i, j in data.arrows]
    return Rep(data, q, dim, maps)


def direct_sum(reps):
    r0 = reps[0]
    data, q = r0.data, r0.q
    dim = tuple(sum(r.dim[i] for r in reps) for i in range(data.n))
    maps = []
    for h, (i, j) in enumerate(data.arrows):
        rows = sum(r.fq_dim(j) for r in reps)
        cols = sum(r.fq_dim(i) for r in reps)
        M = [[0] * cols for _ in range(rows)]
        ro = co = 0
        for r in reps:
            for a, row in enumerate(r.maps[h]):
                M[ro + a][co:co + len(row)] = row
            ro += r.fq_dim(j)
            co += r.fq_dim(i)
        maps.append(M)
    return Rep(data, q, dim, maps)


def hom_dim_reps(X, Y):
    """dim over F_q of Hom(X, Y) for explicit representations, by solving the linear system."""
    F = X.F
    unknowns, columns = hom_columns(X, Y)
    if not unknowns:
        return 0
    nrows = len(columns[0])
    if nrows == 0:
        return len(unknowns)
    rows = [[columns[c][r] for c in range(len(columns))] for r in range(nrows)]
    return len(unknowns) - fields.rank(F, rows, len(unknowns))


def hom_columns(X, Y):
    """Basis of the vertexwise E-linear maps f: X -> Y and their images f_tgt x_h - y_h f_src.

    Images are flattened arrow by arrow, each block row-major of shape (dim Y_tgt, dim X_src).
    """
    data, F = X.data, X.F
    powers = {i: field_powers(X.q, data.s[i]) for i in range(data.n)}
    # unknowns: (vertex, a, b, k) meaning E_ab (x) C^k at vertex i
    unknowns = [(i, a, b, k) for i in range(data.n) for a in range(Y.dim[i])
                for b in range(X.dim[i]) for k in range(data.s[i])]
    if not unknowns:
        return [], []
    neg = F.neg
    columns = []
    for (i, a, b, k) in unknowns:
        s = data.s[i]
        Ck = powers[i][k]
        col = []
        for h, (src, tgt) in enumerate(data.arrows):
            ny, nx = Y.fq_dim(tgt), X.fq_dim(src)
            block = [[0] * nx for _ in range(ny)]
            if tgt == i:
                # f_tgt x_h: rows a*s.. of f are C^k times rows b*s.. of x_h
                xrows = X.maps[h][b * s:(b + 1) * s]
                if xrows:
                    prod = matmul(F, Ck, xrows)
                    for r in range(s):
                        block[a * s + r] = list(prod[r])
            if src == i:
                # - y_h f_src: columns b*s.. of the result are y_h[:, a*s..] C^k
                ycols = [row[a * s:(a + 1) * s] for row in Y.maps[h]]
                if ycols and ycols[0]:
                    prod = matmul(F, ycols, Ck)
                    for r in range(ny):
                        for c in range(s):
                            block[r][b * s + c] = F.add[block[r][b * s + c]][neg[prod[r][c]]]
            for row in block:
                col.extend(row)
        columns.append(col)
    return unknowns, columns


def end_dim_rep(X):
    return hom_dim_reps(X, X)


@lru_cache(maxsize=None)
def _realize_cached(label, root, q):
    return realize(type_data(label), root, q)


def realize(data, root, q, attempts=2000):
    """An explicit indecomposable representation with dimension vector `root` over F_q.

    The indecomposable for a root is the representation with the open orbit, i.e. the one
    whose endomorphism algebra has the minimal dimension, equal to the Tits form of the root.
    Candidates are drawn from a seeded generator, so the result is deterministic.
    """
    if not fields.is_prime_power(q):
        raise UnsupportedFieldSize(f"{q} is not a prime power")
    if q > 64:
        raise UnsupportedFieldSize(f"field size {q} beyond supported bound 64")
    root = tuple(root)
    target = data.tits(root)
    rng = random.Random(f"{data.label}|{root}|{q}")
    F = GF(q)
    for _ in range(attempts):
        maps = []
        for i, j in data.arrows:
            ni, nj = data.s[i] * root[i], data.s[j] * root[j]
            maps.append([[rng.randrange(F.order) for _ in range(ni)] for _ in range(nj)])
        X = Rep(data, q, root, maps)
        if hom_dim_reps(X, X) == target:
            return X
    raise RuntimeError(f"no indecomposable found for root {root} over F_{q}")


def indecomposables(data, q):
    return [_realize_cached(data.label, r, q) for r in data.indec]


def realize_module(m, q):
    """Explicit representation of a module class: direct sum of realized indecomposables."""
    data = m.data
    parts = []
    for r, k in m.summands():
        parts.extend([_realize_cached(data.label, r, q)] * k)
    if not parts:
        return zero_rep(data, q, (0,) * data.n)
    return direct_sum(parts)


def classify(X):
    """Module class of an explicit representation, via hom dimensions from indecomposables."""
    data = X.data
    fp = [hom_dim_reps(I, X) for I in indecomposables(data, X.q)]
    return class_from_fingerprint(data, fp)


def class_from_fingerprint(data, fp):
    H = data.H
    m = len(fp)
    mult = [0] * m
    for u in range(m - 1, -1, -1):
        rest = fp[u] - sum(H[u][w] * mult[w] for w in range(u + 1, m))
        k, r = divmod(rest, H[u][u])
        if r or k < 0:
            raise ValueError(f"inconsistent hom fingerprint {fp}")
        mult[u] = k
    return data.module(mult)
