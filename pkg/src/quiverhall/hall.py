"""Finite-field counting: Hall numbers, certified Hall polynomials, filtration counts,
and the transversal-slice / unipotent-radical counts."""
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import fields
from .fields import GF, extension, matmul, inverse, rref
from .laurent import QPoly, interpolate
from .reps import (Rep, SizeLimitExceeded, aut_order, class_from_fingerprint, enumerate_modules,
                   field_powers, hom_columns, hom_dim, hom_dim_reps, indecomposables, realize_module)


class CertificationFailed(RuntimeError):
    pass


class LayerOrderViolation(ValueError):
    pass


PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49)
MAX_POINTS = 200000


@dataclass(frozen=True)
class HallPolynomial:
    poly: QPoly
    samples: tuple = ()
    heldout: tuple = ()

    def __call__(self, q):
        return self.poly(q)

    def __repr__(self):
        return repr(self.poly)


# classification with memo ----------------------------------------------------

_class_memo = {}


def classify(X):
    key = (X.data.label, X.q, X.dim, tuple(tuple(map(tuple, M)) for M in X.maps))
    m = _class_memo.get(key)
    if m is None:
        fp = [hom_dim_reps(I, X) for I in indecomposables(X.data, X.q)]
        m = class_from_fingerprint(X.data, fp)
        _class_memo[key] = m
    return m


# subspace frames ----------------------------------------------------------------

@lru_cache(maxsize=None)
def vertex_frames(q, s, n, k):
    """Bases adapted to every F_{q^s}-subspace of dimension k in F_{q^s}^n.

    Returns a tuple of (T, Tinv) over F_q, of size s*n, whose first s*k columns span the
    subspace; both the subspace and the complement use generator-power bases so the
    restricted field action stays in standard form.
    """
    F = GF(q)
    if s == 1:
        E = F
    else:
        E = extension(F, s)
    gen_pows = [E.power(E.generator, j) if s > 1 else 1 for j in range(s)]

    def expand(vec):
        cols = []
        for j in range(s):
            w = [E.mul[gen_pows[j]][x] for x in vec]
            col = []
            for x in w:
                col.extend(E.digits(x) if s > 1 else [x])
            cols.append(col)
        return cols

    out = []
    for rows, piv in fields.subspaces(E, n, k):
        cols = []
        for r in rows:
            cols.extend(expand(r))
        for c in range(n):
            if c not in piv:
                cols.extend(expand([int(i == c) for i in range(n)]))
        T = [[cols[c][r] for c in range(s * n)] for r in range(s * n)]
        out.append((T, inverse(F, T) if T else []))
    return tuple(out)


def submodules(X, subdim):
    """Yield (sub, quotient) representations for every subrepresentation of X of folded dim `subdim`."""
    data, q, F = X.data, X.q, X.F
    n = data.n
    if any(k > d or k < 0 for k, d in zip(subdim, X.dim)):
        return
    frames = [vertex_frames(q, data.s[i], X.dim[i], subdim[i]) for i in range(n)]
    total = 1
    for fr in frames:
        total *= len(fr)
    if total > MAX_POINTS:
        raise SizeLimitExceeded(f"{total} graded subspaces")
    ks = [data.s[i] * subdim[i] for i in range(n)]
    by_last = [[] for _ in range(n)]
    for h, (i, j) in enumerate(data.arrows):
        by_last[max(i, j)].append(h)

    chosen = [None] * n
    blocks = [None] * len(data.arrows)

    def rec(v):
        if v == n:
            sub_maps, quot_maps = [], []
            for h, (i, j) in enumerate(data.arrows):
                M = blocks[h]
                sub_maps.append([row[:ks[i]] for row in M[:ks[j]]])
                quot_maps.append([row[ks[i]:] for row in M[ks[j]:]])
            yield (Rep(data, q, subdim, sub_maps),
                   Rep(data, q, tuple(d - k for d, k in zip(X.dim, subdim)), quot_maps))
            return
        for fr in frames[v]:
            chosen[v] = fr
            ok = True
            for h in by_last[v]:
                i, j = data.arrows[h]
                T_i, Tinv_j = chosen[i][0], chosen[j][1]
                if not X.maps[h] or not X.maps[h][0]:
                    M = [[0] * len(T_i) for _ in range(len(Tinv_j))]
                else:
                    M = matmul(F, matmul(F, Tinv_j, X.maps[h]), T_i)
                if any(M[r][c] for r in range(ks[j], len(M)) for c in range(ks[i])):
                    ok = False
                    break
                blocks[h] = M
            if ok:
                yield from rec(v + 1)

    yield from rec(0)


# Hall numbers ------------------------------------------------------------------

_census_memo = {}


def submodule_census(L, q, subdim):
    """Counter of (quotient class, sub class) over subrepresentations of L of dimension subdim."""
    key = (L, q, tuple(subdim))
    c = _census_memo.get(key)
    if c is None:
        X = realize_module(L, q)
        c = Counter()
        for sub, quot in submodules(X, subdim):
            c[classify(quot), classify(sub)] += 1
        _census_memo[key] = c
    return c


def grassmannian_size(L, subdim, q):
    """Number of graded E-subspaces enumerated by submodule_census."""
    s = L.data.s
    out = 1
    for i, (k, d) in enumerate(zip(subdim, L.dim)):
        out *= fields.count_subspaces(q ** s[i], d, k)
    return out


def ext_dim(M, N):
    """dim over F_q of Ext^1(M, N) = hom(M, N) - <dim M, dim N>."""
    return hom_dim(M, N) - M.data.euler(M.dim, N.dim)


_ext_memo = {}


def extension_census(M, N, q):
    """Counter of middle terms L over the classes of Ext^1(M, N), enumerated over F_q.

    Extensions are E_eta = [[x^N, eta], [0, x^M]] with eta ranging over a coordinate
    complement of the coboundaries f_tgt x^M - x^N f_src.
    """
    key = (M, N, q)
    c = _ext_memo.get(key)
    if c is not None:
        return c
    data, F = M.data, GF(q)
    X, Y = realize_module(M, q), realize_module(N, q)
    shapes = [(Y.fq_dim(j), X.fq_dim(i)) for i, j in data.arrows]
    ncoords = sum(a * b for a, b in shapes)
    _, cols = hom_columns(X, Y)
    piv = set(rref(F, cols, ncoords)[1]) if cols and ncoords else set()
    free = [p for p in range(ncoords) if p not in piv]
    if q ** len(free) > MAX_POINTS:
        raise SizeLimitExceeded(f"{q}^{len(free)} extension classes")
    where = []
    for h, (a, b) in enumerate(shapes):
        where.extend((h, r, cc) for r in range(a) for cc in range(b))
    dim = tuple(x + y for x, y in zip(M.dim, N.dim))
    c = Counter()
    for vals in product(range(q), repeat=len(free)):
        maps = []
        for h, (i, j) in enumerate(data.arrows):
            ny, nx = shapes[h]
            my, mx = X.fq_dim(j), Y.fq_dim(i)
            blk = [[0] * (mx + nx) for _ in range(ny + my)]
            for r, row in enumerate(Y.maps[h]):
                blk[r][:mx] = row
            for r, row in enumerate(X.maps[h]):
                blk[ny + r][mx:] = row
            maps.append(blk)
        for p, v in zip(free, vals):
            if v:
                h, r, cc = where[p]
                maps[h][r][Y.fq_dim(data.arrows[h][0]) + cc] = v
        c[classify(Rep(data, q, dim, maps))] += 1
    _ext_memo[key] = c
    return c


def hall_number(L, M, N, q, method="auto"):
    """Number of submodules L' of L with L' ~ N and L/L' ~ M, over F_q.

    method 'grassmannian' enumerates graded subspaces of L; 'extensions' enumerates
    Ext^1(M, N) and uses g = |Ext^1(M,N)_L| a_L / (|Hom(M,N)| a_M a_N); 'auto' takes
    whichever enumeration is smaller.
    """
    if tuple(a + b for a, b in zip(M.dim, N.dim)) != L.dim:
        return 0
    if method == "auto":
        cheap = grassmannian_size(L, N.dim, q) <= q ** ext_dim(M, N)
        method = "grassmannian" if cheap else "extensions"
    if method == "grassmannian":
        return submodule_census(L, q, N.dim)[M, N]
    if method != "extensions":
        raise ValueError(f"unknown method {method!r}")
    num = extension_census(M, N, q)[L] * aut_order(L, q)
    den = q ** hom_dim(M, N) * aut_order(M, q) * aut_order(N, q)
    g, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-integral Hall number for {L} | {M} | {N} at q={q}")
    return g


def _fit(fn, cap, points=PRIME_POWERS, heldout=2):
    """Interpolate an integer polynomial through fn on increasing prime-power samples."""
    values = {}

    def val(x):
        if x not in values:
            values[x] = fn(x)
        return values[x]

    for k in range(1, cap + 2):
        if k + heldout > len(points):
            break
        xs, hs = points[:k], points[k:k + heldout]
        coeffs = interpolate([(x, val(x)) for x in xs])
        if any(c.denominator != 1 for c in coeffs):
            continue
        P = QPoly([int(c) for c in coeffs])
        if all(P(x) == val(x) for x in hs):
            return P, tuple(xs), tuple(hs)
    raise CertificationFailed(f"no certified polynomial of degree <= {cap}: values {values}")


def degree_bound(L, subdim):
    """Dimension of the product of Grassmannians containing the submodules of dimension subdim.

    (orbit_dim(L) is not a bound: semisimple L has a point orbit but q+1 lines.)
    """
    s = L.data.s
    return sum(s[i] * k * (d - k) for i, (k, d) in enumerate(zip(subdim, L.dim)))


_default_cache = None
_poly_memo = {}


def set_default_cache(cache):
    """Cache used by hall_polynomial when none is passed explicitly (None disables)."""
    global _default_cache
    _default_cache = cache


def hall_polynomial(L, M, N, cache=None):
    """Certified Hall polynomial g^L_{M,N}(q)."""
    cache = cache if cache is not None else _default_cache
    if tuple(a + b for a, b in zip(M.dim, N.dim)) != L.dim:
        return HallPolynomial(QPoly())
    key = f"{L.label}|{L}|{M}|{N}"
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    hp = _poly_memo.get(key)
    if hp is None:
        hp = HallPolynomial(*_fit(lambda x: hall_number(L, M, N, x), degree_bound(L, N.dim)))
        _poly_memo[key] = hp
    if cache is not None:
        cache.put(key, hp)
    return hp


# filtrations ---------------------------------------------------------------------

def isotypic_layers(N):
    """The isotypic components of N in directed order, one per indecomposable (zeros kept)."""
    out = []
    for t, k in enumerate(N.mult):
        mult = [0] * len(N.mult)
        mult[t] = k
        out.append(N.data.module(mult))
    return out


def _check_layers(layers):
    last = -1
    for lay in layers:
        nz = [t for t, k in enumerate(lay.mult) if k]
        if not nz:
            continue
        if len(nz) > 1:
            raise LayerOrderViolation(f"layer {lay} is not isotypic")
        if nz[0] <= last:
            raise LayerOrderViolation("layers are not listed in directed order")
        last = nz[0]


def _top_to_bottom(layers, direction):
    _check_layers(layers)
    nz = [lay for lay in layers if not lay.is_zero()]
    if direction == "top":
        return nz
    if direction == "bottom":
        return nz[::-1]
    raise ValueError(f"direction must be 'top' or 'bottom', not {direction!r}")


def filtration_polynomial(M, layers, direction="bottom", cache=None):
    """F^M for the given isotypic layers (directed order).

    direction 'top': the first layer is the top quotient M/M_1 (literal index convention);
    direction 'bottom': the first layer is the bottom submodule.
    """
    seq = _top_to_bottom(layers, direction)
    return _filt(M, tuple(seq), cache)


def _filt(M, seq, cache):
    if not seq:
        return QPoly.const(1) if M.is_zero() else QPoly()
    top, rest = seq[0], seq[1:]
    rem = tuple(a - b for a, b in zip(M.dim, top.dim))
    if any(x < 0 for x in rem):
        return QPoly()
    total = QPoly()
    for X in enumerate_modules(M.data, rem):
        g = hall_polynomial(M, top, X, cache).poly
        if g:
            total = total + g * _filt(X, rest, cache)
    return total


def count_filtrations(M, layers, q, direction="bottom"):
    """Direct enumeration of filtrations with the given subquotients (independent check)."""
    seq = _top_to_bottom(layers, direction)
    return _count_chain(realize_module(M, q), seq)


def _count_chain(X, seq):
    if not seq:
        return int(not any(X.dim))
    top = seq[0]
    subdim = tuple(a - b for a, b in zip(X.dim, top.dim))
    if any(x < 0 for x in subdim):
        return 0
    total = 0
    for sub, quot in submodules(X, subdim):
        if classify(quot) == top:
            total += _count_chain(sub, seq[1:])
    return total


# slices ------------------------------------------------------------------------

class _LayeredSpace:
    """Coordinates for V = T_1 + ... + T_m (top to bottom) and the block-triangular pieces."""

    def __init__(self, N, q, direction):
        self.data = data = N.data
        self.q = q
        self.F = GF(q)
        self.seq = _top_to_bottom(isotypic_layers(N), direction)
        self.dim = N.dim
        reps = [realize_module(T, q) for T in self.seq]
        # offsets[i][k] = F_q offset of layer k inside V_i
        self.offsets = []
        for i in range(data.n):
            off, o = [], 0
            for T in self.seq:
                off.append(o)
                o += data.s[i] * T.dim[i]
            self.offsets.append(off)
        base = []
        for h, (i, j) in enumerate(data.arrows):
            M = [[0] * (data.s[i] * self.dim[i]) for _ in range(data.s[j] * self.dim[j])]
            for k, R in enumerate(reps):
                for r, row in enumerate(R.maps[h]):
                    for c, x in enumerate(row):
                        M[self.offsets[j][k] + r][self.offsets[i][k] + c] = x
            base.append(M)
        self.base = base
        # strictly block-triangular arrow coordinates: from layer a to a deeper layer b > a
        self.coords = []
        for h, (i, j) in enumerate(data.arrows):
            for a, Ta in enumerate(self.seq):
                for b in range(a + 1, len(self.seq)):
                    Tb = self.seq[b]
                    for r in range(data.s[j] * Tb.dim[j]):
                        for c in range(data.s[i] * Ta.dim[i]):
                            self.coords.append((h, self.offsets[j][b] + r, self.offsets[i][a] + c))
        self.index = {c: n for n, c in enumerate(self.coords)}

    def unipotent_dim(self):
        d = self.data
        return sum(d.s[i] * self.seq[a].dim[i] * self.seq[b].dim[i]
                   for i in range(d.n) for a in range(len(self.seq)) for b in range(a + 1, len(self.seq)))

    def tangent_rows(self):
        """Vectors phi(n) in block-triangular coordinates, n over a basis of the unipotent Lie algebra."""
        d, F = self.data, self.F
        out = []
        for i in range(d.n):
            s = d.s[i]
            Cp = field_powers(self.q, s)
            for a, Ta in enumerate(self.seq):
                for b in range(a + 1, len(self.seq)):
                    Tb = self.seq[b]
                    for r in range(Tb.dim[i]):
                        for c in range(Ta.dim[i]):
                            for k in range(s):
                                # n_i = E_{rc} (x) C^k placed in block (b, a) of gl(V_i)
                                ni = {}
                                for x in range(s):
                                    for y in range(s):
                                        if Cp[k][x][y]:
                                            ni[(self.offsets[i][b] + r * s + x,
                                                self.offsets[i][a] + c * s + y)] = Cp[k][x][y]
                                out.append(self._phi(i, ni))
        return out

    def _phi(self, i, ni):
        d, F = self.data, self.F
        vec = [0] * len(self.coords)
        for h, (src, tgt) in enumerate(d.arrows):
            X = self.base[h]
            if tgt == i:
                # + n_tgt x_h
                for (r, m), val in ni.items():
                    for c, x in enumerate(X[m]):
                        if x:
                            pos = self.index[(h, r, c)]
                            vec[pos] = F.add[vec[pos]][F.mul[val][x]]
            if src == i:
                # - x_h n_src
                for (m, c), val in ni.items():
                    for r in range(len(X)):
                        x = X[r][m]
                        if x:
                            pos = self.index[(h, r, c)]
                            vec[pos] = F.sub[vec[pos]][F.mul[x][val]]
        return vec

    def point(self, coord_values):
        maps = [[list(row) for row in M] for M in self.base]
        for (h, r, c), x in coord_values:
            maps[h][r][c] = x
        return Rep(self.data, self.q, self.dim, maps)


def _enumerate_affine(space, free_coords):
    Fq = space.F.order
    if Fq ** len(free_coords) > MAX_POINTS:
        raise SizeLimitExceeded(f"{Fq}^{len(free_coords)} points")
    census = Counter()
    for vals in product(range(Fq), repeat=len(free_coords)):
        X = space.point([(space.coords[p], v) for p, v in zip(free_coords, vals) if v])
        census[classify(X)] += 1
    return census


def slice_census(N, q, direction="bottom"):
    """Counter of iso classes on the transversal slice through the layered point of N."""
    sp = _LayeredSpace(N, q, direction)
    rows = sp.tangent_rows()
    piv = rref(sp.F, rows, len(sp.coords))[1] if rows else []
    free = [p for p in range(len(sp.coords)) if p not in set(piv)]
    return _enumerate_affine(sp, free)


def slice_count(N, M, q, direction="bottom"):
    if N.dim != M.dim:
        return 0
    return slice_census(N, q, direction)[M]


def unipotent_filtration_count(M, N, q, direction="bottom"):
    """(|Y_N meet O_M|, |U|) for the block-triangular set Y_N with fixed diagonal blocks."""
    sp = _LayeredSpace(N, q, direction)
    census = _enumerate_affine(sp, list(range(len(sp.coords))))
    return census[M], q ** sp.unipotent_dim()


def slice_polynomial(N, M, direction="bottom"):
    """Interpolated |E_N meet O_M| as a polynomial in q."""
    cap = max(M.orbit_dim - N.orbit_dim, 0) + 1
    return HallPolynomial(*_fit(lambda x: slice_count(N, M, x, direction), cap))
