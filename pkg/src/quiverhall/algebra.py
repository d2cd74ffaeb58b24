"""The twisted Hall algebra over Z[omega][v, v^-1].

u_a o u_b = v^{t(dim a, dim b)} sum_L g^L_{a b}(v^-2) u_L, where the twist t is one of
  negative -(sum_i a_i b_i + sum_arrows a_src b_tgt)   on the unfolded quiver
  lusztig  +(same quadratic form)
  euler    <a, b>, the Euler form of the unfolded quiver.
"""
from functools import lru_cache

from .hall import hall_polynomial
from .laurent import Laurent
from .quiver import DimensionMismatch
from .reps import enumerate_modules, hom_dim, type_data, canonical_string

TWISTS = ("negative", "euler", "lusztig")


class NonLaurentConstant(ArithmeticError):
    pass


def twist_power(data, d1, d2, twist="negative"):
    if twist == "negative":
        return -data.twist(d1, d2)
    if twist == "lusztig":
        return data.twist(d1, d2)
    if twist == "euler":
        return data.euler_unfolded(d1, d2)
    raise ValueError(f"unknown twist {twist!r}")


class AlgebraElement:
    """Finite combination of basis functions u_lambda with Laurent coefficients."""

    __slots__ = ("label", "terms", "twist")

    def __init__(self, label, terms=None, twist="negative"):
        self.label = label
        self.twist = twist
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @property
    def data(self):
        return type_data(self.label)

    @classmethod
    def basis(cls, m, twist="negative", coeff=None):
        o = m.data.o
        return cls(m.label, {m: coeff if coeff is not None else Laurent.const(1, o)}, twist)

    @classmethod
    def unit(cls, label, twist="negative"):
        return cls.basis(type_data(label).zero(), twist)

    def _same(self, other):
        if self.label != other.label or self.twist != other.twist:
            raise ValueError("elements live in different algebras")

    def __add__(self, other):
        self._same(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t[m] + c if m in t else c
        return AlgebraElement(self.label, t, self.twist)

    def __neg__(self):
        return AlgebraElement(self.label, {m: -c for m, c in self.terms.items()}, self.twist)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return AlgebraElement(self.label, {m: c * x for m, x in self.terms.items()}, self.twist)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.label == other.label and \
            self.twist == other.twist and not (self - other).terms

    def __hash__(self):
        return hash((self.label, frozenset(self.terms)))

    def coeff(self, m):
        return self.terms.get(m, Laurent.const(0, self.data.o))

    def dims(self):
        return {m.dim for m in self.terms}

    def to_json(self):
        key = lambda m: (m.dim, m.mult)
        return {"terms": [{"class": canonical_string(m), "coeff": self.terms[m].to_json()}
                          for m in sorted(self.terms, key=key)]}

    def __repr__(self):
        if not self.terms:
            return "0"
        key = lambda m: (m.dim, m.mult)
        return " + ".join(f"({self.terms[m]})*u[{m}]" for m in sorted(self.terms, key=key))


@lru_cache(maxsize=None)
def _product_basis(a, b, twist):
    """u_a o u_b as a dict class -> Laurent."""
    data = a.data
    dim = tuple(x + y for x, y in zip(a.dim, b.dim))
    shift = twist_power(data, a.dim, b.dim, twist)
    out = {}
    for L in enumerate_modules(data, dim):
        g = hall_polynomial(L, a, b).poly
        if g:
            out[L] = _to_laurent(g, data.o).shift(shift)
    return out


def _to_laurent(g, o):
    return Laurent({-2 * k: c for k, c in enumerate(g.c) if c}, o)


def multiply(x, y):
    x._same(y)
    out = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            c = ca * cb
            for L, h in _product_basis(a, b, x.twist).items():
                out[L] = out[L] + c * h if L in out else c * h
    return AlgebraElement(x.label, out, x.twist)


def simple_generator(label, i, twist="negative"):
    return AlgebraElement.basis(type_data(label).simple(i), twist)


def pbw_class(m, twist="negative"):
    """PBW element v^{orbit_dim} u_m."""
    return AlgebraElement.basis(m, twist, Laurent.mono(m.orbit_dim, 1, m.data.o))


def structure_constants(a, b, twist="negative"):
    """h^L_{a b} on PBW classes: pbw_a o pbw_b = sum_L h^L pbw_L."""
    out = {}
    for L, c in _product_basis(a, b, twist).items():
        h = c.shift(a.orbit_dim + b.orbit_dim - L.orbit_dim)
        if not isinstance(h, Laurent):
            raise NonLaurentConstant(f"h^{L}_{a},{b}")
        out[L] = h
    return out


def degeneration_leq(a, b):
    """a <= b in the degeneration order: hom(X, a) >= hom(X, b) for every indecomposable X."""
    if a.label != b.label or a.dim != b.dim:
        raise DimensionMismatch(f"{a} and {b} have different dimension vectors")
    data = a.data
    for t in range(len(data.indec)):
        X = data.module([int(u == t) for u in range(len(data.indec))])
        if hom_dim(X, a) < hom_dim(X, b):
            return False
    return True


def linear_extension(data, dim, reverse_ties=False):
    """Classes of dimension dim sorted compatibly with degeneration order (orbit dim first)."""
    mods = enumerate_modules(data, dim)
    pos = {m: k for k, m in enumerate(mods)}
    sign = -1 if reverse_ties else 1
    return sorted(mods, key=lambda m: (m.orbit_dim, sign * pos[m]))
