"""Exact scalars: integer polynomials in q, Laurent polynomials in v over Z[omega].

omega is a formal primitive o-th root of unity; coefficients are coordinate
tuples in the power basis 1, omega, ..., omega^(phi(o)-1) of Z[omega].
"""
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def cyclotomic(n):
    """Integer coefficients (low to high) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv_exact(num, cyclotomic(d))
    return tuple(num)


def _polydiv_exact(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = a[k + len(b) - 1] // b[-1]
        out[k] = c
        for j, bj in enumerate(b):
            a[k + j] -= c * bj
    assert not any(a), "inexact division"
    return out


def cyc_zero(o):
    return (0,) * (len(cyclotomic(o)) - 1)


def cyc_const(o, c):
    z = list(cyc_zero(o))
    z[0] = c
    return tuple(z)


def cyc_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def cyc_neg(a):
    return tuple(-x for x in a)


def cyc_mul(o, a, b):
    phi = cyclotomic(o)
    d = len(phi) - 1
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for j in range(d + 1):
                prod[k - d + j] -= c * phi[j]
    return tuple(prod[:d])


def cyc_conj(o, a):
    """Complex conjugation omega -> omega^{-1}."""
    out = cyc_zero(o)
    for k, c in enumerate(a):
        if c:
            out = cyc_add(out, tuple(c * x for x in cyc_power(o, (-k) % o)))
    return out


@lru_cache(maxsize=None)
def cyc_power(o, k):
    w = list(cyc_zero(o))
    if len(w) == 1:
        # phi(o) == 1: omega is 1 (o=1) or -1 (o=2)
        return ((-1) ** k if o == 2 else 1,)
    w[1] = 1
    r = cyc_const(o, 1)
    for _ in range(k):
        r = cyc_mul(o, r, tuple(w))
    return r


class Laurent:
    """Element of Z[omega][v, v^-1]; immutable."""

    __slots__ = ("terms", "o")

    def __init__(self, terms=None, o=1):
        self.o = o
        clean = {}
        for e, c in (terms or {}).items():
            if isinstance(c, int):
                c = cyc_const(o, c)
            if any(c):
                clean[e] = tuple(c)
        self.terms = clean

    @classmethod
    def const(cls, c, o=1):
        return cls({0: c}, o)

    @classmethod
    def mono(cls, k, c=1, o=1):
        return cls({k: c}, o)

    @classmethod
    def omega(cls, o, k=1):
        return cls({0: cyc_power(o, k % o)}, o)

    def _coerce(self, other):
        if isinstance(other, Laurent):
            return other
        if isinstance(other, int):
            return Laurent.const(other, self.o)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        o = max(self.o, other.o)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = cyc_add(t[e], c) if e in t else c
        return Laurent(t, o)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: cyc_neg(c) for e, c in self.terms.items()}, self.o)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        o = max(self.o, other.o)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                p = cyc_mul(o, _lift(c1, self.o, o), _lift(c2, other.o, o))
                e = e1 + e2
                t[e] = cyc_add(t[e], p) if e in t else p
        return Laurent(t, o)

    __rmul__ = __mul__

    def __pow__(self, n):
        r = Laurent.const(1, self.o)
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def bar(self):
        """v -> v^-1 and omega -> omega^-1."""
        return Laurent({-e: cyc_conj(self.o, c) for e, c in self.terms.items()}, self.o)

    def shift(self, k):
        return Laurent({e + k: c for e, c in self.terms.items()}, self.o)

    def exponents(self):
        return sorted(self.terms)

    def min_exp(self):
        return min(self.terms) if self.terms else None

    def max_exp(self):
        return max(self.terms) if self.terms else None

    def omega_free(self):
        return all(not any(c[1:]) for c in self.terms.values())

    def coeff(self, e):
        c = self.terms.get(e)
        return c[0] if c is not None and self.omega_free() else (c or 0)

    def positive_part(self):
        return Laurent({e: c for e, c in self.terms.items() if e > 0}, self.o)

    def to_json(self):
        return {str(e): list(c) for e, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, d, o=1):
        return cls({int(e): tuple(c) for e, c in d.items()}, o)

    def specialize(self, q):
        """Value at v = -1/sqrt(q), as a Surd a + b*sqrt(q)."""
        a, b = cyc_zero(self.o), cyc_zero(self.o)
        for e, c in self.terms.items():
            sign = -1 if e % 2 else 1
            if e % 2 == 0:
                f = Fraction(1, 1) * Fraction(q) ** (-e // 2)
                a = cyc_add(a, tuple(sign * f * x for x in c))
            else:
                f = Fraction(q) ** (-(e + 1) // 2)
                b = cyc_add(b, tuple(sign * f * x for x in c))
        return Surd(a, b, q, self.o)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            cs = str(c[0]) if not any(c[1:]) else "(" + "+".join(
                f"{x}*w^{k}" for k, x in enumerate(c) if x) + ")"
            if e == 0:
                parts.append(cs)
            else:
                mon = "v" if e == 1 else f"v^{e}"
                parts.append(mon if cs == "1" else ("-" + mon if cs == "-1" else f"{cs}*{mon}"))
        return " + ".join(parts).replace("+ -", "- ")


def _lift(c, o_from, o_to):
    if o_from == o_to:
        return c
    if o_from == 1:
        return cyc_const(o_to, c[0])
    raise ValueError("mixing different roots of unity")


class Surd:
    """a + b*sqrt(q) with a, b in Q[omega]."""

    __slots__ = ("a", "b", "q", "o")

    def __init__(self, a, b, q, o=1):
        self.a, self.b, self.q, self.o = tuple(a), tuple(b), q, o

    def __add__(self, other):
        return Surd(cyc_add(self.a, other.a), cyc_add(self.b, other.b), self.q, self.o)

    def __mul__(self, other):
        o = self.o
        aa = cyc_mul(o, self.a, other.a)
        bb = cyc_mul(o, self.b, other.b)
        a = cyc_add(aa, tuple(self.q * x for x in bb))
        b = cyc_add(cyc_mul(o, self.a, other.b), cyc_mul(o, self.b, other.a))
        return Surd(a, b, self.q, o)

    def __eq__(self, other):
        return self.q == other.q and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b, self.q))

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.q}))"

    @classmethod
    def zero(cls, q, o=1):
        return cls(cyc_zero(o), cyc_zero(o), q, o)


ZERO = Laurent()
ONE = Laurent.const(1)
V = Laurent.mono(1)


class QPoly:
    """Integer polynomial in q; coefficients low to high, no trailing zeros."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def const(cls, k):
        return cls((k,))

    @classmethod
    def q_power(cls, k):
        return cls((0,) * k + (1,))

    def degree(self):
        return len(self.c) - 1

    def __call__(self, x):
        r = 0
        for a in reversed(self.c):
            r = r * x + a
        return r

    def __add__(self, other):
        other = _qp(other)
        n = max(len(self.c), len(other.c))
        return QPoly([(self.c[i] if i < len(self.c) else 0) + (other.c[i] if i < len(other.c) else 0)
                      for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-x for x in self.c])

    def __sub__(self, other):
        return self + (-_qp(other))

    def __rsub__(self, other):
        return _qp(other) - self

    def __mul__(self, other):
        other = _qp(other)
        if not self.c or not other.c:
            return QPoly()
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        r = QPoly.const(1)
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        return isinstance(other, QPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return bool(self.c)

    def divmod(self, other):
        """Division by a polynomial with leading coefficient +-1."""
        if not other.c or abs(other.c[-1]) != 1:
            raise ValueError("divisor must have unit leading coefficient")
        r = list(self.c)
        d = len(other.c) - 1
        quo = [0] * max(len(r) - d, 0)
        for k in range(len(r) - 1, d - 1, -1):
            f = r[k] * other.c[-1]
            quo[k - d] = f
            for j, b in enumerate(other.c):
                r[k - d + j] -= f * b
        return QPoly(quo), QPoly(r[:d])

    def exact_div(self, other):
        quo, rem = self.divmod(other)
        if rem:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return quo

    def to_laurent(self, step=-2):
        """Substitute q = v^step."""
        return Laurent({step * i: a for i, a in enumerate(self.c)})

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if not a:
                continue
            mon = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if not mon:
                parts.append(str(a))
            elif a == 1:
                parts.append(mon)
            elif a == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{a}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


def _qp(x):
    return x if isinstance(x, QPoly) else QPoly.const(x)


def interpolate(points):
    """Lagrange interpolation through (x, y) integer points; returns Fraction coefficients."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(n):
            coeffs[k] += yi * basis[k] / denom
    return coeffs


def gl_order(Q, m):
    """|GL_m(F_Q)| as a QPoly in Q, given Q as a QPoly."""
    r = QPoly.const(1)
    for k in range(m):
        r = r * (Q ** m - Q ** k)
    return r
