"""Bar involution on PBW classes, the bar-invariant basis, and the identities it satisfies.

Two independent routes give the bar matrix R (bar(pbw_a) = sum_b R[a, b] pbw_b):
  oracle  expand PBW classes in monomials of simple generators (which bar fixes), over Q(v);
  gs      r_MN = v^{od(N) - od(M)} X_MN(v^2), X_MN = F^M_{layers of N} prod a_{N_i} / a_M.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

import sympy
from sympy.polys.matrices import DomainMatrix

from .algebra import TWISTS, AlgebraElement, degeneration_leq, linear_extension, multiply, simple_generator
from .hall import filtration_polynomial, isotypic_layers, slice_polynomial
from .laurent import Laurent, QPoly, Surd
from .reps import aut_poly, canonical_string, dims_up_to, type_data


class EliminationFailed(ArithmeticError):
    pass


class NonLaurentEntry(ArithmeticError):
    pass


class NoSolution(ArithmeticError):
    pass


class IdentityFailed(AssertionError):
    pass


@dataclass
class TransitionMatrix:
    """Square matrix of Laurent scalars indexed by classes in a fixed linear extension."""
    role: str
    label: str
    dim: tuple
    classes: list
    entries: list
    meta: dict = field(default_factory=dict)

    @property
    def size(self):
        return len(self.classes)

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def o(self):
        return type_data(self.label).o

    def bar(self):
        return self._like([[x.bar() for x in row] for row in self.entries])

    def _like(self, entries, role=None):
        return TransitionMatrix(role or self.role, self.label, self.dim, self.classes, entries, dict(self.meta))

    def __matmul__(self, other):
        n = self.size
        zero = Laurent.const(0, self.o())
        out = [[sum((self.entries[i][k] * other.entries[k][j] for k in range(n)), zero)
                for j in range(n)] for i in range(n)]
        return self._like(out)

    def __eq__(self, other):
        return isinstance(other, TransitionMatrix) and self.classes == other.classes and \
            all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    def is_identity(self):
        return all(self.entries[i][j] == int(i == j) for i in range(self.size) for j in range(self.size))

    def support_violations(self):
        """Nonzero entries (i, j), i != j, with classes[j] not below classes[i] in degeneration order."""
        bad = []
        for i, a in enumerate(self.classes):
            for j, b in enumerate(self.classes):
                if i != j and self.entries[i][j] and not degeneration_leq(b, a):
                    bad.append((a, b))
        return bad

    def unitriangular(self):
        return all(self.entries[i][i] == 1 for i in range(self.size)) and not self.support_violations()

    def to_json(self):
        return {"role": self.role, "type": self.label, "dim": list(self.dim),
                "classes": [canonical_string(m) for m in self.classes],
                "entries": [[x.to_json() for x in row] for row in self.entries],
                **({"report": self.meta} if self.meta else {})}

    def table(self):
        names = [canonical_string(m) for m in self.classes]
        cells = [[repr(x) for x in row] for row in self.entries]
        w = max([len(s) for s in names] + [len(c) for row in cells for c in row] + [1])
        lines = [" " * w + " | " + " | ".join(s.ljust(w) for s in names)]
        for nm, row in zip(names, cells):
            lines.append(nm.ljust(w) + " | " + " | ".join(c.ljust(w) for c in row))
        return "\n".join(ln.rstrip() for ln in lines)

    def latex(self):
        names = [canonical_string(m) for m in self.classes]
        head = "\\begin{tabular}{l|" + "c" * len(names) + "}\n"
        rows = [" & ".join([""] + [f"${n}$" for n in names]) + " \\\\ \\hline"]
        for nm, row in zip(names, self.entries):
            rows.append(" & ".join([f"${nm}$"] + [f"${_latex(x)}$" for x in row]) + " \\\\")
        return head + "\n".join(rows) + "\n\\end{tabular}"


def _latex(x):
    if not x:
        return "0"
    out = []
    for e in sorted(x.terms, reverse=True):
        c = x.terms[e][0] if not any(x.terms[e][1:]) else None
        mon = "" if e == 0 else ("v" if e == 1 else f"v^{{{e}}}")
        if c is None:
            cs = "(" + "+".join(f"{a}\\omega^{{{k}}}" for k, a in enumerate(x.terms[e]) if a) + ")"
        elif mon and c in (1, -1):
            cs = "-" if c == -1 else ""
        else:
            cs = str(c)
        out.append(cs + mon)
    return " + ".join(out).replace("+ -", "- ")


# sympy bridge -----------------------------------------------------------------

_v = sympy.Symbol("v")
_K = sympy.QQ.frac_field(_v)


def _to_k(x):
    if not x.omega_free():
        raise EliminationFailed("omega-dependent entry")
    return _K.from_sympy(sum((sympy.Integer(c[0]) * _v ** e for e, c in x.terms.items()), sympy.Integer(0)))


def _from_k(x, o=1):
    num, den = x.numer, x.denom
    dterms = den.terms()
    if len(dterms) != 1:
        raise NonLaurentEntry(f"non-Laurent value {_K.to_sympy(x)}")
    (dexp,), dc = dterms[0]
    out = {}
    for (e,), c in num.terms():
        c = sympy.Rational(c) / sympy.Rational(dc)
        if c.q != 1:
            raise NonLaurentEntry(f"non-integral value {_K.to_sympy(x)}")
        out[e - dexp] = int(c)
    return Laurent(out, o)


def _dm(rows):
    return DomainMatrix([[_to_k(x) for x in row] for row in rows], (len(rows), len(rows[0])), _K)


# oracle route ----------------------------------------------------------------

def _words(dim):
    letters = [i for i, k in enumerate(dim) for _ in range(k)]
    return sorted(set(permutations(letters)))


def _monomial(label, word, twist):
    x = AlgebraElement.unit(label, twist)
    for i in word:
        x = multiply(x, simple_generator(label, i, twist))
    return x


def _oracle_for_twist(label, dim, twist):
    data = type_data(label)
    classes = linear_extension(data, dim)
    o = data.o
    zero = Laurent.const(0, o)
    rows = [[_monomial(label, w, twist).coeff(m) for m in classes] for w in _words(dim)]
    n = len(classes)
    chosen, rk = [], 0
    for r in rows:
        if _dm(chosen + [r]).rank() > rk:
            chosen.append(r)
            rk += 1
        if rk == n:
            break
    if rk < n:
        raise EliminationFailed(f"monomials span only {rk} of {n} classes")
    S = _dm(chosen)
    Sbar = _dm([[x.bar() for x in row] for row in chosen])
    Ru = Sbar.inv().matmul(S)
    # bar must fix every monomial, not only the chosen ones
    All = _dm(rows)
    Allbar = _dm([[x.bar() for x in row] for row in rows])
    if Allbar.matmul(Ru) != All:
        raise EliminationFailed(f"bar is not consistent with the {twist} twist")
    ents = []
    for i, a in enumerate(classes):
        row = []
        for j, b in enumerate(classes):
            row.append(_from_k(Ru[i, j].element, o).shift(-a.orbit_dim - b.orbit_dim))
        ents.append(row)
    return TransitionMatrix("R", label, tuple(dim), classes, ents, {"route": "oracle", "twist": twist})


def _try_twist(label, dim, tw):
    """R for one twist, or a string saying why that twist is rejected."""
    try:
        R = _oracle_for_twist(label, dim, tw)
    except (EliminationFailed, NonLaurentEntry) as e:
        return str(e)
    if not R.unitriangular():
        return "bar matrix on PBW classes is not unitriangular"
    if not (R @ R.bar()).is_identity():
        return "not an involution"
    return R


PROBE_TOTAL = 3


@lru_cache(maxsize=None)
def select_twist(label, dim=None):
    """First twist (in TWISTS order) that works on all small dimension vectors and on dim."""
    data = type_data(label)
    probes = [d for d in dims_up_to(data, PROBE_TOTAL) if any(d)]
    if dim is not None and tuple(dim) not in probes:
        probes.append(tuple(dim))
    rejected = {}
    for tw in TWISTS:
        for d in probes:
            r = _try_twist(label, d, tw)
            if isinstance(r, str):
                rejected[tw] = f"at {list(d)}: {r}"
                break
        else:
            return tw, rejected
    raise EliminationFailed(f"no twist gives a unitriangular bar involution: {rejected}")


@lru_cache(maxsize=None)
def bar_matrix_oracle(label, dim, twist=None):
    """R from monomial elimination; the twist is chosen per type unless given."""
    dim = tuple(dim)
    rejected = {}
    if twist is None:
        twist, rejected = select_twist(label, dim)
    R = _try_twist(label, dim, twist)
    if isinstance(R, str):
        raise EliminationFailed(f"{twist} twist at {list(dim)}: {R}")
    R.meta["rejected_twists"] = rejected
    return R


# filtration route ----------------------------------------------------------------

def gs_ratio(M, N, direction="bottom"):
    """X_MN = F^M(layers of N) * prod a_{N_i} / a_M as an integer polynomial in q."""
    F = filtration_polynomial(M, isotypic_layers(N), direction)
    if not F:
        return QPoly()
    num = F
    for T in isotypic_layers(N):
        num = num * aut_poly(T)
    try:
        return num.exact_div(aut_poly(M))
    except ArithmeticError:
        raise NonLaurentEntry(f"a-ratio does not clear for M={M}, N={N}")


def _x_to_entry(X, M, N, o, exponent):
    """v^{sign*(od N - od M)} X(v^2) ('pbw': sign +1, 'literal': sign -1)."""
    e = {"pbw": N.orbit_dim - M.orbit_dim, "literal": M.orbit_dim - N.orbit_dim}[exponent]
    return X.to_laurent(2).shift(e) if X else Laurent.const(0, o)


@lru_cache(maxsize=None)
def bar_matrix_gs(label, dim, direction="bottom", exponent="pbw"):
    data = type_data(label)
    classes = linear_extension(data, tuple(dim))
    ents = [[_x_to_entry(gs_ratio(M, N, direction), M, N, data.o, exponent) for N in classes] for M in classes]
    return TransitionMatrix("R", label, tuple(dim), classes, ents,
                            {"route": "gs", "direction": direction, "exponent": exponent})


def select_direction(label, dim):
    """Direction selection at one dim: the filtration directions whose R is an involution agreeing with the oracle."""
    dim = tuple(dim)
    oracle = bar_matrix_oracle(label, dim)
    report = {"type": label, "dim": list(dim), "oracle_twist": oracle.meta["twist"], "directions": {}}
    passing = []
    for d in ("top", "bottom"):
        try:
            R = bar_matrix_gs(label, dim, d)
        except NonLaurentEntry as e:
            report["directions"][d] = f"fails: {e}"
            continue
        inv = (R @ R.bar()).is_identity()
        agree = R == oracle
        fails = [s for s, ok in (("not an involution", inv), ("disagrees with oracle", agree)) if not ok]
        report["directions"][d] = "fails: " + ", ".join(fails) if fails else "pass"
        if not fails:
            passing.append(d)
    report["passing"] = passing
    return passing, report


def select_direction_for_type(label, dims):
    """Direction selection per type: the unique direction passing at every dim; dims with one class are uninformative."""
    reports = [select_direction(label, d)[1] for d in dims]
    ok = [d for d in ("top", "bottom") if all(d in r["passing"] for r in reports)]
    summary = {"type": label, "selected": ok[0] if len(ok) == 1 else None, "passing": ok,
               "failures": {d: [(r["dim"], r["directions"][d]) for r in reports if d not in r["passing"]]
                            for d in ("top", "bottom")},
               "dims": [r["dim"] for r in reports]}
    return summary["selected"], summary


# canonical basis -------------------------------------------------------------------

def solve_canonical(R):
    """P with rows b_a = sum_b P[a, b] pbw_b bar-invariant, P unitriangular, off-diagonal in vZ[v]."""
    n, o = R.size, R.o()
    zero = Laurent.const(0, o)
    P = [[Laurent.const(int(i == j), o) for j in range(n)] for i in range(n)]
    for lam in range(n):
        for mu in range(lam - 1, -1, -1):
            rhs = sum((P[lam][k].bar() * R.entries[k][mu] for k in range(mu + 1, lam + 1)), zero)
            if rhs.bar() != -rhs:
                raise NoSolution(f"right-hand side {rhs} is not bar-antisymmetric at ({lam}, {mu})")
            P[lam][mu] = rhs.positive_part()
    return R._like(P, "P")


def invert_unitriangular(P):
    n, o = P.size, P.o()
    zero = Laurent.const(0, o)
    Q = [[Laurent.const(int(i == j), o) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i - 1, -1, -1):
            Q[i][j] = -sum((P.entries[i][k] * Q[k][j] for k in range(j, i)), zero)
    return P._like(Q, "Q")


@lru_cache(maxsize=None)
def canonical_basis(label, dim):
    """(P, Q) for the bar-invariant basis at dim, from the oracle bar matrix."""
    R = bar_matrix_oracle(label, tuple(dim))
    P = solve_canonical(R)
    return P, invert_unitriangular(P)


def reversed_tie_break_agrees(label, dim):
    """Solve again in a different linear extension and compare entry by entry."""
    data = type_data(label)
    P, _ = canonical_basis(label, tuple(dim))
    order = linear_extension(data, tuple(dim), reverse_ties=True)
    R = bar_matrix_oracle(label, tuple(dim))
    idx = [R.classes.index(m) for m in order]
    R2 = TransitionMatrix("R", label, R.dim, order, [[R.entries[i][j] for j in idx] for i in idx])
    P2 = solve_canonical(R2)
    return all(P2.entries[a][b] == P.entries[idx[a]][idx[b]] for a in range(len(idx)) for b in range(len(idx)))


def corollary_violations(P):
    """Checks of the P-matrix properties; returns a list of failure strings."""
    bad = []
    for (a, b) in P.support_violations():
        bad.append(f"support: p[{a}, {b}] != 0 but {b} is not below {a}")
    for i, a in enumerate(P.classes):
        if P.entries[i][i] != 1:
            bad.append(f"diagonal p[{a}, {a}] = {P.entries[i][i]}")
        for j, b in enumerate(P.classes):
            x = P.entries[i][j]
            if i == j or not x:
                continue
            if x.min_exp() < 1:
                bad.append(f"p[{a}, {b}] = {x} not in vZ[v]")
            if any((e - (b.orbit_dim - a.orbit_dim)) % 2 for e in x.terms):
                bad.append(f"p[{a}, {b}] = {x} has the wrong parity")
            if not x.omega_free():
                bad.append(f"p[{a}, {b}] = {x} depends on omega")
    return bad


def bar_pbw_identity(label, dim, q):
    """R = bar(Q) P, checked symbolically and after v -> -1/sqrt(q). Returns a report dict."""
    R = bar_matrix_oracle(label, tuple(dim))
    P, Q = canonical_basis(label, tuple(dim))
    n = R.size
    symbolic = (Q.bar() @ P) == R
    Rs = [[x.specialize(q) for x in row] for row in R.entries]
    Ps = [[x.specialize(q) for x in row] for row in P.entries]
    Qs = [[x.bar().specialize(q) for x in row] for row in Q.entries]
    mismatches = []
    for i in range(n):
        for j in range(n):
            acc = Surd.zero(q, R.o())
            for k in range(n):
                acc = acc + Qs[i][k] * Ps[k][j]
            if acc != Rs[i][j]:
                mismatches.append((canonical_string(R.classes[i]), canonical_string(R.classes[j])))
    report = {"type": label, "dim": list(dim), "q": q, "symbolic": symbolic,
              "mismatches": mismatches, "ok": symbolic and not mismatches}
    if not report["ok"]:
        raise IdentityFailed(report)
    return report


def slice_bar_check(label, dim, direction="bottom"):
    """Compare R with v^{od N - od M} e_MN(v^2), e the interpolated slice count."""
    R = bar_matrix_oracle(label, tuple(dim))
    bad = []
    for i, M in enumerate(R.classes):
        for j, N in enumerate(R.classes):
            e = slice_polynomial(N, M, direction).poly
            entry = _x_to_entry(e, M, N, R.o(), "pbw")
            if entry != R.entries[i][j]:
                bad.append((canonical_string(M), canonical_string(N), repr(entry), repr(R.entries[i][j])))
    report = {"type": label, "dim": list(dim), "mismatches": bad, "ok": not bad}
    if bad:
        raise IdentityFailed(report)
    return report
