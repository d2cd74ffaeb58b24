"""Quivers with admissible automorphisms, folding to Cartan data, and the shipped catalog."""
import json
from dataclasses import dataclass, field
from math import gcd


class NonIntegralCartan(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class UnknownType(KeyError):
    pass


@dataclass(frozen=True)
class Arrow:
    id: str
    src: object
    tgt: object


@dataclass(frozen=True)
class QuiverWithAutomorphism:
    vertices: tuple
    arrows: tuple
    vertex_perm: dict = field(hash=False)
    arrow_perm: dict = field(hash=False)
    period: int = None
    label: str = ""

    def __hash__(self):
        return hash((self.vertices, self.arrows, tuple(sorted(self.vertex_perm.items(), key=repr)),
                     tuple(sorted(self.arrow_perm.items(), key=repr))))

    @classmethod
    def build(cls, vertices, arrows, vertex_perm=None, arrow_perm=None, period=None, label=""):
        """Convenience constructor; arrows may be (src, tgt) pairs, ids are generated."""
        arr = []
        for k, a in enumerate(arrows):
            arr.append(a if isinstance(a, Arrow) else Arrow(f"h{k}", a[0], a[1]))
        vp = {v: v for v in vertices}
        vp.update(vertex_perm or {})
        if arrow_perm is None:
            # induce the arrow permutation from the vertex permutation
            by_ends = {(a.src, a.tgt): a.id for a in arr}
            arrow_perm = {}
            for a in arr:
                key = (vp.get(a.src), vp.get(a.tgt))
                if key in by_ends:
                    arrow_perm[a.id] = by_ends[key]
        ap = {a.id: a.id for a in arr}
        ap.update(arrow_perm)
        return cls(tuple(vertices), tuple(arr), vp, ap, period, label)

    # JSON -----------------------------------------------------------------

    def to_json(self):
        return json.dumps({
            "vertices": list(self.vertices),
            "arrows": [{"id": a.id, "src": a.src, "tgt": a.tgt} for a in self.arrows],
            "vertex_perm": {str(k): v for k, v in self.vertex_perm.items()},
            "arrow_perm": dict(self.arrow_perm),
            "period": self.period,
            "label": self.label,
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        d = json.loads(text) if isinstance(text, str) else text
        verts = list(d["vertices"])
        lookup = {str(v): v for v in verts}
        arrows = [Arrow(a["id"], a["src"], a["tgt"]) for a in d["arrows"]]
        vp = {lookup.get(str(k), k): v for k, v in d.get("vertex_perm", {}).items()}
        return cls.build(verts, arrows, vp, d.get("arrow_perm") or None, d.get("period"), d.get("label", ""))

    # helpers --------------------------------------------------------------

    def vertex_orbits(self):
        """Orbits of the vertex permutation, ordered by first appearance in `vertices`."""
        seen, orbits = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            orb, w = [], v
            while w not in seen:
                seen.add(w)
                orb.append(w)
                w = self.vertex_perm[w]
            orbits.append(tuple(orb))
        return orbits

    def arrow_orbits(self):
        seen, orbits = set(), []
        for a in self.arrows:
            if a.id in seen:
                continue
            orb, h = [], a.id
            while h not in seen:
                seen.add(h)
                orb.append(h)
                h = self.arrow_perm[h]
            orbits.append(tuple(orb))
        return orbits

    def arrow(self, hid):
        return next(a for a in self.arrows if a.id == hid)

    def order(self):
        """Order of the automorphism (lcm of orbit lengths)."""
        o = 1
        for orb in self.vertex_orbits() + self.arrow_orbits():
            o = o * len(orb) // gcd(o, len(orb))
        return o


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple = ()


def _dynkin_component_ok(verts, adj):
    n = len(verts)
    edges = sum(len(adj[v]) for v in verts) // 2
    if edges != n - 1:
        return False
    degs = [len(adj[v]) for v in verts]
    if max(degs, default=0) <= 2:
        return True
    branch = [v for v in verts if len(adj[v]) >= 3]
    if len(branch) != 1 or len(adj[branch[0]]) != 3:
        return False
    c = branch[0]
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length + 1)
    p, q, r = sorted(arms)
    # 1/p + 1/q + 1/r > 1
    return q * r + p * r + p * q > p * q * r


def validate_admissible(quiver):
    v = []
    verts = set(quiver.vertices)
    ids = [a.id for a in quiver.arrows]
    for a in quiver.arrows:
        if a.src not in verts or a.tgt not in verts:
            v.append(f"arrow {a.id}: endpoint not a declared vertex")
    if v:
        return ValidationReport(False, tuple(v))
    if sorted(map(repr, quiver.vertex_perm.values())) != sorted(map(repr, quiver.vertices)) \
            or set(quiver.vertex_perm) != verts:
        v.append("vertex_perm is not a permutation of the vertices")
    if set(quiver.arrow_perm) != set(ids) or sorted(quiver.arrow_perm.values()) != sorted(ids):
        v.append("arrow_perm is not a permutation of the arrows")
    if v:
        return ValidationReport(False, tuple(v))
    for a in quiver.arrows:
        if a.src == a.tgt:
            v.append(f"arrow {a.id}: loop")
        b = quiver.arrow(quiver.arrow_perm[a.id])
        if b.src != quiver.vertex_perm[a.src] or b.tgt != quiver.vertex_perm[a.tgt]:
            v.append(f"arrow {a.id}: condition (a) fails, a({a.id})={b.id} has wrong endpoints")
    orbit_of = {}
    for k, orb in enumerate(quiver.vertex_orbits()):
        for w in orb:
            orbit_of[w] = k
    for a in quiver.arrows:
        if orbit_of[a.src] == orbit_of[a.tgt]:
            v.append(f"arrow {a.id}: condition (b) fails, {a.src} and {a.tgt} share orbit "
                     f"{quiver.vertex_orbits()[orbit_of[a.src]]}")
    o = quiver.order()
    if quiver.period is not None and quiver.period % o:
        v.append(f"automorphism order {o} does not divide declared period {quiver.period}")
    adj = {w: [] for w in quiver.vertices}
    pairs = set()
    for a in quiver.arrows:
        key = frozenset((a.src, a.tgt))
        if key in pairs:
            v.append(f"arrow {a.id}: multiple edge {a.src}-{a.tgt}")
        pairs.add(key)
        adj[a.src].append(a.tgt)
        adj[a.tgt].append(a.src)
    seen = set()
    for w in quiver.vertices:
        if w in seen:
            continue
        comp, stack = [], [w]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            comp.append(x)
            stack.extend(adj[x])
        if not _dynkin_component_ok(comp, adj):
            v.append(f"component {sorted(comp, key=repr)} is not an ADE Dynkin diagram")
    return ValidationReport(not v, tuple(v))


@dataclass(frozen=True)
class FoldedCartan:
    orbit_index: tuple
    cartan: tuple
    orbit_sizes: tuple
    type_label: str

    @property
    def rank(self):
        return len(self.orbit_sizes)


def fold(quiver):
    orbits = quiver.vertex_orbits()
    where = {w: k for k, orb in enumerate(orbits) for w in orb}
    n = len(orbits)
    s = [len(o) for o in orbits]
    edges = [[0] * n for _ in range(n)]
    for a in quiver.arrows:
        i, j = where[a.src], where[a.tgt]
        edges[i][j] += 1
        edges[j][i] += 1
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and edges[i][j]:
                if edges[i][j] % s[i]:
                    raise NonIntegralCartan(f"{edges[i][j]} edges between orbits {orbits[i]}, {orbits[j]}"
                                            f" not divisible by orbit size {s[i]}")
                C[i][j] = -edges[i][j] // s[i]
    C = tuple(tuple(r) for r in C)
    return FoldedCartan(tuple(orbits), C, tuple(s), classify_cartan(C, s))


def classify_cartan(C, s):
    n = len(C)
    seen, labels = set(), []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            comp.append(x)
            stack.extend(j for j in range(n) if j != x and C[x][j])
        labels.append(_classify_connected(C, s, sorted(comp)))
    return "x".join(labels)


def _classify_connected(C, s, comp):
    r = len(comp)
    prods = {(i, j): C[i][j] * C[j][i] for i in comp for j in comp if i < j and C[i][j]}
    bonds = sorted(prods.values())
    if all(b == 1 for b in bonds):
        deg = {i: sum(1 for j in comp if j != i and C[i][j]) for i in comp}
        if max(deg.values(), default=0) <= 2:
            return f"A{r}"
        c = next(i for i in comp if deg[i] == 3)
        arms = []
        for start in (j for j in comp if j != c and C[c][j]):
            length, prev, cur = 1, c, start
            while True:
                nxt = [j for j in comp if j not in (prev, cur) and C[cur][j]]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == arms[1] == 1:
            return f"D{r}"
        return f"E{r}"
    if 3 in bonds:
        return "G2"
    if r == 2:
        return "B2"
    if r == 4 and bonds.count(2) == 1:
        (i, j), = [k for k, b in prods.items() if b == 2]
        deg_i = sum(1 for k in comp if k != i and C[i][k])
        deg_j = sum(1 for k in comp if k != j and C[j][k])
        if deg_i == 2 and deg_j == 2:
            return "F4"
    long_count = sum(1 for i in comp if s[i] == max(s[k] for k in comp))
    return f"C{r}" if long_count == 1 else f"B{r}"


def unfold(quiver, dim):
    """Expand a folded dimension vector (indexed by vertex orbits) to the unfolded vertex set."""
    orbits = quiver.vertex_orbits()
    if len(dim) != len(orbits):
        raise DimensionMismatch(f"dimension vector {tuple(dim)} has {len(dim)} entries, expected {len(orbits)}")
    return {w: d for orb, d in zip(orbits, dim) for w in orb}


def twist_exponent(quiver, dim1, dim2):
    """Sum_i d1_i d2_i + sum over oriented arrows of d1_src d2_tgt, on the unfolded quiver."""
    u1, u2 = unfold(quiver, dim1), unfold(quiver, dim2)
    return sum(u1[w] * u2[w] for w in quiver.vertices) + \
        sum(u1[a.src] * u2[a.tgt] for a in quiver.arrows)


def euler_exponent(quiver, dim1, dim2):
    """Euler form of the unfolded quiver: sum_i d1_i d2_i - sum_arrows d1_src d2_tgt."""
    u1, u2 = unfold(quiver, dim1), unfold(quiver, dim2)
    return sum(u1[w] * u2[w] for w in quiver.vertices) - \
        sum(u1[a.src] * u2[a.tgt] for a in quiver.arrows)


# catalog -------------------------------------------------------------------

CATALOG_DOC = {
    "A1": "1, a = id",
    "A2": "1->2, a = id",
    "A3": "1->2->3, a = id",
    "A4": "1->2->3->4, a = id",
    "A5": "1->2->3->4->5, a = id",
    "D4": "1->0, 2->0, 3->0, a = id",
    "B2": "1->2<-3, a = (1 3)",
    "C3": "1->0, 2->0, 3->0, a = (1 2)",
    "G2": "1->0, 2->0, 3->0, a = (1 2 3)",
}


def catalog(label):
    """The shipped unfolded datum realizing `label` (see CATALOG_DOC)."""
    if label in ("A1", "A2", "A3", "A4", "A5"):
        n = int(label[1])
        return QuiverWithAutomorphism.build(list(range(1, n + 1)), [(i, i + 1) for i in range(1, n)],
                                            label=label)
    star = [(1, 0), (2, 0), (3, 0)]
    if label == "D4":
        return QuiverWithAutomorphism.build([0, 1, 2, 3], star, label=label)
    if label == "B2":
        return QuiverWithAutomorphism.build([1, 2, 3], [(1, 2), (3, 2)], {1: 3, 3: 1}, period=2, label=label)
    if label == "C3":
        return QuiverWithAutomorphism.build([0, 1, 2, 3], star, {1: 2, 2: 1}, period=2, label=label)
    if label == "G2":
        return QuiverWithAutomorphism.build([0, 1, 2, 3], star, {1: 2, 2: 3, 3: 1}, period=3, label=label)
    raise UnknownType(label)


def catalog_labels():
    return list(CATALOG_DOC)
