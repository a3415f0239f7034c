"""Root systems of simple Lie algebras and Chevalley structure constants.

Roots are kept as integer coordinate vectors over the simple roots
(Bourbaki numbering), so everything stays exact even for G2/F4.  The
structure-constant signs follow the extraspecial-pair convention with a
frozen total order on positive roots: ascending height, then descending
coordinate tuples.  Repeated runs produce identical tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .rational import QQ, ZERO

Root = tuple[int, ...]

#: distinct bad primes per simple type
BAD_PRIMES = {
    "A": (),
    "B": (2,),
    "C": (2,),
    "D": (2,),
    "E6": (2, 3),
    "E7": (2, 3),
    "E8": (2, 3, 5),
    "F": (2, 3),
    "G": (2, 3),
}

ROOT_COUNTS = {  # number of positive roots per (type, rank)
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class InvalidTypeError(ValueError):
    """Raised for (type, rank) combinations that are not a simple type."""


def cartan_matrix(type_label: str, rank: int) -> list[list[int]]:
    """Cartan matrix with entries a[i][j] = <alpha_j, alpha_i^vee>."""
    t = type_label.upper()
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if t not in valid or not valid[t] or rank > 8:
        raise InvalidTypeError(f"not a supported simple type: {type_label}{rank}")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if t in ("A", "B", "C"):
        for i in range(rank - 1):
            bond(i, i + 1)
        if t == "B" and rank >= 2:
            # alpha_rank is short
            bond(rank - 2, rank - 1, -1, -2)
        if t == "C" and rank >= 2:
            # alpha_rank is long
            bond(rank - 2, rank - 1, -2, -1)
    elif t == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif t == "E":
        # Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for x, y in zip(chain, chain[1:]):
            bond(x, y)
        bond(1, 3)
    elif t == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)  # alpha_3, alpha_4 short
        bond(2, 3)
    elif t == "G":
        bond(0, 1, -3, -1)  # alpha_1 short, alpha_2 long
    return a


@dataclass
class RootSystem:
    type_label: str
    rank: int
    cartan: list[list[int]]
    positive_roots: list[Root]
    _index: dict[Root, int] = field(default_factory=dict, repr=False)
    _sym: list[list[int]] = field(default_factory=list, repr=False)

    @property
    def simple_roots(self) -> list[Root]:
        return [tuple(1 if j == i else 0 for j in range(self.rank))
                for i in range(self.rank)]

    @property
    def all_roots(self) -> list[Root]:
        return self.positive_roots + [neg(a) for a in self.positive_roots]

    def is_root(self, a: Root) -> bool:
        return a in self._index or neg(a) in self._index

    def is_positive(self, a: Root) -> bool:
        return a in self._index

    def pos_index(self, a: Root) -> int:
        return self._index[a]

    def inner(self, a: Root, b: Root):
        """W-invariant inner product, short roots normalized to norm 2."""
        s = 0
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        s += ai * bj * self._sym[i][j]
        return QQ(s)

    def norm(self, a: Root):
        return self.inner(a, a)

    def pairing(self, b: Root, a: Root) -> int:
        """<b, a^vee> = 2(a,b)/(a,a) for roots a, b; always an integer."""
        v = 2 * self.inner(a, b) / self.norm(a)
        assert v.denominator == 1
        return int(v)

    def coroot(self, a: Root) -> list[int]:
        """Coordinates of a^vee over the simple coroots."""
        out = []
        for j, c in enumerate(a):
            v = QQ(c) * self.norm(self.simple_roots[j]) / self.norm(a)
            assert v.denominator == 1
            out.append(int(v))
        return out

    def root_string_p(self, a: Root, b: Root) -> int:
        """Largest p with b - p*a a root (a, b roots, b != +-a)."""
        p = 0
        cur = tuple(x - y for x, y in zip(b, a))
        while self.is_root(cur):
            p += 1
            cur = tuple(x - y for x, y in zip(cur, a))
        return p

    @property
    def bad_primes(self) -> tuple[int, ...]:
        t = self.type_label
        key = f"E{self.rank}" if t == "E" else t
        return BAD_PRIMES[key]


def neg(a: Root) -> Root:
    return tuple(-x for x in a)


def height(a: Root) -> int:
    return sum(a)


def root_sort_key(a: Root):
    return (height(a), tuple(-c for c in a))


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Construct the root system by closing the simple roots under root
    addition (root-string bounds), with a deterministic total order."""
    cm = cartan_matrix(type_label, rank)

    # symmetrized form d_i * a[i][j]; d determined by d_i a_ij = d_j a_ji
    d = [QQ(0)] * rank
    d[0] = QQ(1)
    changed = True
    while changed:
        changed = False
        for i in range(rank):
            for j in range(rank):
                if cm[i][j] != 0 and d[i] != 0 and d[j] == 0:
                    d[j] = d[i] * QQ(cm[i][j]) / QQ(cm[j][i])
                    changed = True
    scale = lcm(*(int(x.denominator) for x in d))
    dint = [int(x * scale) for x in d]
    g = min(dint)
    dint = [x // g for x in dint]
    sym = [[dint[i] * cm[i][j] for j in range(rank)] for i in range(rank)]

    rs = RootSystem(type_label.upper(), rank, cm, [], {}, sym)
    simples = rs.simple_roots
    roots: set[Root] = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for b in frontier:
            for i, a in enumerate(simples):
                cand = tuple(x + y for x, y in zip(b, a))
                if cand in roots:
                    continue
                # q = p - <b, alpha_i^vee> > 0  iff  b + alpha_i is a root
                p = 0
                cur = tuple(x - y for x, y in zip(b, a))
                while cur in roots or neg(cur) in roots:
                    p += 1
                    cur = tuple(x - y for x, y in zip(cur, a))
                pair = sum(b[j] * cm[i][j] for j in range(rank))
                if p - pair > 0:
                    roots.add(cand)
                    new.append(cand)
        frontier = new
    ordered = sorted(roots, key=root_sort_key)
    rs.positive_roots = ordered
    rs._index = {a: i for i, a in enumerate(ordered)}

    expected = ROOT_COUNTS[rs.type_label](rank)
    if len(ordered) != expected:
        raise AssertionError(
            f"positive root count {len(ordered)} != classical {expected}")
    return rs


class ChevalleyConstants:
    """Structure constants N_{a,b} with extraspecial-pair signs."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._pos: dict[tuple[Root, Root], int] = {}
        self._build()

    def _build(self) -> None:
        rs = self.rs
        order = {a: i for i, a in enumerate(rs.positive_roots)}
        by_height: dict[int, list[Root]] = {}
        for a in rs.positive_roots:
            by_height.setdefault(height(a), []).append(a)
        for h in sorted(by_height):
            if h < 2:
                continue
            for xi in by_height[h]:
                pairs = []
                for a in rs.positive_roots:
                    if order[a] >= order[xi]:
                        break
                    b = tuple(x - y for x, y in zip(xi, a))
                    if rs.is_positive(b) and order[a] < order[b]:
                        pairs.append((a, b))
                pairs.sort(key=lambda p: order[p[0]])
                if not pairs:
                    raise AssertionError(f"no special pair for {xi}")
                g, dd = pairs[0]  # the extraspecial pair
                self._pos[(g, dd)] = rs.root_string_p(g, dd) + 1
                for a, b in pairs[1:]:
                    n = self._from_extraspecial(a, b, g, dd, xi)
                    want = rs.root_string_p(a, b) + 1
                    assert abs(n) == want, (a, b, n, want)
                    self._pos[(a, b)] = n

    def _from_extraspecial(self, a, b, g, dd, xi) -> int:
        """Solve the four-root identity on (g, dd, -a, -b) for N_{a,b}."""
        rs = self.rs
        acc = ZERO
        s1 = tuple(x - y for x, y in zip(dd, a))  # dd + (-a)
        if rs.is_root(s1):
            acc += QQ(self.n(dd, neg(a)) * self.n(g, neg(b))) / rs.norm(s1)
        s2 = tuple(x - y for x, y in zip(g, a))  # (-a) + g
        if rs.is_root(s2):
            acc += QQ(self.n(neg(a), g) * self.n(dd, neg(b))) / rs.norm(s2)
        val = rs.norm(xi) * acc / QQ(self._pos[(g, dd)])
        assert val.denominator == 1
        return int(val)

    def n(self, a: Root, b: Root) -> int:
        """N_{a,b} for arbitrary roots with a + b a root."""
        rs = self.rs
        s = tuple(x + y for x, y in zip(a, b))
        if not rs.is_root(s):
            return 0
        apos, bpos = rs.is_positive(a), rs.is_positive(b)
        if apos and bpos:
            order = self.rs._index
            if order[a] < order[b]:
                return self._pos[(a, b)]
            return -self._pos[(b, a)]
        if not apos and not bpos:
            return -self.n(neg(a), neg(b))
        if not apos:  # mixed, make first argument positive
            return -self.n(b, a)
        # a > 0, b < 0; use the zero-sum triple (a, b, -s)
        if rs.is_positive(s):
            # N_{a,b}/(s,s) = N_{b,-s}/(a,a); b, -s both negative
            v = rs.norm(s) * QQ(-self.n(neg(b), s)) / rs.norm(a)
        else:
            v = QQ(-self.n(neg(a), neg(b)))
        assert v.denominator == 1
        return int(v)


class LieAlgebraData:
    """A simple Lie algebra in a Chevalley basis with exact brackets.

    Basis layout: e_a for positive roots (root order), then e_{-a} in the
    same order, then the simple coroots h_1..h_rank.  Elements are sparse
    dicts index -> rational.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.constants = ChevalleyConstants(rs)
        self.npos = len(rs.positive_roots)
        self.dim = 2 * self.npos + rs.rank
        self._bracket_cache: dict[tuple[int, int], dict[int, QQ]] = {}
        self._killing_cache: dict[tuple[int, int], QQ] = {}

    # --- basis bookkeeping -------------------------------------------------
    def root_of_index(self, i: int) -> Root | None:
        if i < self.npos:
            return self.rs.positive_roots[i]
        if i < 2 * self.npos:
            return neg(self.rs.positive_roots[i - self.npos])
        return None

    def index_of_root(self, a: Root) -> int:
        if self.rs.is_positive(a):
            return self.rs.pos_index(a)
        return self.npos + self.rs.pos_index(neg(a))

    def cartan_index(self, j: int) -> int:
        return 2 * self.npos + j

    def is_cartan_index(self, i: int) -> bool:
        return i >= 2 * self.npos

    def label(self, i: int) -> str:
        a = self.root_of_index(i)
        if a is None:
            return f"h{i - 2 * self.npos + 1}"
        sign = "" if self.rs.is_positive(a) else "-"
        pos = a if self.rs.is_positive(a) else neg(a)
        return f"e[{sign}{'+'.join(str(c) for c in pos)}]"

    def basis_labels(self) -> list[str]:
        return [self.label(i) for i in range(self.dim)]

    # --- brackets ----------------------------------------------------------
    def bracket_basis(self, i: int, j: int) -> dict[int, QQ]:
        """[b_i, b_j] as a sparse vector."""
        if i == j:
            return {}
        key = (i, j)
        if key in self._bracket_cache:
            return self._bracket_cache[key]
        if i > j:
            out = {k: -c for k, c in self.bracket_basis(j, i).items()}
            self._bracket_cache[key] = out
            return out
        rs = self.rs
        a, b = self.root_of_index(i), self.root_of_index(j)
        out: dict[int, QQ] = {}
        if a is None and b is None:
            pass
        elif a is None:  # [h_k, e_b]
            k = i - 2 * self.npos
            c = sum(b[m] * rs.cartan[k][m] for m in range(rs.rank))
            if c:
                out = {j: QQ(c)}
        elif b is None:
            k = j - 2 * self.npos
            c = sum(a[m] * rs.cartan[k][m] for m in range(rs.rank))
            if c:
                out = {i: QQ(-c)}
        else:
            s = tuple(x + y for x, y in zip(a, b))
            if all(x == 0 for x in s):
                pos = a if rs.is_positive(a) else b
                for m, c in enumerate(rs.coroot(pos)):
                    if c:
                        out[self.cartan_index(m)] = QQ(c if rs.is_positive(a) else -c)
            elif rs.is_root(s):
                n = self.constants.n(a, b)
                if n:
                    out = {self.index_of_root(s): QQ(n)}
        self._bracket_cache[key] = out
        return out

    def bracket(self, x: dict[int, QQ], y: dict[int, QQ]) -> dict[int, QQ]:
        out: dict[int, QQ] = {}
        for i, xi in x.items():
            for j, yj in y.items():
                for k, c in self.bracket_basis(i, j).items():
                    v = out.get(k, ZERO) + xi * yj * c
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
        return out

    # --- Killing form ------------------------------------------------------
    def killing_entry(self, i: int, j: int) -> QQ:
        if i > j:
            return self.killing_entry(j, i)
        a, b = self.root_of_index(i), self.root_of_index(j)
        if a is not None and b is not None and any(
                x + y for x, y in zip(a, b)):
            return ZERO  # weight orthogonality
        if (a is None) != (b is None):
            return ZERO
        key = (i, j)
        if key not in self._killing_cache:
            tr = ZERO
            for k in range(self.dim):
                inner = self.bracket_basis(j, k)
                for m, c in inner.items():
                    outer = self.bracket_basis(i, m)
                    if k in outer:
                        tr += c * outer[k]
            self._killing_cache[key] = tr
        return self._killing_cache[key]

    def killing(self, x: dict[int, QQ], y: dict[int, QQ]) -> QQ:
        out = ZERO
        for i, xi in x.items():
            for j, yj in y.items():
                out += xi * yj * self.killing_entry(i, j)
        return out


def chevalley_constants(rs: RootSystem) -> LieAlgebraData:
    return LieAlgebraData(rs)
