"""Assembly of the ordered basis x_1..x_n adapted to (e, h, f).

Segments, in order: a basis of the centralizer of e (length r, containing
e itself, with a generating prefix of length b), a completion to the
nonnegative parabolic (length m), a Witt basis of g(-1) (z's then z*'s,
s each), a basis of g(-2) (kernel of chi first, then f; s' vectors), and
the root vectors of degree <= -3.

Ordering conventions, frozen for reproducibility:

* centralizer: descending ad-h eigenvalue; ties by descending |weight|,
  then descending weight (lex), Cartan directions after root directions;
* parabolic completion: descending eigenvalue, then ambient basis order;
* restricted-positive weights are those whose first nonzero coordinate
  against the t^e basis is negative (this mirrors the published G2
  worked example, where the z-vector is the one of restricted weight -1);
* degree <= -3 tail: descending eigenvalue, then ambient order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .ledger import DenominatorLedger
from .rational import QQ, ZERO
from .rootsystem import LieAlgebraData
from .sl2grading import Grading, Sl2Triple, chi


def _vec_key(v: dict[int, QQ]) -> int:
    return min(v) if v else -1


@dataclass
class GradedBasis:
    lie: LieAlgebraData
    grading: Grading
    triple: Sl2Triple
    vectors: list[dict[int, QQ]]          # ambient coordinates of x_1..x_n
    n_deg: list[int]                      # ad-h eigenvalues n_i
    beta: list[tuple[QQ, ...]]            # t^e weights
    te_basis: list[dict[int, QQ]]
    r: int
    b: int
    m: int
    s: int
    s_prime: int
    e_index: int                          # 0-based position of e
    K: list[int]                          # 0-based indices generating m
    ledger: DenominatorLedger
    nu: dict[int, list[tuple[int, int, QQ]]] = field(default_factory=dict)
    _minv: list[list[QQ]] | None = field(default=None, repr=False)
    _xbrackets: dict[tuple[int, int], dict[int, QQ]] = field(
        default_factory=dict, repr=False)
    _chi_x: list[QQ] | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.vectors)

    @property
    def kazhdan_weights(self) -> list[int]:
        return [d + 2 for d in self.n_deg]

    def m_indices(self) -> list[int]:
        return list(range(self.m + self.s, self.n))

    def _minv_matrix(self) -> list[list[QQ]]:
        if self._minv is None:
            n = self.n
            mat = [[self.vectors[i].get(a, ZERO) for a in range(n)]
                   for i in range(n)]
            self._minv = linalg.invert(mat)
        return self._minv

    def to_x_coords(self, v: dict[int, QQ]) -> dict[int, QQ]:
        """Ambient sparse vector -> coordinates over x_1..x_n."""
        inv = self._minv_matrix()
        out: dict[int, QQ] = {}
        for a, va in v.items():
            row = inv[a]
            for k in range(self.n):
                if row[k] != 0:
                    c = out.get(k, ZERO) + va * row[k]
                    if c:
                        out[k] = c
                    elif k in out:
                        del out[k]
        return out

    def xbracket(self, i: int, j: int) -> dict[int, QQ]:
        """[x_i, x_j] in x-coordinates (0-based)."""
        if i == j:
            return {}
        key = (i, j)
        if key not in self._xbrackets:
            if i > j:
                self._xbrackets[key] = {
                    k: -c for k, c in self.xbracket(j, i).items()}
            else:
                amb = self.lie.bracket(self.vectors[i], self.vectors[j])
                out = self.to_x_coords(amb)
                for c in out.values():
                    self.ledger.add_rational(c, "x-basis brackets")
                self._xbrackets[key] = out
        return self._xbrackets[key]

    def chi_x(self, k: int) -> QQ:
        if self._chi_x is None:
            self._chi_x = [chi(self.lie, self.triple, v) for v in self.vectors]
        return self._chi_x[k]


def _beta_of_index(lie: LieAlgebraData, te: list[dict[int, QQ]],
                   i: int) -> tuple[QQ, ...]:
    a = lie.root_of_index(i)
    if a is None:
        return tuple(ZERO for _ in te)
    out = []
    for t in te:
        val = ZERO
        for ci, coef in t.items():
            c = ci - 2 * lie.npos
            val += coef * sum(a[mm] * lie.rs.cartan[c][mm]
                              for mm in range(lie.rs.rank))
        out.append(val)
    return tuple(out)


def compute_te_basis(lie: LieAlgebraData, triple: Sl2Triple) -> list[dict[int, QQ]]:
    """t^e = t intersect ker(ad e): integer kernel of the Gamma pairings."""
    rank = lie.rs.rank
    rows = [[QQ(sum(g[mm] * lie.rs.cartan[a][mm] for mm in range(rank)))
             for a in range(rank)] for g in triple.gamma]
    if not rows:
        rows = [[ZERO] * rank]
    kern = linalg.kernel_basis(rows, rank)
    out = []
    for v in kern:
        ints, _ = linalg.primitive_integer(v)
        out.append({lie.cartan_index(a): QQ(c)
                    for a, c in enumerate(ints) if c})
    expected = rank - linalg.rank([[QQ(x) for x in g] for g in triple.gamma]) \
        if triple.gamma else rank
    assert len(out) == expected, "t^e has unexpected dimension"
    return out


def _blocks(lie: LieAlgebraData, grading: Grading,
            te: list[dict[int, QQ]], indices) -> dict:
    out: dict[tuple, list[int]] = {}
    for i in indices:
        key = (grading.degree_of_index[i], _beta_of_index(lie, te, i))
        out.setdefault(key, []).append(i)
    return out


def _span_contains(span_rows: list[list[QQ]], v: list[QQ]) -> bool:
    return linalg.rank(span_rows + [v]) == linalg.rank(span_rows)


class _Span:
    """Incremental row space with membership tests."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list[QQ]] = []
        self.pivots: list[int] = []

    def _reduce(self, v: list[QQ]) -> list[QQ]:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, v: list[QQ]) -> bool:
        v = self._reduce(v)
        p = next((c for c in range(self.dim) if v[c] != 0), None)
        if p is None:
            return False
        inv = QQ(1) / v[p]
        v = [x * inv for x in v]
        for row in self.rows:
            if row[p] != 0:
                f = row[p]
                for c in range(self.dim):
                    row[c] -= f * v[c]
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def contains(self, v: list[QQ]) -> bool:
        v = self._reduce(v)
        return all(x == 0 for x in v)

    @property
    def rank(self) -> int:
        return len(self.rows)


def _dense(v: dict[int, QQ], dim: int) -> list[QQ]:
    out = [ZERO] * dim
    for k, c in v.items():
        out[k] = c
    return out


def centralizer_basis(lie: LieAlgebraData, grading: Grading,
                      triple: Sl2Triple, te: list[dict[int, QQ]],
                      ledger: DenominatorLedger) -> list[dict[int, QQ]]:
    """Basis of ker(ad e) made of simultaneous (ad h, t^e) eigenvectors,
    ordered by the frozen centralizer convention, with e as an explicit
    member."""
    blocks = _blocks(lie, grading, te, range(lie.dim))
    items = []
    for (ndeg, beta), idxs in sorted(
            blocks.items(),
            key=lambda kv: (-kv[0][0],
                            -sum(abs(x) for x in kv[0][1]),
                            tuple(-x for x in kv[0][1]))):
        cols = idxs
        images = [lie.bracket(triple.e, {c: QQ(1)}) for c in cols]
        support = sorted({k for im in images for k in im})
        rows = [[im.get(sp, ZERO) for im in images] for sp in support]
        if not rows:
            rows = [[ZERO] * len(cols)]
        kern = linalg.kernel_basis(rows, len(cols))
        vecs = []
        for kv in kern:
            for x in kv:
                ledger.add_rational(x, "centralizer basis")
            ints, _ = linalg.primitive_integer(kv)
            vecs.append({c: QQ(x) for c, x in zip(cols, ints) if x})
        if not vecs:
            continue
        # make sure e itself appears verbatim in its block
        if triple.e and set(triple.e) <= set(cols):
            span = _Span(lie.dim)
            edense = _dense(triple.e, lie.dim)
            span.add(edense)
            if _span_contains([_dense(v, lie.dim) for v in vecs], edense):
                rest = [v for v in vecs
                        if span.add(_dense(v, lie.dim))]
                vecs = [dict(triple.e)] + rest
        # split Cartan-supported vectors after pure root vectors
        rootv = [v for v in vecs if not any(lie.is_cartan_index(k) for k in v)]
        cartv = [v for v in vecs if any(lie.is_cartan_index(k) for k in v)]
        items.extend(rootv + cartv)
    assert sum(1 for _ in items) == len(items)
    return items


def generating_prefix(lie: LieAlgebraData, vectors: list[dict[int, QQ]],
                      b_override: int | None = None) -> int:
    """Smallest prefix of the centralizer basis whose Lie closure is all
    of g^e.  An explicit override (recorded orbit-catalogue choice) is
    honoured after validating that it still generates."""
    r = len(vectors)
    dense = [_dense(v, lie.dim) for v in vectors]

    def closure_rank(k: int) -> int:
        span = _Span(lie.dim)
        current = [dict(v) for v in vectors[:k]]
        for v in dense[:k]:
            span.add(list(v))
        frontier = list(range(len(current)))
        while frontier:
            new = []
            for i in range(len(current)):
                for j in frontier:
                    if j <= i:
                        continue
                    w = lie.bracket(current[i], current[j])
                    if w and span.add(_dense(w, lie.dim)):
                        current.append(w)
                        new.append(len(current) - 1)
            frontier = new
        return span.rank

    if b_override is not None:
        if not (1 <= b_override <= r) or closure_rank(b_override) != r:
            raise ValueError(f"override b={b_override} does not generate g^e")
        return b_override
    for k in range(1, r + 1):
        if closure_rank(k) == r:
            return k
    raise AssertionError("unreachable: the full basis generates g^e")


def build_graded_basis(lie: LieAlgebraData, grading: Grading,
                       triple: Sl2Triple, ledger: DenominatorLedger,
                       b_override: int | None = None,
                       K_override: list[int] | None = None) -> GradedBasis:
    te = compute_te_basis(lie, triple)
    beta_of = lambda i: _beta_of_index(lie, te, i)

    # --- g^e ---------------------------------------------------------------
    ge = centralizer_basis(lie, grading, triple, te, ledger)
    r = len(ge)
    b = generating_prefix(lie, ge, b_override)
    nu: dict[int, list[tuple[int, int, QQ]]] = {}
    if b < r:
        ge, nu = _bracket_completed_suffix(lie, grading, te, ge, b, ledger)

    # --- completion to the parabolic --------------------------------------
    pos_indices = [i for i in range(lie.dim) if grading.degree_of_index[i] >= 0]
    comp: list[tuple[tuple, dict[int, QQ]]] = []
    blocks = _blocks(lie, grading, te, pos_indices)
    for (ndeg, beta), idxs in blocks.items():
        span = _Span(lie.dim)
        for v in ge:
            dv = _dense(v, lie.dim)
            if all(k in idxs for k in v):
                span.add(dv)
        for i in idxs:
            v = {i: QQ(1)}
            if span.add(_dense(v, lie.dim)):
                comp.append(((-ndeg, i), v))
    comp.sort(key=lambda t: t[0])
    pvecs = ge + [v for _, v in comp]
    m = len(pvecs)

    # --- Witt basis of g(-1) ----------------------------------------------
    z, zstar = _witt_basis(lie, grading, triple, te, ledger)
    s = len(z)

    # --- g(-2) -------------------------------------------------------------
    gm2 = _gminus2_basis(lie, grading, triple, ledger)
    s_prime = len(gm2)

    # --- tail --------------------------------------------------------------
    tail_idx = sorted(
        (i for i in range(lie.dim) if grading.degree_of_index[i] <= -3),
        key=lambda i: (-grading.degree_of_index[i], i))
    tail = [{i: QQ(1)} for i in tail_idx]

    vectors = pvecs + z + zstar + gm2 + tail
    n = len(vectors)
    assert n == lie.dim, "basis assembly lost or duplicated directions"

    n_deg, beta = [], []
    for v in vectors:
        degs = {grading.degree_of_index[k] for k in v}
        betas = {beta_of(k) for k in v}
        assert len(degs) == 1 and len(betas) == 1, \
            "basis vector is not a simultaneous eigenvector"
        n_deg.append(degs.pop())
        beta.append(betas.pop())

    e_index = next(i for i, v in enumerate(vectors) if v == triple.e) \
        if triple.e else 0
    assert e_index < r

    gb = GradedBasis(lie, grading, triple, vectors, n_deg, beta, te,
                     r, b, m, s, s_prime, e_index, [], ledger, nu)
    gb.K = _m_generating_set(gb, K_override)
    _check_transition_determinant(gb)
    return gb


def _bracket_completed_suffix(lie, grading, te, ge, b, ledger):
    """Rebuild x_{b+1}..x_r from brackets of earlier vectors (ascending
    eigenvalue), recording x_k = sum nu [x_i, x_j]."""
    r = len(ge)
    span = _Span(lie.dim)
    for v in ge[:b]:
        span.add(_dense(v, lie.dim))
    out = list(ge[:b])
    nu: dict[int, list[tuple[int, int, QQ]]] = {}
    while len(out) < r:
        candidates = []
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                w = lie.bracket(out[i], out[j])
                if w and not span.contains(_dense(w, lie.dim)):
                    ndeg = grading.degree_of_index[next(iter(w))]
                    candidates.append((ndeg, i, j, w))
        if not candidates:
            raise AssertionError("prefix closure stalled before filling g^e")
        candidates.sort(key=lambda t: (t[0], t[1], t[2]))
        ndeg, i, j, w = candidates[0]
        ints, den = linalg.primitive_integer(_dense(w, lie.dim))
        scale = None
        newv: dict[int, QQ] = {}
        for k, c in enumerate(ints):
            if c:
                newv[k] = QQ(c)
        for k, c in w.items():
            scale = newv[k] / c
            break
        ledger.add_rational(scale, "bracket-completed centralizer suffix")
        k_new = len(out)
        nu[k_new] = [(i, j, scale)]
        out.append(newv)
        span.add(_dense(newv, lie.dim))
    return out, nu


def _witt_basis(lie, grading, triple, te, ledger):
    minus1 = [i for i in range(lie.dim) if grading.degree_of_index[i] == -1]
    if not minus1:
        return [], []
    pos, negs = [], []
    for i in minus1:
        bt = _beta_of_index(lie, te, i)
        lead = next((x for x in bt if x != 0), None)
        assert lead is not None, "zero restricted weight in g(-1)"
        (pos if lead < 0 else negs).append(i)
    assert len(pos) == len(negs), "restricted-weight split is unbalanced"
    s = len(pos)
    form = [[chi(lie, triple,
                 lie.bracket({zi: QQ(1)}, {nj: QQ(1)}))
             for nj in negs] for zi in pos]
    zstar = []
    for j in range(s):
        rhs = [QQ(1) if i == j else ZERO for i in range(s)]
        coeffs = linalg.solve_unique(form, rhs)
        v = {}
        for nj, c in zip(negs, coeffs):
            if c:
                ledger.add_rational(c, "Witt basis of g(-1)")
                v[nj] = c
        zstar.append(v)
    z = [{i: QQ(1)} for i in pos]
    return z, zstar


def _gminus2_basis(lie, grading, triple, ledger):
    minus2 = [i for i in range(lie.dim) if grading.degree_of_index[i] == -2]
    if not minus2:
        return []
    gamma = sorted(triple.gamma, key=lie.rs.pos_index)
    gamma_neg = {lie.index_of_root(tuple(-c for c in g)) for g in gamma}
    kernel = [{i: QQ(1)} for i in minus2 if i not in gamma_neg]
    for g1, g2 in zip(gamma, gamma[1:]):
        i1 = lie.index_of_root(tuple(-c for c in g1))
        i2 = lie.index_of_root(tuple(-c for c in g2))
        lam = -chi(lie, triple, {i1: QQ(1)}) / chi(lie, triple, {i2: QQ(1)})
        ledger.add_rational(lam, "kernel of chi on g(-2)")
        kernel.append({i1: QQ(1), i2: lam})
    for v in kernel:
        assert chi(lie, triple, v) == 0
    return kernel + [dict(triple.f)]


def _m_generating_set(gb: GradedBasis, K_override) -> list[int]:
    lie = gb.lie
    mind = gb.m_indices()
    if not mind:
        return []
    if K_override is not None:
        K = sorted(K_override)
        assert set(K) <= set(mind)
    else:
        derived = _Span(lie.dim)
        for i in mind:
            for j in mind:
                if i < j:
                    w = lie.bracket(gb.vectors[i], gb.vectors[j])
                    if w:
                        derived.add(_dense(w, lie.dim))
        span = _Span(lie.dim)
        for row in derived.rows:
            span.add(list(row))
        K = [i for i in mind if span.add(_dense(gb.vectors[i], lie.dim))]
    # closure check: K must generate m
    span = _Span(lie.dim)
    current = [dict(gb.vectors[i]) for i in K]
    for v in current:
        span.add(_dense(v, lie.dim))
    frontier = list(range(len(current)))
    while frontier:
        new = []
        for i in range(len(current)):
            for j in frontier:
                if j <= i:
                    continue
                w = lie.bracket(current[i], current[j])
                if w and span.add(_dense(w, lie.dim)):
                    current.append(w)
                    new.append(len(current) - 1)
        frontier = new
    assert span.rank == len(mind), "K does not generate m"
    return K


def _check_transition_determinant(gb: GradedBasis) -> None:
    n = gb.n
    mat = [[gb.vectors[i].get(a, ZERO) for a in range(n)] for i in range(n)]
    det = QQ(1)
    m = [list(row) for row in mat]
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        assert pr is not None, "transition matrix is singular"
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = -det
        det *= m[c][c]
        inv = QQ(1) / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                for k in range(c, n):
                    m[i][k] -= f * m[c][k]
    gb.ledger.add_rational(det, "transition determinant")
    gb.ledger.add_integer(int(det.numerator), "transition determinant")
