"""Dynkin gradings and sl2-triples from labelled Dynkin diagrams."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .ledger import DenominatorLedger
from .rational import QQ, ZERO
from .rootsystem import LieAlgebraData, Root


class InvalidLabelsError(ValueError):
    """The given labels are not the weighted diagram of a nilpotent orbit."""


def check_labels(lie: LieAlgebraData, labels: tuple[int, ...]) -> tuple[int, ...]:
    labels = tuple(int(x) for x in labels)
    if len(labels) != lie.rs.rank:
        raise InvalidLabelsError(
            f"expected {lie.rs.rank} labels, got {len(labels)}")
    if any(x not in (0, 1, 2) for x in labels):
        raise InvalidLabelsError(f"labels must lie in {{0,1,2}}: {labels}")
    return labels


@dataclass
class Grading:
    labels: tuple[int, ...]
    degree_of_root: dict[Root, int]
    pieces: dict[int, list[int]]     # degree -> ambient basis indices
    degree_of_index: list[int]

    def piece(self, j: int) -> list[int]:
        return self.pieces.get(j, [])

    def roots_of_degree(self, lie: LieAlgebraData, j: int) -> list[Root]:
        return [lie.root_of_index(i) for i in self.piece(j)
                if lie.root_of_index(i) is not None]


def grading_from_labels(lie: LieAlgebraData, labels) -> Grading:
    labels = check_labels(lie, labels)
    deg_root: dict[Root, int] = {}
    degree_of_index = [0] * lie.dim
    pieces: dict[int, list[int]] = {}
    for i in range(lie.dim):
        a = lie.root_of_index(i)
        d = 0 if a is None else sum(c * l for c, l in zip(a, labels))
        if a is not None:
            deg_root[a] = d
        degree_of_index[i] = d
        pieces.setdefault(d, []).append(i)
    return Grading(labels, deg_root, pieces, degree_of_index)


def find_h(lie: LieAlgebraData, labels) -> dict[int, QQ]:
    """Solve for h in the Cartan with alpha(h) = d_alpha on simple roots."""
    labels = check_labels(lie, labels)
    rank = lie.rs.rank
    # beta_b(h_{alpha_a}) = <beta_b, alpha_a^vee> = cartan[a][b]
    rows = [[QQ(lie.rs.cartan[a][b]) for a in range(rank)] for b in range(rank)]
    try:
        lam = linalg.solve_unique(rows, [QQ(d) for d in labels])
    except ValueError as exc:
        raise InvalidLabelsError(f"no Cartan element for labels {labels}") from exc
    for x in lam:
        if x.denominator != 1 or x < 0:
            raise InvalidLabelsError(
                f"labels {labels} give non-integral/negative h: {lam}")
    return {lie.cartan_index(a): lam[a] for a in range(rank) if lam[a] != 0}


def find_f(lie: LieAlgebraData, e: dict[int, QQ], h: dict[int, QQ],
           phi2: list[Root]) -> dict[int, QQ]:
    """Unique f in g(-2) with [e, f] = h, or ValueError."""
    cols = []
    for a in phi2:
        fa = {lie.index_of_root(tuple(-c for c in a)): QQ(1)}
        cols.append(lie.bracket(e, fa))
    support = sorted(set(h) | {k for col in cols for k in col})
    rows = [[col.get(s, ZERO) for col in cols] for s in support]
    rhs = [h.get(s, ZERO) for s in support]
    if not phi2:
        if any(h.values()):
            raise ValueError("empty g(-2) cannot produce h")
        return {}
    mu = linalg.solve_unique(rows, rhs)
    f: dict[int, QQ] = {}
    for a, m in zip(phi2, mu):
        if m != 0:
            f[lie.index_of_root(tuple(-c for c in a))] = m
    return f


def find_e(lie: LieAlgebraData, grading: Grading, h: dict[int, QQ],
           max_subsets: int = 2_000_000) -> tuple[dict[int, QQ], list[Root], dict[int, QQ]]:
    """Deterministic search for e = sum of root vectors over Gamma in Phi(2).

    Subsets are tried smallest first, lexicographically in the fixed root
    order; a candidate is accepted when [e, f] = h has a unique solution
    f in g(-2).  Returns (e, Gamma, f).
    """
    phi2 = sorted((a for a, d in grading.degree_of_root.items() if d == 2),
                  key=lie.rs.pos_index)
    tried = 0
    for size in range(0, len(phi2) + 1):
        for combo in itertools.combinations(range(len(phi2)), size):
            tried += 1
            if tried > max_subsets:
                raise InvalidLabelsError(
                    "sl2-triple search exceeded subset budget")
            gamma = [phi2[c] for c in combo]
            if size and linalg.rank([[QQ(x) for x in a] for a in gamma]) < size:
                continue
            e = {lie.index_of_root(a): QQ(1) for a in gamma}
            try:
                f = find_f(lie, e, h, phi2)
            except ValueError:
                continue
            return e, gamma, f
    raise InvalidLabelsError(
        f"labels {grading.labels} admit no sl2-triple: not a nilpotent orbit")


@dataclass
class Sl2Triple:
    e: dict[int, QQ]
    h: dict[int, QQ]
    f: dict[int, QQ]
    gamma: list[Root]
    kappa_ef: QQ

    @property
    def is_zero(self) -> bool:
        return not self.e


def build_triple(lie: LieAlgebraData, grading: Grading,
                 ledger: DenominatorLedger | None = None) -> Sl2Triple:
    h = find_h(lie, grading.labels)
    e, gamma, f = find_e(lie, grading, h)
    # sl2 relations must hold exactly
    he = lie.bracket(h, e)
    assert he == {k: 2 * c for k, c in e.items()}
    hf = lie.bracket(h, f)
    assert hf == {k: -2 * c for k, c in f.items()}
    assert lie.bracket(e, f) == h
    kappa_ef = lie.killing(e, f)
    if ledger is not None:
        for p in lie.rs.bad_primes:
            ledger.add_prime(p, "bad prime of g")
        if kappa_ef != 0:
            ledger.add_integer(int(kappa_ef.numerator), "kappa(e,f) normalization")
        for c in f.values():
            ledger.add_rational(c, "integrality of f")
    return Sl2Triple(e, h, f, gamma, kappa_ef)


def chi(lie: LieAlgebraData, triple: Sl2Triple, x: dict[int, QQ]) -> QQ:
    """chi(x) = (e, x) for the form kappa / kappa(e,f)."""
    if triple.is_zero:
        return ZERO
    return lie.killing(x, triple.e) / triple.kappa_ef
