"""Exact arithmetic in the universal enveloping algebra.

Elements are finite rational combinations of ordered monomials
x_1^{a_1} ... x_n^{a_n}, stored as {exponent tuple: coefficient}.  The
only primitive is left multiplication by a single generator; everything
else (products, commutators, the quotient by the shifted ideal) folds
through it.  Straightening uses x_k x_j = x_j x_k + [x_k, x_j] and is
memoised per algebra, so repeated products of the same monomials are
cheap.
"""

from __future__ import annotations

from .rational import QQ, ZERO

Monomial = tuple[int, ...]
Element = dict[Monomial, QQ]


def add_into(acc: Element, mono: Monomial, coeff: QQ) -> None:
    c = acc.get(mono, ZERO) + coeff
    if c:
        acc[mono] = c
    elif mono in acc:
        del acc[mono]


def scale(el: Element, c: QQ) -> Element:
    if not c:
        return {}
    return {m: c * v for m, v in el.items()}


def combine(*els: Element) -> Element:
    out: Element = {}
    for el in els:
        for m, v in el.items():
            add_into(out, m, v)
    return out


class PBWAlgebra:
    """Enveloping algebra of an n-dimensional Lie algebra given by its
    structure constants bracket(i, j) -> {k: c} meaning sum c x_k."""

    def __init__(self, n: int, bracket):
        self.n = n
        self._bracket = bracket
        self._memo: dict[tuple[int, Monomial], Element] = {}

    def unit(self) -> Element:
        return {(0,) * self.n: QQ(1)}

    def generator(self, k: int) -> Element:
        return {self.mono_of({k: 1}): QQ(1)}

    def mono_of(self, exps: dict[int, int]) -> Monomial:
        a = [0] * self.n
        for k, v in exps.items():
            a[k] = v
        return tuple(a)

    def from_linear(self, v: dict[int, QQ]) -> Element:
        return {self.mono_of({k: 1}): c for k, c in v.items() if c}

    def gen_times_mono(self, k: int, a: Monomial) -> Element:
        """x_k . x^a as an ordered-monomial combination."""
        j = next((i for i, e in enumerate(a) if e), None)
        if j is None or k <= j:
            b = list(a)
            b[k] += 1
            return {tuple(b): QQ(1)}
        key = (k, a)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        rest = list(a)
        rest[j] -= 1
        rest_t = tuple(rest)
        # x_k x_j x^rest = x_j (x_k x^rest) + [x_k, x_j] x^rest
        out: Element = {}
        for m, c in self.gen_times_mono(k, rest_t).items():
            for m2, c2 in self.gen_times_mono(j, m).items():
                add_into(out, m2, c * c2)
        for l, c in self._bracket(k, j).items():
            for m, c2 in self.gen_times_mono(l, rest_t).items():
                add_into(out, m, c * c2)
        self._memo[key] = out
        return out

    def gen_times(self, k: int, el: Element) -> Element:
        out: Element = {}
        for m, c in el.items():
            for m2, c2 in self.gen_times_mono(k, m).items():
                add_into(out, m2, c * c2)
        return out

    def mono_times(self, a: Monomial, el: Element) -> Element:
        for k in reversed(range(self.n)):
            for _ in range(a[k]):
                el = self.gen_times(k, el)
        return el

    def multiply(self, x: Element, y: Element) -> Element:
        out: Element = {}
        for a, c in x.items():
            for m, c2 in self.mono_times(a, y).items():
                add_into(out, m, c * c2)
        return out

    def commutator(self, x: Element, y: Element) -> Element:
        out = self.multiply(x, y)
        for m, c in self.multiply(y, x).items():
            add_into(out, m, -c)
        return out


def kazhdan_degree(el: Element, weights: list[int]):
    """Largest weighted degree of a monomial; None for the zero element."""
    best = None
    for a in el:
        d = sum(e * w for e, w in zip(a, weights))
        if best is None or d > best:
            best = d
    return best


def total_degree(a: Monomial) -> int:
    return sum(a)


def mono_key(a: Monomial, weights: list[int]):
    """Sort key: weighted degree, then lexicographic exponent order."""
    return (sum(e * w for e, w in zip(a, weights)), a)


class QuotientSpace:
    """The quotient of U(g) by the left ideal generated by x - chi(x) for
    x in the nilpotent subalgebra, realised on ordered monomials in
    x_1..x_{m+s}."""

    def __init__(self, gb):
        self.gb = gb
        self.alg = PBWAlgebra(gb.n, gb.xbracket)
        self.cut = gb.m + gb.s
        self.weights = gb.kazhdan_weights

    def reduce(self, el: Element) -> Element:
        """Canonical form modulo the ideal: trailing factors beyond the
        cut evaluate through chi."""
        out: Element = {}
        for a, c in el.items():
            coeff = c
            for k in range(self.cut, self.gb.n):
                if a[k]:
                    chi = self.gb.chi_x(k)
                    if not chi:
                        coeff = ZERO
                        break
                    coeff *= chi ** a[k]
            if not coeff:
                continue
            head = a[:self.cut] + (0,) * (self.gb.n - self.cut)
            add_into(out, head, coeff)
        return out

    def multiply(self, x: Element, y: Element) -> Element:
        return self.reduce(self.alg.multiply(x, y))

    def commutator(self, x: Element, y: Element) -> Element:
        return self.reduce(self.alg.commutator(x, y))

    def ad(self, k: int, el: Element) -> Element:
        """[x_k, el] modulo the ideal."""
        gen = self.alg.generator(k)
        return self.reduce(self.alg.commutator(gen, el))

    def is_invariant(self, el: Element) -> bool:
        """True when el is killed by every ad x_k for x_k in the
        nilpotent subalgebra, i.e. represents a well-defined element of
        the W-algebra."""
        return all(not self.ad(k, el) for k in self.gb.m_indices())
