"""Commutation relations among the distinguished generators.

Each commutator [Theta_i, Theta_j] is rewritten as a polynomial in the
Theta's by repeatedly subtracting, from the top weighted degree down,
the product of Theta's matching each maximal monomial supported on the
centralizer prefix.  The loop terminates because every subtraction
strictly lowers the top degree of the remainder.
"""

from __future__ import annotations

from dataclasses import dataclass

from .generators import ThetaGenerator
from .rational import QQ, ZERO
from .uea import (Element, Monomial, QuotientSpace, add_into, kazhdan_degree,
                  mono_key, scale)

# a W-polynomial maps exponent tuples over Theta_1..Theta_r to rationals
WPolynomial = dict[tuple[int, ...], QQ]


@dataclass
class Presentation:
    thetas: list[ThetaGenerator]
    relations: dict[tuple[int, int], WPolynomial]   # 0-based (i, j), i < j

    @property
    def r(self) -> int:
        return len(self.thetas)


class ThetaRewriter:
    """Rewrites invariant elements of the quotient as polynomials in the
    Theta generators."""

    def __init__(self, Q: QuotientSpace, thetas: list[ThetaGenerator]):
        self.Q = Q
        self.thetas = thetas
        self._products: dict[tuple[int, ...], Element] = {}

    def theta_product(self, exps: tuple[int, ...]) -> Element:
        """Ordered product Theta_1^{a_1} ... Theta_r^{a_r} in the
        quotient (well defined on invariants)."""
        if exps in self._products:
            return self._products[exps]
        i = next((k for k, e in enumerate(exps) if e), None)
        if i is None:
            out = self.Q.reduce(self.Q.alg.unit())
        else:
            rest = list(exps)
            rest[i] -= 1
            out = self.Q.multiply(self.thetas[i].element,
                                  self.theta_product(tuple(rest)))
        self._products[exps] = out
        return out

    def rewrite(self, el: Element) -> WPolynomial:
        """Express an invariant element as a polynomial in the Theta's."""
        Q = self.Q
        gb = Q.gb
        r = gb.r
        w = Q.weights
        out: WPolynomial = {}
        rem = dict(el)
        guard = kazhdan_degree(rem, w)
        while rem:
            deg = kazhdan_degree(rem, w)
            assert guard is None or deg <= guard, "weighted degree increased"
            top = [a for a in rem
                   if sum(e * wk for e, wk in zip(a, w)) == deg]
            progressed = False
            for a in sorted(top, key=lambda mo: mono_key(mo, w)):
                if any(a[k] for k in range(r, gb.n)):
                    continue
                texp = a[:r]
                coeff = rem[a]
                add_into(out, texp, coeff)
                prod = self.theta_product(texp + (0,) * (gb.n - r))
                for m, c in scale(prod, -coeff).items():
                    add_into(rem, m, c)
                progressed = True
            if not progressed:
                raise AssertionError(
                    "maximal monomial not supported on the generators: "
                    f"remainder degree {deg}")
            new_deg = kazhdan_degree(rem, w)
            assert new_deg is None or new_deg < deg, \
                "subtraction failed to lower the weighted degree"
            guard = new_deg
        return out


def build_presentation(Q: QuotientSpace, thetas: list[ThetaGenerator],
                       pairs=None) -> Presentation:
    """Commutators [Theta_i, Theta_j], i < j, as W-polynomials.  By
    default all pairs are computed; a restricted iterable of pairs
    supports the fast one-dimensional-representation mode, which only
    needs the weight-balanced relations."""
    gb = Q.gb
    rewriter = ThetaRewriter(Q, thetas)
    relations: dict[tuple[int, int], WPolynomial] = {}
    w = Q.weights
    wanted = set(pairs) if pairs is not None else None
    for i in range(gb.r):
        for j in range(i + 1, gb.r):
            if wanted is not None and (i, j) not in wanted:
                continue
            comm = Q.commutator(thetas[i].element, thetas[j].element)
            deg = kazhdan_degree(comm, w)
            assert deg is None or deg <= w[i] + w[j] - 2, \
                f"[Theta_{i+1}, Theta_{j+1}] exceeds the weighted degree bound"
            relations[(i, j)] = rewriter.rewrite(comm)
    return Presentation(thetas, relations)


def wpoly_degree(p: WPolynomial, weights: list[int]):
    return kazhdan_degree(
        {a + (0,) * 0: c for a, c in p.items()},
        weights)


def format_wpoly(p: WPolynomial) -> str:
    if not p:
        return "0"
    parts = []
    for a in sorted(p, key=lambda mo: (sum(mo), mo), reverse=True):
        c = p[a]
        factors = []
        for k, e in enumerate(a):
            if e == 1:
                factors.append(f"T{k + 1}")
            elif e > 1:
                factors.append(f"T{k + 1}^{e}")
        body = "*".join(factors)
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        else:
            parts.append(f"{c}*{body}")
    return " + ".join(parts)
