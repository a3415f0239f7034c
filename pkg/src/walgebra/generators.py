"""Distinguished generators of the W-algebra.

For each of the first b centralizer basis vectors we solve for the
unique invariant lift

    Theta_i = x_i + sum_a lambda_a x^a

where a runs over the admissible exponent patterns on x_1..x_{m+s}:
same restricted weight as x_i, weighted degree at most n_i + 2, at
least one factor outside the centralizer prefix, and no linear term of
top weighted degree.  The lambda's are determined by requiring that the
commutator with each generator of the nilpotent subalgebra vanishes in
the quotient; the remaining generators (indices b < i <= r) are then
produced from commutators of earlier ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basisbuilder import GradedBasis
from .linalg import IncrementalSystem
from .rational import QQ, ZERO
from .uea import Element, Monomial, QuotientSpace, add_into, combine, mono_key, scale


@dataclass
class ThetaGenerator:
    index: int                 # 0-based position in the centralizer basis
    element: Element           # reduced representative in the quotient
    candidates: list[Monomial]
    lambdas: list[QQ]


def candidate_monomials(gb: GradedBasis, i: int) -> list[Monomial]:
    """Admissible exponent patterns for the correction terms of Theta_i."""
    cut = gb.m + gb.s
    w = gb.kazhdan_weights
    target_beta = gb.beta[i]
    budget = w[i]
    zero_beta = tuple(ZERO for _ in target_beta)
    out: list[Monomial] = []

    def rec(pos: int, a: list[int], wsum: int, bsum: tuple[QQ, ...]):
        if pos == cut:
            if bsum != target_beta:
                return
            if all(a[j] == 0 for j in range(gb.r, cut)):
                return
            total = sum(a)
            if wsum == budget and total == 1:
                return
            mono = tuple(a) + (0,) * (gb.n - cut)
            out.append(mono)
            return
        max_e = (budget - wsum) // w[pos] if w[pos] > 0 else 0
        for e in range(max_e + 1):
            if e:
                a[pos] = e
            rec(pos + 1, a, wsum + e * w[pos],
                tuple(x + e * y for x, y in zip(bsum, gb.beta[pos])))
            a[pos] = 0

    rec(0, [0] * cut, 0, zero_beta)
    out.sort(key=lambda mo: mono_key(mo, w))
    return out


def solve_theta(Q: QuotientSpace, i: int) -> ThetaGenerator:
    """Determine Theta_i by linear algebra on the invariance equations."""
    gb = Q.gb
    cands = candidate_monomials(gb, i)
    nvars = len(cands)
    base = Q.reduce(Q.alg.generator(i))
    ad_base = {k: Q.ad(k, base) for k in gb.K}
    ad_cand = [{k: Q.ad(k, {c: QQ(1)}) for k in gb.K} for c in cands]

    system = IncrementalSystem(nvars)
    pending: list[tuple[list[QQ], QQ]] = []
    for k in gb.K:
        support = set(ad_base[k])
        for col in ad_cand:
            support |= set(col[k])
        for mono in sorted(support, key=lambda mo: mono_key(mo, Q.weights)):
            coeffs = [col[k].get(mono, ZERO) for col in ad_cand]
            rhs = -ad_base[k].get(mono, ZERO)
            if system.is_determined():
                pending.append((coeffs, rhs))
            else:
                system.add_row(coeffs, rhs)
    if nvars and not system.is_determined():
        raise ValueError(
            f"invariance system for generator {i + 1} is underdetermined")
    lambdas = system.solution() if nvars else []
    for coeffs, rhs in pending:
        if not system.check_row(coeffs, rhs):
            raise ValueError(
                f"inconsistent invariance system for generator {i + 1}")

    theta = dict(base)
    for c, lam in zip(cands, lambdas):
        if lam:
            Q.gb.ledger.add_rational(lam, "generator coefficients")
            add_into(theta, c, lam)
    theta = Q.reduce(theta)
    assert Q.is_invariant(theta), f"Theta_{i + 1} is not invariant"
    return ThetaGenerator(i, theta, cands, lambdas)


def theta_via_commutators(Q: QuotientSpace, i: int,
                          earlier: list[ThetaGenerator]) -> ThetaGenerator:
    """Theta_i for i beyond the generating prefix: the bracket
    combination that produced x_i from earlier basis vectors, minus its
    expansion in products of the earlier Theta's, leaving the normal
    form with leading term x_i."""
    gb = Q.gb
    el: Element = {}
    for (a, b, coeff) in gb.nu[i]:
        comm = Q.commutator(earlier[a].element, earlier[b].element)
        for m, c in scale(comm, coeff).items():
            add_into(el, m, c)
    el = Q.reduce(el)
    assert Q.is_invariant(el), f"Theta_{i + 1} is not invariant"
    lead_mono = Q.alg.mono_of({i: 1})
    assert el.get(lead_mono, ZERO) == 1, \
        f"Theta_{i + 1} has leading coefficient {el.get(lead_mono, ZERO)}"

    products: dict[tuple[int, ...], Element] = {}

    def product_of(exps: tuple[int, ...]) -> Element:
        if exps in products:
            return products[exps]
        k = next((k2 for k2, e in enumerate(exps) if e), None)
        if k is None:
            out = Q.reduce(Q.alg.unit())
        else:
            rest = list(exps)
            rest[k] -= 1
            out = Q.multiply(earlier[k].element, product_of(tuple(rest)))
        products[exps] = out
        return out

    w = Q.weights
    theta = dict(el)
    while True:
        junk = [a for a in theta
                if a != lead_mono and all(a[k] == 0 for k in range(i, gb.n))]
        if not junk:
            break
        deg = max(sum(e * wk for e, wk in zip(a, w)) for a in junk)
        top = [a for a in junk
               if sum(e * wk for e, wk in zip(a, w)) == deg]
        for a in sorted(top, key=lambda mo: mono_key(mo, w)):
            coeff = theta.get(a, ZERO)
            if not coeff:
                continue
            prod = product_of(a[:i])
            for m, c in scale(prod, -coeff).items():
                add_into(theta, m, c)
    assert Q.is_invariant(theta), f"Theta_{i + 1} lost invariance"
    return ThetaGenerator(i, theta, [], [])


def build_generators(Q: QuotientSpace) -> list[ThetaGenerator]:
    gb = Q.gb
    thetas: list[ThetaGenerator] = []
    for i in range(gb.b):
        thetas.append(solve_theta(Q, i))
    for i in range(gb.b, gb.r):
        thetas.append(theta_via_commutators(Q, i, thetas))
    return thetas


def format_theta(Q: QuotientSpace, th: ThetaGenerator) -> str:
    """Human-readable rendering like x1 + 3*x4*x6*x10 + ..."""
    parts = []
    for mono in sorted(th.element, key=lambda mo: mono_key(mo, Q.weights)):
        c = th.element[mono]
        factors = []
        for k, e in enumerate(mono):
            if e == 1:
                factors.append(f"x{k + 1}")
            elif e > 1:
                factors.append(f"x{k + 1}^{e}")
        body = "*".join(factors) if factors else "1"
        if c == 1 and factors:
            parts.append(body)
        else:
            parts.append(f"{c}*{body}" if factors else f"{c}")
    return " + ".join(parts) if parts else "0"
