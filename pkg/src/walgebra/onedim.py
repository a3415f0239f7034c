"""Enumeration of the one-dimensional representations.

A one-dimensional representation sends every Theta_i to a scalar t_i and
every commutator to zero, so the presentation collapses to a system of
polynomial equations in the t_i with nonzero restricted weight forced to
vanish.  The solver first eliminates variables that occur linearly,
keeping a snapshot of each intermediate system, and hands anything left
over to exact polynomial machinery (factorisation, Groebner bases).
Positive-dimensional solution sets are reported as such, not as errors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import sympy

from .rational import QQ, ZERO
from .relations import Presentation, WPolynomial


def _to_sympy(q) -> sympy.Rational:
    return sympy.Rational(int(q.numerator), int(q.denominator))


@dataclass
class OneDimSystem:
    presentation: Presentation
    beta: list[tuple]                 # restricted weights of the generators
    I: list[int]                      # 0-based generator indices of weight 0
    J: list[tuple[int, int]]          # relation pairs with opposite weights
    symbols: dict[int, sympy.Symbol]
    equations: list[sympy.Expr]


@dataclass
class OneDimSolutions:
    kind: str                         # "finite" or "positive-dimensional"
    solutions: list[dict[int, sympy.Expr]]
    eliminated: list[list[sympy.Expr]] = field(default_factory=list)
    free: list[int] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.solutions)


def _wpoly_to_expr(p: WPolynomial, symbols: dict[int, sympy.Symbol],
                   r: int) -> sympy.Expr:
    """Substitute Theta_i -> t_i (i of weight zero) or 0 (otherwise)."""
    out = sympy.Integer(0)
    for a, c in p.items():
        if any(e and k not in symbols for k, e in enumerate(a[:r])):
            continue
        term = _to_sympy(c)
        for k, e in enumerate(a[:r]):
            if e:
                term *= symbols[k] ** e
        out += term
    return sympy.expand(out)


def weight_balanced_pairs(r: int, beta: list[tuple]) -> list[tuple[int, int]]:
    """Pairs (i, j), i < j, whose restricted weights cancel; only these
    relations survive the one-dimensional substitution."""
    zero = tuple(ZERO for _ in beta[0]) if beta else ()
    return [(i, j) for i in range(r) for j in range(i + 1, r)
            if tuple(x + y for x, y in zip(beta[i], beta[j])) == zero]


def build_system(pres: Presentation, beta: list[tuple]) -> OneDimSystem:
    r = pres.r
    zero = tuple(ZERO for _ in beta[0]) if beta else ()
    I = [i for i in range(r) if beta[i] == zero]
    J = weight_balanced_pairs(r, beta)
    missing = [p for p in J if p not in pres.relations]
    if missing:
        raise ValueError(f"needed relations missing from presentation: "
                         f"{[(i + 1, j + 1) for i, j in missing]}")
    symbols = {i: sympy.Symbol(f"t{i + 1}") for i in I}
    equations = []
    for (i, j), p in sorted(pres.relations.items()):
        expr = _wpoly_to_expr(p, symbols, r)
        if (i, j) not in J:
            assert expr == 0, \
                "weight-unbalanced relation survived the substitution"
        if expr != 0:
            equations.append(expr)
    return OneDimSystem(pres, beta, I, J, symbols, equations)


def solve_system(system: OneDimSystem) -> OneDimSolutions:
    syms = [system.symbols[i] for i in system.I]
    eqs = [sympy.expand(e) for e in system.equations if e != 0]
    eliminated: list[list[sympy.Expr]] = []
    fixed: dict[sympy.Symbol, sympy.Expr] = {}

    # substitution phase: peel off variables forced by linear equations
    while True:
        eqs = [e for e in (sympy.expand(x) for x in eqs) if e != 0]
        if any(e.is_number for e in eqs):
            return OneDimSolutions("finite", [], eliminated)
        pick = None
        for e in eqs:
            fs = list(e.free_symbols)
            if len(fs) == 1 and sympy.degree(e, fs[0]) == 1:
                pick = (fs[0], e)
                break
        if pick is None:
            break
        sym, e = pick
        val = sympy.solve(e, sym)[0]
        fixed[sym] = val
        remaining = [sympy.expand(x.subs(sym, val)) for x in eqs if x is not e]
        eliminated.append([x for x in remaining if x != 0])
        eqs = remaining

    live = [s for s in syms if s not in fixed]
    unconstrained = [s for s in live
                     if all(s not in e.free_symbols for e in eqs)]
    if unconstrained:
        idx = [i for i in system.I if system.symbols[i] in unconstrained]
        return OneDimSolutions("positive-dimensional", [], eliminated, idx)

    if not eqs:
        sol = {i: fixed[system.symbols[i]] for i in system.I}
        return OneDimSolutions("finite", [_verified(system, sol)], eliminated)

    active = sorted({s for e in eqs for s in e.free_symbols},
                    key=lambda s: s.name)
    gb = sympy.groebner(eqs, *active, order="lex")
    if gb.exprs == [sympy.Integer(1)]:
        return OneDimSolutions("finite", [], eliminated)
    if not gb.is_zero_dimensional:
        extra = [i for i in system.I
                 if system.symbols[i] in active]
        return OneDimSolutions("positive-dimensional", [], eliminated, extra)

    raw = sympy.solve(eqs, active, dict=True)
    solutions = []
    for point in raw:
        sol_syms = dict(fixed)
        sol_syms.update(point)
        sol = {i: sympy.simplify(sol_syms[system.symbols[i]])
               for i in system.I}
        solutions.append(_verified(system, sol))
    solutions.sort(key=lambda s: tuple(sympy.default_sort_key(s[i])
                                       for i in system.I))
    return OneDimSolutions("finite", solutions, eliminated)


def _verified(system: OneDimSystem, sol: dict[int, sympy.Expr]) -> dict:
    """Check the point against every equation of the system."""
    subs = {system.symbols[i]: v for i, v in sol.items()}
    for e in system.equations:
        val = sympy.simplify(e.subs(subs))
        assert val == 0, f"candidate solution fails equation {e}"
    return sol


def representation_values(system: OneDimSystem,
                          sol: dict[int, sympy.Expr]) -> list[sympy.Expr]:
    """Scalar images of Theta_1..Theta_r under the representation."""
    r = system.presentation.r
    return [sol.get(i, sympy.Integer(0)) for i in range(r)]


def minimal_polynomial_of(value: sympy.Expr,
                          var: sympy.Symbol) -> sympy.Expr | None:
    """Minimal polynomial over Q for an irrational algebraic value."""
    if value.is_rational:
        return None
    return sympy.minimal_polynomial(value, var)
