import golden_g2 as gold
import pytest
import sympy

from walgebra.onedim import (build_system, minimal_polynomial_of,
                             representation_values, solve_system,
                             weight_balanced_pairs)
from walgebra.rational import QQ
from walgebra.relations import build_presentation
from walgebra.report import run_pipeline


def as_sympy(q):
    return sympy.Rational(int(q.numerator), int(q.denominator))


def test_weight_zero_variables(g2_short):
    system = g2_short.system
    assert [i + 1 for i in system.I] == [3, 6]


def test_two_solutions(g2_short):
    sols = g2_short.solutions
    assert sols.kind == "finite"
    got = sorted((s[2], s[5]) for s in sols.solutions)
    expected = sorted((as_sympy(a), as_sympy(b))
                      for a, b in gold.GOLDEN_SOLUTIONS)
    assert got == expected


def test_eliminated_quadratic(g2_short):
    """After the linear eliminations the published quadratic in t3 must
    appear (up to the sign dictionary, which flips F_12 as a whole)."""
    t3 = sympy.Symbol("t3")
    sign = gold.EPS_X[0] * gold.EPS_X[1]     # dictionary factor of F_12
    target = sympy.expand(sign * sum(
        as_sympy(c) * t3 ** d for d, c in gold.GOLDEN_QUADRATIC.items()))
    flat = [sympy.expand(e) for snap in g2_short.solutions.eliminated
            for e in snap]
    assert any(e == target for e in flat), flat


def test_solutions_satisfy_all_relations(g2_short):
    """Substituting each solution into every computed relation must give
    zero; commutators go to zero in a one-dimensional representation."""
    pres = g2_short.presentation
    for s in g2_short.solutions.solutions:
        values = representation_values(g2_short.system, s)
        for (i, j), p in pres.relations.items():
            total = sympy.Integer(0)
            for exps, c in p.items():
                term = as_sympy(c)
                for k, e in enumerate(exps):
                    term *= values[k] ** e
                total += term
            assert sympy.simplify(total) == 0, f"F_{i + 1}{j + 1}"


def test_nonzero_weight_coordinates_forced_to_zero(g2_short):
    for s in g2_short.solutions.solutions:
        values = representation_values(g2_short.system, s)
        zero = tuple(QQ(0) for _ in g2_short.gb.beta[0])
        for i, v in enumerate(values):
            if g2_short.gb.beta[i] != zero:
                assert v == 0


def test_g2_long_root_orbit_has_one_solution(g2_long):
    assert g2_long.solutions.kind == "finite"
    assert g2_long.solutions.count == 1


def test_fast_mode_agrees_with_full_mode(g2_long):
    fast = run_pipeline("G", 2, orbit="A1", mode="onedim-fast")
    full = g2_long.solutions
    assert fast.solutions.kind == full.kind
    assert fast.solutions.count == full.count
    assert [sorted(s.items(), key=str) for s in fast.solutions.solutions] == \
        [sorted(s.items(), key=str) for s in full.solutions]
    balanced = set(weight_balanced_pairs(fast.gb.r, fast.gb.beta))
    assert set(fast.presentation.relations) == balanced


def test_missing_relation_reported_with_pair(g2_short):
    pres = build_presentation(g2_short.Q, g2_short.thetas, pairs=[(0, 1)])
    with pytest.raises(ValueError, match=r"\(4, 5\)"):
        build_system(pres, g2_short.gb.beta)


def test_principal_sl2_is_positive_dimensional():
    res = run_pipeline("A", 1, labels=(2,))
    assert res.solutions.kind == "positive-dimensional"
    assert [i + 1 for i in res.solutions.free] == [1]


def test_zero_orbit_has_single_trivial_solution():
    res = run_pipeline("G", 2, labels=(0, 0))
    assert res.solutions.kind == "finite"
    assert res.solutions.count == 1
    for s in res.solutions.solutions:
        assert all(v == 0 for v in s.values())


def test_minimal_polynomial_helper():
    x = sympy.Symbol("x")
    assert minimal_polynomial_of(sympy.Rational(3, 2), x) is None
    mp = minimal_polynomial_of(sympy.sqrt(2), x)
    assert sympy.expand(mp) == x ** 2 - 2
