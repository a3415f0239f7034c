import itertools
import random

import pytest

from walgebra.rational import QQ, ZERO
from walgebra.rootsystem import (InvalidTypeError, build_root_system,
                                 cartan_matrix, chevalley_constants, height)


def test_positive_root_counts():
    # closed-form counts computed independently of the closure algorithm
    expected = {
        ("A", 1): 1, ("A", 3): 6, ("B", 2): 4, ("B", 3): 9,
        ("C", 3): 9, ("D", 4): 12, ("G", 2): 6, ("F", 4): 24,
        ("E", 6): 36,
    }
    for (t, r), count in expected.items():
        rs = build_root_system(t, r)
        assert len(rs.positive_roots) == count


def test_invalid_types_rejected():
    for t, r in (("X", 2), ("G", 3), ("F", 5), ("E", 9), ("A", 0)):
        with pytest.raises(InvalidTypeError):
            build_root_system(t, r)


def test_g2_cartan_matrix():
    assert cartan_matrix("G", 2) == [[2, -3], [-1, 2]]


def test_f4_cartan_matrix():
    assert cartan_matrix("F", 4) == [
        [2, -1, 0, 0],
        [-1, 2, -1, 0],
        [0, -2, 2, -1],
        [0, 0, -1, 2],
    ]


def test_g2_root_order_matches_height_then_coordinates():
    rs = build_root_system("G", 2)
    assert rs.positive_roots == [
        (1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]


def test_root_strings_and_norms_g2():
    rs = build_root_system("G", 2)
    a1, a2 = rs.simple_roots
    assert rs.norm(a1) == 2          # short
    assert rs.norm(a2) == 6          # long
    assert rs.pairing(a2, a1) == -3
    assert rs.pairing(a1, a2) == -1


def test_chevalley_constants_magnitude_is_p_plus_one():
    for t, r in (("G", 2), ("F", 4), ("A", 3)):
        rs = build_root_system(t, r)
        lie = chevalley_constants(rs)
        for a in rs.all_roots:
            for b in rs.all_roots:
                s = tuple(x + y for x, y in zip(a, b))
                if rs.is_root(s):
                    n = lie.constants.n(a, b)
                    p = rs.root_string_p(a, b)
                    assert abs(n) == p + 1


def test_jacobi_exhaustive_g2():
    lie = chevalley_constants(build_root_system("G", 2))
    failures = 0
    for i, j, k in itertools.combinations(range(lie.dim), 3):
        acc: dict[int, QQ] = {}
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            inner = lie.bracket_basis(b, c)
            for l, cl in inner.items():
                for m, cm in lie.bracket_basis(a, l).items():
                    acc[m] = acc.get(m, ZERO) + cl * cm
        if any(v != 0 for v in acc.values()):
            failures += 1
    assert failures == 0


def test_jacobi_sampled_f4():
    lie = chevalley_constants(build_root_system("F", 4))
    rng = random.Random(29)
    for _ in range(300):
        i, j, k = (rng.randrange(lie.dim) for _ in range(3))
        acc: dict[int, QQ] = {}
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            for l, cl in lie.bracket_basis(b, c).items():
                for m, cm in lie.bracket_basis(a, l).items():
                    acc[m] = acc.get(m, ZERO) + cl * cm
        assert all(v == 0 for v in acc.values())


def test_killing_form_against_trace_oracle():
    """lie.killing must agree with the trace of ad(x) ad(y) computed
    directly from brackets."""
    lie = chevalley_constants(build_root_system("G", 2))

    def ad_matrix(i):
        cols = [lie.bracket_basis(i, j) for j in range(lie.dim)]
        return cols

    rng = random.Random(31)
    for _ in range(20):
        i, j = rng.randrange(lie.dim), rng.randrange(lie.dim)
        adi, adj = ad_matrix(i), ad_matrix(j)
        trace = ZERO
        for c in range(lie.dim):
            # (ad_i ad_j)[c][c]
            for mid, cm in adj[c].items():
                trace += cm * adi[mid].get(c, ZERO)
        assert lie.killing_entry(i, j) == trace


def test_bad_primes():
    assert build_root_system("G", 2).bad_primes == (2, 3)
    assert build_root_system("F", 4).bad_primes == (2, 3)
    assert build_root_system("A", 2).bad_primes == ()
    assert build_root_system("E", 6).bad_primes == (2, 3)
