import random

import pytest

from walgebra import linalg
from walgebra.rational import QQ, ZERO


def rand_matrix(rng, rows, cols, lo=-5, hi=5):
    return [[QQ(rng.randint(lo, hi)) for _ in range(cols)]
            for _ in range(rows)]


def test_rref_pivots_are_unit_columns():
    m = [[QQ(2), QQ(4), QQ(6)], [QQ(1), QQ(3), QQ(5)]]
    red, pivots = linalg.rref(m)
    assert pivots == [0, 1]
    for ri, pc in enumerate(pivots):
        assert red[ri][pc] == 1
        for rj in range(len(red)):
            if rj != ri:
                assert red[rj][pc] == 0


def test_kernel_vectors_are_killed():
    rng = random.Random(11)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 6)
        m = rand_matrix(rng, rows, cols)
        for v in linalg.kernel_basis(m, cols):
            for row in m:
                assert sum((a * b for a, b in zip(row, v)), ZERO) == 0


def test_rank_plus_nullity():
    rng = random.Random(13)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 6)
        m = rand_matrix(rng, rows, cols)
        assert linalg.rank(m) + len(linalg.kernel_basis(m, cols)) == cols


def test_solve_unique_round_trip():
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randint(1, 5)
        m = rand_matrix(rng, n, n)
        if linalg.rank(m) < n:
            continue
        x = [QQ(rng.randint(-4, 4)) for _ in range(n)]
        rhs = [sum((a * b for a, b in zip(row, x)), ZERO) for row in m]
        assert linalg.solve_unique(m, rhs) == x


def test_solve_unique_rejects_inconsistent_and_underdetermined():
    with pytest.raises(ValueError):
        linalg.solve_unique([[QQ(1), QQ(1)]], [QQ(1)])
    with pytest.raises(ValueError):
        linalg.solve_unique([[QQ(1), QQ(1)], [QQ(2), QQ(2)]],
                            [QQ(1), QQ(3)])


def test_invert_round_trip():
    rng = random.Random(19)
    for _ in range(10):
        n = rng.randint(1, 5)
        m = rand_matrix(rng, n, n)
        if linalg.rank(m) < n:
            continue
        inv = linalg.invert(m)
        for i in range(n):
            for j in range(n):
                val = sum((m[i][k] * inv[k][j] for k in range(n)), ZERO)
                assert val == (1 if i == j else 0)


def test_primitive_integer():
    vec = [QQ(3, 4), QQ(-1, 2), QQ(0)]
    ints, den = linalg.primitive_integer(vec)
    assert ints == [3, -2, 0]
    assert den == 4
    ints, _ = linalg.primitive_integer([QQ(-2), QQ(4)])
    assert ints == [1, -2]      # positive leading coefficient


def test_incremental_system_matches_direct_solve():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(1, 4)
        x = [QQ(rng.randint(-3, 3)) for _ in range(n)]
        sys_ = linalg.IncrementalSystem(n)
        rows = rand_matrix(rng, 3 * n, n)
        for row in rows:
            rhs = sum((a * b for a, b in zip(row, x)), ZERO)
            if sys_.is_determined():
                assert sys_.check_row(row, rhs)
            else:
                sys_.add_row(row, rhs)
        if sys_.is_determined():
            assert sys_.solution() == x


def test_incremental_system_detects_inconsistency():
    sys_ = linalg.IncrementalSystem(1)
    sys_.add_row([QQ(1)], QQ(1))
    with pytest.raises(ValueError):
        sys_.add_row([QQ(2)], QQ(3))
