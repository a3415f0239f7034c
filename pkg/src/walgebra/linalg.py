"""Dense exact linear algebra over the rationals.

Everything here is deliberately simple Gaussian elimination on lists of
rationals: the matrices in this pipeline are small (at most a few hundred
rows) and exactness is non-negotiable.
"""

from __future__ import annotations

from math import gcd, lcm

from .rational import QQ, ZERO


def rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form.  Returns (rref_rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = QQ(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: list[list]) -> int:
    return len(rref(rows)[0])


def kernel_basis(rows: list[list], ncols: int) -> list[list]:
    """Basis of the right kernel {v : A v = 0}."""
    red, pivots = rref(rows)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = QQ(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -red[ri][fc]
        basis.append(v)
    return basis


def solve_unique(rows: list[list], rhs: list) -> list:
    """Solve A x = b requiring a unique solution; raises ValueError otherwise."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    red, pivots = rref(aug)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    if len([p for p in pivots if p < ncols]) < ncols:
        raise ValueError("underdetermined linear system")
    x = [ZERO] * ncols
    for ri, pc in enumerate(pivots):
        x[pc] = red[ri][ncols]
    return x


def invert(rows: list[list]) -> list[list]:
    n = len(rows)
    aug = [list(r) + [QQ(1) if i == j else ZERO for j in range(n)]
           for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def primitive_integer(vec: list) -> tuple[list[int], int]:
    """Scale a rational vector to a primitive integer vector with positive
    leading coefficient.  Returns (vector, lcm_of_denominators_used)."""
    if all(x == 0 for x in vec):
        return [0] * len(vec), 1
    den = 1
    for x in vec:
        if x != 0:
            den = lcm(den, int(x.denominator))
    ints = [int(x * den) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return ints, den


class IncrementalSystem:
    """Row-echelon accumulator for a homogeneous-side linear system A x = b.

    Rows are appended lazily; once the rank reaches the number of unknowns
    the unique solution can be extracted and any further rows merely
    verified.  Used by the generator solver, where the full system is
    highly redundant.
    """

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.rows: list[list] = []  # echelon rows, each length nvars+1
        self.pivot_of_row: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, row: list) -> list:
        row = list(row)
        for r, pc in zip(self.rows, self.pivot_of_row):
            if row[pc] != 0:
                f = row[pc]
                row = [a - f * b for a, b in zip(row, r)]
        return row

    def add_row(self, coeffs: list, rhs) -> bool:
        """Add an equation coeffs . x = rhs.  Returns True if it was new
        information; raises ValueError on inconsistency."""
        row = self._reduce(list(coeffs) + [rhs])
        pc = next((c for c in range(self.nvars) if row[c] != 0), None)
        if pc is None:
            if row[self.nvars] != 0:
                raise ValueError("inconsistent linear system")
            return False
        inv = QQ(1) / row[pc]
        row = [x * inv for x in row]
        for r in self.rows:
            if r[pc] != 0:
                f = r[pc]
                for c in range(self.nvars + 1):
                    r[c] -= f * row[c]
        self.rows.append(row)
        self.pivot_of_row.append(pc)
        return True

    def is_determined(self) -> bool:
        return self.rank == self.nvars

    def solution(self) -> list:
        if not self.is_determined():
            raise ValueError("solution space has positive dimension")
        x = [ZERO] * self.nvars
        for r, pc in zip(self.rows, self.pivot_of_row):
            x[pc] = r[self.nvars]
        return x

    def check_row(self, coeffs: list, rhs) -> bool:
        """Verify an equation against the current unique solution."""
        x = self.solution()
        return sum((c * v for c, v in zip(coeffs, x)), ZERO) == rhs
