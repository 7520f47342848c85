"""Exact integer linear algebra for abelianization invariants.

Everything here runs over Python integers (arbitrary precision); the
Smith normal form keeps full unimodular transforms and uses the minimal
nonzero absolute value as pivot, which keeps entry growth tame and the
output deterministic.  Rank is cross-checkable against fraction-free
(Bareiss) elimination, an independent code path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentations import Presentation
from .words import Symbol

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return []
    n, m, p = len(a), len(b), len(b[0])
    assert len(a[0]) == m
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(m):
            v = ai[k]
            if v:
                bk = b[k]
                for j in range(p):
                    oi[j] += v * bk[j]
    return out


def determinant(a: Matrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def bareiss_rank(a: Matrix) -> int:
    """Row rank by fraction-free elimination; independent of the SNF path."""
    if not a or not a[0]:
        return 0
    m = [row[:] for row in a]
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(cols):
        pivot = None
        for i in range(row, rows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for i in range(row + 1, rows):
            for j in range(col + 1, cols):
                m[i][j] = (m[i][j] * m[row][col] - m[i][col] * m[row][j]) // prev
            m[i][col] = 0
        prev = m[row][col]
        rank += 1
        row += 1
        if row == rows:
            break
    return rank


@dataclass
class SmithForm:
    """U * A * V = S with U, V unimodular, S diagonal with divisibility chain."""

    u: Matrix
    s: Matrix
    v: Matrix
    invariant_factors: list[int]

    def verify(self, a: Matrix) -> None:
        if mat_mul(mat_mul(self.u, a), self.v) != self.s:
            raise AssertionError("U*A*V != S")
        if abs(determinant(self.u)) != 1 or abs(determinant(self.v)) != 1:
            raise AssertionError("transform not unimodular")
        for x, y in zip(self.invariant_factors, self.invariant_factors[1:]):
            if y % x != 0:
                raise AssertionError("divisibility chain broken")


def _min_abs_pivot(s: Matrix, start: int, rows: int, cols: int):
    best = None
    for i in range(start, rows):
        for j in range(start, cols):
            v = abs(s[i][j])
            if v and (best is None or v < best[0]):
                best = (v, i, j)
                if v == 1:
                    return best[1], best[2]
    return None if best is None else (best[1], best[2])


def smith_normal_form(a: Matrix) -> SmithForm:
    rows = len(a)
    cols = len(a[0]) if a else 0
    s = [row[:] for row in a]
    u = _identity(rows)
    v = _identity(cols)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        s[dst] = [x + q * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for row in s:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    n = min(rows, cols)
    while t < n:
        pos = _min_abs_pivot(s, t, rows, cols)
        if pos is None:
            break
        pi, pj = pos
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            cleared = True
            for i in range(t + 1, rows):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    add_row(t, i, -q)
                    if s[i][t]:
                        swap_rows(t, i)
                        cleared = False
            for j in range(t + 1, cols):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    add_col(t, j, -q)
                    if s[t][j]:
                        swap_cols(t, j)
                        cleared = False
            if cleared:
                break
        if s[t][t] < 0:
            negate_row(t)
        t += 1

    # Enforce the divisibility chain d_i | d_{i+1} by pairwise gcd/lcm
    # fixes inside each offending 2x2 block; this is bubble sort on the
    # prime exponents and terminates.
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            x, y = s[i][i], s[i + 1][i + 1]
            if x and y and y % x != 0:
                add_col(i + 1, i, 1)  # block is now [[x, 0], [y, y]]
                while s[i + 1][i] or s[i][i + 1]:
                    if s[i + 1][i]:
                        q = s[i + 1][i] // s[i][i]
                        add_row(i, i + 1, -q)
                        if s[i + 1][i]:
                            swap_rows(i, i + 1)
                    else:
                        q = s[i][i + 1] // s[i][i]
                        add_col(i, i + 1, -q)
                        if s[i][i + 1]:
                            swap_cols(i, i + 1)
                if s[i][i] < 0:
                    negate_row(i)
                if s[i + 1][i + 1] < 0:
                    negate_row(i + 1)
                changed = True
    factors = [s[i][i] for i in range(n) if s[i][i]]
    return SmithForm(u, s, v, factors)


# ---------------------------------------------------------------------------
# Presentations -> abelianization
# ---------------------------------------------------------------------------


def relation_matrix(p: Presentation) -> Matrix:
    """Row per relator, column per generator in canonical symbol order."""
    cols = {s: j for j, s in enumerate(p.generators)}
    out = []
    for rel in p.relators:
        row = [0] * len(p.generators)
        for s, e in rel.word:
            row[cols[s]] += e
        out.append(row)
    return out


@dataclass
class AbelianizationReport:
    rank: int
    torsion: list[int]
    generator_order: list[Symbol]
    rows: Matrix
    invariant_factors: list[int]


def abelianize(p: Presentation, verify: bool = False) -> AbelianizationReport:
    rows = relation_matrix(p)
    # Zero and duplicate rows generate the same row lattice; dropping them
    # leaves every invariant factor unchanged and keeps the SNF small.
    distinct = sorted({tuple(r) for r in rows if any(r)})
    reduced = [list(r) for r in distinct]
    if reduced:
        snf = smith_normal_form(reduced)
        if verify:
            snf.verify(reduced)
        factors = snf.invariant_factors
    else:
        factors = []
    return AbelianizationReport(
        rank=len(p.generators) - len(factors),
        torsion=[x for x in factors if x != 1],
        generator_order=list(p.generators),
        rows=rows,
        invariant_factors=factors,
    )


def betti(p: Presentation) -> int:
    return abelianize(p).rank
