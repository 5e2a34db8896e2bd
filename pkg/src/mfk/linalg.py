"""Exact linear algebra over the rationals.

Small dense matrices only; everything is lists of :class:`~fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def frac(x) -> Fraction:
    """Coerce ints, Fractions, or 'p/q' strings to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def frac_matrix(rows) -> list[list[Fraction]]:
    return [[frac(x) for x in row] for row in rows]


def rref(matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rref, pivot column indices)."""
    m = [row[:] for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(matrix) -> int:
    if not matrix or not matrix[0]:
        return 0
    return len(rref(matrix)[1])


def nullspace(matrix) -> list[list[Fraction]]:
    """Basis of the right kernel {x : Mx = 0}."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    red, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def solve(matrix, rhs) -> list[Fraction] | None:
    """One solution of Mx = b, or None if inconsistent."""
    if not matrix:
        return [] if all(x == 0 for x in rhs) else None
    ncols = len(matrix[0])
    aug = [row[:] + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug)
    for i in range(len(red)):
        if all(red[i][c] == 0 for c in range(ncols)) and red[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        if p == ncols:
            return None
        x[p] = red[i][ncols]
    return x


def matvec(matrix, vec):
    return [sum(a * x for a, x in zip(row, vec)) for row in matrix]


def content(ints) -> int:
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return g


def primitive_integer(vec, sign_first_positive: bool = True) -> list[int]:
    """Scale a rational vector to integers with content 1.

    With ``sign_first_positive`` the first nonzero entry is made positive.
    The zero vector is returned unchanged.
    """
    fracs = [frac(x) for x in vec]
    denom = 1
    for x in fracs:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fracs]
    g = content(ints)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    if sign_first_positive:
        lead = next((x for x in ints if x != 0), 0)
        if lead < 0:
            ints = [-x for x in ints]
    return ints


def lp_feasible(a_eq, b_eq, num_nonneg: int) -> list[Fraction] | None:
    """Exact feasibility of ``A x = b`` with ``x[:num_nonneg] >= 0``.

    Remaining variables are free.  Returns a feasible x, or None.
    Phase-1 simplex with Bland's rule; all arithmetic is rational.
    """
    if not a_eq:
        return []
    nvars = len(a_eq[0])
    nfree = nvars - num_nonneg
    # free variable -> difference of two nonnegative ones
    rows = []
    for row in a_eq:
        ext = [frac(x) for x in row[:num_nonneg]]
        for j in range(num_nonneg, nvars):
            ext.append(frac(row[j]))
            ext.append(-frac(row[j]))
        rows.append(ext)
    ncols = num_nonneg + 2 * nfree
    rhs = [frac(b) for b in b_eq]
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    m = len(rows)
    # tableau with artificial basis
    tab = [rows[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [rhs[i]]
           for i in range(m)]
    total = ncols + m
    basis = [ncols + i for i in range(m)]
    cost = [Fraction(0)] * (total + 1)
    for i in range(m):
        for j in range(total + 1):
            cost[j] += tab[i][j]
    for j in range(ncols, total):
        cost[j] -= 1

    while True:
        enter = next((j for j in range(total) if cost[j] > 0), None)
        if enter is None:
            break
        pivot_i, best = None, None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][total] / tab[i][enter]
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[pivot_i]):
                    pivot_i, best = i, ratio
        if pivot_i is None:
            # unbounded phase-1 objective cannot happen; defensive
            return None
        piv = tab[pivot_i][enter]
        tab[pivot_i] = [x / piv for x in tab[pivot_i]]
        for i in range(m):
            if i != pivot_i and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[pivot_i])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, tab[pivot_i])]
        basis[pivot_i] = enter

    if cost[total] != 0:
        return None
    xext = [Fraction(0)] * ncols
    for i, bidx in enumerate(basis):
        if bidx < ncols:
            xext[bidx] = tab[i][total]
    x = xext[:num_nonneg]
    for k in range(nfree):
        x.append(xext[num_nonneg + 2 * k] - xext[num_nonneg + 2 * k + 1])
    return x
