"""Exact integer linear algebra.

Rank uses fraction-free elimination on sparse integer rows: each
elimination step is ``row <- p*row - c*pivot`` followed by division by
the row content, so entries stay integral and small.  An optional prime
modulus trades exactness for speed (rank mod p can only drop).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

SparseRow = dict[int, int]


def _content(row: SparseRow) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def sparse_rank(rows: Iterable[SparseRow], modulus: int | None = None) -> int:
    """Rank of a matrix given as sparse rows ``{column: value}``."""
    pivots: dict[int, SparseRow] = {}  # pivot column -> reduced row
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        if modulus:
            r = {c: v % modulus for c, v in r.items() if v % modulus}
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                if not modulus:
                    g = _content(r)
                    if g > 1:
                        r = {c: v // g for c, v in r.items()}
                pivots[col] = r
                break
            a, b = piv[col], r[col]
            if modulus:
                f = b * pow(a, -1, modulus) % modulus
                for c, v in piv.items():
                    nv = (r.get(c, 0) - f * v) % modulus
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
            else:
                g = gcd(a, b)
                pa, pb = a // g, b // g
                new: SparseRow = {}
                for c in r.keys() | piv.keys():
                    nv = pa * r.get(c, 0) - pb * piv.get(c, 0)
                    if nv:
                        new[c] = nv
                r = new
                if r:
                    g = _content(r)
                    if g > 1:
                        r = {c: v // g for c, v in r.items()}
    return len(pivots)


def rank(matrix: Sequence[Sequence[int]]) -> int:
    return sparse_rank({j: v for j, v in enumerate(row) if v} for row in matrix)


def nullspace(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel over Q, one vector per free column."""
    ncols = len(matrix[0]) if matrix else (ncols or 0)
    A = [[Fraction(v) for v in row] for row in matrix]
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [vi - f * vr for vi, vr in zip(A[i], A[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(A):
            break
    free = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivot_cols):
            v[pc] = -A[i][fc]
        basis.append(v)
    return basis


def primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers (sign preserved)."""
    den = 1
    for v in vec:
        den = den * Fraction(v).denominator // gcd(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        raise ValueError("zero vector")
    return tuple(v // g for v in ints)
