"""Exact sparse linear algebra over the rationals.

Rows are dicts mapping a column index to a nonzero coefficient.  The
elimination core is fraction-free: denominators are cleared up front and
each combined row is divided by its integer content, so entries stay
integral until a unit pivot is actually needed.
"""

from __future__ import annotations

from fractions import Fraction
from heapq import heappop, heappush
from math import gcd, lcm


def _as_int_row(row: dict) -> dict[int, int]:
    """Clear denominators and divide out the content of a sparse row."""
    if not row:
        return {}
    denom = 1
    for v in row.values():
        if isinstance(v, Fraction):
            denom = lcm(denom, v.denominator)
    ints: dict[int, int] = {}
    for c, v in row.items():
        iv = int(v * denom)
        if iv:
            ints[c] = iv
    if not ints:
        return {}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return ints


def _combine(row: dict[int, int], piv: dict[int, int], col: int) -> dict[int, int]:
    """a*row - b*piv with the entry at col eliminated, content divided out."""
    a = piv[col]
    b = row[col]
    if a < 0:
        a, b = -a, -b
    new = {c: a * v for c, v in row.items()}
    for c, v in piv.items():
        w = new.get(c, 0) - b * v
        if w:
            new[c] = w
        elif c in new:
            del new[c]
    if not new:
        return new
    g = 0
    for v in new.values():
        g = gcd(g, v)
    if g > 1:
        new = {c: v // g for c, v in new.items()}
    return new


class Echelon:
    """Row echelon data for a sparse matrix with a fixed column order."""

    __slots__ = ("pivot_rows", "_reduced")

    def __init__(self, pivot_rows: dict[int, dict[int, int]], reduced: bool):
        self.pivot_rows = pivot_rows
        self._reduced = reduced

    @property
    def pivots(self) -> list[int]:
        return sorted(self.pivot_rows)

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def ensure_reduced(self) -> "Echelon":
        """Back-eliminate so every pivot column appears in exactly one row."""
        if self._reduced:
            return self
        for p in sorted(self.pivot_rows, reverse=True):
            prow = self.pivot_rows[p]
            for q in list(self.pivot_rows):
                if q < p and p in self.pivot_rows[q]:
                    self.pivot_rows[q] = _combine(self.pivot_rows[q], prow, p)
        self._reduced = True
        return self

    def reduce(self, row: dict) -> dict[int, Fraction]:
        """Normal form of a row modulo the row span (no pivot support left)."""
        out = {c: Fraction(v) for c, v in row.items() if v}
        for p in self.pivots:
            if p not in out:
                continue
            prow = self.pivot_rows[p]
            coef = out[p] / prow[p]
            for c, v in prow.items():
                w = out.get(c, 0) - coef * v
                if w:
                    out[c] = w
                elif c in out:
                    del out[c]
        return out

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def echelon(rows, reduced: bool = False) -> Echelon:
    """Echelonize sparse rows, picking pivots left to right in column order."""
    buckets: dict[int, list[dict[int, int]]] = {}
    heap: list[int] = []

    def push(r: dict[int, int]) -> None:
        lead = min(r)
        if lead not in buckets:
            buckets[lead] = []
            heappush(heap, lead)
        buckets[lead].append(r)

    for raw in rows:
        r = _as_int_row(raw)
        if r:
            push(r)

    pivot_rows: dict[int, dict[int, int]] = {}
    while heap:
        col = heappop(heap)
        here = buckets.pop(col, [])
        if not here:
            continue
        here.sort(key=len)
        piv = here[0]
        pivot_rows[col] = piv
        for r in here[1:]:
            nr = _combine(r, piv, col)
            if nr:
                push(nr)
    ech = Echelon(pivot_rows, reduced=False)
    if reduced:
        ech.ensure_reduced()
    return ech


def solve(columns: list[dict], rhs: dict) -> list[Fraction]:
    """Solve sum_j x_j * columns[j] = rhs; the solution must be unique.

    Dense Gauss-Jordan over the union of row indices; raises when the
    system is inconsistent or the columns are dependent.
    """
    index_union: set = set(rhs)
    for col in columns:
        index_union |= set(col)
    rows_idx = sorted(index_union)
    k = len(columns)
    mat = [
        [Fraction(columns[j].get(m, 0)) for j in range(k)] + [Fraction(rhs.get(m, 0))]
        for m in rows_idx
    ]
    piv_of_col: list[int | None] = [None] * k
    rank = 0
    for col in range(k):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [v / pv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[rank])]
        piv_of_col[col] = rank
        rank += 1
    if any(p is None for p in piv_of_col):
        raise ValueError("columns are linearly dependent; no unique solution")
    for r in range(rank, len(mat)):
        if mat[r][k]:
            raise ValueError("right-hand side is outside the column span")
    return [mat[piv_of_col[c]][k] for c in range(k)]
