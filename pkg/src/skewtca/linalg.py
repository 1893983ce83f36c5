"""Exact linear algebra over Q.

Two independent eliminations share one interface: sparse Gauss-Jordan on
``{column: Fraction}`` rows, and dense fraction-free Bareiss on integer
matrices.  ``method="auto"`` picks by density; tests run both and compare.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

DENSE_THRESHOLD = 0.3


def _density(rows: Sequence[dict], ncols: int) -> float:
    if not rows or not ncols:
        return 0.0
    return sum(len(r) for r in rows) / (len(rows) * ncols)


def _ncols(rows: Sequence[dict]) -> int:
    return max((max(r) for r in rows if r), default=-1) + 1


def pick_method(rows: Sequence[dict], ncols: Optional[int] = None) -> str:
    ncols = _ncols(rows) if ncols is None else ncols
    return "dense" if _density(rows, ncols) > DENSE_THRESHOLD else "sparse"


# ------------------------------------------------------------ sparse Gauss

class SparseEchelon:
    """Incrementally maintained reduced row echelon form over Q."""

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def reduce(self, row: dict) -> dict:
        row = {k: Fraction(v) for k, v in row.items() if v}
        for col in sorted(set(row) & set(self.pivots)):
            c = row.get(col)
            if not c:
                continue
            for k, v in self.pivots[col].items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        # stored rows are fully reduced, so one pass clears every pivot column
        return row

    def add(self, row: dict) -> bool:
        """Insert ``row``; return True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        col = min(row)
        inv = 1 / row[col]
        row = {k: v * inv for k, v in row.items()}
        for other in self.pivots.values():
            c = other.get(col)
            if c:
                for k, v in row.items():
                    nv = other.get(k, 0) - c * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self.pivots[col] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _sparse_rank(rows: Sequence[dict]) -> int:
    ech = SparseEchelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def _sparse_nullspace(rows: Sequence[dict], ncols: int) -> list[dict]:
    ech = SparseEchelon()
    for r in rows:
        ech.add(r)
    basis = []
    for free in range(ncols):
        if free in ech.pivots:
            continue
        vec = {free: Fraction(1)}
        for col, prow in ech.pivots.items():
            c = prow.get(free)
            if c:
                vec[col] = -c
        basis.append(vec)
    return basis


# ----------------------------------------------------------- dense Bareiss

def _to_integer_matrix(rows: Sequence[dict], ncols: int) -> list[list[int]]:
    out = []
    for r in rows:
        den = lcm(*(Fraction(v).denominator for v in r.values())) if r else 1
        line = [0] * ncols
        for k, v in r.items():
            line[k] = int(Fraction(v) * den)
        out.append(line)
    return out


def bareiss(matrix: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form; returns ``(echelon, pivot columns)``."""
    m = [row[:] for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c, ncols):
                row_i[j] = (piv * row_i[j] - a * row_r[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def _dense_rank(rows: Sequence[dict], ncols: int) -> int:
    if not rows or not ncols:
        return 0
    return len(bareiss(_to_integer_matrix(rows, ncols))[1])


def _back_substitute(ech: list[list[int]], pivots: list[int], nvars: int) -> list[Fraction]:
    x = [Fraction(0)] * nvars
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = ech[r]
        acc = Fraction(row[nvars])
        for j in range(c + 1, nvars):
            if row[j]:
                acc -= row[j] * x[j]
        x[c] = acc / row[c]
    return x


def _dense_nullspace(rows: Sequence[dict], ncols: int) -> list[dict]:
    if not rows:
        return [{i: Fraction(1)} for i in range(ncols)]
    ech, pivots = bareiss(_to_integer_matrix(rows, ncols))
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            acc = Fraction(0)
            for j in range(c + 1, ncols):
                if ech[r][j] and x[j]:
                    acc -= ech[r][j] * x[j]
            x[c] = acc / ech[r][c]
        basis.append({i: v for i, v in enumerate(x) if v})
    return basis


# --------------------------------------------------------------- interface

def rank(rows: Sequence[dict], ncols: Optional[int] = None, method: str = "auto") -> int:
    ncols = _ncols(rows) if ncols is None else ncols
    if method == "auto":
        method = pick_method(rows, ncols)
    if method == "dense":
        return _dense_rank(rows, ncols)
    return _sparse_rank(rows)


def nullspace(rows: Sequence[dict], ncols: int, method: str = "auto") -> list[dict]:
    """Basis of ``{x : row·x = 0 for every row}``."""
    if method == "auto":
        method = pick_method(rows, ncols)
    if method == "dense":
        return _dense_nullspace(rows, ncols)
    return _sparse_nullspace(rows, ncols)


def solve(columns: Sequence[dict], target: dict, method: str = "auto") -> Optional[list[Fraction]]:
    """Find ``x`` with ``Σ x_k columns[k] == target`` (vectors keyed by any hashable).

    Returns ``None`` when ``target`` is not in the span.
    """
    keys = sorted({k for col in columns for k in col} | set(target), key=repr)
    if not keys:
        return [Fraction(0)] * len(columns)
    row_of = {k: i for i, k in enumerate(keys)}
    nvars = len(columns)
    eqs: list[dict] = [dict() for _ in keys]
    for j, col in enumerate(columns):
        for k, v in col.items():
            if v:
                eqs[row_of[k]][j] = v
    for k, v in target.items():
        if v:
            eqs[row_of[k]][nvars] = v
    if method == "auto":
        method = pick_method(eqs, nvars + 1)
    if method == "dense":
        ech, pivots = bareiss(_to_integer_matrix(eqs, nvars + 1))
        if pivots and pivots[-1] == nvars:
            return None
        return _back_substitute(ech, pivots, nvars)
    ech = SparseEchelon()
    for e in eqs:
        ech.add(e)
    if nvars in ech.pivots:
        return None
    x = [Fraction(0)] * nvars
    for col, prow in ech.pivots.items():
        x[col] = prow.get(nvars, Fraction(0))
    return x
