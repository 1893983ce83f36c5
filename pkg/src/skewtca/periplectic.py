"""The odd form on ``C^{n|n}``, its stabilizer ``pe_n`` and the Borel decomposition check."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from skewtca import linalg
from skewtca.reports import Report
from skewtca.superpoly import SuperPoly
from skewtca.tca import RankContext


class GlElement:
    """A ``2n×2n`` rational matrix in blocks ``[[a, b], [c, d]]``.

    Row/column order is ``e_1..e_n, f_1..f_n``; ``b`` maps ``f`` to ``e`` and
    ``c`` maps ``e`` to ``f``.
    """

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Optional[dict] = None):
        self.n = n
        self.entries = {k: Fraction(v) for k, v in (entries or {}).items() if v}

    @classmethod
    def from_blocks(cls, a=None, b=None, c=None, d=None) -> "GlElement":
        blocks = [m for m in (a, b, c, d) if m is not None]
        n = len(blocks[0]) if blocks else 0
        out = {}
        for m, (ro, co) in ((a, (0, 0)), (b, (0, n)), (c, (n, 0)), (d, (n, n))):
            if m is None:
                continue
            for i, row in enumerate(m):
                for j, v in enumerate(row):
                    if v:
                        out[(ro + i, co + j)] = v
        return cls(n, out)

    def block(self, name: str) -> list[list[Fraction]]:
        ro, co = {"a": (0, 0), "b": (0, self.n), "c": (self.n, 0), "d": (self.n, self.n)}[name]
        return [[self.entries.get((ro + i, co + j), Fraction(0)) for j in range(self.n)]
                for i in range(self.n)]

    @property
    def parity(self) -> Optional[int]:
        """0 (even), 1 (odd) or None (mixed); zero counts as even."""
        ps = {int((r < self.n) != (c < self.n)) for r, c in self.entries}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def __call__(self, b: int) -> dict:
        return {r: v for (r, c), v in self.entries.items() if c == b}

    def vector(self) -> dict:
        size = 2 * self.n
        return {r * size + c: v for (r, c), v in self.entries.items()}

    def __eq__(self, other) -> bool:
        return isinstance(other, GlElement) and self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        return f"GlElement({self.n}, {dict(sorted(self.entries.items()))})"


def basis_parity(n: int, b: int) -> int:
    return 0 if b < n else 1


def omega_pair(n: int, u: int, v: int) -> int:
    """The odd symmetric form on basis vectors: 1 on ``(e_i, f_i)`` and ``(f_i, e_i)``."""
    if u < n <= v:
        return 1 if v - n == u else 0
    if v < n <= u:
        return 1 if u - n == v else 0
    return 0


def omega_eval(ctx: RankContext, p: SuperPoly) -> Fraction:
    """The odd functional on ``Sym^2(V)[1]``: ``x[i,i] ↦ 1``, every other generator ``↦ 0``.

    ``p`` must be a linear combination of generators.
    """
    total = Fraction(0)
    for m, c in p.terms.items():
        if sum(m) != 1:
            raise ValueError("omega_eval takes a linear combination of generators")
        name = ctx.table.variables[m.index(1)].name
        if name[0] == "x":
            i, j = name[2:-1].split(",")
            total += c if i == j else 0
    return total


def invariance_defect(X: GlElement) -> list[tuple[int, int, Fraction]]:
    """Basis pairs where ``ω(Xu, v) + (-1)^{|X||u|} ω(u, Xv)`` is nonzero."""
    n = X.n
    px = X.parity
    if px is None:
        raise ValueError("invariance is tested on homogeneous elements")
    bad = []
    for u in range(2 * n):
        xu = X(u)
        for v in range(2 * n):
            xv = X(v)
            lhs = sum(c * omega_pair(n, r, v) for r, c in xu.items())
            sign = -1 if px and basis_parity(n, u) else 1
            rhs = sum(c * omega_pair(n, u, r) for r, c in xv.items())
            total = lhs + sign * rhs
            if total:
                bad.append((u, v, total))
    return bad


def pe_basis(n: int) -> list[GlElement]:
    """Basis of ``[[a, b], [c, -a^T]]`` with ``b`` symmetric and ``c`` antisymmetric."""
    out = []
    for i in range(n):
        for j in range(n):
            out.append(GlElement(n, {(i, j): 1, (n + j, n + i): -1}))
    for i in range(n):
        for j in range(i, n):
            ent = {(i, n + j): 1}
            ent[(j, n + i)] = 1
            out.append(GlElement(n, ent))
    for i in range(n):
        for j in range(i + 1, n):
            out.append(GlElement(n, {(n + i, j): 1, (n + j, i): -1}))
    return out


def borel_basis(n: int) -> list[GlElement]:
    """The Borel: ``a``, ``c``, ``d`` upper triangular and ``b`` strictly upper triangular."""
    out = []
    for ro, co, strict in ((0, 0, False), (0, n, True), (n, 0, False), (n, n, False)):
        for i in range(n):
            for j in range(i + (1 if strict else 0), n):
                out.append(GlElement(n, {(ro + i, co + j): 1}))
    return out


def iwasawa_check(n: int) -> Report:
    """``b + pe = gl(n|n)`` and ``b ∩ pe`` is the diagonal ``(a, -a)`` torus."""
    pe = [X.vector() for X in pe_basis(n)]
    bo = [X.vector() for X in borel_basis(n)]
    size = 4 * n * n
    total = linalg.rank(pe + bo, size)
    rpe, rbo = linalg.rank(pe, size), linalg.rank(bo, size)
    inter_dim = rpe + rbo - total
    # the intersection from the kernel of [pe | -borel]
    rows = []
    for k in range(size):
        row = {}
        for idx, v in enumerate(pe):
            if k in v:
                row[idx] = v[k]
        for idx, v in enumerate(bo):
            if k in v:
                row[len(pe) + idx] = -v[k]
        if row:
            rows.append(row)
    kernel = linalg.nullspace(rows, len(pe) + len(bo))
    inter = []
    for vec in kernel:
        mat = {}
        for idx, c in vec.items():
            if idx < len(pe):
                for k, v in pe[idx].items():
                    mat[k] = mat.get(k, 0) + c * v
        inter.append({k: v for k, v in mat.items() if v})
    width = 2 * n
    diagonal_ok = True
    for mat in inter:
        for k, v in mat.items():
            r, c = divmod(k, width)
            if r != c:
                diagonal_ok = False
            elif r < n and mat.get((r + n) * width + r + n, 0) != -v:
                diagonal_ok = False
    witnesses = []
    if total != size:
        witnesses.append({"sum_dimension": total, "expected": size})
    if inter_dim != n or len(inter) != n:
        witnesses.append({"intersection_dimension": inter_dim, "expected": n})
    if not diagonal_ok:
        witnesses.append({"intersection_not_diagonal": [sorted(m.items()) for m in inter]})
    return Report("iwasawa", {"n": n}, not witnesses,
                  anchor="b + pe = gl(n|n) with b ∩ pe the n-dimensional torus",
                  witnesses=witnesses,
                  details={"dim_pe": rpe, "dim_borel": rbo, "dim_sum": total,
                           "dim_intersection": inter_dim})
