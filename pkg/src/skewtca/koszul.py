"""Ext multiplicities between simples over ``Sym(Sym^2)`` and ``Λ(Sym^2)``.

The Koszul resolution reduces ``Ext^i(S_λ, S_μ)`` to a tensor product
multiplicity against ``P_i``, where ``P_i = Λ^i(Sym^2)`` over the symmetric
algebra and ``P_i = Sym^i(Sym^2)`` over the exterior one.  Two size
conventions are in circulation, so both are computed:

* ``mu_larger``:    multiplicity of ``S_μ`` in ``S_λ ⊗ P_i``  (``|μ| = |λ| + 2i``)
* ``lambda_larger``: multiplicity of ``S_λ`` in ``S_μ ⊗ P_i`` (``|λ| = |μ| + 2i``)

A parity shift doubles every count of simple objects.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from skewtca.partition import EMPTY, Partition, partitions
from skewtca.reports import Report
from skewtca.schur import (SchurVector, lr_coefficient, sym_of_sym2, tensor_schur,
                           wedge_of_sym2)

BRANCHES = ("mu_larger", "lambda_larger")
SIZE_BOUND = 14
PARITY_SHIFTS = 2


class Side(str, Enum):
    SYM = "sym"      # modules over Sym(Sym^2)
    WEDGE = "wedge"  # modules over Λ(Sym^2)


@lru_cache(maxsize=None)
def pairing_object(side: Side, i: int, rank: int) -> SchurVector:
    side = Side(side)
    if i == 0:
        return SchurVector({EMPTY: 1})
    fn = wedge_of_sym2 if side is Side.SYM else sym_of_sym2
    return fn(i, rank)


@dataclass(frozen=True)
class ExtQuery:
    side: Side
    i: int
    lam: Partition
    mu: Partition
    rank: int | None = None

    def __post_init__(self):
        if self.i < 0:
            raise ValueError("homological degree must be nonnegative")
        object.__setattr__(self, "side", Side(self.side))
        object.__setattr__(self, "lam", Partition(self.lam))
        object.__setattr__(self, "mu", Partition(self.mu))


@dataclass
class ExtReport:
    multiplicity: int
    branch: str
    rank: int
    stable: bool
    note: str = field(default="")

    def to_dict(self) -> dict:
        return {"multiplicity": self.multiplicity, "branch": self.branch,
                "rank": self.rank, "stable": self.stable, "note": self.note}


def _multiplicity(side: Side, i: int, small: Partition, big: Partition, rank: int) -> int:
    if big.size != small.size + 2 * i:
        return 0
    return sum(c * lr_coefficient(small, kappa, big)
               for kappa, c in pairing_object(side, i, rank).items() if len(kappa) <= rank)


def ext_dim(q: ExtQuery, branch: str = "mu_larger") -> ExtReport:
    """Multiplicity of one simple in the other tensored with ``P_i``, checked at two ranks."""
    if branch not in BRANCHES:
        raise ValueError(f"branch must be one of {BRANCHES}")
    small, big = (q.lam, q.mu) if branch == "mu_larger" else (q.mu, q.lam)
    if max(q.lam.size, q.mu.size) > SIZE_BOUND:
        raise ValueError(f"partition sizes above {SIZE_BOUND} are out of range")
    # κ ⊆ big is forced by the LR rule, so rank ℓ(big) already sees every term
    rank = q.rank or max(len(big), 1)
    here = _multiplicity(q.side, q.i, small, big, rank)
    there = _multiplicity(q.side, q.i, small, big, rank + 1)
    note = ("Hom(S_mu, S_lambda ⊗ P_i)" if branch == "mu_larger"
            else "Hom(S_lambda, S_mu ⊗ P_i)")
    return ExtReport(here, branch, rank, here == there, note)


def ext_solutions(side: Side, i: int, mu: Partition, branch: str) -> list[Partition]:
    """All ``λ`` with nonzero ``Ext^i(S_λ, S_μ)`` under one size convention."""
    side = Side(side)
    mu = Partition(mu)
    if branch == "mu_larger":
        size = mu.size - 2 * i
        if size < 0:
            return []
        return [lam for lam in partitions(size)
                if ext_dim(ExtQuery(side, i, lam, mu), branch).multiplicity]
    if branch != "lambda_larger":
        raise ValueError(f"branch must be one of {BRANCHES}")
    if mu.size + 2 * i > SIZE_BOUND:
        raise ValueError(f"|mu| + 2i above {SIZE_BOUND} is out of range")
    rank = max(len(mu) + 2 * i, 1)
    out = SchurVector()
    for kappa, c in pairing_object(side, i, rank).items():
        out = out + tensor_schur(mu, kappa).scale(c)
    return sorted(out.support(), reverse=True)


def ext_table(side: Side, max_i: int, max_size: int) -> list[dict]:
    """Nonzero multiplicities for all ``λ, μ`` with ``|λ|, |μ| ≤ max_size`` and ``i ≤ max_i``."""
    side = Side(side)
    rows = []
    for i in range(max_i + 1):
        for small_size in range(0, max_size - 2 * i + 1):
            for small in partitions(small_size):
                for big in partitions(small_size + 2 * i):
                    for branch in BRANCHES:
                        lam, mu = (small, big) if branch == "mu_larger" else (big, small)
                        r = ext_dim(ExtQuery(side, i, lam, mu), branch)
                        if r.multiplicity:
                            rows.append({"side": side.value, "i": i, "lambda": str(lam),
                                         "mu": str(mu), "branch": branch,
                                         "multiplicity": r.multiplicity})
    return rows


def table_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["side", "i", "lambda", "mu", "branch", "multiplicity"],
                            lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def column(d: int) -> Partition:
    return Partition((1,) * d)


def isolated_partitions(side: Side, branch: str, max_size: int) -> list[Partition]:
    """``μ`` with ``Ext^i(S_λ, S_μ) = 0`` for every ``i ≥ 1`` and every ``λ`` in range."""
    out = []
    for size in range(max_size + 1):
        for mu in partitions(size):
            hit = False
            for i in range(1, max_size // 2 + 2):
                if branch == "mu_larger" and size - 2 * i < 0:
                    break
                if branch == "lambda_larger" and size + 2 * i > SIZE_BOUND:
                    break
                if ext_solutions(side, i, mu, branch):
                    hit = True
                    break
            if not hit:
                out.append(mu)
    return out


def remark_report(dmax: int = 6) -> Report:
    """Recompute the counts that separate the two exterior/symmetric module categories."""
    if dmax > 6:
        raise ValueError("remark_report is bounded to d <= 6")
    lines = []
    failures = []
    warnings = []

    def line(name, ok, hard, **data):
        lines.append({"check": name, "ok": ok, **data})
        if not ok:
            (failures if hard else warnings).append(name)

    sym2 = sym_of_sym2(2, 4)
    line("Sym2(Sym2) = S(4) + S(2,2)", sym2 == SchurVector({Partition((4,)): 1, Partition((2, 2)): 1}),
         True, computed=str(sym2))

    wedge2 = wedge_of_sym2(2, 4)
    expected = SchurVector({Partition((2, 1, 1)): 1})
    line("Wedge2(Sym2) = S(2,1,1)", wedge2 == expected, False,
         computed=str(wedge2), expected=str(expected),
         finding=("computed S(3,1); S(2,1,1) is the transposed shape, the expansion of Wedge2(Wedge2)"
                  if wedge2 == SchurVector({Partition((3, 1)): 1}) else ""))

    for d in range(1, dmax + 1):
        prod = tensor_schur(column(d), Partition((2,)))
        want = SchurVector({Partition((3,) + (1,) * (d - 1)): 1, Partition((2,) + (1,) * d): 1})
        line(f"Pieri S(1^{d}) x S(2)", prod == want, True, computed=str(prod))

    # two-solution counts for the column / row families
    for side, family, label in ((Side.SYM, column, "1^d"), (Side.WEDGE, lambda d: Partition((d,) if d else ()), "d")):
        for d in range(0, dmax + 1):
            mu = family(d)
            expected = 1 if d == 0 else 2
            counts = {}
            for i in (1, 2):
                for branch in BRANCHES:
                    counts[f"i={i},{branch}"] = len(ext_solutions(side, i, mu, branch))
            matching = sorted(k for k, v in counts.items() if v == expected)
            line(f"{side.value}: solutions against S({label}) with d={d}", bool(matching), False,
                 expected=expected, counts=counts, reproduced_by=matching)

    # 2 simples versus 4 simples at the empty partition in degree 2
    sym_count = {b: len(ext_solutions(Side.SYM, 2, EMPTY, b)) for b in BRANCHES}
    wedge_count = {b: len(ext_solutions(Side.WEDGE, 2, EMPTY, b)) for b in BRANCHES}
    ok = sym_count["lambda_larger"] == 1 and wedge_count["lambda_larger"] == 2
    line("degree 2 at the empty partition: 2 simples vs 4 simples", ok, True,
         sym_partitions=sym_count, wedge_partitions=wedge_count,
         sym_simples={b: PARITY_SHIFTS * v for b, v in sym_count.items()},
         wedge_simples={b: PARITY_SHIFTS * v for b, v in wedge_count.items()},
         reproduced_by="lambda_larger" if ok else None)

    for side, family in ((Side.SYM, [column(d) for d in range(dmax + 1)]),
                                 (Side.WEDGE, [Partition((d,) if d else ()) for d in range(dmax + 1)])):
        computed = {b: [str(p) for p in isolated_partitions(side, b, dmax)] for b in BRANCHES}
        expected = [str(p) for p in family]
        matching = [b for b in BRANCHES if computed[b] == expected]
        line(f"{side.value}: simples with no higher Ext from any other simple", bool(matching), False,
             computed=computed, expected=expected, reproduced_by=matching)

    passed = not failures
    return Report("remark", {"dmax": dmax}, passed,
                  anchor="no equivalence between modules over Sym(Sym^2) and over Wedge(Sym^2)",
                  witnesses=failures, details={"lines": lines, "discrepancies": warnings},
                  warn=passed and bool(warnings))
