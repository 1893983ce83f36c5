"""The algebra ``A = Sym(Sym^2(V)[1])`` at finite rank ``(n|m)``.

Generators are ``x[i,j] = e_i f_j ε`` (even), ``y[i,j] = e_i e_j ε`` with
``i ≤ j`` and ``z[i,j] = f_i f_j ε`` with ``i < j`` (both odd).  Weights live
in ``Z^{n+m}``: ``e``-coordinates first, then ``f``-coordinates.  Every
generator has central degree 2.

Elements of ``gl(n|m)`` act on ``A`` as superderivations; a matrix is a
sparse ``{(row, col): coeff}`` dict over the basis ``e_1..e_n, f_1..f_m``
(indices ``0..n-1`` then ``n..n+m-1``), with column = input vector.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import permutations
from math import comb
from typing import Optional

from skewtca import linalg
from skewtca.partition import (Partition, brace, q1_of_size, super_highest_weight,
                               unbrace)
from skewtca.reports import Report
from skewtca.schur import dim_schur
from skewtca.superpoly import (EVEN, ODD, Superderivation, SuperPoly, Variable,
                               VariableTable, graded_basis, span_membership)

UNIT_IDEAL_CONVENTION = "X_{i,-j} read as the odd operator e_i -> f_j killing all other basis vectors"


@dataclass(frozen=True)
class IdealSpec:
    kind: str  # "pn" | "m" | "custom"
    names: tuple
    generators: tuple


class RankContext:
    """Variable table and ``gl(n|m)`` action for ``A(C^{n|m})``; ``m`` defaults to ``n``."""

    def __init__(self, n: int, m: Optional[int] = None):
        if n < 0:
            raise ValueError("rank must be nonnegative")
        self.n = n
        self.m = n if m is None else m
        width = self.n + self.m
        variables = []

        def wt(*slots):
            w = [0] * width
            for s in slots:
                w[s] += 1
            return tuple(w)

        for i in range(1, self.n + 1):
            for j in range(1, self.m + 1):
                variables.append(Variable(f"x[{i},{j}]", EVEN, wt(i - 1, self.n + j - 1), 2))
        for i in range(1, self.n + 1):
            for j in range(i, self.n + 1):
                variables.append(Variable(f"y[{i},{j}]", ODD, wt(i - 1, j - 1), 2))
        for i in range(1, self.m + 1):
            for j in range(i + 1, self.m + 1):
                variables.append(Variable(f"z[{i},{j}]", ODD, wt(self.n + i - 1, self.n + j - 1), 2))
        self.table = VariableTable(variables)

    def __repr__(self) -> str:
        return f"RankContext({self.n}|{self.m})"

    # ----------------------------------------------------------- generators
    def x(self, i: int, j: int) -> SuperPoly:
        return self.table.var(f"x[{i},{j}]")

    def y(self, i: int, j: int) -> SuperPoly:
        i, j = min(i, j), max(i, j)
        return self.table.var(f"y[{i},{j}]")

    def z(self, i: int, j: int) -> SuperPoly:
        if i == j:
            return self.table.zero()
        if i > j:
            return -self.table.var(f"z[{j},{i}]")
        return self.table.var(f"z[{i},{j}]")

    def e(self, i: int) -> int:
        return i - 1

    def f(self, j: int) -> int:
        return self.n + j - 1

    def basis_parity(self, b: int) -> int:
        return EVEN if b < self.n else ODD

    def quad(self, u: int, v: int) -> SuperPoly:
        """The generator ``u·v·ε`` for basis indices ``u, v`` of ``V`` (with sign)."""
        pu, pv = self.basis_parity(u), self.basis_parity(v)
        if pu == EVEN and pv == EVEN:
            return self.y(u + 1, v + 1)
        if pu == EVEN:
            return self.x(u + 1, v - self.n + 1)
        if pv == EVEN:
            return self.x(v + 1, u - self.n + 1)
        return self.z(u - self.n + 1, v - self.n + 1)

    @cached_property
    def factors(self) -> dict:
        """Variable index -> ordered pair of basis indices ``(u, v)`` with ``var = u·v·ε``."""
        out = {}
        for idx, var in enumerate(self.table.variables):
            kind = var.name[0]
            i, j = (int(t) for t in var.name[2:-1].split(","))
            if kind == "x":
                out[idx] = (self.e(i), self.f(j))
            elif kind == "y":
                out[idx] = (self.e(i), self.e(j))
            else:
                out[idx] = (self.f(i), self.f(j))
        return out

    # ------------------------------------------------------------- gl action
    def matrix_parity(self, entries: dict) -> int:
        ps = {(self.basis_parity(r) + self.basis_parity(c)) & 1
              for (r, c), v in entries.items() if v}
        if len(ps) > 1:
            raise ValueError("matrix is not parity-homogeneous")
        return ps.pop() if ps else EVEN

    def apply_matrix(self, entries: dict, b: int) -> dict:
        """``X·basis[b]`` as ``{basis index: coeff}``."""
        return {r: v for (r, c), v in entries.items() if c == b and v}

    def derivation(self, entries: dict) -> Superderivation:
        """The superderivation of ``A`` induced by a homogeneous ``gl(n|m)`` element."""
        parity = self.matrix_parity(entries)
        images = {}
        for idx, (u, v) in self.factors.items():
            img = self.table.zero()
            for r, c in self.apply_matrix(entries, u).items():
                img = img + self.quad(r, v).scale(c)
            sign = -1 if parity and self.basis_parity(u) else 1
            for r, c in self.apply_matrix(entries, v).items():
                img = img + self.quad(u, r).scale(sign * c)
            images[idx] = img
        return Superderivation(self.table, images, parity)

    def elementary(self, r: int, c: int) -> Superderivation:
        return self.derivation({(r, c): 1})

    def raising_operators(self) -> list[tuple[str, Superderivation]]:
        """Positive root vectors for the Borel with all ``e`` before all ``f``."""
        ops = []
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                ops.append((f"e{j}->e{i}", self.elementary(self.e(i), self.e(j))))
        for i in range(1, self.m + 1):
            for j in range(i + 1, self.m + 1):
                ops.append((f"f{j}->f{i}", self.elementary(self.f(i), self.f(j))))
        for i in range(1, self.n + 1):
            for j in range(1, self.m + 1):
                ops.append((f"f{j}->e{i}", self.elementary(self.e(i), self.f(j))))
        return ops

    # ---------------------------------------------------------------- ideals
    def residue_values(self) -> dict:
        vals = {}
        for idx, var in enumerate(self.table.variables):
            if var.name[0] == "x":
                i, j = var.name[2:-1].split(",")
                vals[idx] = 1 if i == j else 0
            else:
                vals[idx] = 0
        return vals

    def residue(self, p: SuperPoly):
        """Image under ``A → C`` with ``x[i,i] ↦ 1`` and every other generator ``↦ 0``."""
        return p.substitute(self.residue_values())

    def maximal_ideal(self) -> IdealSpec:
        names, gens = [], []
        for idx, var in enumerate(self.table.variables):
            g = self.table.var(var.name)
            if var.name[0] == "x":
                i, j = var.name[2:-1].split(",")
                if i == j:
                    g = g - 1
                    names.append(f"{var.name}-1")
                    gens.append(g)
                    continue
            names.append(var.name)
            gens.append(g)
        return IdealSpec("m", tuple(names), tuple(gens))

    def odd_ideal_contains(self, p: SuperPoly) -> bool:
        """Membership in the ideal ``I`` generated by the ``y`` and ``z`` variables."""
        mask = self.table.oddmask
        return all(any(e and odd for e, odd in zip(m, mask)) for m in p.terms)

    def odd_variables_product(self) -> SuperPoly:
        out = self.table.one()
        for idx, var in enumerate(self.table.variables):
            if var.parity == ODD:
                out = out * self.table.var(var.name)
        return out


# ------------------------------------------------------------- operations

def y_product(ctx: RankContext, n: Optional[int] = None) -> SuperPoly:
    """``y(n) = ∏_{1≤i≤j≤n} y[i,j]`` in table order (sign +1)."""
    n = ctx.n if n is None else n
    out = ctx.table.one()
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            out = out * ctx.y(i, j)
    return out


def pn_ideal(ctx: RankContext, n: int) -> IdealSpec:
    return IdealSpec("pn", (f"y({n})",), (y_product(ctx, n),))


def verify_pn_top(n: int) -> Report:
    """The degree ``n(n+1)`` part of the ``y``-only subalgebra is spanned by ``y(n)``."""
    ctx = RankContext(n, 0)
    top = n * (n + 1)
    basis = graded_basis(ctx.table, top)
    yp = y_product(ctx)
    ok = len(basis) == 1 and ctx.table.monomial(basis[0]) == yp
    above = ctx.table.count_degree(top + 2)
    return Report("pn-top", {"n": n}, ok and above == 0,
                  anchor="top y-degree component is one-dimensional, spanned by y(n)",
                  witnesses=[] if ok else [[ctx.table.format_monomial(m) for m in basis]],
                  details={"dimension": len(basis), "spanned_by": yp.dump(),
                           "dimension_above_top": above})


def determinant(ctx: RankContext, k: int) -> SuperPoly:
    """Leading principal ``k×k`` minor of ``(x[i,j])``."""
    out = ctx.table.zero()
    for perm in permutations(range(1, k + 1)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        term = ctx.table.one()
        for i, j in enumerate(perm, start=1):
            term = term * ctx.x(i, j)
        out = out + (term if inv % 2 == 0 else -term)
    return out


def x_lambda(ctx: RankContext, lam: Partition) -> SuperPoly:
    """``∏_k det_k^{λ_k - λ_{k+1}}``, a highest weight vector of ``S_λ ⊗ S_λ`` in the ``x`` variables."""
    lam = Partition(lam)
    if len(lam) > min(ctx.n, ctx.m):
        raise ValueError(f"x_lambda needs length(λ) <= rank, got {lam} at {ctx}")
    out = ctx.table.one()
    for k in range(1, len(lam) + 1):
        out = out * determinant(ctx, k) ** (lam.part(k) - lam.part(k + 1))
    return out


def hwv_check(ctx: RankContext, lam: Partition) -> Report:
    """``y(n)·x_λ`` is killed by every raising operator and has the weight of ``S_{λ{n}}``."""
    lam = Partition(lam)
    vec = y_product(ctx) * x_lambda(ctx, lam)
    failures = []
    for name, op in ctx.raising_operators():
        img = op(vec)
        if img:
            failures.append({"operator": name, "image": img.dump()})
    weight = vec.weight()
    target = brace(lam, ctx.n)
    hw = super_highest_weight(target, ctx.n, ctx.m)
    expected = None if hw is None else hw[0] + hw[1]
    weight_ok = weight is not None and weight == expected
    if not weight_ok:
        failures.append({"weight": weight, "expected": expected})
    return Report("hwv", {"n": ctx.n, "lambda": lam}, vec.is_zero() is False and not failures,
                  anchor="the y-product times the x-minor is a highest weight vector of the braced shape",
                  witnesses=failures,
                  details={"target": target, "weight": weight, "expected_weight": expected,
                           "raising_operators": len(ctx.raising_operators())})


def unit_ideal_operators(ctx: RankContext) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)`` of the operators in written order (leftmost first)."""
    return [(i, j) for j in range(1, ctx.n + 1) for i in range(1, j + 1)]


def unit_ideal_element(ctx: RankContext, bound: int = 3):
    """Apply the ``e_i -> f_j`` operators to ``y(n)``; return ``(v, residue of v)``."""
    if ctx.n > bound:
        raise ValueError(f"unit_ideal_element bound is n <= {bound}")
    v = y_product(ctx)
    for i, j in reversed(unit_ideal_operators(ctx)):
        v = ctx.elementary(ctx.f(j), ctx.e(i))(v)
    return v, Fraction(ctx.residue(v))


def unit_ideal_report(n: int) -> Report:
    ctx = RankContext(n)
    v, res = unit_ideal_element(ctx)
    base = ctx.residue(y_product(ctx))
    return Report("unit-ideal", {"n": n}, res != 0 and base == 0,
                  anchor="the maximal ideal and the y-product ideal are comaximal",
                  witnesses=[] if res else [v.dump()],
                  details={"residue": res, "terms": len(v.terms),
                           "residue_of_y_product": base,
                           "convention": UNIT_IDEAL_CONVENTION})


def orbit_span(ctx: RankContext, seed: SuperPoly) -> list[SuperPoly]:
    """Basis of weight vectors for the ``gl(n|m)``-submodule generated by a weight vector."""
    size = ctx.n + ctx.m
    ops = [ctx.elementary(r, c) for r in range(size) for c in range(size)]
    index: dict = {}
    cols: list = []
    echelons: dict = {}
    basis: list[SuperPoly] = []
    queue = [seed]
    while queue:
        vec = queue.pop()
        if not vec:
            continue
        w = vec.weight()
        if w is None:
            raise ValueError("orbit seed must be a weight vector")
        row = {}
        for m, c in vec.terms.items():
            if m not in index:
                index[m] = len(cols)
                cols.append(m)
            row[index[m]] = c
        ech = echelons.setdefault(w, linalg.SparseEchelon())
        if not ech.add(row):
            continue
        basis.append(vec)
        for op in ops:
            img = op(vec)
            if img:
                queue.append(img)
    return basis


def ess_bound_check(lam: Partition, n0: int, guard: int = 200_000) -> Report:
    """The highest weight vector of ``S_λ`` lies in the ideal generated by the orbit of ``y(n0)``."""
    lam = Partition(lam)
    found = unbrace(lam, n0)
    if found is None:
        raise ValueError(f"{lam} is not of the form μ{{n'}} with n' >= {n0}")
    mu, n1 = found
    ctx = RankContext(n1)
    target = y_product(ctx) * x_lambda(ctx, mu)
    gens = orbit_span(ctx, y_product(ctx, n0))
    member, cert = span_membership(target, gens, guard=guard)
    return Report("ess-bound", {"lambda": lam, "n0": n0}, member,
                  anchor="the y-product ideal contains every S_λ whose diagram holds the n×(n+1) box",
                  witnesses=[] if member else [target.dump()],
                  details={"mu": mu, "rank": n1, "orbit_dimension": len(gens),
                           "certificate_terms": len(cert or [])})


def nzd_check(n: int = 2, degree_bound: int = 6, seed: int = 0, samples: int = 6) -> Report:
    """Elements outside the odd ideal are nonzerodivisors; elements inside are not."""
    if n > 2 or degree_bound > 6:
        raise ValueError("nzd_check is bounded to n <= 2 and degree <= 6")
    ctx = RankContext(n)
    rng = random.Random(seed)
    table = ctx.table
    mask = table.oddmask
    witnesses = []

    def basis_upto(d):
        return [m for k in range(0, d + 1, 2) for m in graded_basis(table, k)]

    def injective(s):
        top = max(table.degree_of(m) for m in s.terms)
        dom = basis_upto(max(degree_bound - top, 0))
        rows = []
        index = {}
        for m in dom:
            img = s * table.monomial(m)
            row = {}
            for mm, c in img.terms.items():
                row[index.setdefault(mm, len(index))] = c
            rows.append(row)
        return linalg.rank(rows, len(index)) == len(dom), len(dom)

    even_mons = [m for k in (2, 4) for m in graded_basis(table, k) if table.parity_of(m) == 0]
    x_only = [m for m in even_mons if not any(e and o for e, o in zip(m, mask))]
    with_odd = [m for m in even_mons if any(e and o for e, o in zip(m, mask))]

    outside = [table.one() + ctx.y(1, 1), ctx.x(1, 1)]
    for _ in range(samples):
        d = rng.choice((2, 4))
        xs = [m for m in x_only if table.degree_of(m) == d]
        os_ = [m for m in with_odd if table.degree_of(m) == d]
        s = table.monomial(rng.choice(xs), rng.randint(1, 3))
        for m in rng.sample(os_, min(len(os_), 2)):
            s = s + table.monomial(m, rng.randint(-2, 2))
        outside.append(s)
    checked_out = []
    for s in outside:
        inj, dim = injective(s)
        p = table.zero()
        while not p:
            for m in rng.sample(basis_upto(4), 3):
                p = p + table.monomial(m, rng.randint(-3, 3))
        if not inj or not (s * p):
            witnesses.append({"s": s.dump(), "p": p.dump(), "kind": "zero divisor outside I"})
        checked_out.append({"s": s.dump(), "domain_dimension": dim})

    annihilator = ctx.odd_variables_product()
    inside = [ctx.y(1, 1)] + [table.monomial(m, rng.randint(1, 3)) for m in rng.sample(with_odd, min(samples, len(with_odd)))]
    for s in inside:
        if not ctx.odd_ideal_contains(s) or (s * annihilator) or not annihilator:
            witnesses.append({"s": s.dump(), "kind": "element of I without annihilator"})
    return Report("nzd", {"n": n, "degree_bound": degree_bound, "seed": seed}, not witnesses,
                  anchor="s is a nonzerodivisor iff s lies outside the odd ideal",
                  witnesses=witnesses,
                  details={"outside_checked": len(outside), "inside_checked": len(inside),
                           "annihilator": annihilator.dump()})


def y_component_dimension(n: int, d: int) -> int:
    """Dimension of the degree-``2d`` part of the ``y``-only subalgebra at rank ``n``."""
    return len(graded_basis(RankContext(n, 0).table, 2 * d))


def dimension_consistency(n: int, d: int) -> dict:
    """Three counts of ``dim Λ^d(Sym^2 C^n)`` that must agree."""
    schur_side = sum(dim_schur(lam, n) for lam in q1_of_size(2 * d))
    return {"binomial": comb(n * (n + 1) // 2, d),
            "monomials": y_component_dimension(n, d),
            "q1_schur_dims": schur_side}


def dimension_scan(max_size: int = 10, ranks=range(1, 5)) -> Report:
    """Binomial count, monomial count and Q1 Schur dimensions agree for every ``2d ≤ max_size``."""
    bad = []
    cases = 0
    for n in ranks:
        for d in range(max_size // 2 + 1):
            counts = dimension_consistency(n, d)
            cases += 1
            if len(set(counts.values())) != 1:
                bad.append({"n": n, "d": d, **counts})
    return Report("dimensions", {"max_size": max_size, "ranks": list(ranks)}, not bad,
                  anchor="three independent counts of the exterior powers of Sym^2 agree",
                  witnesses=bad, details={"cases": cases})
