"""The map from ``A`` into the coordinate ring of the opposite Borel.

The target ring has variables ``a[i,j]`` and ``d[i,j]`` (``i ≤ j``, even),
``c[i,j]`` (``i ≤ j``, odd) and ``b[i,j]`` (``i < j``, odd).  The torus acts
with weight ``-α_i`` on ``a[i,j], b[i,j]`` and ``+α_i`` on ``c[i,j], d[i,j]``.
"""
from __future__ import annotations

from functools import cached_property
from typing import Optional

from skewtca import linalg
from skewtca.reports import Report
from skewtca.superpoly import EVEN, ODD, GuardExceeded, SuperPoly, Variable, VariableTable, graded_basis
from skewtca.tca import RankContext

LETTER_RANK = {"d": 3, "c": 2, "a": 1, "b": 0}


class BbarContext:
    """Variables of the Borel coordinate ring at rank ``n`` plus the matching ``A`` context."""

    def __init__(self, n: int):
        self.n = n
        variables = []
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                for letter, parity, sign in (("a", EVEN, -1), ("b", ODD, -1),
                                             ("c", ODD, 1), ("d", EVEN, 1)):
                    if letter == "b" and i == j:
                        continue
                    w = [0] * n
                    w[i - 1] = sign
                    variables.append(Variable(f"{letter}[{i},{j}]", parity, tuple(w), 1))
        self.table = VariableTable(variables)
        self.source = RankContext(n)

    def __repr__(self) -> str:
        return f"BbarContext({self.n})"

    def v(self, letter: str, i: int, j: int) -> SuperPoly:
        if letter == "b" and i == j:
            return self.table.zero()
        if i > j:
            raise ValueError(f"{letter}[{i},{j}] needs i <= j")
        return self.table.var(f"{letter}[{i},{j}]")

    # ------------------------------------------------------------ images
    def X(self, i: int, j: int) -> SuperPoly:
        out = self.table.zero()
        for k in range(1, min(i, j) + 1):
            out = out + self.v("a", k, i) * self.v("d", k, j) + self.v("c", k, i) * self.v("b", k, j)
        return out

    def Y(self, i: int, j: int) -> SuperPoly:
        out = self.table.zero()
        for k in range(1, min(i, j) + 1):
            out = out + self.v("a", k, i) * self.v("c", k, j) + self.v("a", k, j) * self.v("c", k, i)
        return out

    def Z(self, i: int, j: int) -> SuperPoly:
        out = self.table.zero()
        for k in range(1, min(i, j) + 1):
            out = out + self.v("d", k, i) * self.v("b", k, j) - self.v("b", k, i) * self.v("d", k, j)
        return out

    @cached_property
    def images(self) -> list[SuperPoly]:
        """Image of each variable of ``A`` in table order."""
        out = []
        for var in self.source.table.variables:
            letter = var.name[0]
            i, j = (int(t) for t in var.name[2:-1].split(","))
            out.append({"x": self.X, "y": self.Y, "z": self.Z}[letter](i, j))
        return out

    def phi(self, p: SuperPoly) -> SuperPoly:
        """Image of any element of ``A``; odd factors are multiplied in table order."""
        if p.table is not self.source.table:
            raise ValueError("element does not live in this rank's A")
        out = self.table.zero()
        for m, c in p.terms.items():
            out = out + self.phi_monomial(m).scale(c)
        return out

    def phi_monomial(self, m: tuple) -> SuperPoly:
        out = self.table.one()
        for idx, e in enumerate(m):
            for _ in range(e):
                out = out * self.images[idx]
        return out

    # --------------------------------------------------------- the order
    @cached_property
    def variable_keys(self) -> list[tuple]:
        keys = []
        for var in self.table.variables:
            i, j = (int(t) for t in var.name[2:-1].split(","))
            keys.append((j, i, LETTER_RANK[var.name[0]]))
        return keys

    @cached_property
    def descending(self) -> list[int]:
        """Variable indices from largest to smallest."""
        return sorted(range(self.table.size), key=lambda k: self.variable_keys[k], reverse=True)

    def monomial_key(self, m: tuple) -> tuple:
        """Graded lexicographic sort key."""
        return (sum(m), tuple(m[k] for k in self.descending))

    def leading_term(self, p: SuperPoly) -> tuple:
        if not p:
            raise ValueError("the zero polynomial has no leading term")
        return max(p.terms, key=self.monomial_key)

    def weight(self, m: tuple) -> tuple:
        return self.table.weight_of(m)

    def residue_values(self) -> dict:
        """The point ``a[i,i] = d[i,i] = 1``, every other variable 0."""
        vals = {}
        for idx, var in enumerate(self.table.variables):
            i, j = var.name[2:-1].split(",")
            vals[idx] = 1 if var.name[0] in "ad" and i == j else 0
        return vals


def phi_image(ctx: BbarContext, name: str) -> SuperPoly:
    """Image of the generator called ``name``, e.g. ``"x[1,2]"``."""
    return ctx.images[ctx.source.table.index[name]]


def leading_term(ctx: BbarContext, p: SuperPoly) -> tuple:
    return ctx.leading_term(p)


def expected_leading(ctx: BbarContext, name: str) -> tuple:
    """The predicted leading monomial of one generator image."""
    letter = name[0]
    i, j = (int(t) for t in name[2:-1].split(","))
    T = ctx.table
    if letter == "x":
        pair = (("a", i, i), ("d", i, j)) if i <= j else (("a", j, i), ("d", j, j))
    elif letter == "y":
        pair = (("a", i, i), ("c", i, j))
    else:
        pair = (("d", i, i), ("b", i, j))
    exps = [0] * T.size
    for l, p, q in pair:
        exps[T.index[f"{l}[{p},{q}]"]] += 1
    return tuple(exps)


def reconstruct(ctx: BbarContext, lt: tuple) -> Optional[tuple]:
    """Recover the ``A``-monomial whose image has leading term ``lt`` (None if impossible)."""
    T = ctx.table
    src = ctx.source.table
    rest = list(lt)
    out = [0] * src.size

    def take(letter, i, j, k=1):
        idx = T.index[f"{letter}[{i},{j}]"]
        rest[idx] -= k
        return rest[idx] >= 0

    n = ctx.n
    # odd factors first: each c[i,j] with an a[i,i], each b[i,j] with a d[i,i]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if rest[T.index[f"c[{i},{j}]"]]:
                if not (take("c", i, j) and take("a", i, i)):
                    return None
                out[src.index[f"y[{i},{j}]"]] += 1
            if i < j and rest[T.index[f"b[{i},{j}]"]]:
                if not (take("b", i, j) and take("d", i, i)):
                    return None
                out[src.index[f"z[{i},{j}]"]] += 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            k = rest[T.index[f"d[{i},{j}]"]]
            if k:
                if not (take("d", i, j, k) and take("a", i, i, k)):
                    return None
                out[src.index[f"x[{i},{j}]"]] += k
            k = rest[T.index[f"a[{i},{j}]"]]
            if k:
                if not (take("a", i, j, k) and take("d", i, i, k)):
                    return None
                out[src.index[f"x[{j},{i}]"]] += k
    for i in range(1, n + 1):
        ka, kd = rest[T.index[f"a[{i},{i}]"]], rest[T.index[f"d[{i},{i}]"]]
        if ka != kd:
            return None
        take("a", i, i, ka)
        take("d", i, i, kd)
        out[src.index[f"x[{i},{i}]"]] += ka
    if any(rest):
        return None
    return tuple(out)


def leading_term_table_check(ctx: BbarContext) -> list[dict]:
    """Mismatches between computed and predicted generator leading terms."""
    bad = []
    for idx, var in enumerate(ctx.source.table.variables):
        img = ctx.images[idx]
        got = ctx.leading_term(img)
        want = expected_leading(ctx, var.name)
        if got != want:
            bad.append({"generator": var.name, "leading": ctx.table.format_monomial(got),
                        "expected": ctx.table.format_monomial(want)})
    return bad


def injectivity_scan(n: int, degree_bound: int, inject_duplicate: bool = False,
                     guard: int = 200_000) -> Report:
    """Distinct monomials in the generator images have distinct, reconstructible leading terms."""
    if n > 3 or degree_bound > 4:
        raise GuardExceeded(f"injectivity_scan is bounded to n <= 3, D <= 4 (got {n}, {degree_bound})",
                            0)
    ctx = BbarContext(n)
    src = ctx.source.table
    witnesses = leading_term_table_check(ctx)
    gen_lt = [expected_leading(ctx, v.name) for v in src.variables]
    leading: list = []
    cache: dict = {(0,) * src.size: ctx.table.one()}
    scanned = 0
    for d in range(degree_bound + 1):
        for m in graded_basis(src, 2 * d, guard=guard):
            # image by extending a cached prefix with the last variable
            if d:
                last = max(k for k, e in enumerate(m) if e)
                prev = m[:last] + (m[last] - 1,) + m[last + 1:]
                img = cache[prev] * ctx.images[last]
            else:
                img = cache[m]
            cache[m] = img
            scanned += 1
            label = src.format_monomial(m)
            if not img:
                witnesses.append({"monomial": label, "problem": "image is zero"})
                continue
            predicted = tuple(sum(e * lt[k] for e, lt in zip(m, gen_lt)) for k in range(ctx.table.size))
            lt = ctx.leading_term(img)
            if lt != predicted:
                witnesses.append({"monomial": label, "problem": "leading term is not multiplicative"})
            leading.append((lt, label))
            if reconstruct(ctx, lt) != m:
                witnesses.append({"monomial": label, "problem": "reconstruction failed"})
    if inject_duplicate and leading:
        leading.append((leading[-1][0], "forged copy of " + leading[-1][1]))
    seen: dict = {}
    for lt, label in leading:
        if lt in seen:
            witnesses.append({"monomial": label, "problem": f"leading term shared with {seen[lt]}"})
        seen.setdefault(lt, label)
    return Report("phi-inject", {"n": n, "degree_bound": degree_bound,
                                 "inject_duplicate": inject_duplicate},
                  not witnesses, anchor="distinct monomials in X, Y, Z have distinct leading terms",
                  witnesses=witnesses[:10],
                  details={"monomials": scanned, "distinct_leading_terms": len(seen)})


def t_invariance_check(n: int) -> Report:
    """Generator images and the quadratic invariant types carry torus weight zero."""
    ctx = BbarContext(n)
    zero = (0,) * n
    witnesses = []
    for idx, var in enumerate(ctx.source.table.variables):
        img = ctx.images[idx]
        if any(ctx.weight(m) != zero for m in img.terms):
            witnesses.append({"generator": var.name})
    invariant = rejected = 0
    letters = ("a", "b", "c", "d")
    for first in letters:
        for second in letters:
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    for k in range(1, n + 1):
                        for l in range(k, n + 1):
                            p = ctx.v(first, i, j) * ctx.v(second, k, l)
                            if not p:
                                continue
                            w = ctx.weight(next(iter(p.terms)))
                            listed = first in "ab" and second in "cd" and i == k
                            if listed and w != zero:
                                witnesses.append({"product": p.dump()})
                            invariant += listed
                            rejected += (not listed and first in "ab" and second in "cd" and w != zero)
    return Report("phi-t-invariance", {"n": n}, not witnesses,
                  anchor="generator images are torus invariant",
                  witnesses=witnesses,
                  details={"invariant_products": invariant, "rejected_products": rejected})


def _cleared_identities(ctx: BbarContext):
    """Yield ``(label, lhs, rhs)`` for the rewriting identities with denominators cleared."""
    v = ctx.v
    n = ctx.n
    for k in range(1, n + 1):
        unit = v("a", k, k) * v("d", k, k)
        for i in range(k + 1, n + 1):
            for j in range(k + 1, n + 1):
                tag = f"k={k},i={i},j={j}"
                yield ("ad " + tag, unit * v("a", k, i) * v("d", k, j),
                       (v("a", k, i) * v("d", k, k)) * (v("a", k, k) * v("d", k, j)))
                yield ("ac " + tag, unit * v("a", k, i) * v("c", k, j),
                       (v("a", k, i) * v("d", k, k)) * (v("a", k, k) * v("c", k, j)))
                yield ("bc " + tag, unit * v("b", k, i) * v("c", k, j),
                       (v("b", k, i) * v("d", k, k)) * (v("a", k, k) * v("c", k, j)))
                yield ("bd " + tag, unit * v("b", k, i) * v("d", k, j),
                       (v("b", k, i) * v("d", k, k)) * (v("a", k, k) * v("d", k, j)))
    for i in range(1, n + 1):
        unit = v("a", i, i) * v("d", i, i)
        for j in range(i + 1, n + 1):
            tag = f"i={i},j={j}"
            yield ("bc diagonal " + tag, unit * v("b", i, j) * v("c", i, i),
                   (v("b", i, j) * v("d", i, i)) * (v("a", i, i) * v("c", i, i)))
            yield ("ac diagonal " + tag, unit * v("a", i, j) * v("c", i, i),
                   (v("a", i, j) * v("d", i, i)) * (v("a", i, i) * v("c", i, i)))


def _types(ctx: BbarContext, m: tuple) -> str:
    return "".join(sorted(ctx.table.variables[k].name[0] for k, e in enumerate(m) for _ in range(e)))


def _lower_terms(ctx: BbarContext):
    """Yield ``(label, poly, leading monomial, leading coeff, allowed lower types)``."""
    n = ctx.n
    T = ctx.table

    def mono(*names):
        exps = [0] * T.size
        for nm in names:
            exps[T.index[nm]] += 1
        return tuple(exps)

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            yield (f"X[{j},{i}]", ctx.X(j, i), mono(f"a[{i},{j}]", f"d[{i},{i}]"), 1, {"ad", "bc"})
            yield (f"Z[{i},{j}]", ctx.Z(i, j), mono(f"d[{i},{i}]", f"b[{i},{j}]"), 1, {"ac", "bd"})
            yield (f"X[{i},{j}]", ctx.X(i, j), mono(f"a[{i},{i}]", f"d[{i},{j}]"), 1, {"ad", "bc"})
            yield (f"Y[{i},{j}]", ctx.Y(i, j), mono(f"a[{i},{i}]", f"c[{i},{j}]"), 1, {"ac", "bd"})
        yield (f"X[{i},{i}]", ctx.X(i, i), mono(f"a[{i},{i}]", f"d[{i},{i}]"), 1, {"ad", "bc"})
        yield (f"Y[{i},{i}]", ctx.Y(i, i), mono(f"a[{i},{i}]", f"c[{i},{i}]"), 2, {"ac", "bd"})


def localization_identities_check(n: int) -> Report:
    """Exact cleared-denominator rewriting identities and the leading/lower term shapes."""
    if n > 3:
        raise ValueError("localization_identities_check is bounded to n <= 3")
    ctx = BbarContext(n)
    witnesses = []
    identities = 0
    for label, lhs, rhs in _cleared_identities(ctx):
        identities += 1
        if lhs != rhs:
            witnesses.append({"identity": label, "lhs": lhs.dump(), "rhs": rhs.dump()})
    shapes = 0
    for label, poly, lead, coeff, allowed in _lower_terms(ctx):
        shapes += 1
        if ctx.leading_term(poly) != lead or poly.coefficient(lead) != coeff:
            witnesses.append({"expansion": label, "problem": "leading term"})
            continue
        key = ctx.monomial_key(lead)
        for m in poly.terms:
            if m == lead:
                continue
            if ctx.monomial_key(m) >= key or _types(ctx, m) not in allowed:
                witnesses.append({"expansion": label, "term": ctx.table.format_monomial(m)})
    return Report("phi-localize", {"n": n}, not witnesses,
                  anchor="every quadratic invariant becomes a unit multiple of an image after localization",
                  witnesses=witnesses[:10],
                  details={"identities": identities, "expansions": shapes})


def extension_contraction_check(n: int, degree_bound: int) -> Report:
    """On ``A`` in central degree ``≤ D``, the kernel of ``φ`` followed by the point ``a=d=1``
    is exactly the maximal ideal, compared as subspaces."""
    if n > 2 or degree_bound > 6:
        raise ValueError("extension_contraction_check is bounded to n <= 2 and D <= 6")
    ctx = BbarContext(n)
    A = ctx.source
    src = A.table
    point = ctx.residue_values()
    basis = [m for d in range(0, degree_bound + 1, 2) for m in graded_basis(src, d)]
    col = {m: k for k, m in enumerate(basis)}
    witnesses = []
    values = []
    for m in basis:
        via_phi = ctx.phi_monomial(m).substitute(point)
        res = A.residue(src.monomial(m))
        values.append(via_phi)
        if via_phi != res:
            witnesses.append({"monomial": src.format_monomial(m), "via_phi": via_phi, "residue": res})
    # the maximal ideal in degree <= D, spanned by generator multiples
    ideal_rows = []
    for g in A.maximal_ideal().generators:
        for m in basis:
            p = g * src.monomial(m)
            if p and all(mm in col for mm in p.terms):
                ideal_rows.append({col[mm]: c for mm, c in p.terms.items()})
    ideal_rank = linalg.rank(ideal_rows, len(basis))
    kernel = linalg.nullspace([{k: v for k, v in enumerate(values) if v}], len(basis))
    kernel_dim = len(kernel)
    inside = all(sum(values[k] * c for k, c in row.items()) == 0 for row in ideal_rows)
    joint = linalg.rank(ideal_rows + kernel, len(basis))
    equal = inside and ideal_rank == kernel_dim == joint
    if not equal:
        witnesses.append({"ideal_dimension": ideal_rank, "kernel_dimension": kernel_dim,
                          "joint_dimension": joint})
    return Report("phi-extend", {"n": n, "degree_bound": degree_bound}, not witnesses,
                  anchor="the maximal ideal is the contraction of the point ideal",
                  witnesses=witnesses[:10],
                  details={"basis": len(basis), "ideal_dimension": ideal_rank,
                           "kernel_dimension": kernel_dim})
