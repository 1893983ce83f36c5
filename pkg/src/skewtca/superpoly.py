"""Exact super-commutative polynomials.

Variables are declared once in a :class:`VariableTable` with a parity, an
integer weight vector and a central degree.  A monomial is a dense exponent
tuple in table order; odd exponents are 0 or 1 and the odd factors are
understood to appear in table order, so every monomial has a single normal
form and signs live in the coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from skewtca import kernels, linalg

DEFAULT_GUARD = 2_000_000

EVEN, ODD = 0, 1

SuperMonomial = tuple  # dense exponent vector in table order


class MixedTableError(ValueError):
    pass


class GuardExceeded(RuntimeError):
    """A graded component is larger than the configured enumeration guard."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


class InhomogeneousError(ValueError):
    pass


@dataclass(frozen=True)
class Variable:
    name: str
    parity: int
    weight: tuple
    central_degree: int = 1


class VariableTable:
    """Ordered alphabet of even and odd variables; declaration order is the odd sign order."""

    def __init__(self, variables: Iterable[Variable]):
        self.variables = tuple(variables)
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        lengths = {len(v.weight) for v in self.variables}
        if len(lengths) > 1:
            raise ValueError("weight vectors must share one length")
        self.weight_length = lengths.pop() if lengths else 0
        self.index = {v.name: i for i, v in enumerate(self.variables)}
        self.oddmask = tuple(v.parity for v in self.variables)
        self.size = len(self.variables)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, name: str) -> bool:
        return name in self.index

    def unit(self, i: int) -> SuperMonomial:
        e = [0] * self.size
        e[i] = 1
        return tuple(e)

    def var(self, name: str) -> "SuperPoly":
        return SuperPoly(self, {self.unit(self.index[name]): 1})

    def one(self) -> "SuperPoly":
        return SuperPoly(self, {(0,) * self.size: 1})

    def zero(self) -> "SuperPoly":
        return SuperPoly(self)

    def const(self, c) -> "SuperPoly":
        return SuperPoly(self, {(0,) * self.size: c})

    def monomial(self, exps: SuperMonomial, coeff=1) -> "SuperPoly":
        return SuperPoly(self, {tuple(exps): coeff})

    # ------------------------------------------------------------ gradings
    def parity_of(self, m: SuperMonomial) -> int:
        return sum(e for e, odd in zip(m, self.oddmask) if odd) & 1

    def weight_of(self, m: SuperMonomial) -> tuple:
        w = [0] * self.weight_length
        for e, v in zip(m, self.variables):
            if e:
                for k, x in enumerate(v.weight):
                    w[k] += e * x
        return tuple(w)

    def degree_of(self, m: SuperMonomial) -> int:
        return sum(e * v.central_degree for e, v in zip(m, self.variables))

    def format_monomial(self, m: SuperMonomial) -> str:
        parts = []
        for e, v in zip(m, self.variables):
            if e:
                parts.append(v.name if e == 1 else f"{v.name}^{e}")
        return " ".join(parts) if parts else "1"

    # ---------------------------------------------------------- enumeration
    def count_degree(self, d: int) -> int:
        """Number of monomials of central degree ``d`` (no weight filter)."""
        ways = [0] * (d + 1)
        ways[0] = 1
        for v in self.variables:
            g = v.central_degree
            if g <= 0:
                raise ValueError("graded enumeration needs positive central degrees")
            new = ways[:]
            if v.parity == ODD:
                for t in range(d, g - 1, -1):
                    new[t] = ways[t] + ways[t - g]
            else:
                for t in range(g, d + 1):
                    new[t] = new[t] + new[t - g]
            ways = new
        return ways[d]


def graded_basis(table: VariableTable, d: int, weight: Optional[Sequence[int]] = None,
                 guard: int = DEFAULT_GUARD) -> list[SuperMonomial]:
    """All monomials of central degree ``d`` (and weight ``weight`` if given), deterministic order."""
    estimate = table.count_degree(d)
    if weight is None and estimate > guard:
        raise GuardExceeded(f"degree-{d} component has {estimate} monomials (guard {guard})",
                            estimate)
    target = None if weight is None else tuple(weight)
    nonneg = all(x >= 0 for v in table.variables for x in v.weight)
    vs = table.variables
    n = len(vs)
    out: list[SuperMonomial] = []
    exps = [0] * n

    def rec(i: int, rest: int, wleft: Optional[list]):
        if rest == 0:
            if target is None or not any(wleft):
                out.append(tuple(exps))
                if len(out) > guard:
                    raise GuardExceeded(f"weight-restricted component exceeds guard {guard}",
                                        estimate)
            return
        if i == n:
            return
        v = vs[i]
        top = 1 if v.parity == ODD else rest // v.central_degree
        for e in range(min(top, rest // v.central_degree), -1, -1):
            if wleft is not None and e:
                nw = [a - e * b for a, b in zip(wleft, v.weight)]
                if nonneg and any(x < 0 for x in nw):
                    continue
            else:
                nw = wleft
            exps[i] = e
            rec(i + 1, rest - e * v.central_degree, nw)
        exps[i] = 0

    rec(0, d, None if target is None else list(target))
    return out


class SuperPoly:
    """Exact rational combination of normal-form super monomials."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VariableTable, terms: Optional[Mapping] = None):
        self.table = table
        self.terms: dict = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[tuple(m)] = c

    # --------------------------------------------------------------- basics
    def _check(self, other: "SuperPoly") -> None:
        if other.table is not self.table:
            raise MixedTableError("polynomials live over different variable tables")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == self.table.const(other)
        return isinstance(other, SuperPoly) and other.table is self.table and \
            self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"SuperPoly({self.dump()!r})"

    def __add__(self, other: "SuperPoly") -> "SuperPoly":
        if isinstance(other, (int, Fraction)):
            other = self.table.const(other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return SuperPoly(self.table, out)

    __radd__ = __add__

    def __neg__(self) -> "SuperPoly":
        return SuperPoly(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SuperPoly") -> "SuperPoly":
        if isinstance(other, (int, Fraction)):
            other = self.table.const(other)
        return self + (-other)

    def scale(self, c) -> "SuperPoly":
        if not c:
            return self.table.zero()
        return SuperPoly(self.table, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "SuperPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other) -> "SuperPoly":
        return self.scale(other)

    def __pow__(self, k: int) -> "SuperPoly":
        out = self.table.one()
        for _ in range(k):
            out = out * self
        return out

    # ------------------------------------------------------------ gradings
    def parity(self) -> Optional[int]:
        """0 or 1 if super-homogeneous, else None (zero counts as even)."""
        ps = {self.table.parity_of(m) for m in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else EVEN

    def weight(self) -> Optional[tuple]:
        ws = {self.table.weight_of(m) for m in self.terms}
        return ws.pop() if len(ws) == 1 else None

    def central_degree(self) -> Optional[int]:
        ds = {self.table.degree_of(m) for m in self.terms}
        return ds.pop() if len(ds) == 1 else None

    def coefficient(self, m: SuperMonomial):
        return self.terms.get(tuple(m), 0)

    def constant_term(self):
        return self.terms.get((0,) * self.table.size, 0)

    def monomials(self) -> list[SuperMonomial]:
        return sorted(self.terms, reverse=True)

    def dump(self) -> str:
        """Debug form, e.g. ``2 * x[1,1]^2 y[1,2] + -1 * z[1,2]``."""
        if not self.terms:
            return "0"
        return " + ".join(f"{c} * {self.table.format_monomial(m)}"
                          for m, c in ((m, self.terms[m]) for m in self.monomials()))

    def substitute(self, values: Mapping[int, object], default=None):
        """Evaluate at scalars: ``values`` maps variable index to a number.

        Variables missing from ``values`` take ``default`` (an error if None).
        Odd variables may only be sent to 0, the one consistent scalar value.
        """
        total = 0
        for m, c in self.terms.items():
            term = c
            for i, e in enumerate(m):
                if not e:
                    continue
                val = values.get(i, default)
                if val is None:
                    raise KeyError(self.table.variables[i].name)
                if self.table.oddmask[i] and val:
                    raise ValueError("odd variables can only be evaluated at 0")
                term *= val ** e
                if not term:
                    break
            total += term
        return total


def mul(p: SuperPoly, q: SuperPoly) -> SuperPoly:
    """Super-commutative product with Koszul signs; repeated odd variables vanish."""
    p._check(q)
    mask = p.table.oddmask
    mono_mul = kernels.mono_mul
    out: dict = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            sign, m = mono_mul(m1, m2, mask)
            if not sign:
                continue
            v = out.get(m, 0) + (c1 * c2 if sign > 0 else -c1 * c2)
            if v:
                out[m] = v
            else:
                del out[m]
    return SuperPoly(p.table, out)


def product(polys: Iterable[SuperPoly], table: VariableTable) -> SuperPoly:
    out = table.one()
    for p in polys:
        out = out * p
    return out


class UndefinedImageError(KeyError):
    pass


class Superderivation:
    """A parity-homogeneous derivation given by its values on the variables.

    Extended to products by ``D(uv) = D(u)v + (-1)^{|D||u|} u D(v)``.
    Variables absent from ``images`` raise unless ``default_zero`` is set.
    """

    def __init__(self, table: VariableTable, images: Mapping[int, SuperPoly], parity: int,
                 default_zero: bool = False):
        self.table = table
        self.images = dict(images)
        self.parity = parity
        self.default_zero = default_zero
        for i, img in self.images.items():
            if img.table is not table:
                raise MixedTableError("derivation image over a different table")
            if img and img.parity() != (table.oddmask[i] + parity) & 1:
                raise ValueError(f"image of {table.variables[i].name} has the wrong parity")

    def image(self, i: int) -> SuperPoly:
        if i in self.images:
            return self.images[i]
        if self.default_zero:
            return self.table.zero()
        raise UndefinedImageError(self.table.variables[i].name)

    def __call__(self, p: SuperPoly) -> SuperPoly:
        return apply_derivation(self, p)


def apply_derivation(D: Superderivation, p: SuperPoly) -> SuperPoly:
    table = p.table
    if table is not D.table:
        raise MixedTableError("derivation and polynomial use different tables")
    mask = table.oddmask
    acc: dict = {}
    for m, c in p.terms.items():
        prefix_parity = 0
        for i, e in enumerate(m):
            if not e:
                continue
            img = D.image(i)
            if img:
                before = tuple(m[j] if j < i else 0 for j in range(len(m)))
                before = before[:i] + (e - 1,) + before[i + 1:]
                after = tuple(m[j] if j > i else 0 for j in range(len(m)))
                coeff = c * e
                if D.parity and prefix_parity:
                    coeff = -coeff
                term = table.monomial(before, coeff) * img * table.monomial(after)
                for mm, cc in term.terms.items():
                    acc[mm] = acc.get(mm, 0) + cc
            if mask[i]:
                prefix_parity ^= e & 1
    return SuperPoly(table, acc)


# -------------------------------------------------------- graded membership

def span_membership(target: SuperPoly, generators: Sequence[SuperPoly],
                    degree: Optional[int] = None, method: str = "auto",
                    guard: int = DEFAULT_GUARD):
    """Decide whether ``target`` lies in the ideal generated by ``generators`` in one degree.

    The degree-``d`` part of the ideal is spanned by ``m·g`` for generators
    ``g`` and monomials ``m`` of degree ``d - deg g``.  Returns
    ``(member, certificate)``; the certificate lists ``(coeff, multiplier,
    generator index)`` triples whose sum reproduces ``target``.
    """
    table = target.table
    d = target.central_degree() if target else degree
    if target and d is None:
        raise InhomogeneousError("target is not homogeneous in central degree")
    if degree is not None and target and d != degree:
        raise InhomogeneousError(f"target has degree {d}, not {degree}")
    if d is None:
        d = 0
    if not target:
        return True, []
    tw = target.weight()
    columns, labels = [], []
    for gi, g in enumerate(generators):
        if not g:
            continue
        g._check(target)
        gd = g.central_degree()
        if gd is None:
            raise InhomogeneousError(f"generator {gi} is not homogeneous")
        if gd > d:
            continue
        gw = g.weight()
        want = None
        if tw is not None and gw is not None:
            want = tuple(a - b for a, b in zip(tw, gw))
        for m in graded_basis(table, d - gd, want, guard=guard):
            prod = table.monomial(m) * g
            if prod:
                columns.append(prod.terms)
                labels.append((m, gi))
    x = linalg.solve(columns, target.terms, method=method)
    if x is None:
        return False, None
    cert = [(c, table.monomial(labels[k][0]), labels[k][1])
            for k, c in enumerate(x) if c]
    return True, cert


def certificate_sum(cert, generators: Sequence[SuperPoly], table: VariableTable) -> SuperPoly:
    out = table.zero()
    for c, m, gi in cert:
        out = out + (m * generators[gi]).scale(c)
    return out

