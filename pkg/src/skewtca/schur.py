"""Symmetric functions at finite rank: Schur expansions, LR coefficients, plethysm characters.

Characters are carried as :class:`SymPoly` (integer polynomials in
``x_1..x_n``); :func:`schur_expand` turns a symmetric one into a
:class:`SchurVector` by a triangular solve against the Kostka matrix and then
re-expands the answer to check it reproduces the input exactly.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional

from skewtca import kernels
from skewtca.partition import (Partition, complement_in_rect, partitions,
                               partitions_in_box, q1_of_size, rectangle, transpose)
from skewtca.reports import Report


class NotSymmetricError(ValueError):
    pass


class ExpansionError(RuntimeError):
    """Reconstruction of a Schur expansion did not reproduce its input."""


class UnstableExpansionError(RuntimeError):
    pass


class SchurVector(dict):
    """Finite formal sum ``Σ c_λ S_λ`` with integer coefficients; zeros are never stored."""

    def __init__(self, entries=()):
        super().__init__()
        items = entries.items() if isinstance(entries, dict) else entries
        for lam, c in items:
            self.add(Partition(lam), c)

    def add(self, lam: Partition, c: int) -> None:
        lam = Partition(lam)
        v = self.get(lam, 0) + c
        if v:
            self[lam] = v
        else:
            self.pop(lam, None)

    def __add__(self, other: "SchurVector") -> "SchurVector":
        out = SchurVector(self)
        for lam, c in other.items():
            out.add(lam, c)
        return out

    def scale(self, c: int) -> "SchurVector":
        return SchurVector({lam: c * v for lam, v in self.items()})

    def restrict(self, max_length: int) -> "SchurVector":
        return SchurVector({lam: c for lam, c in self.items() if len(lam) <= max_length})

    def transpose(self) -> "SchurVector":
        return SchurVector({transpose(lam): c for lam, c in self.items()})

    def support(self) -> list[Partition]:
        return sorted(self, key=_order_key)

    def to_json(self) -> list[dict]:
        return [{"partition": str(lam), "coeff": self[lam]} for lam in self.support()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "SchurVector":
        return cls((Partition.parse(e["partition"]), int(e["coeff"])) for e in data)

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(f"{'' if c == 1 else str(c) + '*'}S({lam})"
                          for lam, c in ((l, self[l]) for l in self.support()))


def _order_key(lam: Partition):
    # size ascending, then descending lexicographic
    return (sum(lam), tuple(-p for p in lam))


# ---------------------------------------------------------------- LR layer

def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """``c^ν_{λμ}``: LR tableaux of shape ``ν/λ`` with content ``μ``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size != lam.size + mu.size or not nu.contains(lam) or not nu.contains(mu):
        return 0
    return kernels.lr_count(tuple(nu), tuple(lam), tuple(mu))


def _candidate_outer(lam: Partition, mu: Partition) -> Iterator[Partition]:
    size = lam.size + mu.size
    max_part = lam.part(1) + mu.part(1)
    max_len = len(lam) + len(mu)
    for nu in partitions(size, max_part=max_part, max_length=max_len):
        if nu.contains(lam) and nu.contains(mu):
            yield nu


def tensor_schur(lam: Partition, mu: Partition, n: Optional[int] = None) -> SchurVector:
    """``S_λ ⊗ S_μ = Σ_ν c^ν_{λμ} S_ν``; truncated to ``ℓ(ν) ≤ n`` when ``n`` is given."""
    lam, mu = Partition(lam), Partition(mu)
    out = SchurVector()
    for nu in _candidate_outer(lam, mu):
        if n is not None and len(nu) > n:
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.add(nu, c)
    return out


def dim_schur(lam: Partition, n: int) -> int:
    """``dim S_λ(C^n)``: semistandard tableaux of shape ``λ`` with entries ``≤ n``."""
    lam = Partition(lam)
    if len(lam) > n:
        return 0
    return kernels.ssyt_count(tuple(lam), n)


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    return kernels.kostka(tuple(lam), tuple(mu))


def rect_lr_scan(n: int, k: int, bound: int = 4) -> Report:
    """Check that ``c^{n×k}_{λμ}`` is 1 exactly for complementary pairs in the box and 0 otherwise."""
    if n > bound or k > bound:
        raise ValueError(f"rect_lr_scan bound is {bound}; got n={n}, k={k}")
    box = rectangle(n, k)
    shapes = list(partitions_in_box(n, k))
    by_size = defaultdict(list)
    for s in shapes:
        by_size[s.size].append(s)
    bad = []
    checked = 0
    for lam in shapes:
        comp = complement_in_rect(lam, n, k)
        for mu in by_size[n * k - lam.size]:
            c = lr_coefficient(lam, mu, box)
            checked += 1
            expected = 1 if mu == comp else 0
            if c != expected:
                bad.append({"lambda": lam, "mu": mu, "coefficient": c,
                            "complement": comp})
    return Report("rect", {"n": n, "k": k}, not bad,
                  anchor="rectangle LR coefficients detect complementary shapes",
                  witnesses=bad[:20], details={"pairs_checked": checked})


# ---------------------------------------------------------- symmetric polys

class SymPoly:
    """Integer polynomial in ``x_1..x_n`` stored as ``{exponent tuple: coeff}``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[dict] = None):
        self.n = n
        self.terms = {}
        for e, c in (terms or {}).items():
            if len(e) != n:
                raise ValueError(f"exponent {e} does not have length {n}")
            if c:
                self.terms[tuple(e)] = c

    @classmethod
    def monomial(cls, exps: Iterable[int]) -> "SymPoly":
        e = tuple(exps)
        return cls(len(e), {e: 1})

    def __eq__(self, other) -> bool:
        return isinstance(other, SymPoly) and self.n == other.n and self.terms == other.terms

    def __add__(self, other: "SymPoly") -> "SymPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SymPoly(self.n, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + other.scale(-1)

    def scale(self, c: int) -> "SymPoly":
        return SymPoly(self.n, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        out: dict = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return SymPoly(self.n, out)

    def is_symmetric(self) -> bool:
        # adjacent transpositions generate S_n
        for i in range(self.n - 1):
            for e, c in self.terms.items():
                f = e[:i] + (e[i + 1], e[i]) + e[i + 2:]
                if self.terms.get(f, 0) != c:
                    return False
        return True

    def dominant(self) -> dict:
        """Coefficients at weakly decreasing exponents, keyed by partition."""
        return {Partition(e): c for e, c in self.terms.items()
                if all(a >= b for a, b in zip(e, e[1:]))}


def distinct_permutations(seq: tuple) -> Iterator[tuple]:
    """Distinct rearrangements of ``seq`` in lexicographic order."""
    items = sorted(seq)
    n = len(items)
    while True:
        yield tuple(items)
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])


def monomial_symmetric(mu: Partition, n: int) -> SymPoly:
    mu = Partition(mu)
    if len(mu) > n:
        return SymPoly(n)
    padded = tuple(mu) + (0,) * (n - len(mu))
    return SymPoly(n, {e: 1 for e in distinct_permutations(padded)})


def schur_polynomial(lam: Partition, n: int) -> SymPoly:
    """``s_λ(x_1..x_n) = Σ_μ K_{λμ} m_μ``."""
    lam = Partition(lam)
    out = SymPoly(n)
    if len(lam) > n:
        return out
    for mu in partitions(lam.size, max_length=n):
        k = kostka(lam, mu)
        if k:
            out = out + monomial_symmetric(mu, n).scale(k)
    return out


def schur_expand(p: SymPoly, n: Optional[int] = None, check: bool = True) -> SchurVector:
    """Expand a symmetric polynomial in Schur polynomials ``s_λ(x_1..x_n)``."""
    n = p.n if n is None else n
    if n != p.n:
        raise ValueError(f"polynomial has {p.n} variables, asked for rank {n}")
    if not p.is_symmetric():
        raise NotSymmetricError("input polynomial is not symmetric")
    residual = p.dominant()
    out = SchurVector()
    for m in sorted({lam.size for lam in residual}):
        shapes = list(partitions(m, max_length=n))
        for i, lam in enumerate(shapes):
            c = residual.get(lam, 0)
            if not c:
                continue
            out.add(lam, c)
            for mu in shapes[i:]:
                k = kostka(lam, mu)
                if k:
                    residual[mu] = residual.get(mu, 0) - c * k
    if check:
        rebuilt = SymPoly(n)
        for lam, c in out.items():
            rebuilt = rebuilt + schur_polynomial(lam, n).scale(c)
        if rebuilt != p:
            raise ExpansionError("Schur expansion failed to reconstruct its input")
    return out


# ------------------------------------------------------- plethysm characters

def quadratic_monomials(n: int, kind: str) -> list[tuple]:
    """Exponent vectors of ``x_i x_j``: ``kind='sym'`` uses ``i ≤ j``, ``'wedge'`` uses ``i < j``."""
    out = []
    for i in range(n):
        for j in range(i if kind == "sym" else i + 1, n):
            e = [0] * n
            e[i] += 1
            e[j] += 1
            out.append(tuple(e))
    return out


def _power_layers(monomials: list[tuple], d: int, n: int, exterior: bool) -> list[dict]:
    """Graded pieces of ``∏(1 + t·x^m)`` (exterior) or ``∏ 1/(1 - t·x^m)`` up to ``t^d``."""
    layers = [defaultdict(int) for _ in range(d + 1)]
    layers[0][(0,) * n] = 1
    for m in monomials:
        order = range(d, 0, -1) if exterior else range(1, d + 1)
        for k in order:
            src = layers[k - 1]
            if not src:
                continue
            dst = layers[k]
            for e, c in list(src.items()):
                dst[tuple(a + b for a, b in zip(e, m))] += c
    return layers


def elementary_character(monomials: list[tuple], d: int, n: int) -> SymPoly:
    """``e_d`` evaluated on a multiset of monomials: the character of ``Λ^d``."""
    return SymPoly(n, dict(_power_layers(monomials, d, n, True)[d]))


def complete_character(monomials: list[tuple], d: int, n: int) -> SymPoly:
    """``h_d`` evaluated on a multiset of monomials: the character of ``Sym^d``."""
    return SymPoly(n, dict(_power_layers(monomials, d, n, False)[d]))


def wedge_of_sym2(d: int, n: int) -> SchurVector:
    """Schur expansion of ``Λ^d(Sym^2 C^n)``."""
    return schur_expand(elementary_character(quadratic_monomials(n, "sym"), d, n), n)


def sym_of_sym2(d: int, n: int) -> SchurVector:
    """Schur expansion of ``Sym^d(Sym^2 C^n)``."""
    return schur_expand(complete_character(quadratic_monomials(n, "sym"), d, n), n)


def wedge_of_wedge2(d: int, n: int) -> SchurVector:
    """Schur expansion of ``Λ^d(Λ^2 C^n)``."""
    return schur_expand(elementary_character(quadratic_monomials(n, "wedge"), d, n), n)


def sym_of_wedge2(d: int, n: int) -> SchurVector:
    """Schur expansion of ``Sym^d(Λ^2 C^n)``."""
    return schur_expand(complete_character(quadratic_monomials(n, "wedge"), d, n), n)


PLETHYSMS: dict[str, Callable[[int, int], SchurVector]] = {
    "wedge": wedge_of_sym2,
    "sym": sym_of_sym2,
    "wedge-wedge2": wedge_of_wedge2,
    "sym-wedge2": sym_of_wedge2,
}


def stable_expansion(fn: Callable[[int, int], SchurVector], d: int, n: int,
                     max_rank: Optional[int] = None):
    """Evaluate ``fn(d, n)`` and compare with ``fn(d, n+1)`` restricted to length ``≤ n``.

    Returns ``(vector, rank, stable)``.  With ``max_rank`` set, the rank is
    raised until the expansion stabilises, and :class:`UnstableExpansionError`
    is raised if it never does.
    """
    rank = n
    while True:
        here = fn(d, rank)
        there = fn(d, rank + 1).restrict(rank)
        stable = here == there
        if stable or max_rank is None:
            return here, rank, stable
        if rank >= max_rank:
            raise UnstableExpansionError(f"no stable rank up to {max_rank} for d={d}")
        rank += 1


def character_of(vec: SchurVector, n: int) -> SymPoly:
    out = SymPoly(n)
    for lam, c in vec.items():
        out = out + schur_polynomial(lam, n).scale(c)
    return out


def q1_support_scan(max_size: int = 12, ranks: Iterable[int] = range(2, 7)) -> Report:
    """``Λ^d(Sym^2 C^n)`` is the multiplicity-free sum over Q1 partitions of size ``2d``."""
    bad = []
    checked = []
    for n in ranks:
        for d in range(max_size // 2 + 1):
            got = wedge_of_sym2(d, n)
            want = SchurVector({lam: 1 for lam in q1_of_size(2 * d) if len(lam) <= n})
            checked.append((n, d))
            if got != want:
                bad.append({"n": n, "d": d, "computed": str(got), "expected": str(want)})
    return Report("q1", {"max_size": max_size, "ranks": list(ranks)}, not bad,
                  anchor="the exterior algebra on Sym^2 decomposes over Q1 partitions, each once",
                  witnesses=bad, details={"cases": len(checked)})
