"""The signed Brauer category and its contraction action on tensors.

A morphism ``L → L'`` with ``L = {1..p}`` and ``L' = {1..q}`` is a matching
on ``L`` together with a bijection from the unmatched points to ``L'``.
Edges are odd, so reordering them costs the sign of the permutation; the
normal form keeps edges sorted by smaller endpoint and returns that sign
separately.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial
from typing import Iterable, Iterator, Optional

import numpy as np

from skewtca.periplectic import basis_parity, omega_pair
from skewtca.reports import Report


def permutation_sign(seq: list) -> int:
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv & 1 else 1


class BrauerMorphism:
    """Normal-form morphism; build with :meth:`make` to obtain the ordering sign."""

    __slots__ = ("source", "target", "edges", "mapping", "_key")

    def __init__(self, source: int, target: int, edges: tuple, mapping: tuple):
        self.source = source
        self.target = target
        self.edges = edges
        self.mapping = mapping  # sorted (source point, target point) pairs
        self._key = (source, target, edges, mapping)

    @classmethod
    def make(cls, source: int, target: int, edges: Iterable, mapping) -> tuple[int, "BrauerMorphism"]:
        """Validate and normalize; return ``(sign, morphism)``."""
        edges = [tuple(sorted(e)) for e in edges]
        mapping = dict(mapping)
        used = [v for e in edges for v in e]
        if any(len(e) != 2 or e[0] == e[1] for e in edges):
            raise ValueError("edges must join two distinct points")
        if len(set(used)) != len(used):
            raise ValueError("edges must be pairwise disjoint")
        free = sorted(set(range(1, source + 1)) - set(used))
        if set(used) - set(range(1, source + 1)):
            raise ValueError("edge endpoint outside the source set")
        if sorted(mapping) != free or sorted(mapping.values()) != list(range(1, target + 1)):
            raise ValueError("mapping must biject the unmatched points onto the target set")
        order = sorted(range(len(edges)), key=lambda k: edges[k])
        sign = permutation_sign(order)
        return sign, cls(source, target, tuple(edges[k] for k in order), tuple(sorted(mapping.items())))

    @classmethod
    def identity(cls, p: int) -> "BrauerMorphism":
        return cls(p, p, (), tuple((i, i) for i in range(1, p + 1)))

    @property
    def degree(self) -> int:
        """Super degree: the number of edges."""
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, BrauerMorphism) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other: "BrauerMorphism") -> bool:
        return self._key < other._key

    def __repr__(self) -> str:
        return f"BrauerMorphism({self})"

    def __str__(self) -> str:
        edges = "".join(f"({a} {b})" for a, b in self.edges)
        maps = " ".join(f"{a}:{b}" for a, b in self.mapping)
        return f"{self.source}->{self.target} : {edges or '-'} map {maps or '-'}"

    @classmethod
    def parse(cls, text: str) -> tuple[int, "BrauerMorphism"]:
        """Read ``"4->2 : (1 3)(2 4) map -"`` or ``"3->1 : (1 3) map 2:1"``; edge order is kept."""
        head, _, body = text.partition(":")
        src, _, tgt = head.partition("->")
        edge_part, _, map_part = body.partition("map")
        edges = []
        for chunk in edge_part.replace(")", "").split("("):
            chunk = chunk.strip()
            if chunk and chunk != "-":
                a, b = chunk.replace(",", " ").split()
                edges.append((int(a), int(b)))
        mapping = {}
        for tok in map_part.split():
            if tok != "-":
                a, b = tok.split(":")
                mapping[int(a)] = int(b)
        return cls.make(int(src), int(tgt), edges, mapping)


def compose(g: BrauerMorphism, f: BrauerMorphism) -> tuple[int, BrauerMorphism]:
    """``g ∘ f``: edges of ``f`` first, then the pulled-back edges of ``g``."""
    if f.target != g.source:
        raise ValueError(f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}")
    fmap = dict(f.mapping)
    inverse = {b: a for a, b in f.mapping}
    gmap = dict(g.mapping)
    edges = list(f.edges)
    for a, b in g.edges:
        edges.append((inverse[a], inverse[b]))
    mapping = {v: gmap[w] for v, w in fmap.items() if w in gmap}
    return BrauerMorphism.make(f.source, g.target, edges, mapping)


def matchings(points: tuple, r: int) -> Iterator[tuple]:
    """All sets of ``r`` disjoint edges on ``points``, as sorted edge tuples."""
    if r == 0:
        yield ()
        return
    if len(points) < 2 * r:
        return
    first, rest = points[0], points[1:]
    # edges through the smallest point, then edges avoiding it
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for m in matchings(remaining, r - 1):
            yield tuple(sorted(((first, partner),) + m))
    yield from matchings(rest, r)


def enumerate_morphisms(p: int, q: int) -> list[BrauerMorphism]:
    if q > p or (p - q) % 2:
        return []
    out = []
    for edges in matchings(tuple(range(1, p + 1)), (p - q) // 2):
        used = {v for e in edges for v in e}
        free = [v for v in range(1, p + 1) if v not in used]
        for perm in permutations(range(1, q + 1)):
            out.append(BrauerMorphism(p, q, edges, tuple(zip(free, perm))))
    return sorted(out)


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def hom_dim(p: int, q: int) -> int:
    """Number of normal-form morphisms ``p → q``: matchings times bijections."""
    if q > p or (p - q) % 2:
        return 0
    r = (p - q) // 2
    return comb(p, 2 * r) * double_factorial(2 * r - 1) * factorial(q)


class HomSpaceElement:
    """Rational combination of normal-form morphisms with a common source and target."""

    def __init__(self, terms: Optional[dict] = None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}
        shapes = {(m.source, m.target) for m in self.terms}
        if len(shapes) > 1:
            raise ValueError("terms must share source and target")

    @classmethod
    def signed(cls, sign: int, m: BrauerMorphism) -> "HomSpaceElement":
        return cls({m: sign})

    def __add__(self, other: "HomSpaceElement") -> "HomSpaceElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return HomSpaceElement(out)

    def __neg__(self) -> "HomSpaceElement":
        return HomSpaceElement({m: -c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, HomSpaceElement) and self.terms == other.terms

    def compose(self, other: "HomSpaceElement") -> "HomSpaceElement":
        """``self ∘ other``, extended bilinearly."""
        out: dict = {}
        for g, cg in self.terms.items():
            for f, cf in other.terms.items():
                s, h = compose(g, f)
                out[h] = out.get(h, 0) + s * cg * cf
        return HomSpaceElement(out)


# ----------------------------------------------------------- associativity

def _compose_table(gs: list, fs: list, index: dict) -> np.ndarray:
    """Signed 1-based indices of ``g ∘ f`` into ``index``'s morphism list."""
    table = np.empty((len(gs), len(fs)), dtype=np.int32)
    for a, g in enumerate(gs):
        for b, f in enumerate(fs):
            s, h = compose(g, f)
            table[a, b] = s * (index[h] + 1)
    return table


def _signed_lookup(table: np.ndarray, rows, signed_cols: np.ndarray) -> np.ndarray:
    """Compose through a table when the right argument is itself a signed index array."""
    vals = table[rows, np.abs(signed_cols) - 1]
    return vals * np.sign(signed_cols)


def associativity_check(max_size: int = 6) -> Report:
    """``h∘(g∘f) = (h∘g)∘f`` for every composable triple on sets of size ``≤ max_size``."""
    homs = {}
    index = {}
    for p in range(max_size + 1):
        for q in range(p % 2, p + 1, 2):
            homs[(p, q)] = enumerate_morphisms(p, q)
            index[(p, q)] = {m: k for k, m in enumerate(homs[(p, q)])}
    tables = {}

    def table(p, q, r):
        key = (p, q, r)
        if key not in tables:
            tables[key] = _compose_table(homs[(q, r)], homs[(p, q)], index[(p, r)])
        return tables[key]

    checked = 0
    witnesses = []
    for p in range(max_size + 1):
        for q in range(p % 2, p + 1, 2):
            for r in range(p % 2, q + 1, 2):
                for s in range(p % 2, r + 1, 2):
                    gf = table(p, q, r)          # (g: q→r, f: p→q) → p→r
                    hg = table(q, r, s)          # (h: r→s, g: q→r) → q→s
                    h_gf = table(p, r, s)        # (h, p→r) → p→s
                    hg_f = table(p, q, s)        # (q→s, f) → p→s
                    for h in range(hg.shape[0]):
                        left = _signed_lookup(h_gf, h, gf)
                        right = hg_f[np.abs(hg[h]) - 1] * np.sign(hg[h])[:, None]
                        checked += left.size
                        if not np.array_equal(left, right):
                            gi, fi = np.argwhere(left != right)[0]
                            witnesses.append({"h": str(homs[(r, s)][h]),
                                              "g": str(homs[(q, r)][gi]),
                                              "f": str(homs[(p, q)][fi])})
                            break
    return Report("brauer-associativity", {"max_size": max_size}, not witnesses,
                  anchor="composition of signed matchings is associative",
                  witnesses=witnesses[:5], details={"triples": int(checked)})


def sign_relation_check(max_size: int = 6) -> Report:
    """Swapping two edges in the stored order negates the morphism."""
    witnesses = []
    checked = 0
    for p in range(4, max_size + 1):
        for q in range(p % 2, p - 3, 2):
            for m in enumerate_morphisms(p, q):
                edges = list(m.edges)
                for a in range(len(edges)):
                    for b in range(a + 1, len(edges)):
                        swapped = edges[:]
                        swapped[a], swapped[b] = swapped[b], swapped[a]
                        s, m2 = BrauerMorphism.make(p, q, swapped, dict(m.mapping))
                        checked += 1
                        if m2 != m or s != -1:
                            witnesses.append(str(m))
    return Report("brauer-sign", {"max_size": max_size}, not witnesses,
                  anchor="reordering two odd edges flips the sign of a morphism",
                  witnesses=witnesses[:5], details={"swaps": checked})


# -------------------------------------------------------- contraction action

Tensor = dict  # {tuple of basis indices: Fraction}


def _contract_term(m: BrauerMorphism, n: int, word: tuple) -> tuple[int, Optional[tuple]]:
    """Apply ``m`` to one basis tensor; return ``(coeff, word)`` or ``(0, None)``."""
    slots = list(zip(range(1, len(word) + 1), word))
    coeff = 1
    for a, b in m.edges:
        pos = [k for k, (label, _) in enumerate(slots) if label in (a, b)]
        p, q = pos
        vp, vq = slots[p][1], slots[q][1]
        val = omega_pair(n, vp, vq)
        if not val:
            return 0, None
        before = sum(basis_parity(n, v) for _, v in slots[:p])
        between = sum(basis_parity(n, v) for _, v in slots[p + 1:q])
        if (before + basis_parity(n, vq) * between) & 1:
            coeff = -coeff
        coeff *= val
        del slots[q]
        del slots[p]
    target = dict(m.mapping)
    keyed = [(target[label], v) for label, v in slots]
    # Koszul sign of sorting the surviving factors into target order
    par = [basis_parity(n, v) for _, v in keyed]
    for x in range(len(keyed)):
        for y in range(x + 1, len(keyed)):
            if keyed[x][0] > keyed[y][0] and par[x] and par[y]:
                coeff = -coeff
    keyed.sort()
    return coeff, tuple(v for _, v in keyed)


def k_apply(m: BrauerMorphism, t: Tensor, n: int) -> Tensor:
    """Contract the paired slots of ``t`` with the odd form, then permute by the bijection."""
    out: dict = {}
    for word, c in t.items():
        if len(word) != m.source:
            raise ValueError("tensor length does not match the morphism source")
        s, w = _contract_term(m, n, tuple(word))
        if s:
            out[w] = out.get(w, 0) + s * c
    return {w: c for w, c in out.items() if c}


def k_apply_signed(sign: int, m: BrauerMorphism, t: Tensor, n: int) -> Tensor:
    return {w: sign * c for w, c in k_apply(m, t, n).items()}


def random_morphism(rng: random.Random, p: int, q: int) -> BrauerMorphism:
    points = list(range(1, p + 1))
    rng.shuffle(points)
    r = (p - q) // 2
    edges = [tuple(points[2 * k:2 * k + 2]) for k in range(r)]
    free = points[2 * r:]
    targets = list(range(1, q + 1))
    rng.shuffle(targets)
    return BrauerMorphism.make(p, q, edges, dict(zip(free, targets)))[1]


def functor_check(n: int = 2, max_size: int = 6, trials: int = 200, seed: int = 0,
                  exhaustive_size: int = 4) -> Report:
    """Contraction respects composition, checked exhaustively at rank ``(1|1)`` and on random triples at rank ``n``."""
    if max_size > 6 or n > 3:
        raise ValueError("functor_check is bounded to sizes <= 6 and n <= 3")
    witnesses = []
    exhaustive = 0
    for p in range(exhaustive_size + 1):
        for q in range(p % 2, p + 1, 2):
            for r in range(p % 2, q + 1, 2):
                for f in enumerate_morphisms(p, q):
                    for g in enumerate_morphisms(q, r):
                        s, h = compose(g, f)
                        for word in product(range(2), repeat=p):
                            t = {word: 1}
                            exhaustive += 1
                            if k_apply_signed(s, h, t, 1) != k_apply(g, k_apply(f, t, 1), 1):
                                witnesses.append({"rank": 1, "f": str(f), "g": str(g), "t": word})
    rng = random.Random(seed)
    for _ in range(trials):
        p = rng.randint(0, max_size)
        q = rng.randrange(p % 2, p + 1, 2)
        r = rng.randrange(p % 2, q + 1, 2)
        f = random_morphism(rng, p, q)
        g = random_morphism(rng, q, r)
        word = tuple(rng.randrange(2 * n) for _ in range(p))
        # bias toward contractible words so the check is not vacuous
        for a, b in f.edges:
            if rng.random() < 0.8:
                i = rng.randrange(n)
                word = _set(word, a, i)
                word = _set(word, b, n + i)
        t = {word: 1}
        s, h = compose(g, f)
        if k_apply_signed(s, h, t, n) != k_apply(g, k_apply(f, t, n), n):
            witnesses.append({"rank": n, "f": str(f), "g": str(g), "t": word})
    return Report("brauer-functor", {"n": n, "max_size": max_size, "trials": trials, "seed": seed},
                  not witnesses, anchor="contraction by the odd form is a representation of the category",
                  witnesses=witnesses[:5],
                  details={"exhaustive_cases": exhaustive, "random_trials": trials})


def _set(word: tuple, label: int, value: int) -> tuple:
    w = list(word)
    w[label - 1] = value
    return tuple(w)
