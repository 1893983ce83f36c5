"""Integer partitions and the special shapes used throughout the package.

A :class:`Partition` is an immutable tuple of positive, weakly decreasing
parts.  Textual form is ``"3,1"``; the empty partition prints as ``"-"``.
"""
from __future__ import annotations

import warnings
from typing import Iterable, Iterator, Optional


class OddSizeWarning(UserWarning):
    """Raised (as a warning) when Q1 partitions of odd size are requested."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros are dropped."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("-", "", "()", "0"):
            return cls(())
        return cls(int(tok) for tok in text.strip("()[] ").split(",") if tok.strip())

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self) -> str:
        return f"Partition({str(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part lookup that returns 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def transpose(self) -> "Partition":
        return transpose(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, row in enumerate(self, start=1):
            for c in range(1, row + 1):
                yield r, c

    def contains(self, other: "Partition") -> bool:
        """Diagram containment ``other ⊆ self``."""
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def fits_in(self, rows: int, cols: int) -> bool:
        return len(self) <= rows and (not self or self[0] <= cols)

    def arm(self, i: int, j: int) -> int:
        return self.part(i) - j

    def leg(self, i: int, j: int) -> int:
        return transpose(self).part(j) - i


EMPTY = Partition(())


def rectangle(rows: int, cols: int) -> Partition:
    """The partition ``rows × cols`` (``cols`` repeated ``rows`` times)."""
    if rows <= 0 or cols <= 0:
        return EMPTY
    return Partition((cols,) * rows)


def transpose(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam or lam[0] == 0:
        return EMPTY
    return Partition(sum(1 for p in lam if p > c) for c in range(lam[0]))


def q1_contains(lam: Partition) -> bool:
    """True when every diagonal box has arm length one more than its leg length."""
    lam = Partition(lam)
    conj = transpose(lam)
    for i in range(1, len(lam) + 1):
        if lam.part(i) < i:
            break
        arm = lam.part(i) - i
        leg = conj.part(i) - i
        if arm != leg + 1:
            return False
    return True


def partitions(m: int, max_part: Optional[int] = None,
               max_length: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``m`` in descending lexicographic order."""
    if m < 0:
        return
    if max_part is None:
        max_part = m
    if max_length is None:
        max_length = m

    def rec(rest: int, cap: int, slots: int, prefix: tuple[int, ...]):
        if rest == 0:
            yield Partition(prefix)
            return
        if slots == 0:
            return
        for p in range(min(rest, cap), 0, -1):
            if p * slots < rest:
                break
            yield from rec(rest - p, p, slots - 1, prefix + (p,))

    yield from rec(m, max_part, max_length, ())


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions fitting in ``rows × cols``, by size then descending lex."""
    for m in range(rows * cols + 1):
        yield from partitions(m, max_part=cols, max_length=rows)


def q1_of_size(m: int) -> list[Partition]:
    """All Q1 partitions of size ``m`` (descending lex).

    Every Q1 partition has even size, so an odd ``m`` yields an empty list and
    an :class:`OddSizeWarning`.
    """
    if m % 2:
        warnings.warn(f"Q1 partitions have even size; got {m}", OddSizeWarning,
                      stacklevel=2)
        return []
    return [lam for lam in partitions(m) if q1_contains(lam)]


def brace(lam: Partition, n: int) -> Partition:
    """``(λ1+n+1, …, λn+n+1, λ†1, λ†2, …)``; requires ``ℓ(λ) ≤ n``."""
    lam = Partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    if len(lam) > n:
        raise ValueError(f"brace needs length(λ) <= n, got λ={lam}, n={n}")
    head = tuple(lam.part(i) + n + 1 for i in range(1, n + 1))
    return Partition(head + tuple(transpose(lam)))


def unbrace(lam: Partition, min_n: int = 1) -> Optional[tuple[Partition, int]]:
    """Invert :func:`brace`: find ``(μ, n)`` with ``brace(μ, n) == λ`` and ``n ≥ min_n``."""
    lam = Partition(lam)
    for n in range(max(min_n, 1), len(lam) + 1):
        if lam.part(n) < n + 1:
            break
        mu = Partition(lam.part(i) - n - 1 for i in range(1, n + 1))
        if brace(mu, n) == lam:
            return mu, n
    return None


def complement_in_rect(lam: Partition, n: int, k: int) -> Optional[Partition]:
    """Complement of ``λ`` in the ``n × k`` box (rotated 180°), or ``None``."""
    lam = Partition(lam)
    if not lam.fits_in(n, k):
        return None
    return Partition(k - lam.part(n + 1 - i) for i in range(1, n + 1))


def even_partitions(d: int) -> list[Partition]:
    """``{2μ : |μ| = d}``, the Schur support of ``Sym^d(Sym^2)``."""
    return [Partition(2 * p for p in mu) for mu in partitions(d)]


def super_highest_weight(lam: Partition, even_rank: int, odd_rank: int
                         ) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Highest weight of ``S_λ(C^{m|k})`` for the even-before-odd Borel.

    Even part is ``(λ1, …, λm)``; odd part is ``max(0, λ†_j - m)`` for
    ``j ≤ k``.  Returns ``None`` when the functor vanishes, i.e. when
    ``λ_{m+1} > k``.
    """
    lam = Partition(lam)
    if lam.part(even_rank + 1) > odd_rank:
        return None
    conj = transpose(lam)
    even = tuple(lam.part(i) for i in range(1, even_rank + 1))
    odd = tuple(max(0, conj.part(j) - even_rank) for j in range(1, odd_rank + 1))
    return even, odd
