"""Pure-Python kernels.  ``_ckernels.pyx`` mirrors these one for one."""
from __future__ import annotations


def lr_count(outer, inner, content):
    """Number of Littlewood-Richardson tableaux of shape ``outer/inner`` and weight ``content``.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left); rows weakly increase, columns strictly increase and the
    reading word must stay a lattice word.
    """
    outer = tuple(outer)
    inner = tuple(inner)
    content = tuple(content)
    rows = len(outer)
    if len(inner) > rows or sum(outer) != sum(inner) + sum(content):
        return 0
    inner = inner + (0,) * (rows - len(inner))
    for o, i in zip(outer, inner):
        if i > o:
            return 0
    if not content:
        return 1
    ncols = outer[0] if outer else 0
    grid = [[0] * ncols for _ in range(rows)]
    cells = [(r, c) for r in range(rows) for c in range(outer[r] - 1, inner[r] - 1, -1)]
    k = len(content)
    counts = [0] * (k + 1)
    ncells = len(cells)

    def rec(t):
        if t == ncells:
            return 1
        r, c = cells[t]
        hi = k
        if c + 1 < outer[r]:
            hi = min(hi, grid[r][c + 1])
        lo = 1
        if r > 0 and c >= inner[r - 1]:
            lo = grid[r - 1][c] + 1
        # a value v in row r needs v <= r + 1 for the lattice word to survive
        hi = min(hi, r + 1)
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            grid[r][c] = v
            total += rec(t + 1)
            counts[v] -= 1
        grid[r][c] = 0
        return total

    return rec(0)


def _strips(lam, size=None, max_len=None):
    """Partitions ``ν ⊆ λ`` with ``λ/ν`` a horizontal strip (optionally of fixed size)."""
    lam = tuple(lam)
    n = len(lam)
    out = []
    target = None if size is None else sum(lam) - size

    def rec(i, prefix, total):
        if i == n:
            if target is None or total == target:
                nu = prefix
                while nu and nu[-1] == 0:
                    nu = nu[:-1]
                if max_len is None or len(nu) <= max_len:
                    out.append(nu)
            return
        lo = lam[i + 1] if i + 1 < n else 0
        for v in range(lam[i], lo - 1, -1):
            rec(i + 1, prefix + (v,), total + v)

    rec(0, (), 0)
    return out


def kostka(shape, content):
    """Number of semistandard tableaux of ``shape`` with the given ``content``."""
    shape = tuple(p for p in shape if p)
    content = tuple(content)
    if sum(shape) != sum(content):
        return 0
    memo = {}

    def rec(lam, k):
        if k == 0:
            return 1 if not lam else 0
        if len(lam) > k:
            return 0
        key = (lam, k)
        if key in memo:
            return memo[key]
        total = 0
        for nu in _strips(lam, content[k - 1]):
            total += rec(nu, k - 1)
        memo[key] = total
        return total

    return rec(shape, len(content))


def ssyt_count(shape, n):
    """Number of semistandard tableaux of ``shape`` with entries in ``1..n``."""
    shape = tuple(p for p in shape if p)
    memo = {}

    def rec(lam, m):
        if not lam:
            return 1
        if len(lam) > m:
            return 0
        key = (lam, m)
        if key in memo:
            return memo[key]
        total = 0
        for nu in _strips(lam, max_len=m - 1):
            total += rec(nu, m - 1)
        memo[key] = total
        return total

    return rec(shape, n)


def mono_mul(a, b, oddmask):
    """Multiply dense exponent vectors of super monomials.

    Returns ``(sign, product)``; ``sign == 0`` when an odd variable repeats.
    Odd factors of ``a`` are taken to sit left of those of ``b``.
    """
    inversions = 0
    seen_b = 0
    out = []
    for x, y, odd in zip(a, b, oddmask):
        if odd:
            if x and y:
                return 0, None
            if x:
                inversions += seen_b
            elif y:
                seen_b += 1
        out.append(x + y)
    return (-1 if inversions & 1 else 1), tuple(out)
