"""Set partitions of {1..n}: enumeration, max-ordered counting, Stirling and
Bell numbers, and the q-weight statistic behind the q-analog coefficients.

A partition is stored as a tuple of blocks, each block a sorted tuple of
integers, with the blocks listed in increasing order of their maxima. That
ordering is the one the block-size words d_{|P_1|} ... d_{|P_k|} read off.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .algebra import CPoly, NCPoly, QPoly, qbinomial


def canonical(blocks) -> tuple:
    bs = [tuple(sorted(b)) for b in blocks]
    if any(not b for b in bs):
        raise ValueError("empty block")
    bs.sort(key=lambda b: b[-1])
    return tuple(bs)


def enumerate_partitions(n: int, k: int | None = None) -> list:
    """All set partitions of {1..n}, optionally into exactly k blocks.

    Generated by restricted growth strings: element i goes into block a_i
    with a_1 = 0 and a_i <= max(a_1..a_{i-1}) + 1.
    """
    if n < 1:
        raise ValueError("ground set must be nonempty")
    if k is not None and (k < 1 or k > n):
        raise ValueError(f"block count {k} out of range for n={n}")
    out = []
    a = [0] * n

    def rec(i: int, m: int) -> None:
        if i == n:
            nblocks = m + 1
            if k is None or nblocks == k:
                blocks = [[] for _ in range(nblocks)]
                for pos in range(n):
                    blocks[a[pos]].append(pos + 1)
                out.append(canonical(blocks))
            return
        for b in range(m + 2):
            a[i] = b
            rec(i + 1, max(m, b))

    rec(0, -1)
    return out


def block_sizes(P) -> tuple:
    """Sizes read off in increasing order of block maxima."""
    return tuple(len(b) for b in sorted(P, key=lambda b: b[-1]))


def count_max_ordered(n: int, sizes) -> int:
    """Number of partitions with max-ordered block sizes exactly (p_1..p_k).

    Counted by brute force on a ground set of size sum(p_i); if n exceeds
    that, the count is scaled by the binomial choosing which elements the
    blocks use (the leftover elements are not partitioned).
    """
    sizes = tuple(sizes)
    if any(p < 1 for p in sizes):
        raise ValueError("block sizes must be positive")
    s = sum(sizes)
    if s > n:
        raise ValueError(f"size sum {s} exceeds ground set {n}")
    if not sizes:
        return 1
    hits = sum(1 for P in enumerate_partitions(s, len(sizes)) if block_sizes(P) == sizes)
    return comb(n, s) * hits


def N_formula(sizes) -> int:
    """Closed form for count_max_ordered on a ground set of size sum(p_i):
    the product of binom(p_1+...+p_{i+1} - 1, p_{i+1} - 1) over i = 1..k-1.
    """
    sizes = tuple(sizes)
    if any(p < 1 for p in sizes):
        raise ValueError("block sizes must be positive")
    total = 0
    out = 1
    for i, p in enumerate(sizes):
        total += p
        if i > 0:
            out *= comb(total - 1, p - 1)
    return out


def monomial_of(P, variant: str = "nc"):
    """The block-size monomial d_{|P_1|} ... d_{|P_k|} of a partition.

    Noncommutative: letters in increasing order of block maxima.
    """
    sizes = block_sizes(P)
    if variant == "nc":
        return NCPoly.from_word(sizes)
    if variant == "c":
        out = CPoly.one()
        for s in sizes:
            out = out * CPoly.letter(s)
        return out
    raise ValueError(f"unknown variant {variant!r}")


def weight(P) -> int:
    """The q-weight of a partition.

    Iteratively remove the block containing the current maximum from the
    current ground set {1..m}. Each maximal run of consecutive elements of
    the removed block whose start j has no predecessor j-1 in the block
    scores m - j, except that a run starting at 1 scores nothing. The
    remaining elements are relabeled 1..m' preserving order, and the
    process repeats until a single block is left. The weight is the total
    score; the generating function over all partitions with fixed
    max-ordered sizes is the q-binomial product of qcount_product.
    """
    blocks = sorted((tuple(b) for b in P), key=lambda b: b[-1])
    total = 0
    while len(blocks) > 1:
        removed = blocks.pop()
        m = len(removed) + sum(len(b) for b in blocks)
        if removed[-1] != m:
            raise ValueError("partition does not cover a {1..m} ground set")
        members = set(removed)
        for j in removed:
            if j >= 2 and (j - 1) not in members:
                total += m - j
        remaining = sorted(x for b in blocks for x in b)
        relabel = {x: i + 1 for i, x in enumerate(remaining)}
        blocks = sorted(
            (tuple(relabel[x] for x in b) for b in blocks), key=lambda b: b[-1]
        )
    return total


def qcount_max_ordered(sizes) -> QPoly:
    """Brute-force generating function sum of q^weight(P) over all partitions
    of {1..sum(sizes)} with the given max-ordered block sizes."""
    sizes = tuple(sizes)
    if any(p < 1 for p in sizes):
        raise ValueError("block sizes must be positive")
    s = sum(sizes)
    out = QPoly.zero()
    for P in enumerate_partitions(s, len(sizes)):
        if block_sizes(P) == sizes:
            out = out + QPoly.q(weight(P))
    return out


def qcount_product(sizes) -> QPoly:
    """The q-binomial product form: prod over i of
    qbinomial(p_1+...+p_{i+1} - 1, p_{i+1} - 1)."""
    sizes = tuple(sizes)
    total = 0
    out = QPoly.one()
    for i, p in enumerate(sizes):
        total += p
        if i > 0:
            out = out * qbinomial(total - 1, p - 1)
    return out


_STIRLING: dict = {}


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("need n, k >= 0")
    if k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    key = (n, k)
    if key not in _STIRLING:
        _STIRLING[key] = k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
    return _STIRLING[key]


def bell_number(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


def render_partition(P) -> str:
    return " | ".join(" ".join(str(x) for x in b) for b in P)
