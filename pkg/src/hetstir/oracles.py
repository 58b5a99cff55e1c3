"""Brute-force enumeration oracles, independent of every recurrence and
generating function in the package. Exponential cost; keep n small."""

from __future__ import annotations

from collections import Counter
from itertools import permutations
from math import comb, factorial


def set_partitions(n: int):
    """Yield set partitions of {0..n-1} as lists of blocks (restricted growth)."""
    if n == 0:
        yield []
        return
    def rec(i, blocks):
        if i == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()
    yield from rec(0, [])


def stirling2_counts(n: int) -> list[int]:
    """Row n of {n k}, counting set partitions by number of blocks."""
    c = Counter(len(p) for p in set_partitions(n))
    return [c.get(k, 0) for k in range(n + 1)]


def bell_number(n: int) -> int:
    return sum(1 for _ in set_partitions(n))


def stirling1_unsigned_counts(n: int) -> list[int]:
    """Row n of [n k]: permutations of n letters by cycle count.

    Each set partition into k blocks contributes prod (|B|-1)! permutations,
    one per choice of cyclic order inside each block.
    """
    row = [0] * (n + 1)
    for p in set_partitions(n):
        w = 1
        for b in p:
            w *= factorial(len(b) - 1)
        row[len(p)] += w
    return row


def cycle_count(perm) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def stirling1_unsigned_by_permutations(n: int) -> list[int]:
    """Row n of [n k] by enumerating all n! permutations."""
    row = [0] * (n + 1)
    for perm in permutations(range(n)):
        row[cycle_count(perm)] += 1
    return row


def lah_closed_form(n: int, k: int) -> int:
    """L(n,k) = n!/k! * C(n-1, k-1), with L(0,0) = 1."""
    if k < 0 or k > n:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    return factorial(n) // factorial(k) * comb(n - 1, k - 1)


def lah_by_ordered_lists(n: int) -> list[int]:
    """Row n of L(n,k): partitions of {0..n-1} into k nonempty linearly
    ordered lists, i.e. sum over set partitions of prod |B|!."""
    row = [0] * (n + 1)
    for p in set_partitions(n):
        w = 1
        for b in p:
            w *= factorial(len(b))
        row[len(p)] += w
    return row
