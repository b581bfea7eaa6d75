"""Integer-partition combinatorics and symmetric-group character values.

Partitions are plain tuples of weakly decreasing positive integers.  Rim-hook
removal runs on the beta-number (first-column hook length) encoding, and the
Murnaghan-Nakayama recursion gives exact integer character values.
"""

from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "partitions_of",
    "conjugate",
    "hook_lengths",
    "has_hook",
    "remove_rim_hooks",
    "mn_value",
    "degree",
    "z_order",
    "sign_of",
]

PartitionT = tuple[int, ...]


def check_partition(lam) -> PartitionT:
    lam = tuple(lam)
    if any(p < 1 for p in lam):
        raise ValueError(f"parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


def partitions_of(n: int) -> list[PartitionT]:
    """All partitions of n in reverse-lexicographic order: (n) first, (1^n) last."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[PartitionT] = []

    def rec(remaining: int, maxpart: int, prefix: list[int]):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def conjugate(lam) -> PartitionT:
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam) -> list[list[int]]:
    lam = check_partition(lam)
    conj = conjugate(lam)
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def has_hook(lam, l: int) -> bool:
    # A hook of length l exists iff some beta number can drop by l to an
    # unoccupied spot; equivalent to checking the hook length multiset.
    return any(l in row for row in hook_lengths(lam))


@lru_cache(maxsize=None)
def _remove_rim_hooks_cached(lam: PartitionT, l: int):
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    bset = set(beta)
    out = []
    for b in beta:
        nb = b - l
        if nb < 0 or nb in bset:
            continue
        leg = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        parts = tuple(
            nbj - (m - 1 - j) for j, nbj in enumerate(newbeta) if nbj - (m - 1 - j) > 0
        )
        out.append((parts, leg))
    return tuple(out)


def remove_rim_hooks(lam, l: int) -> list[tuple[PartitionT, int]]:
    """All removals of a size-l rim hook from lam, as (resulting partition,
    leg length) pairs; empty if no such strip exists."""
    if l < 1:
        raise ValueError("strip size must be >= 1")
    return list(_remove_rim_hooks_cached(check_partition(lam), l))


@lru_cache(maxsize=None)
def _mn(lam: PartitionT, mu: PartitionT) -> int:
    if not mu:
        return 1
    total = 0
    rest = mu[1:]
    for nlam, leg in _remove_rim_hooks_cached(lam, mu[0]):
        term = _mn(nlam, rest)
        if term:
            total += -term if leg & 1 else term
    return total


def mn_value(lam, mu) -> int:
    """Exact symmetric-group character value chi^lam at cycle type mu."""
    lam = check_partition(lam)
    # mu may arrive in any part order (class functions do not care); sort it
    mu = check_partition(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"lam and mu must partition the same n: {lam} vs {mu}")
    return _mn(lam, mu)


def degree(lam) -> int:
    """Character degree via the hook length formula n!/prod(hooks)."""
    lam = check_partition(lam)
    n = sum(lam)
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return math.factorial(n) // prod


def z_order(mu) -> int:
    """Centralizer order of a permutation of cycle type mu: prod i^m_i * m_i!."""
    mu = check_partition(mu)
    mult: dict[int, int] = {}
    for p in mu:
        mult[p] = mult.get(p, 0) + 1
    z = 1
    for i, m in mult.items():
        z *= i**m * math.factorial(m)
    return z


def sign_of(mu) -> int:
    """Sign of a permutation of cycle type mu: (-1)^(n - #parts)."""
    mu = check_partition(mu)
    return -1 if (sum(mu) - len(mu)) & 1 else 1
