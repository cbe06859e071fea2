"""Independent reference implementations used to cross-check the fast paths.

Everything here favors directness over speed: plain Fraction arithmetic,
itertools-driven enumeration, and a restricted-growth-string partition
generator that shares no code with the package's recursive enumerator.
"""

from fractions import Fraction
from itertools import combinations
from math import factorial

from wpvol import block_factor, moment_value, partitions_with_at_least


def rgs_partitions(n):
    """All partitions of {1..n} via restricted growth strings, canonical form.

    A restricted growth string assigns element i a block label in
    0..max(labels so far)+1; each partition corresponds to exactly one
    string, so this enumeration is duplicate-free by construction.
    """
    results = []

    def rec(i, labels, top):
        if i == n:
            blocks = [[] for _ in range(top + 1)]
            for idx, lab in enumerate(labels):
                blocks[lab].append(idx + 1)
            results.append(tuple(tuple(b) for b in blocks))
            return
        for lab in range(top + 2):
            rec(i + 1, labels + [lab], max(top, lab))

    rec(0, [], -1)
    return results


def oracle_mcmullen(w):
    """Partition-sum coefficient by direct Fraction arithmetic."""
    n = w.n
    total = Fraction(0)
    for part in partitions_with_at_least(n, 3):
        k = part.block_count
        prod = Fraction(1)
        for blk in part.blocks:
            prod *= block_factor(w, blk)
            if not prod:
                break
        if prod:
            total += (-1) ** (k + 1) * factorial(k - 3) * prod
    return Fraction((-4) ** (n - 3), factorial(n - 2)) * total


def oracle_localization(w):
    """Fixed-point-sum coefficient by direct Fraction arithmetic."""
    n = w.n
    m = n - 3
    total = Fraction(0)
    for size in range(n + 1):
        for subset in combinations(range(1, n + 1), size):
            mu = moment_value(w, subset)
            if mu > 0:
                total += (-1) ** size * mu ** m
    return Fraction(-(2 ** m), 2 * factorial(m)) * total
