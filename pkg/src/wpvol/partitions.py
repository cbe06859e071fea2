"""Streaming enumeration of set partitions and fixed-size index subsets.

The enumerators yield one item at a time and never materialize the full
family, so walking all ~4.2 million partitions of a 12-element set stays
within O(n) working memory.  Counting recurrences (Stirling and Bell
numbers) are kept independent of the enumerators so each can check the
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .errors import InvalidArgs, UnsupportedSize

#: Default cap on the ground-set size for partition enumeration.  B(12) is
#: about 4.2e6 items and enumerates in seconds; larger n is an explicit
#: opt-in via the `cap` argument.
PARTITION_CAP_DEFAULT = 12

#: Cap for subset enumeration and counting recurrences.
SUBSET_CAP = 30


@dataclass(frozen=True, slots=True)
class SetPartition:
    """A partition of {1..n} into disjoint nonempty blocks.

    Canonical form: blocks ordered by their minimum element, elements sorted
    within each block.  The enumerators below produce this form directly.
    """

    blocks: tuple[tuple[int, ...], ...]

    @property
    def block_count(self) -> int:
        return len(self.blocks)


def partitions_into_k_blocks(
    n: int, k: int, cap: int = PARTITION_CAP_DEFAULT
) -> Iterator[SetPartition]:
    """Yield every partition of {1..n} into exactly k blocks, once each.

    Elements are inserted in increasing order, either into an existing block
    or as a new singleton, so blocks are created in order of their minima and
    stay internally sorted: the canonical form falls out of the recursion.
    Branches that can no longer reach exactly k blocks are pruned.
    """
    if n > cap:
        raise UnsupportedSize(f"partition enumeration for n={n} exceeds cap {cap}")
    if n < 1 or k < 1 or k > n:
        raise InvalidArgs(f"need 1 <= k <= n, got n={n}, k={k}")

    blocks: list[list[int]] = []

    def rec(i: int) -> Iterator[SetPartition]:
        if i > n:
            yield SetPartition(tuple(tuple(b) for b in blocks))
            return
        nb = len(blocks)
        # an existing block keeps the count; only viable if the remaining
        # elements can still open enough new blocks
        if nb + (n - i + 1) >= k:
            for b in blocks:
                b.append(i)
                yield from rec(i + 1)
                b.pop()
        if nb < k:
            blocks.append([i])
            yield from rec(i + 1)
            blocks.pop()

    return rec(1)


def partitions_with_at_least(
    n: int, kmin: int, cap: int = PARTITION_CAP_DEFAULT
) -> Iterator[SetPartition]:
    """All partitions of {1..n} with at least `kmin` blocks, by rising block count."""
    if n > cap:
        raise UnsupportedSize(f"partition enumeration for n={n} exceeds cap {cap}")
    if n < 1 or kmin < 1 or kmin > n:
        raise InvalidArgs(f"need 1 <= kmin <= n, got n={n}, kmin={kmin}")

    def chained() -> Iterator[SetPartition]:
        for k in range(kmin, n + 1):
            yield from partitions_into_k_blocks(n, k, cap=cap)

    return chained()


def subsets_of_size(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All size-k subsets of {1..n} in lexicographic order."""
    if not 0 <= k <= n or n > SUBSET_CAP:
        raise InvalidArgs(f"need 0 <= k <= n <= {SUBSET_CAP}, got n={n}, k={k}")
    return combinations(range(1, n + 1), k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, S(n, k), by the standard recurrence."""
    if not 0 <= k <= n or n > SUBSET_CAP:
        raise InvalidArgs(f"need 0 <= k <= n <= {SUBSET_CAP}, got n={n}, k={k}")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell(n: int) -> int:
    """Bell number B(n): total partitions of an n-set."""
    if not 0 <= n <= SUBSET_CAP:
        raise InvalidArgs(f"need 0 <= n <= {SUBSET_CAP}, got n={n}")
    return sum(stirling2(n, k) for k in range(n + 1))
