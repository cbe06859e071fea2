"""Set-partition volume formula for the Calabi-Yau chamber.

For weights summing to exactly 2, the volume of the moduli space of n
weighted points is

    C_{n-3} * sum over partitions P of {1..n} with |P| >= 3 of
        (-1)^{|P|+1} (|P|-3)! * prod over blocks B of
            max(0, 1 - sum_{i in B} d_i)^{|B|-1}

with C_k = (-4 pi)^k / (k+1)!.  The result is an exact rational multiple of
pi^{n-3}.  Partitions with fewer than three blocks never enter the sum: the
factorial weight (|P|-3)! is undefined there, and the recursion below cannot
produce them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DimensionMismatch, InvalidArgs, NotCalabiYau, UnsupportedSize
from .partitions import PARTITION_CAP_DEFAULT
from .weights import TWO, WeightVector, weight_numerators


@dataclass(frozen=True, slots=True)
class VolumeValue:
    """An exact volume: rational coefficient times an integer power of pi."""

    coefficient: Fraction
    pi_power: int

    def __post_init__(self):
        if self.pi_power < 0:
            raise InvalidArgs(f"pi_power must be non-negative, got {self.pi_power}")


def c_constant(k: int) -> VolumeValue:
    """The hyperbolic-volume constant (-4 pi)^k / (k+1)! as an exact value."""
    if k < 0:
        raise InvalidArgs(f"constant index must be non-negative, got {k}")
    return VolumeValue(Fraction((-4) ** k, factorial(k + 1)), k)


def block_factor(w: WeightVector, block) -> Fraction:
    """The clamped factor max(0, 1 - sum of block weights)^(size - 1).

    Singleton blocks contribute exactly 1 (exponent zero), whatever their
    weight.  Indices in `block` are 1-based.
    """
    size = len(block)
    if size == 1:
        return Fraction(1)
    slack = 1 - sum(w.weights[i - 1] for i in block)
    if slack <= 0:
        return Fraction(0)
    return slack ** (size - 1)


def _clamped_partition_total(nums: list[int], L: int) -> int:
    """Integer core of the partition sum over the shared denominator L.

    Returns  sum over partitions with k >= 3 blocks of
        (-1)^{k+1} (k-3)! L^{k-3} * prod over blocks of (L - block_sum)^{size-1}

    restricted to partitions in which every non-singleton block has sum
    strictly below L; all others carry a zero factor.  The recursion inserts
    elements one at a time and drops any branch that pushes a block of two or
    more elements to sum >= L, since every completion of that branch keeps
    the dead block.  The running product is updated in place with one exact
    multiply/divide per insertion, so leaves cost O(1).
    """
    n = len(nums)
    totals = [0] * (n + 1)
    sums: list[int] = []
    sizes: list[int] = []

    def rec(i: int, prod: int) -> None:
        if i == n:
            totals[len(sums)] += prod
            return
        a = nums[i]
        for j in range(len(sums)):
            s = sums[j] + a
            if s >= L:
                continue
            c = sizes[j]
            grown = prod * (L - s) ** c // (L - sums[j]) ** (c - 1)
            sums[j] = s
            sizes[j] = c + 1
            rec(i + 1, grown)
            sums[j] = s - a
            sizes[j] = c
        sums.append(a)
        sizes.append(1)
        rec(i + 1, prod)
        sums.pop()
        sizes.pop()

    rec(0, 1)
    total = 0
    for k in range(3, n + 1):
        sign = -1 if k % 2 == 0 else 1
        total += sign * factorial(k - 3) * L ** (k - 3) * totals[k]
    return total


def mcmullen_volume(w: WeightVector, cap: int = PARTITION_CAP_DEFAULT) -> VolumeValue:
    """Exact volume by the partition sum; requires weight sum exactly 2.

    For n = 3 the moduli space is a point and the sum degenerates to the
    single all-singleton partition, giving exactly 1.
    """
    n = w.n
    if n > cap:
        raise UnsupportedSize(f"partition sum for n={n} exceeds cap {cap}")
    if w.total != TWO:
        raise NotCalabiYau(f"weight sum is {w.total}, need exactly 2")
    nums, L = weight_numerators(w)
    total = _clamped_partition_total(nums, L)
    constant = Fraction((-4) ** (n - 3), factorial(n - 2))
    return VolumeValue(constant * Fraction(total, L ** (n - 3)), n - 3)


def mcmullen_four_point(w: WeightVector) -> VolumeValue:
    """Closed four-point form: 2 pi (1 - sum over pairs of clamps).

    Each of the six index pairs contributes max(0, 1 - d_i - d_j); the result
    always agrees with the full partition sum.
    """
    if w.n != 4:
        raise DimensionMismatch(f"four-point formula needs n = 4, got {w.n}")
    if w.total != TWO:
        raise NotCalabiYau(f"weight sum is {w.total}, need exactly 2")
    d = w.weights
    clamp_sum = Fraction(0)
    for i in range(4):
        for j in range(i + 1, 4):
            slack = 1 - d[i] - d[j]
            if slack > 0:
                clamp_sum += slack
    return VolumeValue(2 * (1 - clamp_sum), 1)
