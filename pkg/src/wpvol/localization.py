"""Fixed-point (torus localization) volume formula, Fano and Calabi-Yau chambers.

A fixed point of the torus action sends a subset F of the marked points to
infinity and the rest to zero; its moment value is

    mu(F) = sum_{i not in F} d_i - sum_{i in F} d_i.

The moment value equals the Donaldson-Futaki invariant of the test
configuration that collides the points of F, and the volume is an
alternating sum over the fixed points with strictly positive moment:

    Vol = -(2 pi)^{n-3} / (2 (n-3)!) *
          sum_{F : mu(F) > 0} (-1)^{|F|} mu(F)^{n-3}.

At weight sum exactly 2 this collapses to a clamped subset sum that agrees
with the partition formula; for n = 3 the space is a point and the volume is
taken to be 1 by convention (the exponent n-3 = 0 makes the alternating sum
formally ambiguous on walls).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import NamedTuple

from .errors import (
    EmptyQuotient,
    GeneralTypeUnsupported,
    NotCalabiYau,
    UnsupportedSize,
)
from .mcmullen import VolumeValue
from .weights import SUBSET_CAP_DEFAULT, TWO, WeightVector, git_nonempty, weight_numerators


@dataclass(frozen=True, slots=True)
class FixedPoint:
    """A torus fixed point: the 1-based indices sent to infinity, and its moment."""

    flipped: tuple[int, ...]
    moment: Fraction


class BreakdownTerm(NamedTuple):
    point: FixedPoint
    sign: int
    contribution: Fraction


@dataclass(frozen=True, slots=True)
class TermBreakdown:
    """Per-fixed-point contributions, plus their signed total.

    `total` times the prefactor -(2 pi)^{n-3} / (2 (n-3)!) reconstructs the
    volume exactly.
    """

    terms: tuple[BreakdownTerm, ...]
    total: Fraction


def moment_value(w: WeightVector, flipped) -> Fraction:
    """Moment of the fixed point flipping the given 1-based indices."""
    return w.total - 2 * sum(w.weights[i - 1] for i in flipped)


def df_invariant(w: WeightVector, flipped) -> Fraction:
    """Donaldson-Futaki invariant of the configuration colliding `flipped`.

    Numerically identical to the moment value; kept as a named entry point
    for the test-configuration reading of the same number.
    """
    return moment_value(w, flipped)


def positive_fixed_points(
    w: WeightVector, cap: int = SUBSET_CAP_DEFAULT
) -> list[FixedPoint]:
    """All fixed points with strictly positive moment, by size then lex order.

    Subsets sitting exactly on a moment wall (mu = 0) are excluded; they are
    reported by `wall_report` instead.  The empty set always appears, with
    moment equal to the full weight sum.
    """
    n = w.n
    if n > cap:
        raise UnsupportedSize(f"fixed-point sweep over 2^{n} subsets exceeds cap {cap}")
    nums, L = weight_numerators(w)
    total_num = sum(nums)
    points = []
    for size in range(n + 1):
        for subset in combinations(range(1, n + 1), size):
            mu_num = total_num - 2 * sum(nums[i - 1] for i in subset)
            if mu_num > 0:
                points.append(FixedPoint(subset, Fraction(mu_num, L)))
    return points


def _require_chamber(w: WeightVector, cap: int) -> None:
    if w.n > cap:
        raise UnsupportedSize(f"fixed-point sum over 2^{w.n} subsets exceeds cap {cap}")
    if w.total > TWO:
        raise GeneralTypeUnsupported(
            f"weight sum {w.total} exceeds 2; the fixed-point description fails there"
        )
    if not git_nonempty(w):
        raise EmptyQuotient("some weight reaches half the total; quotient is empty")


def _signed_moment_power_sum(nums: list[int], total_num: int, power: int) -> int:
    """sum over subsets F with positive moment of (-1)^{|F|} (moment numerator)^power.

    Runs a Gray-code sweep over all 2^n subsets with an O(1) update of the
    subset sum and sign per step.
    """
    n = len(nums)
    total = total_num ** power  # empty set
    sub = 0
    parity = 1
    prev = 0
    for i in range(1, 1 << n):
        code = i ^ (i >> 1)
        bit = (code ^ prev).bit_length() - 1
        if code >> bit & 1:
            sub += nums[bit]
        else:
            sub -= nums[bit]
        parity = -parity
        prev = code
        mu = total_num - 2 * sub
        if mu > 0:
            total += parity * mu ** power
    return total


def localization_volume(
    w: WeightVector, cap: int = SUBSET_CAP_DEFAULT
) -> VolumeValue:
    """Exact volume by the fixed-point sum, valid for weight sum <= 2."""
    _require_chamber(w, cap)
    n = w.n
    if n == 3:
        # point moduli space; fixed by convention rather than by the sum
        return VolumeValue(Fraction(1), 0)
    nums, L = weight_numerators(w)
    m = n - 3
    total = _signed_moment_power_sum(nums, sum(nums), m)
    coefficient = Fraction(-(2 ** m) * total, 2 * factorial(m) * L ** m)
    return VolumeValue(coefficient, m)


def cy_reduced_volume(w: WeightVector, cap: int = SUBSET_CAP_DEFAULT) -> VolumeValue:
    """Clamped subset form of the fixed-point sum, weight sum exactly 2 only.

    At the Calabi-Yau point every moment value is 2(1 - subset sum), so the
    factor 2^{n-3} folds into the prefactor and the sum runs over clamps
    max(0, 1 - sum_{i in I} d_i)^{n-3} with sign (-1)^{|I|+1}, the empty set
    included.
    """
    n = w.n
    if n > cap:
        raise UnsupportedSize(f"subset sum over 2^{n} subsets exceeds cap {cap}")
    if w.total != TWO:
        raise NotCalabiYau(f"weight sum is {w.total}, need exactly 2")
    nums, L = weight_numerators(w)
    m = n - 3
    total = -(L ** m)  # empty set: clamp 1, sign (-1)^(0+1)
    sub = 0
    parity = 1  # (-1)^{|I|}, flipped once per Gray-code step
    prev = 0
    for i in range(1, 1 << n):
        code = i ^ (i >> 1)
        bit = (code ^ prev).bit_length() - 1
        if code >> bit & 1:
            sub += nums[bit]
        else:
            sub -= nums[bit]
        parity = -parity
        prev = code
        slack = L - sub
        if slack > 0:
            total -= parity * slack ** m
    # prefactor 2^{2n-7} / (n-3)! written as 4^n / 128 to stay exact at n = 3
    coefficient = Fraction(4 ** n * total, 128 * factorial(m) * L ** m)
    return VolumeValue(coefficient, m)


def localization_prefactor(n: int) -> Fraction:
    """Rational part of -(2 pi)^{n-3} / (2 (n-3)!); pi^{n-3} is carried separately."""
    return Fraction(-(2 ** (n - 3)), 2 * factorial(n - 3))


def localization_breakdown(
    w: WeightVector, cap: int = SUBSET_CAP_DEFAULT
) -> TermBreakdown:
    """Per-fixed-point terms of the volume sum.

    Each positive-moment fixed point F contributes sign (-1)^{|F|} and
    contribution mu(F)^{n-3}; the signed total times the prefactor equals
    `localization_volume` exactly.
    """
    _require_chamber(w, cap)
    m = w.n - 3
    terms = []
    total = Fraction(0)
    for point in positive_fixed_points(w, cap=cap):
        sign = -1 if len(point.flipped) % 2 else 1
        contribution = point.moment ** m
        terms.append(BreakdownTerm(point, sign, contribution))
        total += sign * contribution
    return TermBreakdown(tuple(terms), total)
