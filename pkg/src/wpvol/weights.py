"""Exact weight vectors and their chamber geometry.

Weights are rational numbers in the open interval (0, 1) attached to marked
points on the projective line.  Everything here is exact: weights are
`fractions.Fraction` values, comparisons are exact, and no floating point is
ever introduced.  The sum of the weights places a vector in one of three
geometries (below, above, or exactly at 2), and subset-sum equalities mark
the walls where the moduli space changes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    DimensionMismatch,
    DimensionTooSmall,
    NonRational,
    UnsupportedSize,
    WeightOutOfRange,
)

RawWeight = Union[Fraction, int, str]

#: Largest n for which subset sweeps (walls, fixed points) are attempted.
SUBSET_CAP_DEFAULT = 30

ZERO = Fraction(0)
ONE = Fraction(1)
TWO = Fraction(2)


class GeometryClass(Enum):
    """Trichotomy of the pair geometry by total weight."""

    LOG_FANO = "log-fano"                  # sum < 2
    LOG_CALABI_YAU = "log-calabi-yau"      # sum = 2
    LOG_GENERAL_TYPE = "log-general-type"  # sum > 2


@dataclass(frozen=True, slots=True)
class WeightVector:
    """An ordered tuple of n >= 3 exact weights, each strictly in (0, 1)."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) < 3:
            raise DimensionTooSmall(
                f"need at least 3 weights, got {len(self.weights)}"
            )
        for d in self.weights:
            if not isinstance(d, Fraction):
                raise NonRational(f"weight {d!r} is not an exact rational")
            if not ZERO < d < ONE:
                raise WeightOutOfRange(f"weight {d} is not in the open interval (0, 1)")

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Fraction:
        return sum(self.weights, ZERO)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.weights)

    def __getitem__(self, i: int) -> Fraction:
        return self.weights[i]


@dataclass(frozen=True, slots=True)
class WallReport:
    """Subset-sum walls hit by a weight vector.

    `hassett_walls` lists proper nonempty index subsets whose weights sum to
    exactly 1; `localization_walls` lists those summing to exactly half the
    total weight (a fixed point with moment zero).  Either kind being present
    sets `on_wall`.
    """

    hassett_walls: tuple[tuple[int, ...], ...]
    localization_walls: tuple[tuple[int, ...], ...]
    on_wall: bool


def parse_weight(raw: RawWeight) -> Fraction:
    """Parse one weight entry to an exact Fraction.

    Accepts Fraction and int values directly, and strings of the form "p/q"
    or a finite decimal such as "0.55" (converted exactly).  Whitespace in
    strings is ignored.  Floats are rejected: binary floats do not represent
    the intended rational.
    """
    if isinstance(raw, Fraction):
        return raw
    if isinstance(raw, bool):
        raise NonRational(f"cannot interpret {raw!r} as a weight")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, float):
        raise NonRational(
            f"refusing float weight {raw!r}; pass a string or Fraction instead"
        )
    if isinstance(raw, str):
        text = "".join(raw.split())
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise NonRational(f"cannot parse weight {raw!r}") from exc
    raise NonRational(f"cannot interpret {raw!r} as a weight")


def validate_weights(raw: Sequence[RawWeight]) -> WeightVector:
    """Parse and validate a full weight vector.

    Raises DimensionTooSmall for fewer than three entries, WeightOutOfRange
    for entries outside (0, 1), and NonRational for unparseable entries.
    """
    return WeightVector(tuple(parse_weight(r) for r in raw))


def parse_weight_list(text: str) -> WeightVector:
    """Parse a comma-separated weight list such as "1/2,1/2,1/2,1/2"."""
    items = [t for t in text.split(",") if t.strip()]
    return validate_weights(items)


def weight_numerators(w: WeightVector) -> tuple[list[int], int]:
    """Express the weights as integer numerators over one shared denominator.

    Returns `(nums, L)` with `w[i] == nums[i] / L`.  The volume engines run
    their hot loops on these integers and divide by a power of L once at the
    end, which is dramatically cheaper than per-term Fraction arithmetic.
    """
    L = lcm(*(d.denominator for d in w.weights))
    return [d.numerator * (L // d.denominator) for d in w.weights], L


def classify_geometry(w: WeightVector) -> GeometryClass:
    """Classify by comparing the exact weight sum against 2."""
    total = w.total
    if total < TWO:
        return GeometryClass.LOG_FANO
    if total == TWO:
        return GeometryClass.LOG_CALABI_YAU
    return GeometryClass.LOG_GENERAL_TYPE


def git_nonempty(w: WeightVector) -> bool:
    """True iff no single weight reaches half the total (2*d_j < sum for all j)."""
    total = w.total
    return all(2 * d < total for d in w.weights)


def wall_report(w: WeightVector, cap: int = SUBSET_CAP_DEFAULT) -> WallReport:
    """Sweep all proper nonempty index subsets for exact wall equalities.

    A subset I is a Hassett wall when its weights sum to exactly 1, and a
    localization wall when they sum to exactly half the total (moment zero).
    Subsets are reported sorted by size, then lexicographically.
    """
    n = w.n
    if n > cap:
        raise UnsupportedSize(f"wall sweep over 2^{n} subsets exceeds cap {cap}")
    nums, L = weight_numerators(w)
    total_num = sum(nums)
    hassett = []
    localization = []
    for size in range(1, n):
        for subset in combinations(range(1, n + 1), size):
            s = sum(nums[i - 1] for i in subset)
            if s == L:
                hassett.append(subset)
            if 2 * s == total_num:
                localization.append(subset)
    return WallReport(tuple(hassett), tuple(localization), bool(hassett or localization))


class HassettCase(Enum):
    """Four-point stability cases for the moving-point family."""

    NO_COLLISION = "no-collision"
    COLLISION_NEEDS_BLOWUP = "collision-needs-blowup"
    OTHER = "other"


def hassett_case(w: WeightVector) -> HassettCase:
    """Classify a four-point vector by whether the moving point (index 4)
    can meet a fixed point without destabilizing the family.

    NO_COLLISION: every pair among the first three weights exceeds 1 while
    every pair involving the fourth stays below 1 (including twice the fourth
    weight itself).  COLLISION_NEEDS_BLOWUP: the fourth weight together with
    some fixed point exceeds 1, so the family must be desingularized there.
    Anything else, including exact wall hits, is OTHER.
    """
    if w.n != 4:
        raise DimensionMismatch(f"four-point case analysis needs n = 4, got {w.n}")
    d = w.weights
    if any(d[i] + d[3] > ONE for i in range(3)):
        return HassettCase.COLLISION_NEEDS_BLOWUP
    heavy_pairs = all(d[i] + d[j] > ONE for i in range(3) for j in range(i + 1, 3))
    light_moving = all(d[k] + d[3] < ONE for k in range(4))
    if heavy_pairs and light_moving:
        return HassettCase.NO_COLLISION
    return HassettCase.OTHER


def random_cy_weights(n: int, seed: int) -> WeightVector:
    """Draw a seeded random weight vector summing to exactly 2.

    Draws n integers uniformly from [1, 30], scales them by 2 over their sum,
    and redraws whenever any scaled entry would leave (0, 1).  The result is
    deterministic for a fixed (n, seed) pair.
    """
    if n < 3:
        raise DimensionTooSmall(f"need n >= 3, got {n}")
    rng = random.Random(seed)
    while True:
        draws = [rng.randint(1, 30) for _ in range(n)]
        total = sum(draws)
        # entry 2*a/total must stay strictly below 1
        if all(2 * a < total for a in draws):
            return WeightVector(tuple(Fraction(2 * a, total) for a in draws))


def permuted(w: WeightVector, order: Iterable[int]) -> WeightVector:
    """Reorder the weights by a permutation given as 0-based positions."""
    return WeightVector(tuple(w.weights[i] for i in order))
