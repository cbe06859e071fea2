"""Exact volumes of moduli of weighted points on the projective line.

Two independent evaluations of the same volume - a set-partition sum valid
on the Calabi-Yau locus (weight sum exactly 2) and a torus fixed-point sum
valid up to it - plus CM line-bundle degrees for the associated families
and a verification harness that cross-checks everything in exact rational
arithmetic.
"""

from .cm_degree import (
    CMDegreeReport,
    Polarization,
    cm_degree_fano,
    cm_degree_general_type,
    cm_multidegree,
    fiber_geometry,
    fiber_volume,
)
from .errors import (
    ChamberMismatch,
    DimensionMismatch,
    DimensionTooSmall,
    EmptyQuotient,
    GeneralTypeUnsupported,
    InvalidArgs,
    NonRational,
    NotCalabiYau,
    NotLogFano,
    UnsupportedPolarization,
    UnsupportedSize,
    WeightOutOfRange,
    WpvolError,
)
from .lab import (
    Anomaly,
    AnomalyReport,
    ContinuityRow,
    ContinuityTable,
    anomaly_test,
    continuity_probe,
    df_sum_check,
    propordine_chamber_holds,
    propordine_check,
)
from .localization import (
    BreakdownTerm,
    FixedPoint,
    TermBreakdown,
    cy_reduced_volume,
    df_invariant,
    localization_breakdown,
    localization_prefactor,
    localization_volume,
    moment_value,
    positive_fixed_points,
)
from .mcmullen import (
    VolumeValue,
    block_factor,
    c_constant,
    mcmullen_four_point,
    mcmullen_volume,
)
from .partitions import (
    SetPartition,
    bell,
    partitions_into_k_blocks,
    partitions_with_at_least,
    stirling2,
    subsets_of_size,
)
from .records import (
    VolumeRecord,
    approx_decimal,
    make_volume_record,
    volume_record_from_dict,
    volume_record_to_dict,
)
from .weights import (
    GeometryClass,
    HassettCase,
    WallReport,
    WeightVector,
    classify_geometry,
    git_nonempty,
    hassett_case,
    parse_weight,
    parse_weight_list,
    permuted,
    random_cy_weights,
    validate_weights,
    wall_report,
    weight_numerators,
)

__version__ = "0.1.0"
