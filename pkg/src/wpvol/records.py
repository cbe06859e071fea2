"""Serialized record formats: exact fractions in, stable JSON/CSV out.

Rationals travel as "p/q" strings (plain "p" when the denominator is 1), so
every field except the presentation-only decimal approximation round-trips
losslessly.  JSON objects use a fixed key order and CSV is plain ASCII with
a header row, so byte-for-byte golden comparisons are meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import InvalidArgs
from .lab import AnomalyReport, ContinuityTable
from .localization import cy_reduced_volume, localization_volume
from .mcmullen import VolumeValue, mcmullen_volume
from .partitions import PARTITION_CAP_DEFAULT
from .weights import (
    GeometryClass,
    WeightVector,
    classify_geometry,
    validate_weights,
    wall_report,
)

# pi to 64 significant digits; approximations are formed from exact rationals
# against this constant at presentation time only
PI_64 = Fraction(
    3141592653589793238462643383279502884197169399375105820974944592,
    10 ** 63,
)

FORMULA_MCMULLEN = "mcmullen"
FORMULA_LOCALIZATION = "localization"
FORMULA_CY_REDUCED = "cy-reduced"

_ENGINES = {
    FORMULA_MCMULLEN: mcmullen_volume,
    FORMULA_LOCALIZATION: lambda w, cap: localization_volume(w),
    FORMULA_CY_REDUCED: lambda w, cap: cy_reduced_volume(w),
}


def format_fraction(value: Fraction) -> str:
    return str(value)


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def approx_decimal(coefficient: Fraction, pi_power: int, digits: int = 20) -> str:
    """Decimal rendering of coefficient * pi^pi_power to `digits` significant digits."""
    value = coefficient * PI_64 ** pi_power
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


@dataclass(frozen=True, slots=True)
class VolumeRecord:
    """One volume evaluation in wire form."""

    n: int
    weights: WeightVector
    geometry: GeometryClass
    formula: str
    coefficient: Fraction
    pi_power: int
    on_wall: bool
    approx: str


def make_volume_record(
    w: WeightVector, formula: str, cap: int = PARTITION_CAP_DEFAULT
) -> VolumeRecord:
    """Evaluate one formula on one weight vector and package the result."""
    try:
        engine = _ENGINES[formula]
    except KeyError:
        raise InvalidArgs(f"unknown formula {formula!r}") from None
    value: VolumeValue = engine(w, cap)
    return VolumeRecord(
        n=w.n,
        weights=w,
        geometry=classify_geometry(w),
        formula=formula,
        coefficient=value.coefficient,
        pi_power=value.pi_power,
        on_wall=wall_report(w).on_wall,
        approx=approx_decimal(value.coefficient, value.pi_power),
    )


def volume_record_to_dict(record: VolumeRecord) -> dict:
    """JSON form; key order is part of the format."""
    return {
        "n": record.n,
        "weights": [format_fraction(d) for d in record.weights],
        "geometry": record.geometry.value,
        "formula": record.formula,
        "coefficient": format_fraction(record.coefficient),
        "pi_power": record.pi_power,
        "on_wall": record.on_wall,
        "approx": record.approx,
    }


def volume_record_from_dict(data: dict) -> VolumeRecord:
    return VolumeRecord(
        n=data["n"],
        weights=validate_weights(data["weights"]),
        geometry=GeometryClass(data["geometry"]),
        formula=data["formula"],
        coefficient=parse_fraction(data["coefficient"]),
        pi_power=data["pi_power"],
        on_wall=data["on_wall"],
        approx=data["approx"],
    )


VOLUME_CSV_HEADER = [
    "n", "weights", "geometry", "formula", "coefficient", "pi_power", "on_wall",
    "approx",
]


def volume_record_to_csv_row(record: VolumeRecord) -> list[str]:
    """CSV row matching VOLUME_CSV_HEADER; weights are space-joined "p/q" terms."""
    return [
        str(record.n),
        " ".join(format_fraction(d) for d in record.weights),
        record.geometry.value,
        record.formula,
        format_fraction(record.coefficient),
        str(record.pi_power),
        "true" if record.on_wall else "false",
        record.approx,
    ]


def anomaly_report_to_dict(report: AnomalyReport) -> dict:
    """JSON form of an anomaly report.

    Elapsed time is deliberately not serialized: reports for a fixed seed
    must be byte-identical across runs and machines.
    """
    return {
        "seed": report.seed,
        "n_values": list(report.n_values),
        "trials_per_n": report.trials_per_n,
        "trials": report.trials,
        "anomaly_count": len(report.anomalies),
        "anomalies": [
            {
                "n": a.n,
                "trial_index": a.trial_index,
                "weights": [format_fraction(d) for d in a.weights],
                "mcmullen": format_fraction(a.mcmullen),
                "localization": format_fraction(a.localization),
            }
            for a in report.anomalies
        ],
    }


def continuity_table_to_dict(table: ContinuityTable) -> dict:
    return {
        "weights": [format_fraction(d) for d in table.base_weights],
        "direction": table.direction,
        "pi_power": table.pi_power,
        "base_coefficient": format_fraction(table.base_coefficient),
        "rows": [
            {
                "epsilon": format_fraction(row.epsilon),
                "coefficient": format_fraction(row.coefficient),
                "deviation": format_fraction(row.deviation),
            }
            for row in table.rows
        ],
    }


CONTINUITY_CSV_HEADER = ["epsilon", "coefficient", "deviation"]


def continuity_table_to_csv_rows(table: ContinuityTable) -> list[list[str]]:
    return [
        [
            format_fraction(row.epsilon),
            format_fraction(row.coefficient),
            format_fraction(row.deviation),
        ]
        for row in table.rows
    ]
