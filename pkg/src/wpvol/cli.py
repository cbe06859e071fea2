"""Command-line interface.

Subcommands: volume, classify, cm-degree, anomaly-test, continuity, scan.
Exit codes: 0 success, 1 malformed input or domain error, 2 unsupported
size, 3 mathematical anomaly (the formulas disagreed - treat as an alarm,
not a usage problem).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .cm_degree import (
    Polarization,
    cm_degree_fano,
    cm_degree_general_type,
    cm_multidegree,
    fiber_geometry,
)
from .errors import InvalidArgs, NonRational, WpvolError
from .lab import DIRECTION_FIX_MIN, DIRECTION_UNIFORM, anomaly_test, continuity_probe
from .partitions import PARTITION_CAP_DEFAULT
from .records import (
    CONTINUITY_CSV_HEADER,
    FORMULA_LOCALIZATION,
    FORMULA_MCMULLEN,
    VOLUME_CSV_HEADER,
    anomaly_report_to_dict,
    continuity_table_to_csv_rows,
    continuity_table_to_dict,
    format_fraction,
    make_volume_record,
    volume_record_to_csv_row,
    volume_record_to_dict,
)
from .weights import (
    WeightVector,
    classify_geometry,
    hassett_case,
    parse_weight,
    parse_weight_list,
    wall_report,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SIZE = 2
EXIT_ANOMALY = 3


def _parse_fraction_arg(text: str) -> Fraction:
    try:
        return parse_weight(text)
    except NonRational:
        raise InvalidArgs(f"cannot parse {text!r} as a rational") from None


def _parse_fraction_list(text: str) -> list[Fraction]:
    return [_parse_fraction_arg(t) for t in text.split(",") if t.strip()]


def _parse_n_values(text: str) -> list[int]:
    """Accept "7", "4,5,6" or an inclusive range "4..7"."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InvalidArgs(f"cannot parse point counts from {text!r}") from None
    if not values:
        raise InvalidArgs(f"no point counts in {text!r}")
    return values


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _write_csv(rows: list[list[str]], header: list[str], path: str | None) -> None:
    stream = open(path, "w", newline="") if path else sys.stdout
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    finally:
        if path:
            stream.close()


def _cmd_volume(args) -> int:
    w = parse_weight_list(args.weights)
    formulas = (
        [FORMULA_MCMULLEN, FORMULA_LOCALIZATION]
        if args.formula == "both"
        else [args.formula]
    )
    records = [make_volume_record(w, f, cap=args.partition_cap) for f in formulas]
    if args.json:
        _emit_json([volume_record_to_dict(r) for r in records])
    else:
        for r in records:
            print(f"{r.formula}: {format_fraction(r.coefficient)} * pi^{r.pi_power}"
                  f" = {r.approx}")
    if len(records) == 2 and (
        records[0].coefficient != records[1].coefficient
        or records[0].pi_power != records[1].pi_power
    ):
        print("anomaly: the two formulas disagree on this input", file=sys.stderr)
        return EXIT_ANOMALY
    return EXIT_OK


def _format_subsets(subsets) -> str:
    return " ".join("{" + ",".join(map(str, s)) + "}" for s in subsets) or "-"


def _cmd_classify(args) -> int:
    w = parse_weight_list(args.weights)
    geometry = classify_geometry(w)
    walls = wall_report(w, cap=args.cap)
    case = hassett_case(w).value if w.n == 4 else None
    if args.json:
        _emit_json({
            "n": w.n,
            "weights": [format_fraction(d) for d in w],
            "sum": format_fraction(w.total),
            "geometry": geometry.value,
            "on_wall": walls.on_wall,
            "hassett_walls": [list(s) for s in walls.hassett_walls],
            "localization_walls": [list(s) for s in walls.localization_walls],
            "hassett_case": case,
        })
    else:
        print(f"n: {w.n}")
        print(f"weights: {' '.join(format_fraction(d) for d in w)}")
        print(f"sum: {format_fraction(w.total)}")
        print(f"geometry: {geometry.value}")
        print(f"on_wall: {'true' if walls.on_wall else 'false'}")
        print(f"hassett_walls: {_format_subsets(walls.hassett_walls)}")
        print(f"localization_walls: {_format_subsets(walls.localization_walls)}")
        if case is not None:
            print(f"hassett_case: {case}")
    return EXIT_OK


def _cmd_cm_degree(args) -> int:
    w = parse_weight_list(args.weights)
    pol = Polarization(args.polarization)
    if pol is Polarization.LOG_CANONICAL:
        if args.dim != 1:
            raise InvalidArgs("log-canonical degrees are for points on the line "
                              "(--dim 1)")
        degree = cm_degree_general_type(w)
        if args.json:
            _emit_json({
                "dim": args.dim,
                "weights": [format_fraction(d) for d in w],
                "polarization": pol.value,
                "geometry": fiber_geometry(args.dim, w).value,
                "moving_index": 4,
                "degree": format_fraction(degree),
            })
        else:
            print(f"polarization: {pol.value}")
            print(f"degree: {format_fraction(degree)}")
        return EXIT_OK
    report = cm_multidegree(args.dim, w, pol)
    payload = {
        "dim": args.dim,
        "weights": [format_fraction(d) for d in w],
        "polarization": pol.value,
        "geometry": report.geometry.value,
        "fiber_volume": format_fraction(report.fiber_volume),
        "degrees": [format_fraction(r) for r in report.degrees],
    }
    if args.index is not None:
        payload["index"] = args.index
        payload["degree"] = format_fraction(
            cm_degree_fano(args.dim, w, args.index, pol)
        )
    if args.json:
        _emit_json(payload)
    else:
        print(f"polarization: {pol.value}")
        print(f"geometry: {report.geometry.value}")
        print(f"fiber_volume: {format_fraction(report.fiber_volume)}")
        print(f"degrees: {' '.join(format_fraction(r) for r in report.degrees)}")
        if args.index is not None:
            print(f"degree[{args.index}]: {payload['degree']}")
    return EXIT_OK


def _cmd_anomaly_test(args) -> int:
    report = anomaly_test(
        _parse_n_values(args.n),
        args.trials,
        args.seed,
        jobs=args.jobs,
        cap=args.partition_cap,
    )
    _emit_json(anomaly_report_to_dict(report))
    print(f"elapsed: {report.elapsed_seconds:.2f} s", file=sys.stderr)
    return EXIT_OK if report.clean else EXIT_ANOMALY


def _cmd_continuity(args) -> int:
    w = parse_weight_list(args.weights)
    table = continuity_probe(
        w,
        _parse_fraction_list(args.epsilons),
        direction=args.direction,
        cap=args.partition_cap,
    )
    if args.json:
        _emit_json(continuity_table_to_dict(table))
    else:
        _write_csv(continuity_table_to_csv_rows(table), CONTINUITY_CSV_HEADER,
                   args.output)
    if args.plot:
        from .plots import render_continuity_figure

        render_continuity_figure(table, args.plot)
    return EXIT_OK


def _scan_grid(n: int, step: Fraction):
    """Two-parameter slice of the weight-sum-2 simplex: d1 and d2 run over
    the grid, the remaining n-2 weights share the rest equally."""
    if not 0 < step < 1:
        raise InvalidArgs(f"grid step {step} outside (0, 1)")
    axis = []
    x = step
    while x < 1:
        axis.append(x)
        x += step
    for x in axis:
        for y in axis:
            share = (2 - x - y) / (n - 2)
            if 0 < share < 1:
                yield WeightVector((x, y) + (share,) * (n - 2))


def _cmd_scan(args) -> int:
    if args.n < 3:
        raise InvalidArgs(f"scan needs n >= 3, got {args.n}")
    step = _parse_fraction_arg(args.grid)
    records = [
        make_volume_record(w, args.formula, cap=args.partition_cap)
        for w in _scan_grid(args.n, step)
    ]
    _write_csv([volume_record_to_csv_row(r) for r in records], VOLUME_CSV_HEADER,
               args.output)
    if args.plot:
        if not records:
            raise InvalidArgs("grid produced no valid weight vectors; nothing to plot")
        from .plots import render_scan_figure

        render_scan_figure(records, args.plot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wpvol",
        description="Exact volumes of moduli of weighted points on the line, "
                    "by two independent formulas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("volume", help="evaluate the volume formulas on one vector")
    p.add_argument("--weights", required=True, help="comma-separated rationals")
    p.add_argument("--formula", default="both",
                   choices=["mcmullen", "localization", "cy-reduced", "both"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--partition-cap", type=int, default=PARTITION_CAP_DEFAULT)
    p.set_defaults(handler=_cmd_volume)

    p = sub.add_parser("classify", help="geometry class, walls, four-point case")
    p.add_argument("--weights", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int, default=30)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("cm-degree", help="CM line-bundle degrees for a family")
    p.add_argument("--dim", type=int, default=1, help="fiber dimension n")
    p.add_argument("--weights", required=True)
    p.add_argument("--polarization", required=True,
                   choices=[pol.value for pol in Polarization])
    p.add_argument("--index", type=int, default=None, help="1-based weight index")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_cm_degree)

    p = sub.add_parser("anomaly-test",
                       help="randomized cross-formula comparison, JSON report")
    p.add_argument("--n", required=True, help='point counts: "4..7" or "4,5"')
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--partition-cap", type=int, default=PARTITION_CAP_DEFAULT)
    p.set_defaults(handler=_cmd_anomaly_test)

    p = sub.add_parser("continuity",
                       help="tabulate the volume along a path into the Fano chamber")
    p.add_argument("--weights", required=True, help="base vector, weight sum 2")
    p.add_argument("--epsilons", required=True, help="comma-separated rationals")
    p.add_argument("--direction", default=DIRECTION_UNIFORM,
                   choices=[DIRECTION_UNIFORM, DIRECTION_FIX_MIN])
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", default=None, help="CSV path (default stdout)")
    p.add_argument("--plot", default=None, help="also render a figure to this path")
    p.add_argument("--partition-cap", type=int, default=PARTITION_CAP_DEFAULT)
    p.set_defaults(handler=_cmd_continuity)

    p = sub.add_parser("scan",
                       help="sweep a 2-parameter slice of the weight-sum-2 simplex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", required=True, help="grid step, e.g. 1/20")
    p.add_argument("--formula", default=FORMULA_LOCALIZATION,
                   choices=["mcmullen", "localization", "cy-reduced"])
    p.add_argument("--output", default=None, help="CSV path (default stdout)")
    p.add_argument("--plot", default=None, help="also render a figure to this path")
    p.add_argument("--partition-cap", type=int, default=PARTITION_CAP_DEFAULT)
    p.set_defaults(handler=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems; remap to the documented code 1
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.handler(args)
    except WpvolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
