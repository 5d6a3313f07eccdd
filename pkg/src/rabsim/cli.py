"""Command-line interface.

Subcommands: hover-power, endurance, compare, sweep, plan, calibrate.
Inputs are catalog names, JSON paths, or values patched in with
--set role.dotted.key=value; every referenced document is loaded and
schema-validated before any computation starts. Outputs go to stdout or,
with --out, to a file written atomically. Repeated runs with identical
inputs produce byte-identical artifacts.

Exit codes: 0 success, 1 computation error (e.g. an unreachable inference
target or an oversized exhaustive plan), 2 configuration/validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalogs
from .errors import ConfigurationError, RabsimError
from .mission import (
    ComparisonColumn,
    ModeComparison,
    compare_modes,
    compare_modes_table,
    mass_sweep,
    resolve_cruise_speed,
    service_endurance,
)
from .battery import usable_energy
from .output import DEFAULT_SIG_DIGITS, rows_to_csv, to_json, write_text_atomic
from .planner import evaluate_plan, exhaustive_assign, greedy_assign, pair_endurance
from .power import (
    calibrate_blade_profile_from_hover,
    flight_energy,
    hover_power,
    induced_power,
    infer_cruise_speed,
)

BUILTIN_COMPARISON = "__builtin__"

COMPARE_CSV_HEADERS = [
    "label",
    "serve_mode",
    "payload_delta_kg",
    "cruise_speed_m_s",
    "flying_energy_j",
    "hover_power_w",
    "grasp_power_w",
    "comm_power_w",
    "serve_power_w",
    "service_time_s",
    "service_time_min",
    "derived_service_time_min",
    "published_service_time_min",
    "reconciled",
    "energy_status",
]

SWEEP_CSV_HEADERS = ["mass_kg", "hover_w", "grasp_w", "comm_w"]

ENDURANCE_CSV_HEADERS = [
    "flying_energy_j",
    "serve_power_w",
    "hover_power_w",
    "grasp_power_w",
    "comm_power_w",
    "service_time_s",
    "service_time_min",
    "cruise_speed_m_s",
    "energy_status",
]

HOVER_CSV_HEADERS = ["blade_profile_w", "induced_w", "parasite_w", "total_w"]

PLAN_CSV_HEADERS = [
    "unit_id",
    "site_id",
    "demand_weight",
    "service_time_s",
    "flying_energy_j",
    "value",
]


def _parse_set_value(raw: str):
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        return raw


def _apply_overrides(documents: dict[str, dict], set_args: list[str]) -> None:
    """Patch loaded documents in place from role.dotted.key=value pairs."""
    for item in set_args:
        if "=" not in item:
            raise ConfigurationError(f"--set expects role.key=value, got {item!r}")
        dotted, raw_value = item.split("=", 1)
        parts = dotted.split(".")
        if len(parts) < 2:
            raise ConfigurationError(
                f"--set path must start with a document role, got {dotted!r}"
            )
        role, keys = parts[0], parts[1:]
        if role not in documents:
            raise ConfigurationError(
                f"--set role {role!r} not used by this subcommand; "
                f"valid roles: {sorted(documents)}"
            )
        target = documents[role]
        for key in keys[:-1]:
            child = target.get(key)
            if not isinstance(child, dict):
                raise ConfigurationError(
                    f"--set cannot descend into {role}.{key}: not an object"
                )
            target = child
        target[keys[-1]] = _parse_set_value(raw_value)


def _emit(args, payload: dict, headers: list[str], rows: list[dict]) -> None:
    if args.format == "json":
        text = to_json(payload)
    else:
        text = rows_to_csv(headers, rows, digits=args.digits)
    if args.out:
        write_text_atomic(args.out, text)
    else:
        sys.stdout.write(text)


def _load_patched(kind: str, role: str, ref, args, documents: dict[str, dict]) -> dict:
    """Resolve a ref to a raw document and register it for --set patching."""
    document = dict(catalogs.load_document(kind, ref, profile_dir=args.profile_dir))
    documents[role] = document
    return document


def _finalize(documents: dict[str, dict], args) -> None:
    """Apply --set patches, then re-validate every patched document."""
    _apply_overrides(documents, args.set or [])
    for role, document in documents.items():
        catalogs.validate_document(_ROLE_KINDS[role], document)


_ROLE_KINDS = {
    "airframe": "airframe",
    "battery": "battery",
    "gripper": "gripper",
    "mission": "mission",
    "plan": "plan",
    "comparison": "comparison",
}


# -- subcommands -------------------------------------------------------------

def _cmd_hover_power(args) -> int:
    documents: dict[str, dict] = {}
    _load_patched("airframe", "airframe", args.airframe, args, documents)
    _finalize(documents, args)
    airframe = catalogs.airframe_from_document(documents["airframe"])
    breakdown = hover_power(airframe)
    payload = {
        "airframe": documents["airframe"]["name"],
        "blade_profile_w": breakdown.blade_profile_w,
        "induced_w": breakdown.induced_w,
        "parasite_w": breakdown.parasite_w,
        "total_w": breakdown.total_w,
    }
    row = {h: payload[h] for h in HOVER_CSV_HEADERS}
    _emit(args, payload, HOVER_CSV_HEADERS, [row])
    return 0


def _endurance_row(report, cruise_speed) -> dict:
    return {
        "flying_energy_j": report.flying_energy_j,
        "serve_power_w": report.serve_power_w,
        "hover_power_w": report.hover_power_w,
        "grasp_power_w": report.grasp_power_w,
        "comm_power_w": report.comm_power_w,
        "service_time_s": report.service_time_s,
        "service_time_min": report.service_time_min,
        "cruise_speed_m_s": cruise_speed,
        "energy_status": report.energy_status,
    }


def _cmd_endurance(args) -> int:
    documents: dict[str, dict] = {}
    _load_patched("airframe", "airframe", args.airframe, args, documents)
    _load_patched("battery", "battery", args.battery, args, documents)
    _load_patched("mission", "mission", args.mission, args, documents)
    _finalize(documents, args)
    airframe = catalogs.airframe_from_document(documents["airframe"])
    battery = catalogs.battery_from_document(documents["battery"])
    profile = catalogs.mission_from_document(documents["mission"], profile_dir=args.profile_dir)

    report = service_endurance(airframe, battery, profile)
    # Inference targets price the bare-airframe leg, matching service_endurance.
    speed = resolve_cruise_speed(airframe, profile) if profile.depot_distance_m > 0 else None
    row = _endurance_row(report, speed)
    payload = dict(row)
    payload["battery"] = {
        "name": battery.name,
        "usable_energy_j": usable_energy(battery),
    }
    _emit(args, payload, ENDURANCE_CSV_HEADERS, [row])
    return 0


def _column_row(col: ComparisonColumn) -> dict:
    report = col.report
    return {
        "label": col.label,
        "serve_mode": col.serve_mode,
        "payload_delta_kg": col.payload_delta_kg,
        "cruise_speed_m_s": col.cruise_speed_m_s,
        "flying_energy_j": report.flying_energy_j,
        "hover_power_w": report.hover_power_w,
        "grasp_power_w": report.grasp_power_w,
        "comm_power_w": report.comm_power_w,
        "serve_power_w": report.serve_power_w,
        "service_time_s": report.service_time_s,
        "service_time_min": col.service_time_min,
        "derived_service_time_min": col.derived_service_time_min,
        "published_service_time_min": col.published_service_time_min,
        "reconciled": col.reconciled,
        "energy_status": report.energy_status,
    }


def _comparison_output(args, comparison: ModeComparison) -> None:
    rows = [_column_row(col) for col in comparison.columns]
    payload = {
        "source": comparison.source,
        "battery": {
            "name": comparison.battery.name,
            "usable_energy_j": usable_energy(comparison.battery),
        },
        "columns": rows,
        "unreconciled": list(comparison.unreconciled_labels()),
    }
    _emit(args, payload, COMPARE_CSV_HEADERS, rows)


def _cmd_compare(args) -> int:
    if args.published is not None:
        documents: dict[str, dict] = {}
        if args.published == BUILTIN_COMPARISON:
            reference = catalogs.load_reference_comparison(profile_dir=args.profile_dir)
            if args.set:
                raise ConfigurationError(
                    "--set requires an explicit --published path to patch"
                )
        else:
            _load_patched("comparison", "comparison", args.published, args, documents)
            _finalize(documents, args)
            reference = catalogs.load_reference_comparison(
                documents["comparison"], profile_dir=args.profile_dir
            )
        comparison = compare_modes_table(reference.battery, list(reference.columns))
        _comparison_output(args, comparison)
        return 0

    for required in ("airframe", "battery", "mission"):
        if getattr(args, required) is None:
            raise ConfigurationError(
                f"compare needs --{required} (or --published for table mode)"
            )
    documents = {}
    _load_patched("airframe", "airframe", args.airframe, args, documents)
    _load_patched("battery", "battery", args.battery, args, documents)
    _load_patched("mission", "mission", args.mission, args, documents)
    _finalize(documents, args)
    airframe = catalogs.airframe_from_document(documents["airframe"])
    battery = catalogs.battery_from_document(documents["battery"])
    scenario = catalogs.mission_from_document(documents["mission"], profile_dir=args.profile_dir)
    deltas = _parse_float_list(args.deltas, "--deltas")
    comparison = compare_modes(airframe, battery, scenario, deltas)
    _comparison_output(args, comparison)
    return 0


def _parse_float_list(raw: str, flag: str) -> list[float]:
    if not raw.strip():
        return []
    try:
        return [float(part) for part in raw.split(",") if part.strip()]
    except ValueError as exc:
        raise ConfigurationError(f"{flag} expects comma-separated numbers, got {raw!r}") from exc


def _parse_mass_grid(raw: str) -> list[float]:
    """Either a comma list "4,4.4,5" or an inclusive range "4:6:0.5"."""
    if ":" in raw:
        parts = raw.split(":")
        if len(parts) != 3:
            raise ConfigurationError(f"--masses range must be start:stop:step, got {raw!r}")
        try:
            start, stop, step = (float(p) for p in parts)
        except ValueError as exc:
            raise ConfigurationError(f"--masses range must be numeric, got {raw!r}") from exc
        if step <= 0 or stop < start:
            raise ConfigurationError(
                f"--masses range needs step > 0 and stop >= start, got {raw!r}"
            )
        count = int((stop - start) / step + 1e-9) + 1
        return [start + i * step for i in range(count)]
    return _parse_float_list(raw, "--masses")


def _cmd_sweep(args) -> int:
    if (args.gripper is None) == (args.grasp_power is None):
        raise ConfigurationError("sweep needs exactly one of --gripper or --grasp-power")
    documents: dict[str, dict] = {}
    _load_patched("airframe", "airframe", args.airframe, args, documents)
    if args.gripper is not None:
        _load_patched("gripper", "gripper", args.gripper, args, documents)
    _finalize(documents, args)
    airframe = catalogs.airframe_from_document(documents["airframe"])
    if args.gripper is not None:
        grasp_power = catalogs.gripper_from_document(documents["gripper"]).power_w
    else:
        grasp_power = args.grasp_power
    masses = _parse_mass_grid(args.masses)
    if not masses:
        raise ConfigurationError("--masses produced an empty grid")
    points = mass_sweep(airframe, grasp_power, args.comm_power, masses)
    rows = [
        {"mass_kg": p.mass_kg, "hover_w": p.hover_w, "grasp_w": p.grasp_w, "comm_w": p.comm_w}
        for p in points
    ]
    payload = {"airframe": documents["airframe"]["name"], "points": rows}
    _emit(args, payload, SWEEP_CSV_HEADERS, rows)
    return 0


def _cmd_plan(args) -> int:
    documents: dict[str, dict] = {}
    _load_patched("plan", "plan", args.plan, args, documents)
    _finalize(documents, args)
    instance = catalogs.load_plan(documents["plan"], profile_dir=args.profile_dir)
    assign = exhaustive_assign if args.algorithm == "exhaustive" else greedy_assign
    assignment = assign(instance)
    objective = evaluate_plan(instance, assignment)
    rows = []
    for unit_id, site_id in assignment.pairs:
        unit = instance.unit(unit_id)
        site = instance.site(site_id)
        report = pair_endurance(unit, site)
        rows.append(
            {
                "unit_id": unit_id,
                "site_id": site_id,
                "demand_weight": site.demand_weight,
                "service_time_s": report.service_time_s,
                "flying_energy_j": report.flying_energy_j,
                "value": site.demand_weight * report.service_time_s,
            }
        )
    payload = {
        "algorithm": args.algorithm,
        "objective": objective,
        "pairs": rows,
        "unassigned_units": sorted(
            u.unit_id for u in instance.units
            if u.unit_id not in {p[0] for p in assignment.pairs}
        ),
        "unassigned_sites": sorted(
            s.site_id for s in instance.sites
            if s.site_id not in {p[1] for p in assignment.pairs}
        ),
    }
    _emit(args, payload, PLAN_CSV_HEADERS, rows)
    return 0


def _cmd_calibrate(args) -> int:
    if args.observed_hover is None and args.target_energy is None:
        raise ConfigurationError(
            "calibrate needs --observed-hover and/or --target-energy with --distance"
        )
    documents: dict[str, dict] = {}
    _load_patched("airframe", "airframe", args.airframe, args, documents)
    _finalize(documents, args)
    document = documents["airframe"]
    airframe = catalogs.airframe_from_document(document)
    calibration: dict[str, dict] = {}

    if args.observed_hover is not None:
        calibrated = calibrate_blade_profile_from_hover(airframe, args.observed_hover)
        document["blade_profile_power_override_w"] = calibrated.blade_profile_power_override_w
        calibration["hover_power_match"] = {
            "observed_hover_w": args.observed_hover,
            "induced_power_w": induced_power(airframe),
            "blade_profile_power_override_w": calibrated.blade_profile_power_override_w,
        }
        airframe = calibrated

    if args.target_energy is not None:
        if args.distance is None:
            raise ConfigurationError("--target-energy requires --distance")
        speed = infer_cruise_speed(airframe, args.distance, args.target_energy)
        calibration["cruise_speed_inference"] = {
            "distance_m": args.distance,
            "target_energy_j": args.target_energy,
            "cruise_speed_m_s": speed,
            "flight_energy_j": flight_energy(airframe, args.distance, speed),
        }

    document["calibration"] = calibration
    catalogs.validate_document("airframe", document)
    text = to_json(document)
    if args.out:
        write_text_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


# -- parser ------------------------------------------------------------------

def _add_output_flags(parser: argparse.ArgumentParser, default_format: str) -> None:
    parser.add_argument("--out", help="output file (written atomically); default stdout")
    parser.add_argument(
        "--format",
        choices=("csv", "json"),
        default=default_format,
        help=f"output format (default {default_format})",
    )
    parser.add_argument(
        "--digits",
        type=int,
        default=DEFAULT_SIG_DIGITS,
        help=f"significant digits in CSV cells (default {DEFAULT_SIG_DIGITS})",
    )
    parser.add_argument(
        "--set",
        action="append",
        metavar="ROLE.KEY=VALUE",
        help="patch a loaded document before validation, e.g. airframe.mass_kg=4.4",
    )
    parser.add_argument(
        "--profile-dir",
        default=None,
        help="directory with user catalog files (default: $RABSIM_PROFILE_DIR)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rabsim",
        description=(
            "Endurance and planning toolkit for aerial base stations that "
            "serve by hovering or by grasping street furniture."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hover-power", help="hover power breakdown of an airframe")
    p.add_argument("--airframe", required=True, help="airframe name, path, or inline JSON file")
    _add_output_flags(p, "json")
    p.set_defaults(func=_cmd_hover_power)

    p = sub.add_parser("endurance", help="evaluate one fly-then-serve mission")
    p.add_argument("--airframe", required=True)
    p.add_argument("--battery", required=True)
    p.add_argument("--mission", required=True, help="mission JSON path or inline object file")
    _add_output_flags(p, "json")
    p.set_defaults(func=_cmd_endurance)

    p = sub.add_parser("compare", help="hover-vs-grasp comparison table")
    p.add_argument("--airframe")
    p.add_argument("--battery")
    p.add_argument("--mission")
    p.add_argument(
        "--deltas",
        default="0.4,0.8,1.2,1.6",
        help="comma-separated grasp payload deltas in kg (default 0.4,0.8,1.2,1.6)",
    )
    p.add_argument(
        "--published",
        nargs="?",
        const=BUILTIN_COMPARISON,
        default=None,
        help=(
            "table-driven mode: reconcile a published comparison document "
            "(built-in reference when no path is given)"
        ),
    )
    _add_output_flags(p, "csv")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("sweep", help="hover/grasp/comms power across platform masses")
    p.add_argument("--airframe", required=True)
    p.add_argument("--masses", required=True, help='grid: "4,4.4,5" or "4:6:0.5" (inclusive)')
    p.add_argument("--gripper", help="gripper ref supplying the grasp power draw")
    p.add_argument("--grasp-power", type=float, help="grasp power draw in watts")
    p.add_argument("--comm-power", type=float, default=15.0, help="comms power in watts (default 15)")
    _add_output_flags(p, "csv")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("plan", help="assign fleet units to grasp sites")
    p.add_argument("--plan", required=True, help="plan instance JSON path")
    p.add_argument(
        "--algorithm",
        choices=("greedy", "exhaustive"),
        default="greedy",
        help="greedy heuristic (default) or exhaustive enumeration (<= 8x8)",
    )
    _add_output_flags(p, "json")
    p.set_defaults(func=_cmd_plan)

    p = sub.add_parser(
        "calibrate",
        help="fit blade-profile power to an observed hover draw and/or infer a cruise speed",
    )
    p.add_argument("--airframe", required=True)
    p.add_argument("--observed-hover", type=float, help="measured hover power in watts")
    p.add_argument("--distance", type=float, help="one-leg distance in meters for speed inference")
    p.add_argument("--target-energy", type=float, help="one-leg energy budget in joules")
    p.add_argument("--out", help="output file for the updated profile; default stdout")
    p.add_argument(
        "--set",
        action="append",
        metavar="ROLE.KEY=VALUE",
        help="patch the airframe document before calibrating",
    )
    p.add_argument("--profile-dir", default=None)
    p.set_defaults(func=_cmd_calibrate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RabsimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
