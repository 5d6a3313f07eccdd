"""Load and validate airframe/battery/gripper/mission/plan documents.

Built-in catalogs ship as JSON data files inside the package. A reference
may be:

  * a catalog name ("canonical-4kg", "type-iii", ...),
  * a path to a JSON document (anything containing a path separator or
    ending in .json, or an existing file), or
  * an already-parsed dict (inline object).

Name lookups consult an optional user profile directory first (explicit
argument, else the RABSIM_PROFILE_DIR environment variable), so user
catalogs shadow built-ins. A profile directory holds catalog files with the
same shape as the built-ins: airframes.json, batteries.json, grippers.json.

Every document is schema-validated before any numbers are touched.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .battery import BatterySpec
from .errors import ConfigurationError, SchemaValidationError
from .grippers import SolenoidGripperSpec
from .mission import MissionProfile, ScenarioEnergies
from .planner import FleetUnit, PlanInstance, Site
from .power import AirframeParams, derived_mean_induced_velocity

__all__ = [
    "PROFILE_DIR_ENV",
    "ReferenceComparison",
    "validate_document",
    "builtin_airframes",
    "builtin_batteries",
    "builtin_grippers",
    "load_airframe",
    "load_battery",
    "load_gripper",
    "load_mission",
    "load_plan",
    "load_reference_comparison",
    "load_document",
    "airframe_from_document",
    "battery_from_document",
    "gripper_from_document",
    "mission_from_document",
]

PROFILE_DIR_ENV = "RABSIM_PROFILE_DIR"

# kind -> (schema file, plural key used in catalog files)
_KINDS = {
    "airframe": ("airframe.schema.json", "airframes"),
    "battery": ("battery.schema.json", "batteries"),
    "gripper": ("gripper.schema.json", "grippers"),
    "mission": ("mission.schema.json", None),
    "plan": ("plan.schema.json", None),
    "comparison": ("comparison.schema.json", None),
}


@dataclass(frozen=True)
class ReferenceComparison:
    """A published comparison document, parsed: battery plus verbatim columns."""

    name: str
    battery: BatterySpec
    columns: tuple[ScenarioEnergies, ...]


def _package_file(*parts: str):
    return resources.files("rabsim").joinpath(*parts)


@lru_cache(maxsize=None)
def _schema(kind: str) -> dict:
    schema_file, _ = _KINDS[kind]
    return json.loads(_package_file("schemas", schema_file).read_text(encoding="utf-8"))


def validate_document(kind: str, document: dict) -> None:
    """Check a document against its schema; raise with the offending path."""
    if kind not in _KINDS:
        raise ValueError(f"unknown document kind {kind!r}; expected one of {sorted(_KINDS)}")
    validator = jsonschema.Draft202012Validator(_schema(kind))
    error = jsonschema.exceptions.best_match(validator.iter_errors(document))
    if error is not None:
        path = error.json_path.lstrip("$").lstrip(".") or "(document root)"
        raise SchemaValidationError(
            f"{kind} document invalid at {path}: {error.message}", json_path=path
        )


def _read_json(path: str | os.PathLike) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(f"cannot read {path}: {exc}") from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise ConfigurationError(f"{path} must contain a JSON object at the top level")
    return document


def _looks_like_path(ref: str) -> bool:
    return (
        os.sep in ref
        or (os.altsep is not None and os.altsep in ref)
        or ref.endswith(".json")
        or os.path.exists(ref)
    )


def _catalog_from_file(kind: str, path) -> dict[str, dict]:
    _, plural = _KINDS[kind]
    document = json.loads(path.read_text(encoding="utf-8"))
    entries = document.get(plural)
    if not isinstance(entries, list):
        raise ConfigurationError(f"catalog {path} must hold a top-level {plural!r} list")
    catalog: dict[str, dict] = {}
    for entry in entries:
        validate_document(kind, entry)
        if entry["name"] in catalog:
            raise ConfigurationError(f"catalog {path} repeats name {entry['name']!r}")
        catalog[entry["name"]] = entry
    return catalog


@lru_cache(maxsize=None)
def _builtin_catalog(kind: str) -> dict[str, dict]:
    _, plural = _KINDS[kind]
    return _catalog_from_file(kind, _package_file("data", f"{plural}.json"))


def _user_catalog(kind: str, profile_dir: str | None) -> dict[str, dict]:
    directory = profile_dir if profile_dir is not None else os.environ.get(PROFILE_DIR_ENV)
    if not directory:
        return {}
    _, plural = _KINDS[kind]
    path = Path(directory) / f"{plural}.json"
    if not path.exists():
        return {}
    return _catalog_from_file(kind, path)


def _resolve(kind: str, ref, profile_dir: str | None) -> dict:
    """Turn a name/path/inline ref into a validated document dict."""
    if isinstance(ref, dict):
        validate_document(kind, ref)
        return ref
    if not isinstance(ref, str) or not ref:
        raise ConfigurationError(
            f"{kind} reference must be a name, a path, or an object, got {ref!r}"
        )
    if _looks_like_path(ref):
        document = _read_json(ref)
        validate_document(kind, document)
        return document
    _, plural = _KINDS[kind]
    if plural is None:
        raise ConfigurationError(
            f"{kind} documents have no name catalog; give a path or an inline object, "
            f"got {ref!r}"
        )
    user = _user_catalog(kind, profile_dir)
    if ref in user:
        return user[ref]
    builtin = _builtin_catalog(kind)
    if ref in builtin:
        return builtin[ref]
    known = sorted(set(builtin) | set(user))
    raise ConfigurationError(f"unknown {kind} {ref!r}; known names: {known}")


# -- document -> object parsers ---------------------------------------------

def airframe_from_document(document: dict) -> AirframeParams:
    """Materialize AirframeParams; resolves a "derived" induced velocity."""
    v0 = document["mean_induced_velocity_m_s"]
    if v0 == "derived":
        v0 = derived_mean_induced_velocity(
            document["mass_kg"],
            document["gravity_m_s2"],
            document["air_density_kg_m3"],
            document["rotor_disc_area_m2"],
        )
    return AirframeParams(
        mass_kg=document["mass_kg"],
        gravity_m_s2=document["gravity_m_s2"],
        air_density_kg_m3=document["air_density_kg_m3"],
        rotor_disc_area_m2=document["rotor_disc_area_m2"],
        rotor_solidity=document["rotor_solidity"],
        induced_power_factor=document["induced_power_factor"],
        tip_speed_m_s=document["tip_speed_m_s"],
        mean_induced_velocity_m_s=v0,
        fuselage_drag_ratio=document["fuselage_drag_ratio"],
        profile_drag_coeff=document.get("profile_drag_coeff"),
        blade_angular_velocity_rad_s=document.get("blade_angular_velocity_rad_s"),
        rotor_radius_m=document.get("rotor_radius_m"),
        blade_profile_power_override_w=document.get("blade_profile_power_override_w"),
    )


def battery_from_document(document: dict) -> BatterySpec:
    return BatterySpec(
        name=document["name"],
        capacity_mah=document["capacity_mah"],
        voltage_v=document["voltage_v"],
        weight_kg=document["weight_kg"],
        chemistry=document.get("chemistry", "LiPo"),
        usable_fraction=document.get("usable_fraction", 1.0),
    )


def gripper_from_document(document: dict) -> SolenoidGripperSpec:
    return SolenoidGripperSpec(
        name=document["name"],
        holding_force_kgf=document["holding_force_kgf"],
        voltage_v=document["voltage_v"],
        max_current_a=document["max_current_a"],
        power_w=document["power_w"],
        weight_kg=document["weight_kg"],
    )


def mission_from_document(document: dict, profile_dir: str | None = None) -> MissionProfile:
    gripper = None
    if "gripper" in document:
        gripper = load_gripper(document["gripper"], profile_dir=profile_dir)
    return MissionProfile(
        depot_distance_m=document["depot_distance_m"],
        serve_mode=document["serve_mode"],
        cruise_speed_m_s=document.get("cruise_speed_m_s"),
        infer_target_energy_j=document.get("infer_target_energy_j"),
        comm_power_w=document.get("comm_power_w", 15.0),
        gripper=gripper,
        return_policy=document.get("return_policy", "one_way"),
        payload_delta_kg=document.get("payload_delta_kg", 0.0),
    )


# -- public loaders ----------------------------------------------------------

def load_document(kind: str, ref, profile_dir: str | None = None) -> dict:
    """Resolve a ref to its validated raw document (dict)."""
    return _resolve(kind, ref, profile_dir)


def builtin_airframes() -> dict[str, AirframeParams]:
    return {name: airframe_from_document(doc) for name, doc in _builtin_catalog("airframe").items()}


def builtin_batteries() -> dict[str, BatterySpec]:
    return {name: battery_from_document(doc) for name, doc in _builtin_catalog("battery").items()}


def builtin_grippers() -> dict[str, SolenoidGripperSpec]:
    return {name: gripper_from_document(doc) for name, doc in _builtin_catalog("gripper").items()}


def load_airframe(ref, profile_dir: str | None = None) -> AirframeParams:
    return airframe_from_document(_resolve("airframe", ref, profile_dir))


def load_battery(ref, profile_dir: str | None = None) -> BatterySpec:
    return battery_from_document(_resolve("battery", ref, profile_dir))


def load_gripper(ref, profile_dir: str | None = None) -> SolenoidGripperSpec:
    return gripper_from_document(_resolve("gripper", ref, profile_dir))


def load_mission(ref, profile_dir: str | None = None) -> MissionProfile:
    return mission_from_document(_resolve("mission", ref, profile_dir), profile_dir=profile_dir)


def load_plan(ref, profile_dir: str | None = None) -> PlanInstance:
    document = _resolve("plan", ref, profile_dir)
    sites = tuple(
        Site(
            site_id=entry["id"],
            depot_distance_m=entry["depot_distance_m"],
            demand_weight=entry["demand_weight"],
        )
        for entry in document["sites"]
    )
    units = tuple(
        FleetUnit(
            unit_id=entry["id"],
            airframe=load_airframe(entry["airframe"], profile_dir=profile_dir),
            battery=load_battery(entry["battery"], profile_dir=profile_dir),
            mission=load_mission(entry["mission"], profile_dir=profile_dir),
        )
        for entry in document["units"]
    )
    return PlanInstance(sites=sites, units=units)


def load_reference_comparison(ref=None, profile_dir: str | None = None) -> ReferenceComparison:
    """Parse a published comparison document; the built-in one by default."""
    if ref is None:
        document = json.loads(
            _package_file("data", "reference_comparison.json").read_text(encoding="utf-8")
        )
        validate_document("comparison", document)
    else:
        document = _resolve("comparison", ref, profile_dir)
    columns = tuple(
        ScenarioEnergies(
            label=entry["label"],
            flying_energy_j=entry["flying_energy_j"],
            hover_power_w=entry["hover_power_w"],
            grasp_power_w=entry["grasp_power_w"],
            comm_power_w=entry["comm_power_w"],
            published_service_time_min=entry.get("published_service_time_min"),
            payload_delta_kg=entry.get("payload_delta_kg"),
        )
        for entry in document["columns"]
    )
    return ReferenceComparison(
        name=document.get("name", "comparison"),
        battery=load_battery(document["battery"], profile_dir=profile_dir),
        columns=columns,
    )
