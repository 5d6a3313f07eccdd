"""Fly-then-serve mission accounting and site acoustics.

A unit departs a depot, flies a one-way distance D to a service point, and
then serves ground users either by hovering (rotors on) or by grasping
street furniture (rotors off, gripper holding). Net service time is what
remains of the battery after the flying phase, divided by the serving power
draw:

    service_time = max(0, (usable_energy - flying_energy) / serve_power)

Two comparison styles are provided. Model-driven comparisons compute every
flying energy from the propulsion model. Table-driven comparisons accept
per-column energies verbatim (e.g. from an external report) and reconcile
the published service times against this accounting, flagging columns that
do not balance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .battery import BatterySpec, usable_energy
from .errors import ConfigurationError
from .grippers import SolenoidGripperSpec, grasp_power_draw
from .power import AirframeParams, flight_energy, hover_power, infer_cruise_speed

__all__ = [
    "MissionProfile",
    "ServePower",
    "EnduranceReport",
    "ScenarioEnergies",
    "ComparisonColumn",
    "ModeComparison",
    "SweepPoint",
    "serve_power",
    "resolve_cruise_speed",
    "endurance_from_energies",
    "service_endurance",
    "compare_modes",
    "compare_modes_table",
    "mass_sweep",
    "sound_level_at_distance",
    "noise_compliant",
    "serving_noise_db",
    "DAY_NOISE_LIMIT_DB",
    "NIGHT_NOISE_LIMIT_DB",
    "ACCEPTABLE_NOISE_LEVEL_DB",
]

SERVE_MODES = ("hover", "grasp")
RETURN_POLICIES = ("one_way", "round_trip")

# Regulatory limits for continuous outdoor noise, inclusive thresholds.
DAY_NOISE_LIMIT_DB = 55.0
NIGHT_NOISE_LIMIT_DB = 45.0
# Typical rotary-drone emission level in flight, used as the default source
# level for compliance checks.
ACCEPTABLE_NOISE_LEVEL_DB = 85.0

# A published service time within this relative tolerance of the recomputed
# one counts as reconciled.
RECONCILE_REL_TOL = 0.005


@dataclass(frozen=True)
class MissionProfile:
    """One fly-then-serve scenario.

    The cruise-speed policy is either an explicit ``cruise_speed_m_s`` or an
    ``infer_target_energy_j`` (energy budget for one outbound leg, from
    which the speed is solved); exactly one must be given whenever the depot
    distance is positive. ``payload_delta_kg`` is end-effector mass added on
    top of the bare airframe mass.
    """

    depot_distance_m: float
    serve_mode: str
    cruise_speed_m_s: float | None = None
    infer_target_energy_j: float | None = None
    comm_power_w: float = 15.0
    gripper: SolenoidGripperSpec | None = None
    return_policy: str = "one_way"
    payload_delta_kg: float = 0.0

    def __post_init__(self):
        if self.depot_distance_m < 0:
            raise ConfigurationError(
                f"depot_distance_m must be >= 0, got {self.depot_distance_m}"
            )
        if self.serve_mode not in SERVE_MODES:
            raise ConfigurationError(
                f"serve_mode must be one of {SERVE_MODES}, got {self.serve_mode!r}"
            )
        if self.comm_power_w < 0:
            raise ConfigurationError(f"comm_power_w must be >= 0, got {self.comm_power_w}")
        if self.payload_delta_kg < 0:
            raise ConfigurationError(
                f"payload_delta_kg must be >= 0, got {self.payload_delta_kg}"
            )
        if self.return_policy not in RETURN_POLICIES:
            raise ConfigurationError(
                f"return_policy must be one of {RETURN_POLICIES}, got {self.return_policy!r}"
            )
        if self.serve_mode == "grasp" and self.gripper is None:
            raise ConfigurationError("serve_mode 'grasp' requires a gripper")
        if self.cruise_speed_m_s is not None and self.infer_target_energy_j is not None:
            raise ConfigurationError(
                "give either cruise_speed_m_s or infer_target_energy_j, not both"
            )
        if self.cruise_speed_m_s is not None and not self.cruise_speed_m_s > 0:
            raise ConfigurationError(
                f"cruise_speed_m_s must be > 0, got {self.cruise_speed_m_s}"
            )
        if self.infer_target_energy_j is not None and not self.infer_target_energy_j > 0:
            raise ConfigurationError(
                f"infer_target_energy_j must be > 0, got {self.infer_target_energy_j}"
            )
        if (
            self.depot_distance_m > 0
            and self.cruise_speed_m_s is None
            and self.infer_target_energy_j is None
        ):
            raise ConfigurationError(
                "a positive depot_distance_m requires cruise_speed_m_s or "
                "infer_target_energy_j"
            )


@dataclass(frozen=True)
class ServePower:
    """Power draw while serving, watts, by component."""

    total_w: float
    hover_w: float
    grasp_w: float
    comm_w: float


@dataclass(frozen=True)
class EnduranceReport:
    """Energy budget of one mission evaluation.

    ``energy_status`` is "ok" when serving time is positive (or unbounded),
    "flyable_unserviceable" when the battery covers exactly the flying
    phase, and "unflyable" when it cannot.
    """

    flying_energy_j: float
    serve_power_w: float
    hover_power_w: float
    grasp_power_w: float
    comm_power_w: float
    service_time_s: float
    energy_status: str

    @property
    def service_time_min(self) -> float:
        return self.service_time_s / 60.0


@dataclass(frozen=True)
class ScenarioEnergies:
    """One comparison column stated as energies, for table-driven mode.

    ``published_service_time_min`` is the externally reported service time,
    if any; it is carried verbatim and reconciled against the recomputed
    value rather than replaced by it.
    """

    label: str
    flying_energy_j: float
    hover_power_w: float
    grasp_power_w: float
    comm_power_w: float
    published_service_time_min: float | None = None
    payload_delta_kg: float | None = None

    def __post_init__(self):
        for field_name in ("flying_energy_j", "hover_power_w", "grasp_power_w", "comm_power_w"):
            if getattr(self, field_name) < 0:
                raise ConfigurationError(
                    f"{field_name} must be >= 0, got {getattr(self, field_name)}"
                )


@dataclass(frozen=True)
class ComparisonColumn:
    """One mode-comparison column: an endurance report plus its provenance.

    ``service_time_min`` prefers the published figure when one was supplied
    (the column then reports an external result and ``reconciled`` says
    whether this accounting reproduces it); otherwise it is the recomputed
    time.
    """

    label: str
    serve_mode: str
    report: EnduranceReport
    payload_delta_kg: float | None = None
    cruise_speed_m_s: float | None = None
    published_service_time_min: float | None = None

    @property
    def derived_service_time_min(self) -> float:
        return self.report.service_time_min

    @property
    def service_time_min(self) -> float:
        if self.published_service_time_min is not None:
            return self.published_service_time_min
        return self.derived_service_time_min

    @property
    def reconciled(self) -> bool | None:
        """Whether the published service time balances against the energies.

        None when no published figure exists for this column.
        """
        if self.published_service_time_min is None:
            return None
        published = self.published_service_time_min
        derived = self.derived_service_time_min
        if published == 0:
            return derived == 0
        return abs(derived - published) / abs(published) <= RECONCILE_REL_TOL


@dataclass(frozen=True)
class ModeComparison:
    """Hover vs grasp comparison table: one column per configuration."""

    columns: tuple[ComparisonColumn, ...]
    battery: BatterySpec
    source: str  # "model" (energies computed) or "table" (energies supplied)

    def column(self, label: str) -> ComparisonColumn:
        for col in self.columns:
            if col.label == label:
                return col
        raise KeyError(f"no comparison column labeled {label!r}")

    def service_ratio(self, numerator_label: str, denominator_label: str) -> float:
        """Ratio of the two columns' authoritative service times."""
        num = self.column(numerator_label).service_time_min
        den = self.column(denominator_label).service_time_min
        if den == 0:
            return math.inf if num > 0 else math.nan
        return num / den

    def unreconciled_labels(self) -> tuple[str, ...]:
        """Labels whose published service time this accounting cannot reproduce."""
        return tuple(col.label for col in self.columns if col.reconciled is False)


@dataclass(frozen=True)
class SweepPoint:
    """One mass grid point of the power-per-phase sweep."""

    mass_kg: float
    hover_w: float
    grasp_w: float
    comm_w: float


def _with_payload(airframe: AirframeParams, payload_delta_kg: float) -> AirframeParams:
    if payload_delta_kg == 0:
        return airframe
    return replace(airframe, mass_kg=airframe.mass_kg + payload_delta_kg)


def serve_power(airframe: AirframeParams, profile: MissionProfile) -> ServePower:
    """Power draw while serving. ``airframe`` mass must already include payload.

    Hover mode keeps the rotors on (hover power + comms); grasp mode powers
    only the gripper and comms.
    """
    if profile.serve_mode == "hover":
        hover_w = hover_power(airframe).total_w
        grasp_w = 0.0
    else:
        hover_w = 0.0
        grasp_w = grasp_power_draw(profile.gripper)
    return ServePower(
        total_w=hover_w + grasp_w + profile.comm_power_w,
        hover_w=hover_w,
        grasp_w=grasp_w,
        comm_w=profile.comm_power_w,
    )


def resolve_cruise_speed(
    airframe: AirframeParams, profile: MissionProfile
) -> float | None:
    """Concrete cruise speed for the profile, solving the inference policy.

    An inference target prices one leg of the *bare* airframe, so pass the
    airframe without the payload delta; added end-effector mass then flies
    at the same speed and shows up as extra flying energy. Returns None
    when the depot distance is zero and no explicit speed was given.
    """
    if profile.cruise_speed_m_s is not None:
        return profile.cruise_speed_m_s
    if profile.infer_target_energy_j is not None:
        return infer_cruise_speed(
            airframe, profile.depot_distance_m, profile.infer_target_energy_j
        )
    return None


def endurance_from_energies(
    battery: BatterySpec, flying_energy_j: float, power: ServePower
) -> EnduranceReport:
    """Core budget accounting shared by model-driven and table-driven paths.

    Zero serving power with energy to spare yields an unbounded (inf)
    service time.
    """
    if flying_energy_j < 0:
        raise ValueError(f"flying_energy_j must be >= 0, got {flying_energy_j}")
    remaining_j = usable_energy(battery) - flying_energy_j
    if remaining_j < 0:
        status, service_s = "unflyable", 0.0
    elif remaining_j == 0:
        status, service_s = "flyable_unserviceable", 0.0
    elif power.total_w == 0:
        status, service_s = "ok", math.inf
    else:
        status, service_s = "ok", remaining_j / power.total_w
    return EnduranceReport(
        flying_energy_j=flying_energy_j,
        serve_power_w=power.total_w,
        hover_power_w=power.hover_w,
        grasp_power_w=power.grasp_w,
        comm_power_w=power.comm_w,
        service_time_s=service_s,
        energy_status=status,
    )


def service_endurance(
    airframe: AirframeParams, battery: BatterySpec, profile: MissionProfile
) -> EnduranceReport:
    """Evaluate one mission: flying energy, serving power, net service time.

    ``airframe`` is the bare platform; the profile's payload delta is added
    here. A cruise-speed inference target is solved on the bare airframe
    (it prices the reference leg), and the loaded platform flies at that
    speed, so payload mass costs energy instead of silently slowing the
    leg. Round-trip missions reserve the return leg at the same speed, so
    their flying energy is exactly twice the one-way figure.
    """
    effective = _with_payload(airframe, profile.payload_delta_kg)
    power = serve_power(effective, profile)
    if profile.depot_distance_m == 0:
        flying_j = 0.0
    else:
        speed = resolve_cruise_speed(airframe, profile)
        legs = 2 if profile.return_policy == "round_trip" else 1
        flying_j = flight_energy(effective, profile.depot_distance_m, speed) * legs
    return endurance_from_energies(battery, flying_j, power)


def compare_modes(
    airframe_base: AirframeParams,
    battery: BatterySpec,
    scenario: MissionProfile,
    payload_deltas_kg: list[float],
) -> ModeComparison:
    """Model-driven hover-vs-grasp table.

    Emits one hover column at zero payload delta, then one grasp column per
    requested delta, in the given order. The scenario fixes distance, comms
    power, return policy, and the speed policy; when the policy is
    inference, the speed is solved once on the bare (hover) airframe and
    reused for every grasp column, so heavier columns spend more flying
    energy through the power model rather than flying slower.
    """
    if payload_deltas_kg and scenario.gripper is None:
        raise ConfigurationError("grasp columns require a gripper in the scenario")
    if any(d < 0 for d in payload_deltas_kg):
        raise ConfigurationError(
            f"payload deltas must be >= 0, got {sorted(payload_deltas_kg)}"
        )

    speed = resolve_cruise_speed(airframe_base, scenario)
    resolved = replace(
        scenario, cruise_speed_m_s=speed, infer_target_energy_j=None
    ) if speed is not None else scenario

    abs_profile = replace(resolved, serve_mode="hover", payload_delta_kg=0.0)
    columns = [
        ComparisonColumn(
            label="ABS",
            serve_mode="hover",
            report=service_endurance(airframe_base, battery, abs_profile),
            payload_delta_kg=0.0,
            cruise_speed_m_s=speed,
        )
    ]
    for delta in payload_deltas_kg:
        profile = replace(resolved, serve_mode="grasp", payload_delta_kg=delta)
        columns.append(
            ComparisonColumn(
                label=f"RABS+{delta:g}",
                serve_mode="grasp",
                report=service_endurance(airframe_base, battery, profile),
                payload_delta_kg=delta,
                cruise_speed_m_s=speed,
            )
        )
    return ModeComparison(columns=tuple(columns), battery=battery, source="model")


def compare_modes_table(
    battery: BatterySpec, rows: list[ScenarioEnergies]
) -> ModeComparison:
    """Table-driven comparison: energies supplied verbatim per column.

    Each row's service time is recomputed from the battery and the stated
    energies; a published service time, when present, stays the column's
    authoritative figure and is only reconciled (``reconciled`` False marks
    a column whose published time this accounting cannot reproduce).
    """
    columns = []
    for row in rows:
        power = ServePower(
            total_w=row.hover_power_w + row.grasp_power_w + row.comm_power_w,
            hover_w=row.hover_power_w,
            grasp_w=row.grasp_power_w,
            comm_w=row.comm_power_w,
        )
        columns.append(
            ComparisonColumn(
                label=row.label,
                serve_mode="hover" if row.hover_power_w > 0 else "grasp",
                report=endurance_from_energies(battery, row.flying_energy_j, power),
                payload_delta_kg=row.payload_delta_kg,
                published_service_time_min=row.published_service_time_min,
            )
        )
    return ModeComparison(columns=tuple(columns), battery=battery, source="table")


def mass_sweep(
    airframe: AirframeParams,
    gripper_power_w: float,
    comm_power_w: float,
    mass_grid_kg: list[float],
) -> list[SweepPoint]:
    """Serving power per phase across platform masses.

    Hover power is re-evaluated at each mass; grasp and comms draws do not
    depend on mass, so those series are constant.
    """
    if not mass_grid_kg:
        raise ValueError("mass_grid_kg must be non-empty")
    if any(m <= 0 for m in mass_grid_kg):
        raise ValueError(f"all masses must be > 0, got {sorted(mass_grid_kg)}")
    if gripper_power_w < 0:
        raise ValueError(f"gripper_power_w must be >= 0, got {gripper_power_w}")
    if comm_power_w < 0:
        raise ValueError(f"comm_power_w must be >= 0, got {comm_power_w}")
    return [
        SweepPoint(
            mass_kg=m,
            hover_w=hover_power(replace(airframe, mass_kg=m)).total_w,
            grasp_w=gripper_power_w,
            comm_w=comm_power_w,
        )
        for m in mass_grid_kg
    ]


def sound_level_at_distance(
    source_level_db: float, reference_distance_m: float, distance_m: float
) -> float:
    """Free-field level at a distance: L - 20 log10(d / d_ref).

    Roughly 6.02 dB of attenuation per doubling of distance.
    """
    if reference_distance_m <= 0:
        raise ValueError(
            f"reference_distance_m must be > 0, got {reference_distance_m}"
        )
    if distance_m <= 0:
        raise ValueError(f"distance_m must be > 0, got {distance_m}")
    return source_level_db - 20.0 * math.log10(distance_m / reference_distance_m)


def noise_compliant(level_db: float, daytime: bool) -> bool:
    """Whether a received level meets the day/night limit, inclusive."""
    limit = DAY_NOISE_LIMIT_DB if daytime else NIGHT_NOISE_LIMIT_DB
    return level_db <= limit


def serving_noise_db(
    serve_mode: str, flight_noise_db: float = ACCEPTABLE_NOISE_LEVEL_DB
) -> float:
    """Source emission while serving: rotors-off grasping is silent (0 dB)."""
    if serve_mode not in SERVE_MODES:
        raise ValueError(f"serve_mode must be one of {SERVE_MODES}, got {serve_mode!r}")
    return 0.0 if serve_mode == "grasp" else flight_noise_db
