"""Endurance and planning toolkit for grasp-capable aerial base stations.

Models the propulsion power of a rotary-wing platform, the force and power
budget of its gripper, battery accounting, and the fly-then-serve mission
that compares serving by hovering against serving while perched (rotors
off). A small planner assigns a fleet to candidate grasp sites, and a CLI
(``rabsim``) surfaces everything as deterministic CSV/JSON artifacts.
"""

from .battery import BatterySpec, usable_energy
from .catalogs import (
    PROFILE_DIR_ENV,
    ReferenceComparison,
    builtin_airframes,
    builtin_batteries,
    builtin_grippers,
    load_airframe,
    load_battery,
    load_gripper,
    load_mission,
    load_plan,
    load_reference_comparison,
)
from .errors import (
    CalibrationInfeasibleError,
    ConfigurationError,
    InfeasibleTargetError,
    PlanSizeError,
    PlanValidationError,
    RabsimError,
    SchemaValidationError,
)
from .grippers import (
    FrictionGripSpec,
    SolenoidGripperSpec,
    combine_solenoids,
    grasp_power_draw,
    holding_force_n,
    required_grip_force,
    retention_gripper,
    solenoid_margin,
)
from .mission import (
    ACCEPTABLE_NOISE_LEVEL_DB,
    DAY_NOISE_LIMIT_DB,
    NIGHT_NOISE_LIMIT_DB,
    ComparisonColumn,
    EnduranceReport,
    MissionProfile,
    ModeComparison,
    ScenarioEnergies,
    ServePower,
    SweepPoint,
    compare_modes,
    compare_modes_table,
    endurance_from_energies,
    mass_sweep,
    noise_compliant,
    resolve_cruise_speed,
    serve_power,
    service_endurance,
    serving_noise_db,
    sound_level_at_distance,
)
from .planner import (
    Assignment,
    FleetUnit,
    PlanInstance,
    Site,
    evaluate_plan,
    exhaustive_assign,
    greedy_assign,
    pair_endurance,
    pair_value,
)
from .power import (
    AirframeParams,
    PowerBreakdown,
    blade_profile_power,
    calibrate_blade_profile_from_hover,
    derived_mean_induced_velocity,
    flight_energy,
    hover_power,
    induced_power,
    infer_cruise_speed,
    propulsion_power,
    with_derived_v0,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # power
    "AirframeParams",
    "PowerBreakdown",
    "blade_profile_power",
    "induced_power",
    "hover_power",
    "propulsion_power",
    "flight_energy",
    "infer_cruise_speed",
    "calibrate_blade_profile_from_hover",
    "derived_mean_induced_velocity",
    "with_derived_v0",
    # grippers
    "FrictionGripSpec",
    "SolenoidGripperSpec",
    "required_grip_force",
    "solenoid_margin",
    "grasp_power_draw",
    "holding_force_n",
    "combine_solenoids",
    "retention_gripper",
    # battery
    "BatterySpec",
    "usable_energy",
    # mission
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
    # planner
    "Site",
    "FleetUnit",
    "PlanInstance",
    "Assignment",
    "pair_endurance",
    "pair_value",
    "evaluate_plan",
    "greedy_assign",
    "exhaustive_assign",
    # catalogs
    "PROFILE_DIR_ENV",
    "ReferenceComparison",
    "builtin_airframes",
    "builtin_batteries",
    "builtin_grippers",
    "load_airframe",
    "load_battery",
    "load_gripper",
    "load_mission",
    "load_plan",
    "load_reference_comparison",
    # errors
    "RabsimError",
    "ConfigurationError",
    "SchemaValidationError",
    "InfeasibleTargetError",
    "CalibrationInfeasibleError",
    "PlanValidationError",
    "PlanSizeError",
]
