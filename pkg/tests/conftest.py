"""Shared fixtures and the acceptance-criteria summary printer."""

import pytest

from rabsim import (
    AirframeParams,
    BatterySpec,
    MissionProfile,
    SolenoidGripperSpec,
)

# One line per acceptance criterion is printed at the end of the run, PASS
# or FAIL, keyed by the test function that checks it.
ACCEPTANCE_CRITERIA = {
    "test_criterion_1_grip_force_range": (1, "grip-force range: 490 N at mu=0.2, 980 N at mu=0.1"),
    "test_criterion_2_hover_operating_point": (2, "hover power 323.05 W on the canonical 4 kg profile"),
    "test_criterion_3_grasp_endurance": (3, "grasp endurance 171.2 min at 30 W, 342.4 min at 15 W"),
    "test_criterion_4_headline_ratio": (4, "published grasp/hover service-time ratio > 35"),
    "test_criterion_5_model_property_suite": (5, "propulsion model property suite"),
    "test_criterion_6_cruise_speed_inference": (6, "cruise-speed inference hits 23,910 J within 1 J"),
    "test_criterion_7_planner_oracle_equivalence": (7, "greedy vs exhaustive planner oracle suite"),
    "test_criterion_8_unreconciled_rows_documented": (8, "unreconcilable published columns flagged"),
    "test_criterion_9_acoustics": (9, "6 dB-per-doubling decay and inclusive 45/55 dB limits"),
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            location = getattr(report, "location", None)
            if not location:
                continue
            name = location[2].split("[")[0]
            if name in ACCEPTANCE_CRITERIA:
                number, description = ACCEPTANCE_CRITERIA[name]
                verdict = "PASS" if status == "passed" else "FAIL"
                results[number] = (verdict, description)
    if not results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for number in sorted(results):
        verdict, description = results[number]
        terminalreporter.write_line(f"  criterion {number}: {verdict} - {description}")


@pytest.fixture
def canonical_airframe() -> AirframeParams:
    """The reference 4 kg platform with its blade-profile power pinned."""
    return AirframeParams(
        mass_kg=4.0,
        gravity_m_s2=9.8,
        air_density_kg_m3=1.225,
        rotor_disc_area_m2=0.503,
        rotor_solidity=0.05,
        induced_power_factor=0.1,
        tip_speed_m_s=120.0,
        mean_induced_velocity_m_s=4.03,
        fuselage_drag_ratio=0.6,
        profile_drag_coeff=0.012,
        blade_angular_velocity_rad_s=300.0,
        rotor_radius_m=0.4,
        blade_profile_power_override_w=79.86,
    )


@pytest.fixture
def reference_battery() -> BatterySpec:
    # 6100 mAh at 15.2 V -> 333,792 J
    return BatterySpec(name="zappers-sg4", capacity_mah=6100, voltage_v=15.2, weight_kg=0.424)


@pytest.fixture
def type_iii_gripper() -> SolenoidGripperSpec:
    return SolenoidGripperSpec(
        name="type-iii",
        holding_force_kgf=60.0,
        voltage_v=24.0,
        max_current_a=0.67,
        power_w=15.0,
        weight_kg=0.346,
    )


@pytest.fixture
def grasp_mission(type_iii_gripper) -> MissionProfile:
    """800 m out, grasp with the 15 W gripper, 15 W comms, one-way reserve."""
    return MissionProfile(
        depot_distance_m=800.0,
        serve_mode="grasp",
        infer_target_energy_j=23910.0,
        comm_power_w=15.0,
        gripper=type_iii_gripper,
        payload_delta_kg=0.4,
    )
