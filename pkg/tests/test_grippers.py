"""Grip-force requirement and solenoid catalog behavior."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rabsim import (
    ConfigurationError,
    FrictionGripSpec,
    SolenoidGripperSpec,
    combine_solenoids,
    grasp_power_draw,
    holding_force_n,
    required_grip_force,
    retention_gripper,
    solenoid_margin,
)


def friction_spec(**overrides) -> FrictionGripSpec:
    base = dict(
        platform_mass_kg=5.0,
        gravity_m_s2=9.8,
        friction_coefficient=0.2,
        safety_factor=2.0,
        acceleration_m_s2=0.0,
    )
    base.update(overrides)
    return FrictionGripSpec(**base)


class TestRequiredGripForce:
    def test_low_friction_endpoint(self):
        assert required_grip_force(friction_spec(friction_coefficient=0.1)) == pytest.approx(
            980.0, abs=0.5
        )

    def test_high_friction_endpoint(self):
        assert required_grip_force(friction_spec(friction_coefficient=0.2)) == pytest.approx(
            490.0, abs=0.5
        )

    def test_all_ones_identity(self):
        spec = FrictionGripSpec(
            platform_mass_kg=1.0,
            gravity_m_s2=1.0,
            friction_coefficient=1.0,
            safety_factor=1.0,
        )
        assert required_grip_force(spec) == 1.0

    @given(
        mass=st.floats(min_value=0.1, max_value=100.0),
        factor=st.floats(min_value=0.1, max_value=10.0),
    )
    @settings(max_examples=60, deadline=None)
    def test_homogeneous_degree_one_in_mass(self, mass, factor):
        base = required_grip_force(friction_spec(platform_mass_kg=mass))
        scaled = required_grip_force(friction_spec(platform_mass_kg=mass * factor))
        assert scaled == pytest.approx(base * factor, rel=1e-9)

    @given(
        mu_low=st.floats(min_value=0.05, max_value=2.0),
        mu_bump=st.floats(min_value=0.01, max_value=1.0),
    )
    @settings(max_examples=60, deadline=None)
    def test_strictly_decreasing_in_friction(self, mu_low, mu_bump):
        lower = required_grip_force(friction_spec(friction_coefficient=mu_low))
        higher = required_grip_force(friction_spec(friction_coefficient=mu_low + mu_bump))
        assert higher < lower

    def test_increasing_in_safety_and_acceleration(self):
        base = required_grip_force(friction_spec())
        assert required_grip_force(friction_spec(safety_factor=3.0)) > base
        assert required_grip_force(friction_spec(acceleration_m_s2=2.0)) > base

    @pytest.mark.parametrize(
        "field,value",
        [
            ("platform_mass_kg", 0.0),
            ("gravity_m_s2", -1.0),
            ("friction_coefficient", 0.0),
            ("safety_factor", 0.5),
            ("acceleration_m_s2", -0.1),
        ],
    )
    def test_invalid_spec_rejected(self, field, value):
        with pytest.raises(ConfigurationError, match=field):
            friction_spec(**{field: value})


class TestSolenoidSpecs:
    def test_margin_twin_array_holds_five_kg_at_tenfold_safety(self):
        one = SolenoidGripperSpec(
            name="25kgf", holding_force_kgf=25.0, voltage_v=5.0,
            max_current_a=0.6, power_w=3.0, weight_kg=0.2,
        )
        array = combine_solenoids([one, one], name="twin")
        assert array.holding_force_kgf == 50.0
        assert solenoid_margin(array, payload_kg=5.0, required_safety=10.0) == 1.0

    def test_margin_boundary(self):
        spec = SolenoidGripperSpec(
            name="b", holding_force_kgf=30.0, voltage_v=12.0,
            max_current_a=0.34, power_w=4.0, weight_kg=0.193,
        )
        assert solenoid_margin(spec, payload_kg=30.0, required_safety=1.0) == 1.0

    def test_margin_type_iii(self, type_iii_gripper):
        assert solenoid_margin(type_iii_gripper, payload_kg=5.0, required_safety=10.0) == pytest.approx(1.2)

    def test_margin_preconditions(self, type_iii_gripper):
        with pytest.raises(ValueError):
            solenoid_margin(type_iii_gripper, payload_kg=0.0, required_safety=10.0)
        with pytest.raises(ValueError):
            solenoid_margin(type_iii_gripper, payload_kg=5.0, required_safety=0.5)

    def test_power_draw_is_rating(self, type_iii_gripper):
        assert grasp_power_draw(type_iii_gripper) == 15.0

    def test_retention_gripper_draws_nothing(self):
        latch = retention_gripper()
        assert grasp_power_draw(latch) == 0.0
        assert latch.holding_force_kgf > 0

    def test_holding_force_converts_with_configured_gravity(self, type_iii_gripper):
        assert holding_force_n(type_iii_gripper, gravity_m_s2=9.8) == pytest.approx(588.0)
        assert holding_force_n(type_iii_gripper, gravity_m_s2=10.0) == pytest.approx(600.0)

    def test_rating_consistency_enforced(self):
        # 20 W from a 12 V / 1 A supply overshoots the 5% slack.
        with pytest.raises(ConfigurationError, match="power_w"):
            SolenoidGripperSpec(
                name="bad", holding_force_kgf=10.0, voltage_v=12.0,
                max_current_a=1.0, power_w=20.0, weight_kg=0.1,
            )

    def test_rating_slack_accepted(self):
        # Exactly at the 5% slack boundary.
        SolenoidGripperSpec(
            name="edge", holding_force_kgf=10.0, voltage_v=10.0,
            max_current_a=1.0, power_w=10.5, weight_kg=0.1,
        )

    def test_negative_power_rejected(self):
        with pytest.raises(ConfigurationError, match="power_w"):
            SolenoidGripperSpec(
                name="bad", holding_force_kgf=10.0, voltage_v=12.0,
                max_current_a=1.0, power_w=-1.0, weight_kg=0.1,
            )

    def test_combine_requires_common_voltage(self):
        a = SolenoidGripperSpec(
            name="a", holding_force_kgf=25.0, voltage_v=5.0,
            max_current_a=0.6, power_w=3.0, weight_kg=0.2,
        )
        b = SolenoidGripperSpec(
            name="b", holding_force_kgf=25.0, voltage_v=12.0,
            max_current_a=0.6, power_w=3.0, weight_kg=0.2,
        )
        with pytest.raises(ConfigurationError, match="voltage"):
            combine_solenoids([a, b])

    def test_combine_sums_ratings(self):
        a = SolenoidGripperSpec(
            name="a", holding_force_kgf=25.0, voltage_v=5.0,
            max_current_a=0.6, power_w=3.0, weight_kg=0.2,
        )
        array = combine_solenoids([a, a, a])
        assert array.name == "a+a+a"
        assert array.holding_force_kgf == 75.0
        assert array.max_current_a == pytest.approx(1.8)
        assert array.power_w == 9.0
        assert array.weight_kg == pytest.approx(0.6)

    def test_combine_rejects_empty(self):
        with pytest.raises(ValueError):
            combine_solenoids([])
