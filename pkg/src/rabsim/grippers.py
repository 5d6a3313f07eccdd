"""Grip-force sizing and solenoid gripper catalog entries.

A friction gripper holding a platform of mass m against gravity g and worst
case vertical acceleration alpha, with static friction coefficient mu and
safety factor epsilon, must squeeze with normal force

    F = m (g + alpha) epsilon / mu

Electromagnet grippers are described by their catalog ratings instead and
draw constant electrical power while holding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigurationError

__all__ = [
    "FrictionGripSpec",
    "SolenoidGripperSpec",
    "required_grip_force",
    "solenoid_margin",
    "grasp_power_draw",
    "holding_force_n",
    "combine_solenoids",
    "retention_gripper",
]

# Catalog self-consistency slack: rated power may exceed V*I by at most 5%
# to absorb rounding in published ratings.
POWER_RATING_SLACK = 1.05


@dataclass(frozen=True)
class FrictionGripSpec:
    """Inputs to the normal-force requirement of a friction grasp."""

    platform_mass_kg: float    # m, mass being held
    gravity_m_s2: float        # g
    friction_coefficient: float  # mu, finger/pole static friction
    safety_factor: float       # epsilon >= 1
    acceleration_m_s2: float = 0.0  # alpha, worst-case vertical acceleration

    def __post_init__(self):
        if not self.platform_mass_kg > 0:
            raise ConfigurationError(
                f"platform_mass_kg must be > 0, got {self.platform_mass_kg}"
            )
        if not self.gravity_m_s2 > 0:
            raise ConfigurationError(f"gravity_m_s2 must be > 0, got {self.gravity_m_s2}")
        if not self.friction_coefficient > 0:
            raise ConfigurationError(
                f"friction_coefficient must be > 0, got {self.friction_coefficient}"
            )
        if self.safety_factor < 1:
            raise ConfigurationError(
                f"safety_factor must be >= 1, got {self.safety_factor}"
            )
        if self.acceleration_m_s2 < 0:
            raise ConfigurationError(
                f"acceleration_m_s2 must be >= 0, got {self.acceleration_m_s2}"
            )


@dataclass(frozen=True)
class SolenoidGripperSpec:
    """Catalog ratings of one electromagnet gripper (or a combined array).

    ``power_w`` is the continuous draw while holding; zero models a
    mechanically latched retention gripper that only spends energy to open
    and close. The remaining ratings must be positive.
    """

    name: str
    holding_force_kgf: float  # retained payload rating, kilograms-force
    voltage_v: float          # DC supply
    max_current_a: float
    power_w: float            # continuous holding draw
    weight_kg: float

    def __post_init__(self):
        for field_name in ("holding_force_kgf", "voltage_v", "max_current_a", "weight_kg"):
            value = getattr(self, field_name)
            if not value > 0:
                raise ConfigurationError(f"{field_name} must be > 0, got {value}")
        if self.power_w < 0:
            raise ConfigurationError(f"power_w must be >= 0, got {self.power_w}")
        if self.power_w > self.voltage_v * self.max_current_a * POWER_RATING_SLACK:
            raise ConfigurationError(
                f"power_w {self.power_w} exceeds voltage_v * max_current_a "
                f"({self.voltage_v} * {self.max_current_a}) by more than 5%"
            )


def required_grip_force(spec: FrictionGripSpec) -> float:
    """Minimum friction-gripper normal force in newtons: F = m(g+alpha)eps/mu."""
    return (
        spec.platform_mass_kg
        * (spec.gravity_m_s2 + spec.acceleration_m_s2)
        * spec.safety_factor
        / spec.friction_coefficient
    )


def solenoid_margin(
    spec: SolenoidGripperSpec, payload_kg: float, required_safety: float
) -> float:
    """Holding-force margin against a payload: rating / (payload * safety).

    >= 1 means the grasp is feasible at the requested safety factor. For an
    array of units, combine them first (``combine_solenoids``) so their
    holding forces sum.
    """
    if not payload_kg > 0:
        raise ValueError(f"payload_kg must be > 0, got {payload_kg}")
    if required_safety < 1:
        raise ValueError(f"required_safety must be >= 1, got {required_safety}")
    return spec.holding_force_kgf / (payload_kg * required_safety)


def grasp_power_draw(spec: SolenoidGripperSpec) -> float:
    """Constant electrical power in watts while the gripper is holding."""
    return spec.power_w


def holding_force_n(spec: SolenoidGripperSpec, gravity_m_s2: float = 9.8) -> float:
    """Holding rating converted from kilograms-force to newtons at the given g."""
    if not gravity_m_s2 > 0:
        raise ValueError(f"gravity_m_s2 must be > 0, got {gravity_m_s2}")
    return spec.holding_force_kgf * gravity_m_s2


def combine_solenoids(specs: list[SolenoidGripperSpec], name: str | None = None) -> SolenoidGripperSpec:
    """Model an array of electromagnets driven together as one spec.

    Holding forces, currents, power draws, and weights add; no magnetic
    field interaction is modeled. All units must share a supply voltage.
    """
    if not specs:
        raise ValueError("combine_solenoids requires at least one spec")
    voltage = specs[0].voltage_v
    if any(s.voltage_v != voltage for s in specs):
        raise ConfigurationError(
            "combine_solenoids requires a common supply voltage, got "
            f"{sorted({s.voltage_v for s in specs})}"
        )
    return SolenoidGripperSpec(
        name=name if name is not None else "+".join(s.name for s in specs),
        holding_force_kgf=sum(s.holding_force_kgf for s in specs),
        voltage_v=voltage,
        max_current_a=sum(s.max_current_a for s in specs),
        power_w=sum(s.power_w for s in specs),
        weight_kg=sum(s.weight_kg for s in specs),
    )


def retention_gripper(
    name: str = "retention-latch",
    holding_force_kgf: float = 50.0,
    weight_kg: float = 0.4,
    actuation_voltage_v: float = 5.0,
    actuation_current_a: float = 1.0,
) -> SolenoidGripperSpec:
    """Spec for an encompassing gripper that holds with zero electrical power.

    The latch geometry bears the load; the voltage/current ratings describe
    the open/close actuator only, so the continuous draw is 0 W.
    """
    return SolenoidGripperSpec(
        name=name,
        holding_force_kgf=holding_force_kgf,
        voltage_v=actuation_voltage_v,
        max_current_a=actuation_current_a,
        power_w=0.0,
        weight_kg=weight_kg,
    )
