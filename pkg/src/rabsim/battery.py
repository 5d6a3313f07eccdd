"""Battery ratings and usable-energy accounting."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigurationError

__all__ = ["BatterySpec", "usable_energy"]


@dataclass(frozen=True)
class BatterySpec:
    """Nameplate ratings of one flight battery.

    ``usable_fraction`` caps the depth of discharge; 1.0 makes the full
    rated energy available to the mission.
    """

    name: str
    capacity_mah: float
    voltage_v: float
    weight_kg: float
    chemistry: str = "LiPo"
    usable_fraction: float = 1.0

    def __post_init__(self):
        for field_name in ("capacity_mah", "voltage_v", "weight_kg"):
            value = getattr(self, field_name)
            if not value > 0:
                raise ConfigurationError(f"{field_name} must be > 0, got {value}")
        if not 0 < self.usable_fraction <= 1:
            raise ConfigurationError(
                f"usable_fraction must be in (0, 1], got {self.usable_fraction}"
            )


def usable_energy(spec: BatterySpec) -> float:
    """Mission-available energy in joules.

    capacity[mAh]/1000 * voltage[V] gives watt-hours; * 3600 gives joules;
    scaled by the usable depth-of-discharge fraction.
    """
    return spec.capacity_mah / 1000.0 * spec.voltage_v * 3600.0 * spec.usable_fraction
