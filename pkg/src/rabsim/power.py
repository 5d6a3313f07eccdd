"""Rotary-wing propulsion power model.

Power drawn by a multirotor in steady forward flight splits into three
components:

    blade profile   P_0 * (1 + 3 V^2 / U_tip^2)
    induced         P_i * (sqrt(1 + V^4 / (4 v_0^4)) - V^2 / (2 v_0^2))^(1/2)
    parasite        (1/2) * d_0 * rho * s * A * V^3

with the hover constants

    P_0 = (delta / 8) * rho * s * A * Omega^3 * R^3
    P_i = (1 + kappa) * (m g)^(3/2) / sqrt(2 rho A)

At V = 0 the curve reduces exactly to P_0 + P_i (hover). Everything here is
a pure function of an immutable parameter set, so values can be shared
freely between sweep workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import CalibrationInfeasibleError, ConfigurationError, InfeasibleTargetError

__all__ = [
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
]

# Lower edge of the cruise-speed search window (m/s). Energy per distance
# diverges as V -> 0, so the root search never needs to go below this.
MIN_SEARCH_SPEED_M_S = 0.1


@dataclass(frozen=True)
class AirframeParams:
    """Physical and aerodynamic constants of one rotary-wing platform.

    All SI. ``blade_profile_power_override_w`` short-circuits the blade
    profile expression; without it the drag coefficient, blade angular
    velocity, and rotor radius must all be given.
    """

    mass_kg: float                    # total platform mass m
    gravity_m_s2: float               # g
    air_density_kg_m3: float          # rho
    rotor_disc_area_m2: float         # A
    rotor_solidity: float             # s, dimensionless in (0, 1)
    induced_power_factor: float       # kappa, incremental correction on induced power
    tip_speed_m_s: float              # U_tip
    mean_induced_velocity_m_s: float  # v_0, rotor downwash in hover
    fuselage_drag_ratio: float        # d_0
    profile_drag_coeff: float | None = None          # delta
    blade_angular_velocity_rad_s: float | None = None  # Omega
    rotor_radius_m: float | None = None                # R
    blade_profile_power_override_w: float | None = None  # direct P_0, watts

    def __post_init__(self):
        for field_name in (
            "mass_kg",
            "gravity_m_s2",
            "air_density_kg_m3",
            "rotor_disc_area_m2",
            "tip_speed_m_s",
            "mean_induced_velocity_m_s",
        ):
            value = getattr(self, field_name)
            if not value > 0:
                raise ConfigurationError(f"{field_name} must be > 0, got {value}")
        if self.induced_power_factor < 0:
            raise ConfigurationError(
                f"induced_power_factor must be >= 0, got {self.induced_power_factor}"
            )
        if self.fuselage_drag_ratio < 0:
            raise ConfigurationError(
                f"fuselage_drag_ratio must be >= 0, got {self.fuselage_drag_ratio}"
            )
        if not 0 < self.rotor_solidity < 1:
            raise ConfigurationError(
                f"rotor_solidity must be in (0, 1), got {self.rotor_solidity}"
            )
        if self.blade_profile_power_override_w is None:
            # Blade-profile inputs are required when there is no override.
            # Zero drag coefficient is allowed (a no-profile-drag idealization);
            # angular velocity and radius must be strictly positive.
            for field_name in (
                "profile_drag_coeff",
                "blade_angular_velocity_rad_s",
                "rotor_radius_m",
            ):
                if getattr(self, field_name) is None:
                    raise ConfigurationError(
                        f"{field_name} is required when "
                        "blade_profile_power_override_w is not set"
                    )
            if self.profile_drag_coeff < 0:
                raise ConfigurationError(
                    f"profile_drag_coeff must be >= 0, got {self.profile_drag_coeff}"
                )
            if not self.blade_angular_velocity_rad_s > 0:
                raise ConfigurationError(
                    "blade_angular_velocity_rad_s must be > 0, got "
                    f"{self.blade_angular_velocity_rad_s}"
                )
            if not self.rotor_radius_m > 0:
                raise ConfigurationError(
                    f"rotor_radius_m must be > 0, got {self.rotor_radius_m}"
                )
        elif self.blade_profile_power_override_w < 0:
            raise ConfigurationError(
                "blade_profile_power_override_w must be >= 0, got "
                f"{self.blade_profile_power_override_w}"
            )


@dataclass(frozen=True)
class PowerBreakdown:
    """Propulsion power split into its three components, watts."""

    blade_profile_w: float
    induced_w: float
    parasite_w: float
    total_w: float

    @classmethod
    def of(cls, blade_profile_w: float, induced_w: float, parasite_w: float) -> "PowerBreakdown":
        return cls(
            blade_profile_w=blade_profile_w,
            induced_w=induced_w,
            parasite_w=parasite_w,
            total_w=blade_profile_w + induced_w + parasite_w,
        )


def derived_mean_induced_velocity(
    mass_kg: float, gravity_m_s2: float, air_density_kg_m3: float, rotor_disc_area_m2: float
) -> float:
    """Hover induced velocity from momentum theory: v_0 = sqrt(m g / (2 rho A)).

    Optional alternative to a fixed configured v_0; keeps mass sweeps
    self-consistent when the forward-flight curve is evaluated at several
    masses.
    """
    return math.sqrt(mass_kg * gravity_m_s2 / (2.0 * air_density_kg_m3 * rotor_disc_area_m2))


def with_derived_v0(params: AirframeParams) -> AirframeParams:
    """Copy of ``params`` with v_0 recomputed from its own mass and rotor."""
    return replace(
        params,
        mean_induced_velocity_m_s=derived_mean_induced_velocity(
            params.mass_kg,
            params.gravity_m_s2,
            params.air_density_kg_m3,
            params.rotor_disc_area_m2,
        ),
    )


def blade_profile_power(params: AirframeParams) -> float:
    """Hover blade-profile power P_0 in watts.

    P_0 = (delta / 8) * rho * s * A * Omega^3 * R^3, or the configured
    override. Independent of platform mass.
    """
    if params.blade_profile_power_override_w is not None:
        return params.blade_profile_power_override_w
    return (
        (params.profile_drag_coeff / 8.0)
        * params.air_density_kg_m3
        * params.rotor_solidity
        * params.rotor_disc_area_m2
        * params.blade_angular_velocity_rad_s**3
        * params.rotor_radius_m**3
    )


def induced_power(params: AirframeParams) -> float:
    """Hover induced power P_i = (1 + kappa) (m g)^(3/2) / sqrt(2 rho A), watts.

    Strictly increasing in mass with exponent 3/2.
    """
    thrust = params.mass_kg * params.gravity_m_s2
    return (
        (1.0 + params.induced_power_factor)
        * thrust**1.5
        / math.sqrt(2.0 * params.air_density_kg_m3 * params.rotor_disc_area_m2)
    )


def hover_power(params: AirframeParams) -> PowerBreakdown:
    """Power to hold position with rotors on: P_0 + P_i, zero parasite drag.

    Identical (bit for bit) to ``propulsion_power(params, 0.0)``.
    """
    return PowerBreakdown.of(
        blade_profile_w=blade_profile_power(params),
        induced_w=induced_power(params),
        parasite_w=0.0,
    )


def _induced_speed_factor(speed_m_s: float, v0: float) -> float:
    # (sqrt(1 + x^2) - x)^(1/2) with x = V^2 / (2 v_0^2), evaluated through the
    # cancellation-free identity sqrt(1 + x^2) - x = 1 / (sqrt(1 + x^2) + x).
    x = speed_m_s * speed_m_s / (2.0 * v0 * v0)
    return math.sqrt(1.0 / (math.sqrt(1.0 + x * x) + x))


def propulsion_power(params: AirframeParams, speed_m_s: float) -> PowerBreakdown:
    """Propulsion power at forward speed V >= 0, by component.

    Blade-profile and parasite components grow with V; the induced component
    decays with V. At V = 0 this is exactly the hover breakdown.
    """
    if speed_m_s < 0:
        raise ValueError(f"speed_m_s must be >= 0, got {speed_m_s}")
    v = speed_m_s
    p0 = blade_profile_power(params)
    pi = induced_power(params)
    blade = p0 * (1.0 + 3.0 * v * v / (params.tip_speed_m_s**2))
    induced = pi * _induced_speed_factor(v, params.mean_induced_velocity_m_s)
    parasite = (
        0.5
        * params.fuselage_drag_ratio
        * params.air_density_kg_m3
        * params.rotor_solidity
        * params.rotor_disc_area_m2
        * v**3
    )
    return PowerBreakdown.of(blade_profile_w=blade, induced_w=induced, parasite_w=parasite)


def flight_energy(params: AirframeParams, distance_m: float, speed_m_s: float) -> float:
    """Energy in joules to cover ``distance_m`` at constant cruise speed.

    E = P_T(V) * D / V. Acceleration and deceleration transients are not
    modeled (the grasp/hover force balance assumes zero acceleration).
    """
    if distance_m < 0:
        raise ValueError(f"distance_m must be >= 0, got {distance_m}")
    if speed_m_s <= 0:
        raise ValueError(f"speed_m_s must be > 0, got {speed_m_s}")
    return propulsion_power(params, speed_m_s).total_w * distance_m / speed_m_s


def _minimize_energy(energy, lo: float, hi: float) -> tuple[float, float]:
    # Golden-section refinement of the minimizer of a unimodal-ish function;
    # seeded by a coarse grid so a locally flat bracket cannot fool it.
    n = 512
    step = (hi - lo) / n
    best_v = lo
    best_e = energy(lo)
    for i in range(1, n + 1):
        v = lo + i * step
        e = energy(v)
        if e < best_e:
            best_e, best_v = e, v
    a = max(lo, best_v - step)
    b = min(hi, best_v + step)
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    for _ in range(120):
        if b - a < 1e-12:
            break
        if energy(c) < energy(d):
            b, d = d, c
            c = b - inv_phi * (b - a)
        else:
            a, c = c, d
            d = a + inv_phi * (b - a)
    v = 0.5 * (a + b)
    return v, energy(v)


def infer_cruise_speed(
    params: AirframeParams, distance_m: float, target_energy_j: float
) -> float:
    """Smallest cruise speed whose flight energy over ``distance_m`` hits the target.

    Searches V in (0.1, U_tip) for |E(V) - target| <= 1 J by coarse
    bracketing plus bisection; deterministic for fixed inputs. Raises
    ``InfeasibleTargetError`` (reporting the minimum achievable energy) when
    the target lies below the global minimum of E(V) = P_T(V) * D / V, or
    outside the searchable range entirely.
    """
    if distance_m <= 0:
        raise ValueError(f"distance_m must be > 0, got {distance_m}")
    if target_energy_j <= 0:
        raise ValueError(f"target_energy_j must be > 0, got {target_energy_j}")

    lo = MIN_SEARCH_SPEED_M_S
    hi = params.tip_speed_m_s

    def energy(v: float) -> float:
        return flight_energy(params, distance_m, v)

    def gap(v: float) -> float:
        return energy(v) - target_energy_j

    tol_j = 1.0
    n = 4096
    step = (hi - lo) / n

    bracket = None
    prev_v, prev_g = lo, gap(lo)
    for i in range(1, n + 1):
        v = lo + i * step
        g = gap(v)
        if prev_g == 0.0:
            return prev_v
        if (prev_g > 0) != (g > 0):
            bracket = (prev_v, v)
            break
        prev_v, prev_g = v, g

    if bracket is None:
        # No sign change on the grid: either the target is below the curve's
        # minimum, or (near-tangent case) the crossing hides inside one step.
        v_min, e_min = _minimize_energy(energy, lo, hi)
        if target_energy_j < e_min:
            raise InfeasibleTargetError(
                f"target energy {target_energy_j:.3f} J is below the minimum "
                f"achievable {e_min:.3f} J over {distance_m} m",
                target_j=target_energy_j,
                min_achievable_j=e_min,
            )
        if gap(lo) > 0:
            bracket = (lo, v_min)
        elif gap(hi) >= 0:
            bracket = (v_min, hi)
        else:
            raise InfeasibleTargetError(
                f"target energy {target_energy_j:.3f} J is not attained for any "
                f"speed in ({lo}, {hi}) m/s over {distance_m} m",
                target_j=target_energy_j,
                min_achievable_j=e_min,
            )

    a, b = bracket
    g_a = gap(a)
    v = 0.5 * (a + b)
    for _ in range(200):
        v = 0.5 * (a + b)
        g_v = gap(v)
        if abs(g_v) <= tol_j:
            return v
        if (g_a > 0) == (g_v > 0):
            a, g_a = v, g_v
        else:
            b = v
    return v


def calibrate_blade_profile_from_hover(
    params: AirframeParams, observed_hover_w: float
) -> AirframeParams:
    """Fit the blade-profile constant so hover power matches an observation.

    Returns a copy of ``params`` with ``blade_profile_power_override_w`` set
    to ``observed_hover_w - P_i``. Raises ``CalibrationInfeasibleError`` when
    the induced power alone already exceeds the observation.
    """
    pi = induced_power(params)
    if observed_hover_w <= pi:
        raise CalibrationInfeasibleError(
            f"observed hover power {observed_hover_w:.3f} W does not exceed the "
            f"induced power {pi:.3f} W; no non-negative blade-profile power fits",
            observed_w=observed_hover_w,
            induced_w=pi,
        )
    return replace(params, blade_profile_power_override_w=observed_hover_w - pi)
