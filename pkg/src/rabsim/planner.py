"""Assign fleet units to candidate grasp sites.

Each site has a one-way depot distance and a demand weight; each unit has
its own airframe, battery, and mission template. Assigning a unit to a site
yields demand_weight * service_time_s at that distance, and the planner
maximizes the total over a partial matching (each unit and each site used
at most once, one sortie each).

``greedy_assign`` is the fast heuristic; ``exhaustive_assign`` enumerates
every partial matching on small instances and serves as its ground truth.
Both are deterministic: ties are broken by (site id, unit id) order, and
objectives are summed in a fixed order so repeated runs agree bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .battery import BatterySpec
from .errors import PlanSizeError, PlanValidationError
from .mission import EnduranceReport, MissionProfile, service_endurance
from .power import AirframeParams

__all__ = [
    "Site",
    "FleetUnit",
    "PlanInstance",
    "Assignment",
    "pair_endurance",
    "pair_value",
    "evaluate_plan",
    "greedy_assign",
    "exhaustive_assign",
    "EXHAUSTIVE_MAX_UNITS",
    "EXHAUSTIVE_MAX_SITES",
]

EXHAUSTIVE_MAX_UNITS = 8
EXHAUSTIVE_MAX_SITES = 8


@dataclass(frozen=True)
class Site:
    """A candidate grasp site covering one hotspot."""

    site_id: str
    depot_distance_m: float
    demand_weight: float

    def __post_init__(self):
        if self.depot_distance_m < 0:
            raise PlanValidationError(
                f"site {self.site_id!r}: depot_distance_m must be >= 0, "
                f"got {self.depot_distance_m}"
            )
        if self.demand_weight < 0:
            raise PlanValidationError(
                f"site {self.site_id!r}: demand_weight must be >= 0, "
                f"got {self.demand_weight}"
            )


@dataclass(frozen=True)
class FleetUnit:
    """One deployable unit: airframe + battery + mission template.

    The template's depot distance is overridden by the assigned site's
    distance; everything else (speed policy, serve mode, gripper, comms)
    carries over.
    """

    unit_id: str
    airframe: AirframeParams
    battery: BatterySpec
    mission: MissionProfile


@dataclass(frozen=True)
class PlanInstance:
    """Sites and units of one planning problem."""

    sites: tuple[Site, ...]
    units: tuple[FleetUnit, ...]

    def __post_init__(self):
        site_ids = [s.site_id for s in self.sites]
        if len(set(site_ids)) != len(site_ids):
            dupes = sorted({i for i in site_ids if site_ids.count(i) > 1})
            raise PlanValidationError(f"duplicate site ids: {dupes}")
        unit_ids = [u.unit_id for u in self.units]
        if len(set(unit_ids)) != len(unit_ids):
            dupes = sorted({i for i in unit_ids if unit_ids.count(i) > 1})
            raise PlanValidationError(f"duplicate unit ids: {dupes}")

    def site(self, site_id: str) -> Site:
        for s in self.sites:
            if s.site_id == site_id:
                return s
        raise PlanValidationError(f"unknown site id {site_id!r}")

    def unit(self, unit_id: str) -> FleetUnit:
        for u in self.units:
            if u.unit_id == unit_id:
                return u
        raise PlanValidationError(f"unknown unit id {unit_id!r}")


@dataclass(frozen=True)
class Assignment:
    """A partial matching of units to sites with its objective value."""

    pairs: tuple[tuple[str, str], ...]  # (unit_id, site_id)
    objective: float


def pair_endurance(unit: FleetUnit, site: Site) -> EnduranceReport:
    """Endurance of ``unit`` flown to ``site``'s distance."""
    profile = replace(unit.mission, depot_distance_m=site.depot_distance_m)
    return service_endurance(unit.airframe, unit.battery, profile)


def pair_value(unit: FleetUnit, site: Site) -> float:
    """Objective contribution: demand weight times service seconds.

    A unit whose battery cannot reach the site serves for 0 s and so
    contributes 0.
    """
    return site.demand_weight * pair_endurance(unit, site).service_time_s


def _objective(pairs_with_values: dict[tuple[str, str], float]) -> float:
    # Fixed summation order so every code path reproduces the same float.
    return sum(pairs_with_values[key] for key in sorted(pairs_with_values))


def _validate_matching(instance: PlanInstance, pairs) -> None:
    units_seen: set[str] = set()
    sites_seen: set[str] = set()
    for unit_id, site_id in pairs:
        instance.unit(unit_id)
        instance.site(site_id)
        if unit_id in units_seen:
            raise PlanValidationError(f"unit {unit_id!r} assigned more than once")
        if site_id in sites_seen:
            raise PlanValidationError(f"site {site_id!r} assigned more than once")
        units_seen.add(unit_id)
        sites_seen.add(site_id)


def evaluate_plan(instance: PlanInstance, assignment: Assignment) -> float:
    """Recompute an assignment's objective from mission endurances.

    Raises ``PlanValidationError`` on dangling ids or a unit/site used more
    than once.
    """
    _validate_matching(instance, assignment.pairs)
    values = {
        (unit_id, site_id): pair_value(instance.unit(unit_id), instance.site(site_id))
        for unit_id, site_id in assignment.pairs
    }
    return _objective(values)


def _value_table(instance: PlanInstance) -> dict[tuple[str, str], float]:
    return {
        (u.unit_id, s.site_id): pair_value(u, s)
        for u in instance.units
        for s in instance.sites
    }


def greedy_assign(instance: PlanInstance) -> Assignment:
    """Pick the best-valued free (unit, site) pair until none helps.

    Pairs with zero value are never assigned (they cannot increase the
    objective). Ties on value are broken by (site id, unit id) order.
    """
    values = _value_table(instance)
    free_units = {u.unit_id for u in instance.units}
    free_sites = {s.site_id for s in instance.sites}
    chosen: dict[tuple[str, str], float] = {}
    while free_units and free_sites:
        best = None
        for (unit_id, site_id), value in values.items():
            if value <= 0 or unit_id not in free_units or site_id not in free_sites:
                continue
            key = (-value, site_id, unit_id)
            if best is None or key < best[0]:
                best = (key, unit_id, site_id, value)
        if best is None:
            break
        _, unit_id, site_id, value = best
        chosen[(unit_id, site_id)] = value
        free_units.remove(unit_id)
        free_sites.remove(site_id)
    pairs = tuple(sorted(chosen))
    return Assignment(pairs=pairs, objective=_objective(chosen))


def exhaustive_assign(instance: PlanInstance) -> Assignment:
    """Enumerate all partial matchings; guaranteed optimal on small instances.

    Guarded to at most 8 units and 8 sites. Among equal-objective matchings
    the one with fewer pairs wins, then the lexicographically smallest pair
    list; zero-value pairs are pruned (dropping one never lowers the
    objective and fewer pairs is preferred anyway).
    """
    if len(instance.units) > EXHAUSTIVE_MAX_UNITS or len(instance.sites) > EXHAUSTIVE_MAX_SITES:
        raise PlanSizeError(
            f"exhaustive_assign is limited to {EXHAUSTIVE_MAX_UNITS} units x "
            f"{EXHAUSTIVE_MAX_SITES} sites, got {len(instance.units)} x "
            f"{len(instance.sites)}; use greedy_assign for larger instances"
        )
    values = _value_table(instance)
    unit_ids = [u.unit_id for u in instance.units]
    site_ids = [s.site_id for s in instance.sites]

    best: tuple[float, int, tuple[tuple[str, str], ...]] | None = None

    def consider(chosen: dict[tuple[str, str], float]) -> None:
        nonlocal best
        pairs = tuple(sorted(chosen))
        candidate = (-_objective(chosen), len(pairs), pairs)
        if best is None or candidate < best:
            best = candidate

    def recurse(unit_index: int, used_sites: set[str], chosen: dict[tuple[str, str], float]) -> None:
        if unit_index == len(unit_ids):
            consider(chosen)
            return
        unit_id = unit_ids[unit_index]
        # This unit may sit out.
        recurse(unit_index + 1, used_sites, chosen)
        for site_id in site_ids:
            if site_id in used_sites:
                continue
            value = values[(unit_id, site_id)]
            if value <= 0:
                continue
            chosen[(unit_id, site_id)] = value
            used_sites.add(site_id)
            recurse(unit_index + 1, used_sites, chosen)
            used_sites.remove(site_id)
            del chosen[(unit_id, site_id)]

    recurse(0, set(), {})
    assert best is not None
    neg_objective, _, pairs = best
    return Assignment(pairs=pairs, objective=-neg_objective)
