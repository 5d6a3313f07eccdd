"""Greedy and exhaustive site-assignment planners."""

import random
from dataclasses import replace

import pytest

from rabsim import (
    Assignment,
    BatterySpec,
    FleetUnit,
    MissionProfile,
    PlanInstance,
    PlanSizeError,
    PlanValidationError,
    Site,
    evaluate_plan,
    exhaustive_assign,
    greedy_assign,
    pair_value,
)


@pytest.fixture
def grasp_template(type_iii_gripper) -> MissionProfile:
    return MissionProfile(
        depot_distance_m=0.0,
        serve_mode="grasp",
        cruise_speed_m_s=10.0,
        comm_power_w=15.0,
        gripper=type_iii_gripper,
        payload_delta_kg=0.4,
    )


@pytest.fixture
def strong_unit(canonical_airframe, reference_battery, grasp_template) -> FleetUnit:
    return FleetUnit("strong", canonical_airframe, reference_battery, grasp_template)


def weak_battery() -> BatterySpec:
    # ~49.95 kJ: enough for a short hop, not for a 3 km leg.
    return BatterySpec(name="weak", capacity_mah=1250, voltage_v=11.1, weight_kg=0.15)


class TestEvaluatePlan:
    def test_empty_assignment_is_zero(self, strong_unit):
        instance = PlanInstance(sites=(Site("s1", 800.0, 1.0),), units=(strong_unit,))
        assert evaluate_plan(instance, Assignment(pairs=(), objective=0.0)) == 0.0

    def test_single_pair_matches_reference_minutes(self, canonical_airframe, reference_battery, type_iii_gripper):
        # At the stated per-column energies, serving at 30 W leaves 171.2
        # minutes; the model-driven pair lands within half a percent.
        template = MissionProfile(
            depot_distance_m=0.0,
            serve_mode="grasp",
            infer_target_energy_j=23910.0,
            comm_power_w=15.0,
            gripper=type_iii_gripper,
            payload_delta_kg=0.4,
        )
        unit = FleetUnit("u1", canonical_airframe, reference_battery, template)
        instance = PlanInstance(sites=(Site("s1", 800.0, 1.0),), units=(unit,))
        assignment = Assignment(pairs=(("u1", "s1"),), objective=0.0)
        assert evaluate_plan(instance, assignment) == pytest.approx(10_273.7, rel=5e-3)

    def test_additivity_over_identical_pairs(self, canonical_airframe, reference_battery, grasp_template):
        u1 = FleetUnit("u1", canonical_airframe, reference_battery, grasp_template)
        u2 = FleetUnit("u2", canonical_airframe, reference_battery, grasp_template)
        sites = (Site("s1", 800.0, 1.0), Site("s2", 800.0, 1.0))
        instance = PlanInstance(sites=sites, units=(u1, u2))
        single = evaluate_plan(instance, Assignment(pairs=(("u1", "s1"),), objective=0.0))
        both = evaluate_plan(
            instance, Assignment(pairs=(("u1", "s1"), ("u2", "s2")), objective=0.0)
        )
        assert both == pytest.approx(2.0 * single, rel=1e-12)

    def test_dangling_ids_rejected(self, strong_unit):
        instance = PlanInstance(sites=(Site("s1", 800.0, 1.0),), units=(strong_unit,))
        with pytest.raises(PlanValidationError, match="unknown"):
            evaluate_plan(instance, Assignment(pairs=(("ghost", "s1"),), objective=0.0))
        with pytest.raises(PlanValidationError, match="unknown"):
            evaluate_plan(instance, Assignment(pairs=(("strong", "ghost"),), objective=0.0))

    def test_duplicate_usage_rejected(self, canonical_airframe, reference_battery, grasp_template):
        u1 = FleetUnit("u1", canonical_airframe, reference_battery, grasp_template)
        u2 = FleetUnit("u2", canonical_airframe, reference_battery, grasp_template)
        sites = (Site("s1", 800.0, 1.0), Site("s2", 800.0, 1.0))
        instance = PlanInstance(sites=sites, units=(u1, u2))
        with pytest.raises(PlanValidationError, match="more than once"):
            evaluate_plan(
                instance,
                Assignment(pairs=(("u1", "s1"), ("u1", "s2")), objective=0.0),
            )
        with pytest.raises(PlanValidationError, match="more than once"):
            evaluate_plan(
                instance,
                Assignment(pairs=(("u1", "s1"), ("u2", "s1")), objective=0.0),
            )


class TestGreedy:
    def test_single_feasible_pair_taken(self, strong_unit):
        instance = PlanInstance(sites=(Site("s1", 800.0, 1.0),), units=(strong_unit,))
        assignment = greedy_assign(instance)
        assert assignment.pairs == (("strong", "s1"),)
        assert assignment.objective > 0

    def test_higher_demand_site_first(self, canonical_airframe, reference_battery, grasp_template):
        u1 = FleetUnit("u1", canonical_airframe, reference_battery, grasp_template)
        u2 = FleetUnit("u2", canonical_airframe, reference_battery, grasp_template)
        sites = (Site("s-low", 800.0, 1.0), Site("s-high", 800.0, 2.0))
        instance = PlanInstance(sites=sites, units=(u1, u2))
        assignment = greedy_assign(instance)
        # Equal distances: both units reach both sites; the demand-2 site is
        # claimed in the first round, by the lexicographically first unit.
        assert set(assignment.pairs) == {("u1", "s-high"), ("u2", "s-low")}

    def test_empty_instance(self):
        instance = PlanInstance(sites=(), units=())
        assignment = greedy_assign(instance)
        assert assignment.pairs == ()
        assert assignment.objective == 0.0

    def test_unreachable_site_left_unassigned(self, canonical_airframe, grasp_template):
        unit = FleetUnit("u1", canonical_airframe, weak_battery(), grasp_template)
        instance = PlanInstance(sites=(Site("far", 3000.0, 5.0),), units=(unit,))
        assert pair_value(unit, instance.sites[0]) == 0.0
        assignment = greedy_assign(instance)
        assert assignment.pairs == ()

    def test_objective_matches_evaluate_exactly(self, canonical_airframe, reference_battery, grasp_template):
        units = tuple(
            FleetUnit(f"u{i}", canonical_airframe, reference_battery, grasp_template)
            for i in range(3)
        )
        sites = (Site("s1", 400.0, 2.0), Site("s2", 900.0, 1.0), Site("s3", 1500.0, 0.5))
        instance = PlanInstance(sites=sites, units=units)
        assignment = greedy_assign(instance)
        assert evaluate_plan(instance, assignment) == assignment.objective


class TestExhaustive:
    def test_matches_greedy_on_trivial_instance(self, strong_unit):
        instance = PlanInstance(sites=(Site("s1", 800.0, 1.0),), units=(strong_unit,))
        assert exhaustive_assign(instance) == greedy_assign(instance)

    def test_empty_instance(self):
        assignment = exhaustive_assign(PlanInstance(sites=(), units=()))
        assert assignment.pairs == ()
        assert assignment.objective == 0.0

    def test_size_guard(self, canonical_airframe, reference_battery, grasp_template):
        units = tuple(
            FleetUnit(f"u{i}", canonical_airframe, reference_battery, grasp_template)
            for i in range(9)
        )
        instance = PlanInstance(sites=(Site("s1", 800.0, 1.0),), units=units)
        with pytest.raises(PlanSizeError, match="greedy"):
            exhaustive_assign(instance)

    def test_greedy_strictly_suboptimal_instance(
        self, canonical_airframe, reference_battery, grasp_template
    ):
        """2x2 trap: the versatile unit must not take the nearby site.

        The weak-battery unit can only reach the near site. Greedy gives the
        near site to the strong unit (highest single value), stranding the
        weak one; the optimum sends the strong unit far and keeps the near
        site for the weak one.
        """
        strong = FleetUnit("strong", canonical_airframe, reference_battery, grasp_template)
        weak = FleetUnit("weak", canonical_airframe, weak_battery(), grasp_template)
        far = Site("far", 3000.0, 1.1)
        near = Site("near", 800.0, 1.0)
        instance = PlanInstance(sites=(far, near), units=(strong, weak))

        # Preconditions that make the trap a trap:
        assert pair_value(weak, far) == 0.0
        assert pair_value(strong, near) > pair_value(strong, far)
        assert pair_value(strong, far) + pair_value(weak, near) > pair_value(strong, near)

        greedy = greedy_assign(instance)
        optimal = exhaustive_assign(instance)
        assert greedy.pairs == (("strong", "near"),)
        assert set(optimal.pairs) == {("strong", "far"), ("weak", "near")}
        assert optimal.objective > greedy.objective

    def test_demand_scaling_preserves_argmax(self, canonical_airframe, reference_battery, grasp_template):
        u1 = FleetUnit("u1", canonical_airframe, reference_battery, grasp_template)
        u2 = FleetUnit("u2", canonical_airframe, weak_battery(), grasp_template)
        sites = (Site("s1", 2500.0, 1.5), Site("s2", 600.0, 1.0))
        base = PlanInstance(sites=sites, units=(u1, u2))
        scaled_sites = tuple(replace(s, demand_weight=2.0 * s.demand_weight) for s in sites)
        scaled = PlanInstance(sites=scaled_sites, units=(u1, u2))
        base_best = exhaustive_assign(base)
        scaled_best = exhaustive_assign(scaled)
        assert scaled_best.pairs == base_best.pairs
        assert scaled_best.objective == pytest.approx(2.0 * base_best.objective, rel=1e-12)


class TestRandomizedOracleSuite:
    def _random_instance(self, rng: random.Random, canonical_airframe, grasp_template) -> PlanInstance:
        n_units = rng.randint(1, 4)
        n_sites = rng.randint(1, 6)
        units = []
        for i in range(n_units):
            airframe = replace(canonical_airframe, mass_kg=rng.uniform(3.5, 4.5))
            battery = BatterySpec(
                name=f"b{i}",
                capacity_mah=rng.uniform(1000.0, 9000.0),
                voltage_v=rng.choice([11.1, 14.8, 15.2]),
                weight_kg=0.5,
            )
            mission = replace(grasp_template, cruise_speed_m_s=rng.uniform(8.0, 12.0))
            units.append(FleetUnit(f"u{i}", airframe, battery, mission))
        sites = [
            Site(f"s{j}", rng.uniform(200.0, 2500.0), rng.uniform(0.0, 3.0))
            for j in range(n_sites)
        ]
        return PlanInstance(sites=tuple(sites), units=tuple(units))

    def test_exhaustive_dominates_greedy(self, canonical_airframe, grasp_template):
        rng = random.Random(20260819)
        for _ in range(50):
            instance = self._random_instance(rng, canonical_airframe, grasp_template)
            greedy = greedy_assign(instance)
            optimal = exhaustive_assign(instance)
            assert optimal.objective >= greedy.objective
            # Greedy on a weighted matching is at least half the optimum.
            assert greedy.objective >= 0.5 * optimal.objective
            # Determinism: repeated runs reproduce pairs and objective exactly.
            assert greedy_assign(instance) == greedy
            assert exhaustive_assign(instance) == optimal
            # The recomputed objective equals the reported one exactly.
            assert evaluate_plan(instance, optimal) == optimal.objective


class TestInstanceValidation:
    def test_duplicate_site_ids_rejected(self, strong_unit):
        with pytest.raises(PlanValidationError, match="site ids"):
            PlanInstance(
                sites=(Site("s1", 800.0, 1.0), Site("s1", 900.0, 1.0)),
                units=(strong_unit,),
            )

    def test_duplicate_unit_ids_rejected(self, strong_unit):
        with pytest.raises(PlanValidationError, match="unit ids"):
            PlanInstance(sites=(), units=(strong_unit, strong_unit))

    def test_site_field_validation(self):
        with pytest.raises(PlanValidationError, match="depot_distance_m"):
            Site("s1", -1.0, 1.0)
        with pytest.raises(PlanValidationError, match="demand_weight"):
            Site("s1", 100.0, -0.5)
