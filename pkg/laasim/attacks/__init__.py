from .adversary import AdversaryOutcome, AdversaryPolicy, Strategy, feedback_adversary
from .io import ScenarioDocument, load_scenario, load_scenario_file, scenario_to_document
from .scenario import (
    DYNAMIC_STEP_TIMES,
    AttackScenario,
    AttackStep,
    LoadProfile,
    dynamic_laa,
    random_laa_scenarios,
    scenario_to_profile,
    static_laa,
)

__all__ = [
    "DYNAMIC_STEP_TIMES",
    "AdversaryOutcome",
    "AdversaryPolicy",
    "AttackScenario",
    "AttackStep",
    "LoadProfile",
    "ScenarioDocument",
    "Strategy",
    "dynamic_laa",
    "feedback_adversary",
    "load_scenario",
    "load_scenario_file",
    "random_laa_scenarios",
    "scenario_to_document",
    "scenario_to_profile",
    "static_laa",
]
