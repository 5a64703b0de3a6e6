#!/usr/bin/env python3
"""
Property Fuzzer
Runs a checker over seeded random programs and shrinks the first counterexample.
"""

from typing import Optional

from check_config import EngineSettings, GeneratorConfig
from logic.program import Program, Rule
from metatheory.checkers import PROPERTIES, Verdict, run_check
from metatheory.generator import generate, trial_config
from utils.logging_helper import get_backend_logger
from workers.trial_worker import TrialWorker


class Fuzzer:
    """Drives trials for one property and reports an aggregated verdict."""

    def __init__(self, settings: Optional[EngineSettings] = None):
        self.settings = settings or EngineSettings()
        self.logger = get_backend_logger(__name__)

    def _fails(self, property_name: str, program: Program) -> bool:
        return not run_check(property_name, program, self.settings.cap).holds

    def shrink(self, property_name: str, program: Program) -> Program:
        """Greedy shrinking: drop whole rules first, then single subgoals, while the failure persists."""
        current = program
        steps = 0
        progress = True
        while progress:
            progress = False
            for rule in current.sorted_rules():
                candidate = current.without(rule)
                if self._fails(property_name, candidate):
                    current = candidate
                    progress = True
                    steps += 1
                    break
            if progress:
                continue

            for rule in current.sorted_rules():
                candidate = self._drop_one_subgoal(property_name, current, rule)
                if candidate is not None:
                    current = candidate
                    progress = True
                    steps += 1
                    break

        self.logger.debug(f"Shrunk counterexample from {len(program)} to {len(current)} rules in {steps} steps")
        return current

    def _drop_one_subgoal(self, property_name: str, program: Program, rule: Rule) -> Optional[Program]:
        for atom in sorted(rule.pos):
            candidate = program.replace(rule, Rule(rule.head, rule.pos - {atom}, rule.neg))
            if self._fails(property_name, candidate):
                return candidate
        for atom in sorted(rule.neg):
            candidate = program.replace(rule, Rule(rule.head, rule.pos, rule.neg - {atom}))
            if self._fails(property_name, candidate):
                return candidate
        return None

    def run(self, property_name: str, config: GeneratorConfig, trials: int) -> Verdict:
        """Check the property on `trials` generated programs; stop at the first failure."""
        if property_name not in PROPERTIES:
            raise ValueError(f"Unknown property '{property_name}'")

        self.logger.info(
            f"Fuzzing '{property_name}': {trials} trials, mode={config.mode}, "
            f"atoms={config.atom_count}, rules={config.rule_count}, seed={config.seed}"
        )

        worker = TrialWorker(property_name, config, self.settings.cap, self.settings.workers)
        outcomes = worker.outcomes(trials)
        executed = 0
        not_applicable = 0
        failing = None
        try:
            for outcome in outcomes:
                executed += 1
                if outcome.not_applicable:
                    not_applicable += 1
                if not outcome.holds:
                    failing = outcome
                    break
        finally:
            outcomes.close()

        if failing is not None:
            return self._counterexample(property_name, config, failing.index, executed, not_applicable)

        self.logger.info(f"'{property_name}' held on {executed} trials ({not_applicable} not applicable)")
        return Verdict(property_name, True, trials=executed, not_applicable=not_applicable)

    def _counterexample(self, property_name: str, config: GeneratorConfig, index: int,
                        executed: int, not_applicable: int) -> Verdict:
        config_i = trial_config(config, index)
        original = generate(config_i)
        self.logger.info(f"Counterexample found at trial {index} (seed {config_i.seed}), shrinking")

        shrunk = self.shrink(property_name, original)
        single = run_check(property_name, shrunk, self.settings.cap)
        witness = dict(single.witness or {})
        witness.update({"trial": index, "seed": config_i.seed, "original_rules": len(original)})
        return Verdict(
            property_name, False, trials=executed, counterexample=shrunk,
            witness=witness, not_applicable=not_applicable,
        )


def fuzz(property_name: str, config: GeneratorConfig, trials: int,
         settings: Optional[EngineSettings] = None) -> Verdict:
    return Fuzzer(settings).run(property_name, config, trials)


def shrink(property_name: str, program: Program, settings: Optional[EngineSettings] = None) -> Program:
    return Fuzzer(settings).shrink(property_name, program)
