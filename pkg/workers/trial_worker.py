#!/usr/bin/env python3
"""
Trial Worker
Runs fuzzing trials, serially or on a process pool.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Tuple

import psutil

from check_config import GeneratorConfig
from metatheory.checkers import run_check
from metatheory.generator import generate, trial_config
from utils.logging_helper import get_backend_logger

logger = get_backend_logger(__name__)


@dataclass(frozen=True)
class TrialOutcome:
    """Result of one trial; the program itself is regenerated from the seed when needed."""
    index: int
    seed: int
    holds: bool
    not_applicable: bool


def run_trial(task: Tuple[str, GeneratorConfig, int, int]) -> TrialOutcome:
    """Generate the index-th program and check it."""
    property_name, config, index, cap = task
    config_i = trial_config(config, index)
    verdict = run_check(property_name, generate(config_i), cap)
    return TrialOutcome(index, config_i.seed, verdict.holds, verdict.not_applicable > 0)


def resolve_workers(workers: int) -> int:
    """0 means one worker per physical core."""
    if workers > 0:
        return workers
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1


class TrialWorker:
    """Yields trial outcomes in index order."""

    def __init__(self, property_name: str, config: GeneratorConfig, cap: int, workers: int = 1):
        self.property_name = property_name
        self.config = config
        self.cap = cap
        self.workers = resolve_workers(workers)
        self._executor = None

    def outcomes(self, trials: int) -> Iterator[TrialOutcome]:
        tasks = ((self.property_name, self.config, index, self.cap) for index in range(trials))

        if self.workers == 1:
            for task in tasks:
                yield run_trial(task)
            return

        logger.debug(f"Running {trials} trials on {self.workers} processes")
        self._executor = ProcessPoolExecutor(max_workers=self.workers)
        try:
            chunksize = max(1, trials // (self.workers * 8))
            yield from self._executor.map(run_trial, tasks, chunksize=chunksize)
        finally:
            self.stop()

    def stop(self) -> None:
        """Cancel whatever has not started yet."""
        if self._executor is not None:
            self._executor.shutdown(wait=True, cancel_futures=True)
            self._executor = None
