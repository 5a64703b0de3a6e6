#!/usr/bin/env python3
"""
Random Program Generator
Seeded programs over atoms a0..a{n-1}; constrained modes keep a drawn rule only
when the program extended by it still passes the matching analysis check.
"""

import hashlib
import random
from dataclasses import replace
from typing import Callable, Dict, Sequence

from analysis.classifier import is_stratified
from analysis.dependency import is_call_consistent
from analysis.signing import is_signed
from check_config import GeneratorConfig
from logic.errors import GenerationExhausted
from logic.program import Atom, Program, Rule, SymbolTable
from utils.logging_helper import get_backend_logger

logger = get_backend_logger(__name__)

MODE_CHECKS: Dict[str, Callable[[Program], bool]] = {
    "any": lambda program: True,
    "positive": lambda program: program.is_positive(),
    "signed": is_signed,
    "call_consistent": lambda program: is_call_consistent(program).holds,
    "stratified": is_stratified,
}


def derive_seed(seed: int, index: int) -> int:
    """Per-trial seed, a fixed function of the base seed and the trial index."""
    digest = hashlib.blake2b(f"{seed}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def trial_config(config: GeneratorConfig, index: int) -> GeneratorConfig:
    return replace(config, seed=derive_seed(config.seed, index))


def _draw_rule(rng: random.Random, atoms: Sequence[Atom], max_pos: int, max_neg: int) -> Rule:
    head = atoms[rng.randrange(len(atoms))]
    pos = rng.sample(atoms, rng.randint(0, min(max_pos, len(atoms))))
    neg = rng.sample(atoms, rng.randint(0, min(max_neg, len(atoms)))) if max_neg else []
    return Rule(head, frozenset(pos), frozenset(neg))


def generate(config: GeneratorConfig) -> Program:
    """Deterministic program for (config, config.seed)."""
    try:
        accept = MODE_CHECKS[config.mode]
    except KeyError:
        raise ValueError(f"Unknown generator mode '{config.mode}'")

    rng = random.Random(config.seed)
    symbols = SymbolTable(f"a{i}" for i in range(config.atom_count))
    atoms = symbols.atoms()
    max_neg = 0 if config.mode == "positive" else config.max_neg

    rules = set()
    rejections = 0
    for _ in range(config.rule_count):
        while True:
            rule = _draw_rule(rng, atoms, config.max_pos, max_neg)
            if accept(Program(rules | {rule}, symbols)):
                rules.add(rule)
                break
            rejections += 1
            if rejections > config.max_rejections:
                raise GenerationExhausted(config.mode, config.max_rejections)

    if rejections:
        logger.debug(f"Generated '{config.mode}' program with {rejections} rejected rules")
    return Program(rules, symbols)
