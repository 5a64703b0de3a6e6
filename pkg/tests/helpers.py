"""Test helpers: naive oracles, generated program streams and name-based comparisons."""

from itertools import chain, combinations
from typing import FrozenSet, Iterator, List, Set, Tuple

from check_config import GeneratorConfig
from logic.program import Program
from metatheory.generator import generate, trial_config


def names(atoms) -> FrozenSet[str]:
    return frozenset(atom.name for atom in atoms)


def family(sets) -> Set[FrozenSet[str]]:
    return {names(x) for x in sets}


def rule_texts(program: Program) -> List[str]:
    return [str(rule) for rule in program.sorted_rules()]


def _naive_least_model(rules) -> FrozenSet:
    model = set()
    changed = True
    while changed:
        changed = False
        for head, pos in rules:
            if head not in model and pos <= model:
                model.add(head)
                changed = True
    return frozenset(model)


def naive_answer_sets(program: Program) -> Set[FrozenSet]:
    """Scan every subset of atoms(P) and keep X equal to the least model of P^X."""
    atoms = sorted(program.atoms())
    subsets = chain.from_iterable(combinations(atoms, size) for size in range(len(atoms) + 1))
    found = set()
    for subset in subsets:
        x = frozenset(subset)
        reduced = [(rule.head, rule.pos) for rule in program.rules if not (rule.neg & x)]
        if _naive_least_model(reduced) == x:
            found.add(x)
    return found


def generated_programs(count: int, mode: str = "any", seed: int = 0,
                       atom_count: int = 7, rule_count: int = 10) -> Iterator[Program]:
    config = GeneratorConfig(atom_count=atom_count, rule_count=rule_count, mode=mode, seed=seed)
    for index in range(count):
        yield generate(trial_config(config, index))


def naive_dependency_profile(program: Program, atom) -> Tuple[FrozenSet, FrozenSet]:
    """Signed pairs reachable from (atom, +), by re-scanning every rule until nothing changes."""
    pairs = {(atom, 1)}
    changed = True
    while changed:
        changed = False
        for rule in program.rules:
            for head, sign in list(pairs):
                if head != rule.head:
                    continue
                reached = {(b, sign) for b in rule.pos} | {(b, -sign) for b in rule.neg}
                if not reached <= pairs:
                    pairs |= reached
                    changed = True
    plus = frozenset(b for b, sign in pairs if sign == 1)
    minus = frozenset(b for b, sign in pairs if sign == -1)
    return plus, minus
