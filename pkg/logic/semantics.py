#!/usr/bin/env python3
"""
Answer-Set Semantics
Reducts, least models, the Gamma operator, answer sets, consequences and the
well-founded set of finite normal programs.
"""

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Tuple

from logic.errors import NotPositive, TooLarge
from logic.program import Atom, Interpretation, Program, Rule, sort_interpretations
from utils.logging_helper import get_backend_logger

DEFAULT_BRUTE_FORCE_CAP = 22

logger = get_backend_logger(__name__)


@dataclass(frozen=True)
class ConsequenceSet:
    """Cn(P), with an explicit flag for programs without answer sets."""
    atoms: FrozenSet[Atom]
    inconsistent: bool = False


def reduct(program: Program, x: Interpretation) -> Program:
    """P^X: drop rules blocked by X, strip negation from the rest."""
    return program.derive(
        Rule(rule.head, rule.pos) for rule in program.rules if not (rule.neg & x)
    )


def _closure(rules: Iterable[Rule]) -> Interpretation:
    """Least set closed under the rules, ignoring their negated subgoals.

    Counter-based forward chaining: each rule fires once its last positive
    subgoal is derived.
    """
    heads: List[Atom] = []
    waiting: List[int] = []
    watchers: Dict[Atom, List[int]] = defaultdict(list)
    agenda: List[Atom] = []

    for index, rule in enumerate(rules):
        heads.append(rule.head)
        waiting.append(len(rule.pos))
        if not rule.pos:
            agenda.append(rule.head)
        for atom in rule.pos:
            watchers[atom].append(index)

    model = set()
    while agenda:
        atom = agenda.pop()
        if atom in model:
            continue
        model.add(atom)
        for index in watchers.get(atom, ()):
            waiting[index] -= 1
            if waiting[index] == 0:
                agenda.append(heads[index])
    return frozenset(model)


def least_model(program: Program) -> Interpretation:
    """Answer set of a positive program."""
    for rule in program.rules:
        if rule.neg:
            raise NotPositive(str(rule))
    return _closure(program.rules)


def gamma(program: Program, x: Interpretation) -> Interpretation:
    """Gamma_P(X) = least model of P^X."""
    return _closure(rule for rule in program.rules if not (rule.neg & x))


def is_answer_set(program: Program, x: Interpretation) -> bool:
    return gamma(program, frozenset(x)) == frozenset(x)


def _check_cap(program: Program, cap: int) -> None:
    atom_count = len(program.atoms())
    if atom_count > cap:
        raise TooLarge(atom_count, cap)


def enumerate_answer_sets(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> List[Interpretation]:
    """All answer sets in canonical order.

    Candidates range over subsets of the rule heads, since every answer set
    consists of heads only.
    """
    _check_cap(program, cap)
    heads = sorted(program.heads())
    found = []
    for size in range(len(heads) + 1):
        for chosen in combinations(heads, size):
            candidate = frozenset(chosen)
            if gamma(program, candidate) == candidate:
                found.append(candidate)
    return sort_interpretations(found)


def consequences(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> ConsequenceSet:
    """Cn(P); atoms(P) with the inconsistency flag when there is no answer set."""
    answer_sets = enumerate_answer_sets(program, cap)
    return consequences_from(program, answer_sets)


def consequences_from(program: Program, answer_sets: List[Interpretation]) -> ConsequenceSet:
    """Cn(P) from an already enumerated family of answer sets."""
    if not answer_sets:
        return ConsequenceSet(program.atoms(), inconsistent=True)
    common = frozenset.intersection(*answer_sets)
    return ConsequenceSet(common)


def well_founded(program: Program) -> Interpretation:
    """WF(P): least fixpoint of Gamma_P squared, iterated from the empty set."""
    x: Interpretation = frozenset()
    iterations = 0
    while True:
        iterations += 1
        nxt = gamma(program, gamma(program, x))
        if nxt == x:
            logger.debug(f"Well-founded fixpoint reached after {iterations} iterations")
            return x
        x = nxt


def well_founded_model(program: Program) -> Tuple[Interpretation, Interpretation]:
    """(true, false) atoms of the well-founded model; the other occurring atoms are undefined."""
    true = well_founded(program)
    false = program.atoms() - gamma(program, true)
    return true, false
