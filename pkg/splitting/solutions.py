#!/usr/bin/env python3
"""
Solutions
Per-layer answer sets along a splitting sequence, and answer-set enumeration
by decomposition.
"""

from typing import FrozenSet, Iterable, List, Tuple

from analysis.dependency import find_level_mapping
from logic.errors import TooLarge
from logic.program import Atom, Interpretation, Program, atom_names, sort_interpretations
from logic.semantics import (
    DEFAULT_BRUTE_FORCE_CAP, ConsequenceSet, consequences_from, enumerate_answer_sets, is_answer_set,
)
from splitting.sequence import (
    SplittingSequence, bottom, build_signed_splitting_sequence, layer_program, validate_sequence,
)
from utils.logging_helper import get_backend_logger

Solution = Tuple[FrozenSet[Atom], ...]

logger = get_backend_logger(__name__)


def assemble(parts: Iterable[Iterable[Atom]]) -> Interpretation:
    """X = union of all parts."""
    result = set()
    for part in parts:
        result |= set(part)
    return frozenset(result)


def describe_solution(parts: Solution) -> str:
    return "<" + ", ".join("{" + ",".join(atom_names(part)) + "}" for part in parts) + ">"


def is_solution(program: Program, sequence: SplittingSequence, parts: Iterable[Iterable[Atom]]) -> bool:
    """Check the solution conditions layer by layer."""
    parts = tuple(frozenset(part) for part in parts)
    if len(parts) != len(sequence):
        return False

    if not is_answer_set(bottom(sequence[0], program), parts[0]):
        return False

    prefix = parts[0]
    for alpha in range(len(sequence) - 1):
        layer = layer_program(sequence, program, alpha, prefix)
        if not is_answer_set(layer, parts[alpha + 1]):
            return False
        prefix = prefix | parts[alpha + 1]
    return True


def enumerate_solutions(program: Program, sequence: SplittingSequence,
                        cap: int = DEFAULT_BRUTE_FORCE_CAP) -> List[Solution]:
    """Every solution, depth first, ordered by layer then canonical interpretation order."""
    validate_sequence(program, sequence)
    solutions: List[Solution] = []

    def extend(alpha: int, parts: Tuple[FrozenSet[Atom], ...], prefix: FrozenSet[Atom]) -> None:
        if alpha + 1 == len(sequence):
            solutions.append(parts)
            return
        layer = layer_program(sequence, program, alpha, prefix)
        for answer in enumerate_answer_sets(layer, cap):
            extend(alpha + 1, parts + (answer,), prefix | answer)

    for first in enumerate_answer_sets(bottom(sequence[0], program), cap):
        extend(0, (first,), first)

    logger.debug(f"{len(solutions)} solutions with respect to {sequence.describe()}")
    return solutions


def splitting_answer_sets(program: Program, sequence: SplittingSequence,
                          cap: int = DEFAULT_BRUTE_FORCE_CAP) -> List[Interpretation]:
    """Answer sets assembled from all solutions along the given sequence."""
    assembled = {assemble(parts) for parts in enumerate_solutions(program, sequence, cap)}
    return sort_interpretations(assembled)


def decomposed_answer_sets(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> List[Interpretation]:
    """Answer sets via the signed decomposition; brute force when not order-consistent."""
    if not find_level_mapping(program):
        logger.debug("Program is not order-consistent, using the brute-force enumerator")
        return enumerate_answer_sets(program, cap)
    sequence = build_signed_splitting_sequence(program)
    return splitting_answer_sets(program, sequence, cap)


def answer_sets(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> List[Interpretation]:
    """Brute force up to the cap; above it, the signed decomposition if the program is order-consistent.

    TooLarge propagates only when the program is over the cap and not order-consistent.
    """
    try:
        return enumerate_answer_sets(program, cap)
    except TooLarge as e:
        if not find_level_mapping(program):
            raise
        logger.info(f"{e}; enumerating along the signed splitting sequence instead")
        return splitting_answer_sets(program, build_signed_splitting_sequence(program), cap)


def decomposed_consequences(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> ConsequenceSet:
    """Cn(P) from `answer_sets`, so order-consistent programs above the cap still get an answer."""
    return consequences_from(program, answer_sets(program, cap))
