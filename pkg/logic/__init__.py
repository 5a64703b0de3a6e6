#!/usr/bin/env python3
"""
Normal logic programs and their answer-set and well-founded semantics.
"""

from logic.program import (
    Atom, Interpretation, Program, Rule, SymbolTable,
    atoms_of, heads_of, is_positive, make_rule, with_fact,
)
from logic.semantics import (
    DEFAULT_BRUTE_FORCE_CAP, ConsequenceSet,
    consequences, enumerate_answer_sets, gamma, is_answer_set,
    least_model, reduct, well_founded, well_founded_model,
)

__all__ = [
    'Atom',
    'Interpretation',
    'Program',
    'Rule',
    'SymbolTable',
    'atoms_of',
    'heads_of',
    'is_positive',
    'make_rule',
    'with_fact',
    'DEFAULT_BRUTE_FORCE_CAP',
    'ConsequenceSet',
    'consequences',
    'enumerate_answer_sets',
    'gamma',
    'is_answer_set',
    'least_model',
    'reduct',
    'well_founded',
    'well_founded_model',
]
