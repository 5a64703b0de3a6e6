#!/usr/bin/env python3
"""
Metatheory Checkers
Single-program checks of the cut fact, cautious monotonicity, cumulativity,
Fages' theorem, the signing lemma, Cn = WF for signed programs, stability under
adding well-founded atoms, and the splitting sequence theorem.
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from analysis.classifier import is_stratified, stratification
from analysis.dependency import find_level_mapping
from analysis.signing import find_signing
from logic.program import Program, atom_names, sort_interpretations
from logic.semantics import (
    DEFAULT_BRUTE_FORCE_CAP, consequences, consequences_from, enumerate_answer_sets, is_answer_set, well_founded,
)
from lp_format.serializer import program_to_dict
from splitting.sequence import (
    SplittingSequence, build_signed_splitting_sequence, layer_program, prepend_empty, scc_splitting_sequence,
    u_components,
)
from splitting.solutions import assemble, enumerate_solutions


@dataclass(frozen=True)
class Verdict:
    """Outcome of a property check over one or more programs."""
    property: str
    holds: bool
    trials: int = 1
    counterexample: Optional[Program] = None
    witness: Optional[Dict[str, Any]] = None
    not_applicable: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "property": self.property,
            "holds": self.holds,
            "trials": self.trials,
            "not_applicable": self.not_applicable,
            "counterexample": program_to_dict(self.counterexample) if self.counterexample is not None else None,
            "witness": self.witness,
        }


def _holds(name: str) -> Verdict:
    return Verdict(name, True)


def _not_applicable(name: str) -> Verdict:
    return Verdict(name, True, not_applicable=1)


def _fails(name: str, program: Program, witness: Dict[str, Any]) -> Verdict:
    return Verdict(name, False, counterexample=program, witness=witness)


def _names_of_family(family) -> List[List[str]]:
    return [atom_names(x) for x in family]


def check_cut(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """Every answer set X survives adding a fact a for any a in X."""
    name = "cut"
    for x in enumerate_answer_sets(program, cap):
        for atom in sorted(x):
            if not is_answer_set(program.with_fact(atom), x):
                return _fails(name, program, {"added": atom.name, "answer_set": atom_names(x)})
    return _holds(name)


def check_cautious_monotonicity(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """Answer-set form: for a in Cn(P), every answer set of P + {a.} is one of P."""
    name = "cautious-monotonicity"
    answer_sets = enumerate_answer_sets(program, cap)
    cn = consequences_from(program, answer_sets)
    if cn.inconsistent:
        return _not_applicable(name)

    for atom in sorted(cn.atoms):
        augmented = enumerate_answer_sets(program.with_fact(atom), cap)
        for y in augmented:
            if not is_answer_set(program, y):
                lost = cn.atoms - consequences_from(program, augmented).atoms
                return _fails(name, program, {
                    "added": atom.name,
                    "answer_set": atom_names(y),
                    "lost": atom_names(lost),
                })
    return _holds(name)


def check_cumulativity(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """For a in Cn(P), P and P + {a.} have the same answer sets."""
    return _same_answer_sets_for(program, "cumulativity", cap)


def _same_answer_sets_for(program: Program, name: str, cap: int) -> Verdict:
    answer_sets = enumerate_answer_sets(program, cap)
    cn = consequences_from(program, answer_sets)
    if cn.inconsistent:
        return _not_applicable(name)
    return _compare_after_adding(program, name, sorted(cn.atoms), answer_sets, cap)


def _compare_after_adding(program: Program, name: str, atoms, answer_sets, cap: int) -> Verdict:
    for atom in atoms:
        augmented = enumerate_answer_sets(program.with_fact(atom), cap)
        if augmented != answer_sets:
            return _fails(name, program, {
                "added": atom.name,
                "answer_sets": _names_of_family(answer_sets),
                "augmented_answer_sets": _names_of_family(augmented),
            })
    return _holds(name)


def check_cn_cautious_monotonicity(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """Consequence form: Cn(P) is within Cn(P + {a.}) for a in Cn(P)."""
    name = "cn-cautious-monotonicity"
    cn = consequences(program, cap)
    for atom in sorted(cn.atoms):
        augmented = consequences(program.with_fact(atom), cap)
        if not cn.atoms <= augmented.atoms:
            return _fails(name, program, {
                "added": atom.name,
                "lost": atom_names(cn.atoms - augmented.atoms),
            })
    return _holds(name)


def check_cn_cumulativity(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """Consequence form: Cn(P) = Cn(P + {a.}) for a in Cn(P)."""
    name = "cn-cumulativity"
    cn = consequences(program, cap)
    for atom in sorted(cn.atoms):
        augmented = consequences(program.with_fact(atom), cap)
        if cn.atoms != augmented.atoms:
            return _fails(name, program, {
                "added": atom.name,
                "consequences": atom_names(cn.atoms),
                "augmented_consequences": atom_names(augmented.atoms),
            })
    return _holds(name)


def check_fages(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """Order-consistent programs have an answer set."""
    name = "fages"
    order = find_level_mapping(program)
    if not order:
        return _not_applicable(name)
    if not enumerate_answer_sets(program, cap):
        return _fails(name, program, {
            "level_mapping": {atom.name: level for atom, level in sorted(order.level_mapping.items())},
        })
    return _holds(name)


def check_signing_lemma(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """Signed programs keep their answer sets when a consequence is added."""
    name = "signing-lemma"
    if find_signing(program) is None:
        return _not_applicable(name)
    return _same_answer_sets_for(program, name, cap)


def check_dung(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """Signed programs have Cn(P) = WF(P); inconsistent inputs are compared as they are."""
    name = "dung"
    if find_signing(program) is None:
        return _not_applicable(name)
    cn = consequences(program, cap)
    wf = well_founded(program)
    if cn.atoms != wf:
        return _fails(name, program, {
            "consequences": atom_names(cn.atoms),
            "well_founded": atom_names(wf),
            "inconsistent": cn.inconsistent,
        })
    return _holds(name)


def check_schlipf(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """Adding any well-founded atom as a fact keeps the answer sets."""
    name = "schlipf"
    answer_sets = enumerate_answer_sets(program, cap)
    return _compare_after_adding(program, name, sorted(well_founded(program)), answer_sets, cap)


def default_sequence(program: Program) -> SplittingSequence:
    """Signed sequence for order-consistent programs, SCC layers otherwise."""
    if find_level_mapping(program):
        return build_signed_splitting_sequence(program)
    return scc_splitting_sequence(program)


def check_splitting_theorem(program: Program, sequence: Optional[SplittingSequence] = None,
                            cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """Assembled solutions equal the answer sets; layer programs sit inside their U-components."""
    name = "splitting-theorem"
    if sequence is None:
        sequence = default_sequence(program)

    components = u_components(program, sequence)
    solutions = enumerate_solutions(program, sequence, cap)

    for parts in solutions:
        prefix = parts[0]
        for alpha in range(len(sequence) - 1):
            layer = layer_program(sequence, program, alpha, prefix)
            if not layer.rules <= components[alpha + 1].rules:
                return _fails(name, program, {
                    "sequence": [atom_names(u) for u in sequence],
                    "layer": alpha + 1,
                    "layer_program": program_to_dict(layer),
                })
            prefix = prefix | parts[alpha + 1]

    assembled = sort_interpretations({assemble(parts) for parts in solutions})
    direct = enumerate_answer_sets(program, cap)
    if assembled != direct:
        return _fails(name, program, {
            "sequence": [atom_names(u) for u in sequence],
            "assembled": _names_of_family(assembled),
            "answer_sets": _names_of_family(direct),
        })
    return _holds(name)


def check_default_splitting_theorem(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    return check_splitting_theorem(program, None, cap)


def check_layer_consequence(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """A consequence of an order-consistent program is a consequence of its own layer program."""
    name = "layer-consequence"
    if not find_level_mapping(program):
        return _not_applicable(name)
    answer_sets = enumerate_answer_sets(program, cap)
    cn = consequences_from(program, answer_sets)
    if cn.inconsistent:
        return _not_applicable(name)

    sequence = prepend_empty(build_signed_splitting_sequence(program))
    layer_of = {}
    for alpha in range(len(sequence) - 1):
        for atom in sequence.new_atoms(alpha + 1):
            layer_of[atom] = alpha

    for parts in enumerate_solutions(program, sequence, cap):
        for atom in sorted(cn.atoms):
            alpha = layer_of[atom]
            prefix = assemble(parts[:alpha + 1])
            layer = layer_program(sequence, program, alpha, prefix)
            layer_cn = consequences(layer, cap)
            if atom not in layer_cn.atoms:
                return _fails(name, program, {
                    "atom": atom.name,
                    "layer": alpha + 1,
                    "layer_program": program_to_dict(layer),
                })
    return _holds(name)


def check_stratified_positive_components(program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """Positive SCC components agree with an explicit stratification."""
    name = "stratified-components"
    by_components = is_stratified(program)
    by_strata = stratification(program) is not None
    if by_components != by_strata:
        return _fails(name, program, {"by_components": by_components, "by_strata": by_strata})
    return _holds(name)


PROPERTIES: Dict[str, Callable[[Program, int], Verdict]] = {
    "cut": check_cut,
    "cautious-monotonicity": check_cautious_monotonicity,
    "cumulativity": check_cumulativity,
    "cn-cautious-monotonicity": check_cn_cautious_monotonicity,
    "cn-cumulativity": check_cn_cumulativity,
    "fages": check_fages,
    "signing-lemma": check_signing_lemma,
    "dung": check_dung,
    "schlipf": check_schlipf,
    "splitting-theorem": check_default_splitting_theorem,
    "layer-consequence": check_layer_consequence,
    "stratified-components": check_stratified_positive_components,
}


def run_check(property_name: str, program: Program, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> Verdict:
    """Run one named checker on one program."""
    try:
        checker = PROPERTIES[property_name]
    except KeyError:
        raise ValueError(f"Unknown property '{property_name}'")
    return checker(program, cap)
