#!/usr/bin/env python3
"""
Splitting Sequences
Splitting sets, bottoms, partial evaluation, subgoal removal, U-components and
the SCC-layer splitting sequences of finite programs.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

import networkx as nx

from analysis.dependency import find_level_mapping
from analysis.signing import find_signing
from logic.errors import InternalDecompositionFailure, InvalidSequence, NotOrderConsistent
from logic.program import Atom, Program, Rule, atom_names
from utils.logging_helper import get_backend_logger

logger = get_backend_logger(__name__)


@dataclass(frozen=True)
class SplittingSequence:
    """Finite monotone sequence <U_0, ..., U_{mu-1}> of atom sets."""
    layers: Tuple[FrozenSet[Atom], ...]

    @classmethod
    def of(cls, layers: Iterable[Iterable[Atom]]) -> "SplittingSequence":
        return cls(tuple(frozenset(layer) for layer in layers))

    def __len__(self) -> int:
        return len(self.layers)

    def __getitem__(self, index: int) -> FrozenSet[Atom]:
        return self.layers[index]

    def __iter__(self):
        return iter(self.layers)

    def new_atoms(self, index: int) -> FrozenSet[Atom]:
        """U_index minus U_{index-1} (all of U_0 for index 0)."""
        if index == 0:
            return self.layers[0]
        return self.layers[index] - self.layers[index - 1]

    def describe(self) -> str:
        return "<" + ", ".join("{" + ",".join(atom_names(layer)) + "}" for layer in self.layers) + ">"


def is_splitting_set(u: Iterable[Atom], program: Program) -> bool:
    """head(r) in U implies atoms(r) within U, for every rule."""
    u = frozenset(u)
    return all(rule.atoms <= u for rule in program.rules if rule.head in u)


def bottom(u: Iterable[Atom], program: Program) -> Program:
    """b_U(P): rules whose atoms all lie in U."""
    u = frozenset(u)
    return program.derive(rule for rule in program.rules if rule.atoms <= u)


def top(u: Iterable[Atom], program: Program) -> Program:
    """P minus b_U(P)."""
    u = frozenset(u)
    return program.derive(rule for rule in program.rules if not rule.atoms <= u)


def evaluate(u: Iterable[Atom], program: Program, x: Iterable[Atom]) -> Program:
    """e_U(P, X) over the given (top) rules.

    Keeps r when pos(r) & U is within X and neg(r) misses X, then deletes the
    U-atoms from both subgoal sets.
    """
    u = frozenset(u)
    x = frozenset(x)
    kept = []
    for rule in program.rules:
        if (rule.pos & u) <= x and not (rule.neg & x):
            kept.append(Rule(rule.head, rule.pos - u, rule.neg - u))
    return program.derive(kept)


def layer_program(sequence: SplittingSequence, program: Program, alpha: int, prefix: Iterable[Atom]) -> Program:
    """e_{U_alpha}(b_{U_{alpha+1}}(P), X) for the union X of the first alpha+1 parts."""
    u_alpha = sequence[alpha]
    upper = bottom(sequence[alpha + 1], program)
    return evaluate(u_alpha, top(u_alpha, upper), prefix)


def remove_subgoals(program: Program, x: Iterable[Atom]) -> Program:
    """rm(P, X): strip every subgoal in X from every rule; duplicates collapse."""
    x = frozenset(x)
    return program.derive(Rule(rule.head, rule.pos - x, rule.neg - x) for rule in program.rules)


def validation_errors(program: Program, sequence: SplittingSequence) -> List[str]:
    """Every way the sequence fails to be a splitting sequence for the program."""
    errors = []
    if not sequence.layers:
        errors.append("Splitting sequence must be nonempty")
        return errors

    for index, layer in enumerate(sequence.layers):
        if not is_splitting_set(layer, program):
            errors.append(f"Layer {index} is not a splitting set")
        if index > 0 and not sequence.layers[index - 1] <= layer:
            errors.append(f"Layer {index - 1} is not contained in layer {index}")

    if sequence.layers[-1] != program.atoms():
        errors.append("Last layer must equal the atoms of the program")
    return errors


def validate_sequence(program: Program, sequence: SplittingSequence) -> None:
    errors = validation_errors(program, sequence)
    if errors:
        raise InvalidSequence("; ".join(errors))


def u_components(program: Program, sequence: SplittingSequence) -> List[Program]:
    """b_{U_0}(P) followed by rm(b_{U_{a+1}}(P) minus b_{U_a}(P), U_a)."""
    validate_sequence(program, sequence)

    components = [bottom(sequence[0], program)]
    for alpha in range(len(sequence) - 1):
        lower = bottom(sequence[alpha], program)
        upper = bottom(sequence[alpha + 1], program)
        difference = program.derive(upper.rules - lower.rules)
        components.append(remove_subgoals(difference, sequence[alpha]))
    return components


def dependency_graph(program: Program) -> nx.DiGraph:
    """Edge head(r) -> b for every subgoal b of r."""
    graph = nx.DiGraph()
    graph.add_nodes_from(program.atoms())
    for rule in program.rules:
        for atom in rule.pos | rule.neg:
            graph.add_edge(rule.head, atom)
    return graph


def scc_layers(program: Program) -> List[FrozenSet[Atom]]:
    """Strongly connected components, dependencies first, ties by lowest atom id."""
    condensed = nx.condensation(dependency_graph(program))
    members = condensed.graph["mapping"]
    first_atom = {}
    for atom, node in members.items():
        first_atom[node] = min(first_atom.get(node, atom), atom)

    order = nx.lexicographical_topological_sort(condensed.reverse(copy=False), key=lambda n: first_atom[n].id)
    return [frozenset(condensed.nodes[node]["members"]) for node in order]


def scc_splitting_sequence(program: Program) -> SplittingSequence:
    """Cumulative unions of the SCC layers; <{}> for the empty program."""
    layers = []
    current: FrozenSet[Atom] = frozenset()
    for component in scc_layers(program):
        current = current | component
        layers.append(current)
    if not layers:
        layers.append(frozenset())
    return SplittingSequence(tuple(layers))


def build_signed_splitting_sequence(program: Program) -> SplittingSequence:
    """A splitting sequence whose U-components are all signed.

    Requires an order-consistent program; raises InternalDecompositionFailure
    if some SCC component turns out unsigned.
    """
    order = find_level_mapping(program)
    if not order:
        raise NotOrderConsistent([atom.name for atom in order.cycle])

    sequence = scc_splitting_sequence(program)
    for index, component in enumerate(u_components(program, sequence)):
        if find_signing(component) is None:
            new_atoms = sequence.new_atoms(index)
            raise InternalDecompositionFailure(
                f"U-component {index} of {sequence.describe()} is not signed:\n{component}",
                [rule for rule in program.sorted_rules() if rule.head in new_atoms],
            )
    logger.debug(f"Signed splitting sequence: {sequence.describe()}")
    return sequence


def prepend_empty(sequence: SplittingSequence) -> SplittingSequence:
    """<{}, U_0, ..., U_{mu-1}>, again a splitting sequence for the same program."""
    return SplittingSequence((frozenset(),) + tuple(sequence.layers))
