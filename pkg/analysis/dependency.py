#!/usr/bin/env python3
"""
Signed Dependencies
Positive/negative dependency sets of atoms, call-consistency and
order-consistency with minimal level mappings.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional

import networkx as nx

from logic.program import Atom, Program, Rule
from utils.logging_helper import get_backend_logger

POSITIVE = 1
NEGATIVE = -1

logger = get_backend_logger(__name__)


@dataclass(frozen=True)
class DependencyProfile:
    """P_a^+ (plus) and P_a^- (minus) for one atom."""
    atom: Atom
    plus: FrozenSet[Atom]
    minus: FrozenSet[Atom]


@dataclass(frozen=True)
class CallConsistency:
    holds: bool
    witness: Optional[Atom] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class OrderConsistency:
    """A level mapping when one exists, otherwise a cycle of the strict-dependency relation."""
    level_mapping: Optional[Dict[Atom, int]] = None
    cycle: Optional[List[Atom]] = None

    @property
    def holds(self) -> bool:
        return self.level_mapping is not None

    def __bool__(self) -> bool:
        return self.holds


def rules_by_head(program: Program) -> Dict[Atom, List[Rule]]:
    index: Dict[Atom, List[Rule]] = defaultdict(list)
    for rule in program.rules:
        index[rule.head].append(rule)
    return index


def dependency_profile(program: Program, a: Atom, index: Optional[Dict[Atom, List[Rule]]] = None) -> DependencyProfile:
    """Least sets closed under signed propagation from (a, +).

    From a reached pair (b, s) every rule with head b propagates s to its
    positive subgoals and -s to its negated ones.
    """
    if index is None:
        index = rules_by_head(program)

    reached = {(a, POSITIVE)}
    worklist = [(a, POSITIVE)]
    while worklist:
        atom, sign = worklist.pop()
        for rule in index.get(atom, ()):
            for target, target_sign in _signed_subgoals(rule, sign):
                if (target, target_sign) not in reached:
                    reached.add((target, target_sign))
                    worklist.append((target, target_sign))

    plus = frozenset(atom for atom, sign in reached if sign == POSITIVE)
    minus = frozenset(atom for atom, sign in reached if sign == NEGATIVE)
    return DependencyProfile(a, plus, minus)


def _signed_subgoals(rule: Rule, sign: int):
    for atom in rule.pos:
        yield atom, sign
    for atom in rule.neg:
        yield atom, -sign


def dependency_profiles(program: Program) -> Dict[Atom, DependencyProfile]:
    """Profiles of every atom occurring in the program."""
    index = rules_by_head(program)
    return {atom: dependency_profile(program, atom, index) for atom in sorted(program.atoms())}


def is_call_consistent(program: Program) -> CallConsistency:
    """No atom depends negatively on itself; the least-id offender is the witness."""
    index = rules_by_head(program)
    for atom in sorted(program.atoms()):
        if atom in dependency_profile(program, atom, index).minus:
            logger.debug(f"Atom {atom.name} depends negatively on itself")
            return CallConsistency(False, atom)
    return CallConsistency(True)


def strict_dependency_graph(program: Program) -> nx.DiGraph:
    """Edge b -> a whenever b is in both P_a^+ and P_a^-."""
    graph = nx.DiGraph()
    graph.add_nodes_from(program.atoms())
    for atom, profile in dependency_profiles(program).items():
        for below in profile.plus & profile.minus:
            graph.add_edge(below, atom)
    return graph


def find_level_mapping(program: Program) -> OrderConsistency:
    """Minimal level mapping (longest-path depth) or a refuting cycle."""
    graph = strict_dependency_graph(program)

    if not nx.is_directed_acyclic_graph(graph):
        cycle = _least_cycle(graph)
        logger.debug("Program is not order-consistent: " + " -> ".join(a.name for a in cycle))
        return OrderConsistency(cycle=cycle)

    levels: Dict[Atom, int] = {}
    for atom in nx.lexicographical_topological_sort(graph, key=lambda a: a.id):
        levels[atom] = max((levels[b] + 1 for b in graph.predecessors(atom)), default=0)
    return OrderConsistency(level_mapping=levels)


def _least_cycle(graph: nx.DiGraph) -> List[Atom]:
    """Shortest cycle through the least atom lying on any cycle."""
    loops = sorted(nx.nodes_with_selfloops(graph))
    if loops:
        return [loops[0]]

    cyclic = [component for component in nx.strongly_connected_components(graph) if len(component) > 1]
    start = min(min(component) for component in cyclic)
    component = next(c for c in cyclic if start in c)
    sub = graph.subgraph(component)

    best: Optional[List[Atom]] = None
    for succ in sorted(sub.successors(start)):
        path = nx.shortest_path(sub, succ, start)
        candidate = [start] + path[:-1]
        if best is None or (len(candidate), [a.id for a in candidate]) < (len(best), [a.id for a in best]):
            best = candidate
    return best


def level_mapping_respects(program: Program, levels: Dict[Atom, int]) -> bool:
    """Check lambda(b) < lambda(a) for every b in P_a^+ and P_a^-."""
    for atom, profile in dependency_profiles(program).items():
        for below in profile.plus & profile.minus:
            if not levels.get(below, 0) < levels.get(atom, 0):
                return False
    return True
