#!/usr/bin/env python3
"""
Signings
Parity two-colouring of the atoms: positive subgoals share the head's side,
negated subgoals sit on the opposite side.
"""

from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from logic.program import Atom, Program
from utils.logging_helper import get_backend_logger

logger = get_backend_logger(__name__)


class ParityUnionFind:
    """Union-find whose links carry the parity of a node relative to its parent."""

    def __init__(self, nodes: Iterable[Atom]):
        self.parents: Dict[Atom, Atom] = {v: v for v in nodes}
        self.parity: Dict[Atom, int] = {v: 0 for v in self.parents}
        self.heights: Dict[Atom, int] = {v: 1 for v in self.parents}

    def root(self, v: Atom) -> Tuple[Atom, int]:
        """Root of v and the parity of v relative to it (with path compression)."""
        path = []
        while self.parents[v] != v:
            path.append(v)
            v = self.parents[v]
        root = v
        # Compress from the node nearest the root outwards
        acc = 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parity[node] = acc
            self.parents[node] = root
        return root, (self.parity[path[0]] if path else 0)

    def join(self, v1: Atom, v2: Atom, parity: int) -> bool:
        """Record parity(v1) xor parity(v2) == parity; False on contradiction."""
        r1, p1 = self.root(v1)
        r2, p2 = self.root(v2)
        if r1 == r2:
            return (p1 ^ p2) == parity
        link = p1 ^ p2 ^ parity
        if self.heights[r1] <= self.heights[r2]:
            self.parents[r1] = r2
            self.parity[r1] = link
            self.heights[r2] = max(self.heights[r2], self.heights[r1] + 1)
        else:
            self.parents[r2] = r1
            self.parity[r2] = link
            self.heights[r1] = max(self.heights[r1], self.heights[r2] + 1)
        return True


def find_signing(program: Program) -> Optional[FrozenSet[Atom]]:
    """A signing S, or None when an odd cycle of parity constraints exists.

    Canonical choice: in every component linking at least two atoms, the side
    holding the component's lowest atom goes into S; unconstrained atoms stay out.
    """
    atoms = sorted(program.atoms())
    forest = ParityUnionFind(atoms)
    linked = set()

    for rule in program.sorted_rules():
        for atom in rule.pos:
            if not forest.join(rule.head, atom, 0):
                logger.debug(f"Signing conflict on positive subgoal {atom.name} of rule '{rule}'")
                return None
            if atom != rule.head:
                linked.update((atom, rule.head))
        for atom in rule.neg:
            if not forest.join(rule.head, atom, 1):
                logger.debug(f"Signing conflict on negated subgoal {atom.name} of rule '{rule}'")
                return None
            linked.update((atom, rule.head))

    anchor: Dict[Atom, int] = {}
    for atom in atoms:
        root, parity = forest.root(atom)
        if root not in anchor:
            # atoms are visited in id order, so the first one seen is the lowest
            anchor[root] = parity

    return frozenset(
        atom for atom in atoms
        if atom in linked and forest.root(atom)[1] == anchor[forest.root(atom)[0]]
    )


def is_signing(program: Program, s: Iterable[Atom]) -> bool:
    """Check both signing conditions for every rule."""
    s = frozenset(s)
    for rule in program.rules:
        if rule.head in s:
            if not rule.pos <= s or rule.neg & s:
                return False
        else:
            if rule.pos & s or not rule.neg <= s:
                return False
    return True


def is_signed(program: Program) -> bool:
    return find_signing(program) is not None
