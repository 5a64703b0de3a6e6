#!/usr/bin/env python3
"""
Program Classifier
Runs every static check and collects the verdicts with their witnesses.
"""

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Optional

from analysis.dependency import find_level_mapping, is_call_consistent, level_mapping_respects
from analysis.signing import find_signing
from logic.program import Atom, Program, atom_names
from splitting.sequence import scc_splitting_sequence, u_components
from utils.logging_helper import get_backend_logger

logger = get_backend_logger(__name__)


@dataclass(frozen=True)
class Classification:
    """Static verdicts for one program."""
    positive: bool
    signing: Optional[FrozenSet[Atom]]
    call_consistent: bool
    call_witness: Optional[Atom]
    level_mapping: Optional[Dict[Atom, int]]
    order_cycle: Optional[List[Atom]]
    stratified: bool

    @property
    def signed(self) -> bool:
        return self.signing is not None

    @property
    def order_consistent(self) -> bool:
        return self.level_mapping is not None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "positive": self.positive,
            "signed": self.signed,
            "signing": atom_names(self.signing) if self.signed else None,
            "call_consistent": self.call_consistent,
            "call_witness": self.call_witness.name if self.call_witness else None,
            "order_consistent": self.order_consistent,
            "level_mapping": (
                {atom.name: level for atom, level in sorted(self.level_mapping.items())}
                if self.order_consistent else None
            ),
            "order_cycle": [atom.name for atom in self.order_cycle] if self.order_cycle else None,
            "stratified": self.stratified,
        }


def is_stratified(program: Program) -> bool:
    """All components of the SCC-layer splitting sequence are positive."""
    sequence = scc_splitting_sequence(program)
    return all(component.is_positive() for component in u_components(program, sequence))


def stratification(program: Program) -> Optional[Dict[Atom, int]]:
    """Least strata with stratum(head) >= stratum(pos) and > stratum(neg), if any.

    Relaxation bounded by the number of atoms; independent of the SCC route.
    """
    atoms = sorted(program.atoms())
    strata = {atom: 0 for atom in atoms}
    bound = len(atoms)
    changed = True
    while changed:
        changed = False
        for rule in program.sorted_rules():
            need = max(
                max((strata[a] for a in rule.pos), default=0),
                max((strata[a] + 1 for a in rule.neg), default=0),
            )
            if need > strata[rule.head]:
                if need > bound:
                    return None
                strata[rule.head] = need
                changed = True
    return strata


def classify(program: Program) -> Classification:
    """Run every static check."""
    call = is_call_consistent(program)
    order = find_level_mapping(program)
    result = Classification(
        positive=program.is_positive(),
        signing=find_signing(program),
        call_consistent=call.holds,
        call_witness=call.witness,
        level_mapping=order.level_mapping,
        order_cycle=order.cycle,
        stratified=is_stratified(program),
    )

    if result.signed and not result.order_consistent:
        logger.warning("Signed program reported as not order-consistent")
    if result.call_consistent != result.order_consistent:
        logger.warning("Call-consistency and order-consistency disagree on a finite program")
    if result.order_consistent and not level_mapping_respects(program, result.level_mapping):
        logger.warning("Level mapping does not decrease along a strict dependency")
    return result
