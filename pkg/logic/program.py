#!/usr/bin/env python3
"""
Program Model
Atoms, rules and programs of propositional normal logic programs.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

ATOM_PATTERN = re.compile(r"[a-z][a-zA-Z0-9_]*")
RESERVED_WORDS = frozenset({"not"})


@dataclass(frozen=True, order=True)
class Atom:
    """An interned atom. Identity and ordering come from the dense id."""
    id: int
    name: str = field(compare=False)

    def __str__(self) -> str:
        return self.name


Interpretation = FrozenSet[Atom]


class SymbolTable:
    """Interns atom names to dense ids; equal names map to equal atoms."""

    def __init__(self, names: Iterable[str] = ()):
        self._by_name: Dict[str, Atom] = {}
        self._by_id: List[Atom] = []
        for name in names:
            self.intern(name)

    def intern(self, name: str) -> Atom:
        """Return the atom for a name, creating it on first use."""
        atom = self._by_name.get(name)
        if atom is not None:
            return atom
        if not ATOM_PATTERN.fullmatch(name) or name in RESERVED_WORDS:
            raise ValueError(f"Invalid atom name: {name!r}")
        atom = Atom(len(self._by_id), name)
        self._by_name[name] = atom
        self._by_id.append(atom)
        return atom

    def lookup(self, name: str) -> Optional[Atom]:
        return self._by_name.get(name)

    def atoms(self) -> Tuple[Atom, ...]:
        return tuple(self._by_id)

    def interpretation(self, names: Iterable[str]) -> Interpretation:
        """Build an interpretation from names, interning as needed."""
        return frozenset(self.intern(name) for name in names)

    def __len__(self) -> int:
        return len(self._by_id)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name


@dataclass(frozen=True)
class Rule:
    """head <- pos, not neg."""
    head: Atom
    pos: FrozenSet[Atom] = frozenset()
    neg: FrozenSet[Atom] = frozenset()

    @property
    def atoms(self) -> FrozenSet[Atom]:
        return frozenset((self.head,)) | self.pos | self.neg

    @property
    def is_fact(self) -> bool:
        return not self.pos and not self.neg

    def sort_key(self) -> Tuple:
        """Canonical order: head, then positive, then negated subgoals, by name."""
        return (
            self.head.name,
            tuple(sorted(a.name for a in self.pos)),
            tuple(sorted(a.name for a in self.neg)),
        )

    def __str__(self) -> str:
        literals = sorted(a.name for a in self.pos)
        literals += ["not " + name for name in sorted(a.name for a in self.neg)]
        if not literals:
            return f"{self.head.name}."
        return f"{self.head.name} :- {', '.join(literals)}."


class Program:
    """An immutable set of rules over a shared symbol table."""

    __slots__ = ("_rules", "_symbols", "_atoms", "_hash")

    def __init__(self, rules: Iterable[Rule] = (), symbols: Optional[SymbolTable] = None):
        self._rules: FrozenSet[Rule] = frozenset(rules)
        self._symbols = symbols if symbols is not None else SymbolTable()
        self._atoms: Optional[FrozenSet[Atom]] = None
        self._hash: Optional[int] = None

    @property
    def rules(self) -> FrozenSet[Rule]:
        return self._rules

    @property
    def symbols(self) -> SymbolTable:
        return self._symbols

    def atoms(self) -> FrozenSet[Atom]:
        """atoms(P): every atom occurring in some rule."""
        if self._atoms is None:
            collected = set()
            for rule in self._rules:
                collected |= rule.atoms
            self._atoms = frozenset(collected)
        return self._atoms

    def heads(self) -> FrozenSet[Atom]:
        return frozenset(rule.head for rule in self._rules)

    def is_positive(self) -> bool:
        return all(not rule.neg for rule in self._rules)

    def sorted_rules(self) -> List[Rule]:
        return sorted(self._rules, key=Rule.sort_key)

    def derive(self, rules: Iterable[Rule]) -> "Program":
        """A new program over the same symbol table."""
        return Program(rules, self._symbols)

    def with_fact(self, atom: Atom) -> "Program":
        """P ∪ {a <-}; idempotent when the fact is already present."""
        return self.derive(self._rules | {Rule(atom)})

    def without(self, rule: Rule) -> "Program":
        return self.derive(self._rules - {rule})

    def replace(self, old: Rule, new: Rule) -> "Program":
        return self.derive((self._rules - {old}) | {new})

    def __iter__(self):
        return iter(self.sorted_rules())

    def __len__(self) -> int:
        return len(self._rules)

    def __contains__(self, rule: Rule) -> bool:
        return rule in self._rules

    def __eq__(self, other) -> bool:
        if not isinstance(other, Program):
            return NotImplemented
        return self._rules == other._rules

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rules)
        return self._hash

    def __str__(self) -> str:
        return "\n".join(str(rule) for rule in self.sorted_rules())

    def __repr__(self) -> str:
        return f"Program(rules={len(self._rules)}, atoms={len(self.atoms())})"


def atoms_of(program: Program) -> FrozenSet[Atom]:
    return program.atoms()


def heads_of(program: Program) -> FrozenSet[Atom]:
    return program.heads()


def is_positive(program: Program) -> bool:
    return program.is_positive()


def with_fact(program: Program, atom: Atom) -> Program:
    return program.with_fact(atom)


def make_rule(symbols: SymbolTable, head: str, pos: Iterable[str] = (), neg: Iterable[str] = ()) -> Rule:
    """Build a rule from atom names."""
    return Rule(
        symbols.intern(head),
        frozenset(symbols.intern(name) for name in pos),
        frozenset(symbols.intern(name) for name in neg),
    )


def atom_names(atoms: Iterable[Atom]) -> List[str]:
    """Sorted names, the display form of an interpretation."""
    return sorted(atom.name for atom in atoms)


def interpretation_key(x: Iterable[Atom]) -> Tuple[int, ...]:
    """Canonical ordering key: atom ids ascending, compared lexicographically."""
    return tuple(sorted(atom.id for atom in x))


def sort_interpretations(family: Iterable[Interpretation]) -> List[Interpretation]:
    return sorted(family, key=interpretation_key)
