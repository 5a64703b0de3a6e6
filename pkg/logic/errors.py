#!/usr/bin/env python3
"""
Exception hierarchy shared by every package.
The CLI maps these onto exit codes; library code only raises.
"""

from typing import List, Optional

from logic.program import Rule


class StableCheckError(Exception):
    """Base class for all errors raised by this project."""


class NotPositive(StableCheckError):
    """A positive program was required but some rule has negated subgoals."""

    def __init__(self, rule_text: str):
        self.rule_text = rule_text
        super().__init__(f"Program is not positive: rule '{rule_text}' has negated subgoals")

    def __reduce__(self):
        return (self.__class__, (self.rule_text,))


class TooLarge(StableCheckError):
    """The brute-force enumerator was asked to scan more atoms than the cap allows."""

    def __init__(self, atom_count: int, cap: int):
        self.atom_count = atom_count
        self.cap = cap
        super().__init__(
            f"Program has {atom_count} atoms, above the brute-force cap of {cap}"
        )

    def __reduce__(self):
        return (self.__class__, (self.atom_count, self.cap))


class InvalidSequence(StableCheckError):
    """A sequence of atom sets is not a splitting sequence for the program."""


class NotOrderConsistent(StableCheckError):
    """An order-consistent program was required."""

    def __init__(self, cycle: List[str]):
        self.cycle = cycle
        super().__init__(
            "Program is not order-consistent (dependency cycle: " + " -> ".join(cycle) + ")"
        )

    def __reduce__(self):
        return (self.__class__, (self.cycle,))


class InternalDecompositionFailure(StableCheckError):
    """A U-component of the SCC decomposition of an order-consistent program is unsigned.

    `rules` are the input rules that make up the component, before subgoal removal.
    """

    def __init__(self, message: str, rules: Optional[List[Rule]] = None):
        self.message = message
        self.rules = list(rules or [])
        super().__init__(message)

    def __reduce__(self):
        return (self.__class__, (self.message, self.rules))


class GenerationExhausted(StableCheckError):
    """The rejection budget ran out before a program of the requested mode was found."""

    def __init__(self, mode: str, max_rejections: int):
        self.mode = mode
        self.max_rejections = max_rejections
        super().__init__(
            f"Could not generate a '{mode}' program within {max_rejections} rejections"
        )

    def __reduce__(self):
        return (self.__class__, (self.mode, self.max_rejections))


class ParseError(StableCheckError):
    """Syntax error in program text, with the position of the offending token."""

    def __init__(self, message: str, line: int, column: int, token: Optional[str] = None):
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        found = f" (found {token!r})" if token is not None else ""
        super().__init__(f"{message} at line {line}, column {column}{found}")

    def __reduce__(self):
        return (self.__class__, (self.message, self.line, self.column, self.token))


class ConfigError(StableCheckError):
    """A run profile could not be loaded or failed validation."""

    def __init__(self, message: str, errors: Optional[List[str]] = None):
        self.errors = errors or []
        if self.errors:
            message = message + ":\n• " + "\n• ".join(self.errors)
        super().__init__(message)
