#!/usr/bin/env python3
"""
Program Serializer
Canonical text and JSON renderings of programs and interpretations.
"""

import json
from typing import Any, Dict, Iterable, Optional

from logic.program import Atom, Program, SymbolTable, atom_names, make_rule

TEXT = "text"
JSON = "json"


def program_to_dict(program: Program) -> Dict[str, Any]:
    """{"rules": [{"head", "pos", "neg"}]} in canonical rule order."""
    return {
        "rules": [
            {
                "head": rule.head.name,
                "pos": atom_names(rule.pos),
                "neg": atom_names(rule.neg),
            }
            for rule in program.sorted_rules()
        ]
    }


def program_from_dict(data: Dict[str, Any], symbols: Optional[SymbolTable] = None) -> Program:
    """Inverse of program_to_dict."""
    symbols = symbols if symbols is not None else SymbolTable()
    rules = [
        make_rule(symbols, entry["head"], entry.get("pos", ()), entry.get("neg", ()))
        for entry in data.get("rules", [])
    ]
    return Program(rules, symbols)


def to_json(value: Any) -> str:
    """Stable JSON: sorted keys, no timestamps."""
    return json.dumps(value, sort_keys=True, indent=2)


def serialize(program: Program, format: str = TEXT) -> str:
    """Render a program; text re-parses to an equal program."""
    if format == JSON:
        return to_json(program_to_dict(program))
    if format != TEXT:
        raise ValueError(f"Unknown format: {format}")
    lines = [str(rule) for rule in program.sorted_rules()]
    return "\n".join(lines) + ("\n" if lines else "")


def format_interpretation(x: Iterable[Atom]) -> str:
    return "{" + ", ".join(atom_names(x)) + "}"
