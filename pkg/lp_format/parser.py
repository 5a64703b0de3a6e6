#!/usr/bin/env python3
"""
Program Parser
Reads the `.lp` text format:

    rule    : atom (":-" literal ("," literal)*)? "."
    literal : atom | "not" atom

`%` starts a line comment; whitespace is insignificant; duplicate rules collapse.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Tuple

from lark import Lark, Token
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from logic.errors import ParseError
from logic.program import Program, Rule, SymbolTable
from utils.logging_helper import get_backend_logger

GRAMMAR = r"""
start: rule*

rule: ATOM (":-" literal ("," literal)*)? "."

literal: ATOM          -> positive
       | "not" ATOM    -> negative

ATOM: /[a-z][a-zA-Z0-9_]*/
COMMENT: /%[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

_parser = Lark(GRAMMAR, parser="lalr", lexer="basic", propagate_positions=True)

logger = get_backend_logger(__name__)


@dataclass
class SourceProgram:
    """A parsed program together with where each rule was first written."""
    program: Program
    origin: str = "<inline>"
    spans: Dict[Rule, Tuple[int, int]] = field(default_factory=dict)

    def span_of(self, rule: Rule) -> Optional[Tuple[int, int]]:
        return self.spans.get(rule)

    def locate(self, rule: Rule) -> str:
        """`origin:line:column` of the rule, or just the origin for rules not read from it."""
        span = self.span_of(rule)
        if span is None:
            return self.origin
        line, column = span
        return f"{self.origin}:{line}:{column}"


def _end_position(text: str) -> Tuple[int, int]:
    lines = text.split("\n")
    return len(lines), len(lines[-1]) + 1


def _to_parse_error(error: UnexpectedInput, text: str) -> ParseError:
    if isinstance(error, UnexpectedCharacters):
        return ParseError("Unexpected character", error.line, error.column, error.char)

    token = getattr(error, "token", None)
    at_end = isinstance(error, UnexpectedEOF) or (isinstance(token, Token) and token.type == "$END")
    if at_end:
        line, column = _end_position(text)
        return ParseError("Unexpected end of input", line, column, None)

    if isinstance(error, UnexpectedToken):
        return ParseError("Unexpected token", error.line, error.column, str(token))
    return ParseError("Syntax error", getattr(error, "line", 0), getattr(error, "column", 0), None)


def parse_source(text: str, origin: str = "<inline>", symbols: Optional[SymbolTable] = None) -> SourceProgram:
    """Parse program text, keeping the source span of every rule."""
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        error = _to_parse_error(e, text)
        logger.debug(f"{origin}: {error}")
        raise error

    symbols = symbols if symbols is not None else SymbolTable()
    spans: Dict[Rule, Tuple[int, int]] = {}
    rules = []

    for node in tree.children:
        head_token, *literals = node.children
        head = symbols.intern(str(head_token))
        pos = frozenset(symbols.intern(str(lit.children[0])) for lit in literals if lit.data == "positive")
        neg = frozenset(symbols.intern(str(lit.children[0])) for lit in literals if lit.data == "negative")
        rule = Rule(head, pos, neg)
        spans.setdefault(rule, (node.meta.line, node.meta.column))
        rules.append(rule)

    return SourceProgram(Program(rules, symbols), origin, spans)


def parse(text: str, symbols: Optional[SymbolTable] = None) -> Program:
    """Parse program text."""
    return parse_source(text, symbols=symbols).program


def load_program(path: str, symbols: Optional[SymbolTable] = None) -> SourceProgram:
    """Read and parse a `.lp` file."""
    text = Path(path).read_text()
    source = parse_source(text, origin=str(path), symbols=symbols)
    logger.debug(f"Loaded {len(source.program)} rules from {path}")
    return source
