#!/usr/bin/env python3
"""
stablecheck - Command Line Entry Point
Answer sets, well-founded sets, static classification, splitting and
metatheory checks for normal logic programs in the `.lp` format.
"""

import argparse
import logging
import sys
from dataclasses import replace
from typing import Any, Dict, List, Optional

from analysis.classifier import classify
from analysis.dependency import find_level_mapping
from check_config import (
    GENERATOR_MODES, CheckConfigManager, EngineSettings, FuzzProfile, GeneratorConfig,
)
from logic.errors import (
    ConfigError, GenerationExhausted, InternalDecompositionFailure, InvalidSequence, ParseError,
    StableCheckError, TooLarge,
)
from logic.program import Program, Rule, atom_names
from logic.semantics import well_founded_model
from lp_format.parser import SourceProgram, load_program
from lp_format.serializer import (
    JSON, TEXT, format_interpretation, program_to_dict, serialize, to_json,
)
from metatheory.checkers import PROPERTIES, Verdict, run_check
from metatheory.fuzzer import Fuzzer
from metatheory.generator import generate
from splitting.sequence import build_signed_splitting_sequence, scc_splitting_sequence, u_components
from splitting.solutions import (
    answer_sets, assemble, decomposed_consequences, describe_solution, enumerate_solutions,
)
from utils.logging_helper import get_cli_logger, set_global_level
from version import version_banner

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3
EXIT_INTERNAL = 4
EXIT_INTERRUPTED = 130


def _common_options() -> argparse.ArgumentParser:
    """Flags accepted before or after any subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="Emit JSON reports")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS, help="Brute-force cap on the number of atoms")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="Fuzzing processes (0 = one per physical core)")
    common.add_argument("--debug", action="store_true", default=argparse.SUPPRESS, help="Enable debug logging")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="Only log warnings and errors")
    return common


def _generator_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, help="Base seed (unsigned 64-bit)")
    parser.add_argument("--atoms", type=int, help="Number of atoms a0..a{n-1}")
    parser.add_argument("--rules", type=int, help="Number of rule draws")
    parser.add_argument("--max-pos", type=int, help="Maximum positive subgoals per rule")
    parser.add_argument("--max-neg", type=int, help="Maximum negated subgoals per rule")
    parser.add_argument("--mode", choices=GENERATOR_MODES, help="Class of programs to generate")
    parser.add_argument("--max-rejections", type=int, help="Rejection budget per program")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all subcommands."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="stablecheck",
        description="Answer-set semantics, static analysis and metatheory checks for normal logic programs",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=version_banner())
    subcommands = parser.add_subparsers(dest="command", metavar="COMMAND")
    subcommands.required = True

    for name, help_text in (
        ("answer-sets", "List the answer sets"),
        ("wf", "Print the well-founded model"),
        ("consequences", "Print the atoms true in every answer set"),
        ("classify", "Run the static classification"),
        ("split", "Print a splitting sequence and its U-components"),
        ("solutions", "List the solutions along a splitting sequence"),
    ):
        sub = subcommands.add_parser(name, help=help_text, parents=[common])
        sub.add_argument("file", help="Program file (.lp)")

    check = subcommands.add_parser("check", help="Check one property on one program", parents=[common])
    check.add_argument("property", help="Property name (see list-properties)")
    check.add_argument("file", help="Program file (.lp)")

    fuzz = subcommands.add_parser("fuzz", help="Check a property on random programs", parents=[common])
    fuzz.add_argument("property", nargs="?", help="Property name (may come from --profile)")
    fuzz.add_argument("--trials", type=int, help="Number of generated programs")
    fuzz.add_argument("--profile", help="YAML profile to run")
    fuzz.add_argument("--save-profile", help="Write the effective profile to this YAML file")
    _generator_options(fuzz)

    gen = subcommands.add_parser("generate", help="Print one random program", parents=[common])
    _generator_options(gen)

    subcommands.add_parser("list-properties", help="List checkable properties", parents=[common])
    return parser


class CommandRunner:
    """Executes one parsed command and writes its report to stdout."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.as_json = getattr(args, "json", False)
        self.settings = EngineSettings()
        if getattr(args, "cap", None) is not None:
            self.settings.cap = args.cap
        if getattr(args, "workers", None) is not None:
            self.settings.workers = args.workers
        self.config_manager = CheckConfigManager()
        self.logger = get_cli_logger(__name__)
        self.source: Optional[SourceProgram] = None

    def run(self) -> int:
        handler = getattr(self, "cmd_" + self.args.command.replace("-", "_"))
        try:
            return handler()
        except InternalDecompositionFailure as e:
            for line in self.located_rules(e.rules):
                self.logger.error(line)
            raise

    def located_rules(self, rules: List[Rule]) -> List[str]:
        """`file:line:column: rule` for each rule, located in the loaded program."""
        if self.source is None:
            return [str(rule) for rule in rules]
        return [f"{self.source.locate(rule)}: {rule}" for rule in rules]

    def _emit(self, text: str, data: Any) -> None:
        print(to_json(data) if self.as_json else text)

    def _load(self) -> Program:
        self.source = load_program(self.args.file)
        return self.source.program

    def cmd_answer_sets(self) -> int:
        found = answer_sets(self._load(), self.settings.cap)
        text = "\n".join(format_interpretation(x) for x in found) or "no answer sets"
        self._emit(text, [atom_names(x) for x in found])
        return EXIT_OK

    def cmd_wf(self) -> int:
        program = self._load()
        true, false = well_founded_model(program)
        undefined = program.atoms() - true - false
        data = {"true": atom_names(true), "false": atom_names(false), "undefined": atom_names(undefined)}
        text = "\n".join(f"{key}: {format_interpretation(value)}"
                         for key, value in (("true", true), ("false", false), ("undefined", undefined)))
        self._emit(text, data)
        return EXIT_OK

    def cmd_consequences(self) -> int:
        cn = decomposed_consequences(self._load(), self.settings.cap)
        text = format_interpretation(cn.atoms) + ("  (inconsistent: no answer sets)" if cn.inconsistent else "")
        self._emit(text, {"consequences": atom_names(cn.atoms), "inconsistent": cn.inconsistent})
        return EXIT_OK

    def cmd_classify(self) -> int:
        data = classify(self._load()).to_dict()
        text = "\n".join(f"{key}: {value}" for key, value in data.items())
        self._emit(text, data)
        return EXIT_OK

    def _sequence_for(self, program: Program):
        if find_level_mapping(program):
            return build_signed_splitting_sequence(program), True
        self.logger.info("Program is not order-consistent; using the SCC splitting sequence")
        return scc_splitting_sequence(program), False

    def cmd_split(self) -> int:
        program = self._load()
        sequence, signed = self._sequence_for(program)
        components = u_components(program, sequence)

        lines = [f"sequence: {sequence.describe()}", f"signed components: {signed}"]
        for index, component in enumerate(components):
            lines.append(f"component {index}:")
            lines.extend("  " + line for line in serialize(component).splitlines())
        data = {
            "sequence": [atom_names(layer) for layer in sequence],
            "signed": signed,
            "components": [program_to_dict(component) for component in components],
        }
        self._emit("\n".join(lines), data)
        return EXIT_OK

    def cmd_solutions(self) -> int:
        program = self._load()
        sequence, _ = self._sequence_for(program)
        solutions = enumerate_solutions(program, sequence, self.settings.cap)

        lines = [f"sequence: {sequence.describe()}"]
        lines.extend(f"{describe_solution(parts)} -> {format_interpretation(assemble(parts))}" for parts in solutions)
        if not solutions:
            lines.append("no solutions")
        data = {
            "sequence": [atom_names(layer) for layer in sequence],
            "solutions": [[atom_names(part) for part in parts] for parts in solutions],
        }
        self._emit("\n".join(lines), data)
        return EXIT_OK

    def _report_verdict(self, verdict: Verdict) -> int:
        status = "holds" if verdict.holds else "FAILS"
        lines = [f"{verdict.property}: {status} ({verdict.trials} trials, {verdict.not_applicable} not applicable)"]
        if not verdict.holds:
            self.logger.verdict(f"Property '{verdict.property}' fails")
            lines.append("counterexample:")
            lines.extend("  " + line for line in serialize(verdict.counterexample).splitlines())
            for key, value in sorted((verdict.witness or {}).items()):
                lines.append(f"{key}: {value}")
        else:
            self.logger.verdict(f"Property '{verdict.property}' holds")
        self._emit("\n".join(lines), verdict.to_dict())
        return EXIT_OK if verdict.holds else EXIT_PROPERTY_FAILS

    def cmd_check(self) -> int:
        if self.args.property not in PROPERTIES:
            raise ConfigError(f"Unknown property '{self.args.property}'")
        program = self._load()
        return self._report_verdict(run_check(self.args.property, program, self.settings.cap))

    def _generator_config(self, base: GeneratorConfig) -> GeneratorConfig:
        overrides: Dict[str, Any] = {}
        for flag, field_name in (
            ("seed", "seed"), ("atoms", "atom_count"), ("rules", "rule_count"), ("max_pos", "max_pos"),
            ("max_neg", "max_neg"), ("mode", "mode"), ("max_rejections", "max_rejections"),
        ):
            value = getattr(self.args, flag, None)
            if value is not None:
                overrides[field_name] = value
        return replace(base, **overrides)

    def _fuzz_profile(self) -> FuzzProfile:
        if self.args.profile:
            profile = self.config_manager.load_profile_from_file(self.args.profile)
            if getattr(self.args, "cap", None) is None:
                self.settings.cap = profile.settings.cap
            if getattr(self.args, "workers", None) is None:
                self.settings.workers = profile.settings.workers
        else:
            if not self.args.property:
                raise ConfigError("fuzz needs a PROPERTY or --profile")
            profile = self.config_manager.create_profile(self.args.property)

        profile = replace(
            profile,
            property=self.args.property or profile.property,
            trials=self.args.trials if self.args.trials is not None else profile.trials,
            generator=self._generator_config(profile.generator),
            settings=self.settings,
        )
        errors = self.config_manager.validate_profile(profile)
        if errors:
            raise ConfigError("Invalid fuzzing options", errors)
        return profile

    def cmd_fuzz(self) -> int:
        profile = self._fuzz_profile()
        if self.args.save_profile and not self.config_manager.save_profile(profile, self.args.save_profile):
            raise ConfigError(f"Could not save profile to '{self.args.save_profile}'")
        verdict = Fuzzer(profile.settings).run(profile.property, profile.generator, profile.trials)
        return self._report_verdict(verdict)

    def cmd_generate(self) -> int:
        config = self._generator_config(GeneratorConfig())
        errors = self.config_manager.validate_generator(config)
        if errors:
            raise ConfigError("Invalid generator options", errors)
        program = generate(config)
        print(serialize(program, JSON if self.as_json else TEXT), end="" if not self.as_json else "\n")
        return EXIT_OK

    def cmd_list_properties(self) -> int:
        names = sorted(PROPERTIES)
        self._emit("\n".join(names), names)
        return EXIT_OK


def run(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the command and return the exit code."""
    logger = get_cli_logger(__name__)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if getattr(args, "debug", False):
        set_global_level(logging.DEBUG)
        logger.debug("Debug logging enabled")
    elif getattr(args, "quiet", False):
        set_global_level(logging.WARNING)

    try:
        return CommandRunner(args).run()
    except (ParseError, ConfigError, InvalidSequence) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except (OSError, ValueError) as e:
        logger.error(f"Cannot run '{args.command}': {e}")
        return EXIT_USAGE
    except (TooLarge, GenerationExhausted) as e:
        logger.error(str(e))
        return EXIT_TOO_LARGE
    except InternalDecompositionFailure as e:
        logger.error(f"Internal decomposition failure (please report): {e}")
        return EXIT_INTERNAL
    except StableCheckError as e:
        logger.error(str(e))
        return EXIT_USAGE
    except KeyboardInterrupt:
        logger.warning("Interrupted by user")
        return EXIT_INTERRUPTED


def main():
    """Command-line entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
