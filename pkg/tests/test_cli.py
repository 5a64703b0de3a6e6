import json

import pytest

import stablecheck
from logic.errors import InternalDecompositionFailure
from stablecheck import (
    EXIT_INTERNAL, EXIT_OK, EXIT_PROPERTY_FAILS, EXIT_TOO_LARGE, EXIT_USAGE, CommandRunner, build_parser, run,
)
from tests.conftest import DIX, P2


@pytest.fixture
def dix_file(write_program):
    return write_program(DIX, "dix.lp")


@pytest.fixture
def p2_file(write_program):
    return write_program(P2, "p2.lp")


def test_answer_sets_json(p2_file, capsys):
    assert run(["answer-sets", p2_file, "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == [["a", "c"], ["b", "c"]]


def test_global_flags_before_subcommand(p2_file, capsys):
    assert run(["--json", "answer-sets", p2_file]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == [["a", "c"], ["b", "c"]]


def test_answer_sets_text(write_program, capsys):
    path = write_program("a :- not a.\n")
    assert run(["answer-sets", path]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "no answer sets"


def test_check_cautious_monotonicity_fails_on_dix(dix_file, capsys):
    assert run(["check", "cautious-monotonicity", dix_file]) == EXIT_PROPERTY_FAILS
    out = capsys.readouterr().out
    assert "FAILS" in out
    assert "added: c" in out
    assert "answer_set: ['b', 'c']" in out
    assert "lost: ['a']" in out


def test_check_json_verdict(dix_file, capsys):
    assert run(["check", "cut", dix_file, "--json"]) == EXIT_OK
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["holds"] is True
    assert verdict["counterexample"] is None
    assert set(verdict) == {"property", "holds", "trials", "not_applicable", "counterexample", "witness"}


def test_split_p2(p2_file, capsys):
    assert run(["split", p2_file]) == EXIT_OK
    out = capsys.readouterr().out
    assert "sequence: <{a,b}, {a,b,c}>" in out
    assert "  a :- not b.\n  b :- not a.\ncomponent 1:\n  c." in out


def test_split_json(p2_file, capsys):
    assert run(["split", p2_file, "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["sequence"] == [["a", "b"], ["a", "b", "c"]]
    assert data["components"][1] == {"rules": [{"head": "c", "pos": [], "neg": []}]}
    assert data["signed"] is True


def test_split_falls_back_to_scc_layers(dix_file, capsys):
    assert run(["split", dix_file, "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["signed"] is False
    assert data["sequence"] == [["a", "b", "c"]]


def test_solutions(p2_file, capsys):
    assert run(["solutions", p2_file, "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["solutions"] == [[["a"], ["c"]], [["b"], ["c"]]]


def test_wf_and_consequences(write_program, capsys):
    path = write_program("a. b :- not a. c :- not b. d :- not e. e :- not d.")
    assert run(["wf", path, "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"true": ["a", "c"], "false": ["b"], "undefined": ["d", "e"]}

    assert run(["consequences", path, "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"consequences": ["a", "c"], "inconsistent": False}


def test_classify(dix_file, capsys):
    assert run(["classify", dix_file, "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["call_consistent"] is False
    assert data["call_witness"] == "a"


def test_parse_error_exit_code(write_program):
    path = write_program("a :- not b")
    assert run(["answer-sets", path]) == EXIT_USAGE


def test_missing_file_exit_code(tmp_path):
    assert run(["answer-sets", str(tmp_path / "missing.lp")]) == EXIT_USAGE


def test_usage_errors():
    assert run([]) == EXIT_USAGE
    assert run(["no-such-command"]) == EXIT_USAGE


def test_unknown_property(dix_file):
    assert run(["check", "no-such-property", dix_file]) == EXIT_USAGE


def test_cap_exceeded_without_order_consistency(dix_file):
    assert run(["answer-sets", dix_file, "--cap", "2"]) == EXIT_TOO_LARGE
    assert run(["consequences", dix_file, "--cap", "2"]) == EXIT_TOO_LARGE


def test_cap_exceeded_by_order_consistent_program(p2_file, capsys):
    assert run(["answer-sets", p2_file, "--cap", "2", "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == [["a", "c"], ["b", "c"]]


def test_large_order_consistent_program(write_program, capsys):
    path = write_program("".join(f"p{i} :- not q{i}.\nq{i} :- not p{i}.\n" for i in range(12)), "pairs.lp")
    assert run(["answer-sets", path, "--json"]) == EXIT_OK
    found = json.loads(capsys.readouterr().out)
    assert len(found) == 4096
    assert ["p0", "p1", "p10", "p11", "p2", "p3", "p4", "p5", "p6", "p7", "p8", "p9"] in found

    assert run(["consequences", path, "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"consequences": [], "inconsistent": False}


def test_large_program_that_is_not_order_consistent(write_program):
    pairs = "".join(f"p{i} :- not q{i}.\nq{i} :- not p{i}.\n" for i in range(11))
    path = write_program("a :- not a.\n" + pairs, "pairs.lp")
    assert run(["answer-sets", path]) == EXIT_TOO_LARGE


def test_decomposition_failure_points_at_source_rules(p2_file, monkeypatch):
    def unsigned_component(program):
        rules = [rule for rule in program.sorted_rules() if rule.head.name == "c"]
        raise InternalDecompositionFailure("U-component 1 is not signed", rules)

    monkeypatch.setattr(stablecheck, "build_signed_splitting_sequence", unsigned_component)
    runner = CommandRunner(build_parser().parse_args(["split", p2_file]))
    with pytest.raises(InternalDecompositionFailure) as excinfo:
        runner.run()
    assert runner.located_rules(excinfo.value.rules) == [f"{p2_file}:3:1: c :- a.", f"{p2_file}:4:1: c :- b."]
    assert run(["split", p2_file]) == EXIT_INTERNAL


def test_fuzz_unknown_property():
    assert run(["fuzz", "signed-lemma"]) == EXIT_USAGE


def test_generation_exhausted_exit_code():
    args = ["fuzz", "signing-lemma", "--mode", "signed", "--atoms", "2", "--rules", "50",
            "--max-rejections", "1", "--trials", "20"]
    assert run(args) == EXIT_TOO_LARGE


def test_generate_is_deterministic(capsys):
    assert run(["generate", "--seed", "9", "--atoms", "3", "--rules", "4"]) == EXIT_OK
    first = capsys.readouterr().out
    assert run(["generate", "--seed", "9", "--atoms", "3", "--rules", "4"]) == EXIT_OK
    assert capsys.readouterr().out == first


def test_fuzz_with_saved_profile(tmp_path, capsys):
    profile = str(tmp_path / "cut.yaml")
    assert run(["fuzz", "cut", "--trials", "20", "--seed", "4", "--save-profile", profile, "--json"]) == EXIT_OK
    saved_run = json.loads(capsys.readouterr().out)
    assert saved_run["trials"] == 20

    assert run(["fuzz", "--profile", profile, "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == saved_run


def test_fuzz_without_property_or_profile():
    assert run(["fuzz"]) == EXIT_USAGE


def test_list_properties(capsys):
    assert run(["list-properties"]) == EXIT_OK
    names = capsys.readouterr().out.split()
    assert "cautious-monotonicity" in names
    assert names == sorted(names)


def test_version(capsys):
    assert run(["--version"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("stablecheck 0.1.0")
