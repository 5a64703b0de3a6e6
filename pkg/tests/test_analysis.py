from analysis.classifier import classify, is_stratified, stratification
from analysis.dependency import (
    dependency_profile, find_level_mapping, is_call_consistent, level_mapping_respects,
)
from analysis.signing import ParityUnionFind, find_signing, is_signing
from logic.program import Program
from lp_format.parser import parse
from tests.helpers import generated_programs, naive_dependency_profile, names


def test_dependency_profile_of_p2(p2):
    profile = dependency_profile(p2, p2.symbols.lookup("c"))
    assert names(profile.plus) == {"a", "b", "c"}
    assert names(profile.minus) == {"a", "b"}


def test_dix_depends_negatively_on_itself(dix):
    a = dix.symbols.lookup("a")
    assert a in dependency_profile(dix, a).minus


def test_find_signing_of_p1(p1):
    signing = find_signing(p1)
    assert names(signing) == {"a"}
    assert is_signing(p1, signing)
    assert is_signing(p1, p1.symbols.interpretation(["b"]))


def test_find_signing_rejects_p2(p2):
    assert find_signing(p2) is None


def test_find_signing_leaves_unconstrained_atoms_out(fact):
    assert find_signing(fact) == frozenset()
    assert is_signing(fact, frozenset())


def test_find_signing_on_positive_program():
    program = parse("a :- b. b :- c. d.")
    signing = find_signing(program)
    assert signing is not None
    assert is_signing(program, signing)


def test_parity_union_find_detects_odd_cycle():
    program = parse("a. b. c.")
    a, b, c = program.symbols.atoms()
    forest = ParityUnionFind([a, b, c])
    assert forest.join(a, b, 1)
    assert forest.join(b, c, 1)
    assert forest.join(a, c, 0)
    assert not forest.join(c, a, 1)


def test_call_consistency(dix, p2, p1):
    result = is_call_consistent(dix)
    assert not result
    assert result.witness.name == "a"
    assert is_call_consistent(p2)
    assert is_call_consistent(p1)


def test_level_mapping_of_p2(p2):
    order = find_level_mapping(p2)
    assert order.holds
    assert {atom.name: level for atom, level in order.level_mapping.items()} == {"a": 0, "b": 0, "c": 1}
    assert level_mapping_respects(p2, order.level_mapping)


def test_level_mapping_of_p1(p1):
    order = find_level_mapping(p1)
    assert {atom.name: level for atom, level in order.level_mapping.items()} == {"a": 0, "b": 0}


def test_dix_is_not_order_consistent(dix):
    order = find_level_mapping(dix)
    assert not order
    assert [atom.name for atom in order.cycle] == ["a"]


def test_longer_strict_dependency_cycle():
    # a and b each reach the other both positively and negatively
    program = parse("a :- b. a :- not b. b :- a. b :- not a.")
    order = find_level_mapping(program)
    assert not order
    assert order.cycle[0].name == "a"


def test_stratification(p1, dix):
    assert not is_stratified(p1)
    assert not is_stratified(dix)
    assert stratification(p1) is None

    program = parse("a. b :- not a. c :- b, not d.")
    assert is_stratified(program)
    strata = stratification(program)
    assert {atom.name: level for atom, level in strata.items()} == {"a": 0, "b": 1, "c": 1, "d": 0}


def test_empty_program_classification():
    result = classify(Program())
    assert result.positive
    assert result.signing == frozenset()
    assert result.call_consistent
    assert result.order_consistent
    assert result.stratified


def test_classify_p1(p1):
    result = classify(p1)
    assert not result.positive
    assert names(result.signing) == {"a"}
    assert result.call_consistent
    assert result.order_consistent
    assert not result.stratified


def test_classify_p2(p2):
    result = classify(p2)
    assert not result.signed
    assert result.order_consistent
    assert result.to_dict()["level_mapping"] == {"a": 0, "b": 0, "c": 1}


def test_classify_dix(dix):
    result = classify(dix)
    assert not result.call_consistent
    assert not result.order_consistent
    data = result.to_dict()
    assert data["call_witness"] == "a"
    assert data["order_cycle"] == ["a"]
    assert data["level_mapping"] is None


def test_dependency_profiles_match_naive_closure():
    for program in generated_programs(150, seed=21):
        for atom in program.atoms():
            profile = dependency_profile(program, atom)
            assert (profile.plus, profile.minus) == naive_dependency_profile(program, atom)


def test_complement_of_a_signing_is_a_signing():
    for program in generated_programs(150, mode="signed", seed=22):
        signing = find_signing(program)
        assert signing is not None
        assert is_signing(program, signing)
        assert is_signing(program, program.atoms() - signing)


def test_call_and_order_consistency_coincide():
    for mode in ("any", "call_consistent"):
        for program in generated_programs(150, mode=mode, seed=23):
            assert bool(find_level_mapping(program)) == is_call_consistent(program).holds


def test_signed_and_stratified_programs_are_order_consistent():
    for program in generated_programs(100, mode="signed", seed=24):
        assert find_level_mapping(program)
    for program in generated_programs(100, mode="stratified", seed=25):
        assert is_stratified(program)
        assert find_level_mapping(program)


def test_classified_level_mapping_decreases_along_strict_dependencies():
    for program in generated_programs(150, seed=26):
        result = classify(program)
        if result.order_consistent:
            assert level_mapping_respects(program, result.level_mapping)
        else:
            assert result.order_cycle
