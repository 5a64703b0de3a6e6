import random
from itertools import combinations

import pytest

from logic.errors import NotPositive, TooLarge
from logic.program import Program, SymbolTable, atoms_of, heads_of, is_positive, make_rule
from logic.semantics import (
    consequences, enumerate_answer_sets, gamma, is_answer_set, least_model, reduct, well_founded,
    well_founded_model,
)
from lp_format.parser import parse
from tests.helpers import family, generated_programs, names, rule_texts


def test_atoms_of(p2, self_defeating):
    assert names(atoms_of(p2)) == {"a", "b", "c"}
    assert atoms_of(Program()) == frozenset()
    assert names(atoms_of(self_defeating)) == {"a"}


def test_heads_of_excludes_body_only_atoms(dix):
    program = parse("a :- b, not c.")
    assert names(heads_of(program)) == {"a"}
    assert names(heads_of(dix)) == {"a", "b", "c"}


def test_is_positive(p1):
    assert not is_positive(p1)
    assert is_positive(parse("a. b :- a."))
    assert is_positive(Program())


def test_duplicate_rules_collapse():
    program = parse("a :- b.\na :- b.\nb.")
    assert len(program) == 2


def test_symbol_table_rejects_reserved_and_malformed_names():
    symbols = SymbolTable()
    with pytest.raises(ValueError):
        symbols.intern("not")
    with pytest.raises(ValueError):
        symbols.intern("Abc")
    assert symbols.intern("a") is symbols.intern("a")


def test_reduct_of_dix(dix):
    x = dix.symbols.interpretation(["a", "c"])
    assert rule_texts(reduct(dix, x)) == ["a.", "c :- a."]


def test_least_model():
    assert names(least_model(parse("a. b :- a. c :- d."))) == {"a", "b"}
    assert least_model(Program()) == frozenset()


def test_least_model_rejects_negation(p1):
    with pytest.raises(NotPositive):
        least_model(p1)


def test_gamma_on_p2(p2):
    assert names(gamma(p2, frozenset())) == {"a", "b", "c"}
    assert gamma(p2, p2.atoms()) == frozenset()


def test_is_answer_set(dix, dix_c):
    assert is_answer_set(dix, dix.symbols.interpretation(["a", "c"]))
    assert not is_answer_set(dix, dix.symbols.interpretation(["b", "c"]))
    assert is_answer_set(dix_c, dix_c.symbols.interpretation(["b", "c"]))


def test_enumerate_answer_sets(dix, dix_c, p1, p2, self_defeating):
    assert family(enumerate_answer_sets(dix)) == {frozenset({"a", "c"})}
    assert family(enumerate_answer_sets(dix_c)) == {frozenset({"a", "c"}), frozenset({"b", "c"})}
    assert [sorted(names(x)) for x in enumerate_answer_sets(p2)] == [["a", "c"], ["b", "c"]]
    assert [sorted(names(x)) for x in enumerate_answer_sets(p1)] == [["a"], ["b"]]
    assert enumerate_answer_sets(self_defeating) == []


def test_enumerate_answer_sets_of_empty_program():
    assert enumerate_answer_sets(Program()) == [frozenset()]


def test_enumerate_answer_sets_cap(p2):
    with pytest.raises(TooLarge) as excinfo:
        enumerate_answer_sets(p2, cap=2)
    assert excinfo.value.atom_count == 3
    assert excinfo.value.cap == 2


def test_consequences(dix, dix_c, p2):
    assert names(consequences(dix).atoms) == {"a", "c"}
    assert names(consequences(dix_c).atoms) == {"c"}
    assert names(consequences(p2).atoms) == {"c"}


def test_consequences_of_inconsistent_program(self_defeating):
    cn = consequences(self_defeating)
    assert cn.inconsistent
    assert names(cn.atoms) == {"a"}

    with_fact = self_defeating.with_fact(self_defeating.symbols.lookup("a"))
    assert family(enumerate_answer_sets(with_fact)) == {frozenset({"a"})}
    assert consequences(with_fact).atoms == cn.atoms


def test_well_founded(dix, p2, fact):
    assert well_founded(dix) == frozenset()
    assert well_founded(p2) == frozenset()
    assert names(well_founded(fact)) == {"c"}
    assert names(well_founded(parse("a. b :- not a. c :- not b."))) == {"a", "c"}


def test_well_founded_model():
    program = parse("a. b :- not a. c :- not b. d :- not e. e :- not d.")
    true, false = well_founded_model(program)
    assert names(true) == {"a", "c"}
    assert names(false) == {"b"}
    assert names(program.atoms() - true - false) == {"d", "e"}


def test_with_fact_is_idempotent(dix):
    c = dix.symbols.lookup("c")
    once = dix.with_fact(c)
    assert once.with_fact(c) == once
    assert len(once) == len(dix) + 1


def test_make_rule_renders_canonically():
    symbols = SymbolTable()
    rule = make_rule(symbols, "h", pos=["q", "p"], neg=["z", "y"])
    assert str(rule) == "h :- p, q, not y, not z."


def test_gamma_is_antimonotone_on_generated_programs():
    for index, program in enumerate(generated_programs(200, seed=3)):
        rng = random.Random(index)
        atoms = sorted(program.atoms())
        smaller = frozenset(atom for atom in atoms if rng.random() < 0.4)
        larger = smaller | frozenset(atom for atom in atoms if rng.random() < 0.4)
        assert gamma(program, larger) <= gamma(program, smaller)


def test_answer_sets_form_an_antichain_of_head_sets():
    for program in generated_programs(200, seed=4):
        found = enumerate_answer_sets(program)
        assert all(x <= program.heads() for x in found)
        for x, y in combinations(found, 2):
            assert not x <= y and not y <= x


def test_well_founded_set_is_in_every_answer_set():
    for program in generated_programs(200, seed=5):
        wf = well_founded(program)
        assert all(wf <= x for x in enumerate_answer_sets(program))
