import pytest

from lp_format.parser import parse

DIX = "a :- not b.\nb :- c, not a.\nc :- a.\n"
P1 = "a :- not b.\nb :- not a.\n"
P2 = "a :- not b.\nb :- not a.\nc :- a.\nc :- b.\n"
SELF_DEFEATING = "a :- not a.\n"
FACT = "c.\n"

CORPUS = {
    "dix": DIX,
    "dix_c": DIX + "c.\n",
    "p1": P1,
    "p2": P2,
    "self_defeating": SELF_DEFEATING,
    "fact": FACT,
}


@pytest.fixture
def dix():
    return parse(DIX)


@pytest.fixture
def dix_c():
    return parse(CORPUS["dix_c"])


@pytest.fixture
def p1():
    return parse(P1)


@pytest.fixture
def p2():
    return parse(P2)


@pytest.fixture
def self_defeating():
    return parse(SELF_DEFEATING)


@pytest.fixture
def fact():
    return parse(FACT)


@pytest.fixture(params=sorted(CORPUS))
def corpus_program(request):
    return request.param, parse(CORPUS[request.param])


@pytest.fixture
def write_program(tmp_path):
    def write(text, name="program.lp"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write
