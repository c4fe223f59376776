import random
from itertools import combinations

import pytest

from tsslab.circuits import (
    build_circuit,
    evaluate,
    min_weight_satisfying,
    parse_circuit,
    write_circuit,
)
from tsslab.instance import ParseError
from tsslab.verify import enumerate_small_circuits, random_circuit

TWO_LEVEL_CIRCUIT = """circuit 7
input 1
input 2
input 3
input 4
gate 5 or 1 2
gate 6 or 3 4
gate 7 and 5 6
output 7
"""


def test_parse_two_level_circuit():
    c = parse_circuit(TWO_LEVEL_CIRCUIT)
    assert c.n_inputs == 4
    assert len(c.gates) == 3
    assert c.output == 7
    assert c.kinds[5] == "or" and c.kinds[7] == "and"


def test_parse_degenerate_single_input():
    c = parse_circuit("circuit 1\ninput 1\noutput 1\n")
    assert c.n_inputs == 1 and c.output == 1
    assert evaluate(c, {1}) and not evaluate(c, set())


def test_circuit_roundtrip():
    c = parse_circuit(TWO_LEVEL_CIRCUIT)
    assert parse_circuit(write_circuit(c)) == c


@pytest.mark.parametrize(
    "text,fragment",
    [
        # two sinks: input 3 feeds nothing
        ("circuit 4\ninput 1\ninput 2\ninput 3\ngate 4 and 1 2\noutput 4\n", "output candidate"),
        # gate with one input
        ("circuit 3\ninput 1\ninput 2\ngate 3 and 1\noutput 3\n", "fewer than two"),
        # dangling reference
        ("circuit 3\ninput 1\ninput 2\ngate 3 and 1 9\noutput 3\n", "unknown node"),
        # declared output is not the sink
        (TWO_LEVEL_CIRCUIT.replace("output 7", "output 5"), "not the unique sink"),
        ("circuit 0\noutput 1\n", "at least one node"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_circuit(text)
    assert fragment in str(err.value)


def test_cycle_detected():
    with pytest.raises(ParseError) as err:
        build_circuit(
            ["input", "input", "and", "and", "and"],
            [(), (), (1, 2, 4), (1, 3), (3, 4)],
        )
    assert "cycle" in str(err.value)


def test_evaluate_two_level():
    c = parse_circuit(TWO_LEVEL_CIRCUIT)
    assert evaluate(c, {1, 3})
    assert not evaluate(c, {1, 2})
    assert evaluate(c, {2, 4})
    assert not evaluate(c, set())


def test_all_true_satisfies_random_circuits():
    rng = random.Random(0)
    for _ in range(100):
        c = random_circuit(rng, 4, 4)
        assert evaluate(c, set(range(1, c.n_inputs + 1)))


def test_evaluation_monotone():
    rng = random.Random(5)
    for _ in range(100):
        c = random_circuit(rng, 4, 4)
        n = c.n_inputs
        small = {v for v in range(1, n + 1) if rng.random() < 0.5}
        big = small | {v for v in range(1, n + 1) if rng.random() < 0.5}
        assert not evaluate(c, small) or evaluate(c, big)


def test_min_weight_two_level():
    c = parse_circuit(TWO_LEVEL_CIRCUIT)
    assert min_weight_satisfying(c) == {1, 3}


def test_min_weight_single_input():
    c = parse_circuit("circuit 1\ninput 1\noutput 1\n")
    assert min_weight_satisfying(c) == {1}


def test_min_weight_bound_refusal():
    kinds = ["input"] * 21 + ["and"]
    preds = [()] * 21 + [tuple(range(1, 22))]
    c = build_circuit(kinds, preds)
    with pytest.raises(ValueError):
        min_weight_satisfying(c)


def test_min_weight_is_minimal_and_lex_first():
    rng = random.Random(8)
    for _ in range(40):
        c = random_circuit(rng, 4, 3)
        got = min_weight_satisfying(c)
        n = c.n_inputs
        for w in range(len(got)):
            for combo in combinations(range(1, n + 1), w):
                assert not evaluate(c, combo)
        for combo in combinations(range(1, n + 1), len(got)):
            if evaluate(c, combo):
                assert frozenset(combo) == got
                break


def test_enumeration_covers_known_shapes():
    circuits = enumerate_small_circuits(2, 1)
    # one degenerate input, and-of-two, or-of-two
    assert len(circuits) == 3
    circuits = enumerate_small_circuits(3, 3)
    assert len(circuits) > 100
    for c in circuits[:50]:
        assert evaluate(c, set(range(1, c.n_inputs + 1)))
