"""Acceptance suite: every headline property at its full stated scale.

Each test prints one PASS/FAIL line.  All randomness is seeded, so the
suite is reproducible.  One criterion (the unrestricted influence-decision
biconditional, criterion 5) is stated over all seed sets and is falsified
by a concrete family of seeds; the test implements the stated property
faithfully and therefore fails, printing the counterexample.  Criterion 5a
covers the two directions of that reduction that do hold.
"""

import random
import time

import pytest

from tsslab.instance import Instance, write_instance
from tsslab.reductions import is_to_influence_decision
from tsslab.solvers import k_influence
from tsslab.verify import (
    has_independent_set,
    random_graph_min_degree_one,
    suite_circuit_equivalence,
    suite_clique_gap,
    suite_gadget_direction,
    suite_independence_decision,
    suite_min_closed_gap,
    suite_padding,
    suite_propagation,
    suite_threshold_reduction,
    suite_unanimity_cover,
    suite_unanimity_min_open,
)


def _report(criterion: str, outcomes, started) -> None:
    elapsed = time.perf_counter() - started
    failures = [oc for oc in outcomes if not oc.passed]
    if failures:
        print(f"FAIL {criterion} [{elapsed:.1f}s]")
        for oc in failures:
            print(f"  {oc.name}: {oc.detail}")
        detail = "; ".join(f"{oc.name}: {oc.detail}" for oc in failures)
        pytest.fail(f"{criterion}: {detail}", pytrace=False)
    names = ", ".join(oc.name for oc in outcomes)
    print(f"PASS {criterion} [{elapsed:.1f}s] ({names})")


def test_criterion_01_propagation_soundness():
    t0 = time.perf_counter()
    out = suite_propagation(trials=1000, max_n=30, seed=101)
    _report("criterion 1: propagation soundness, 1000 instances n<=30", out, t0)
    assert time.perf_counter() - t0 < 10


def test_criterion_02_circuit_oracle_equivalence():
    t0 = time.perf_counter()
    out = suite_circuit_equivalence(
        max_inputs=3, max_gates=3, trials=50, seed=102, exhaustive=True
    )
    _report(
        "criterion 2: circuit optimum equals minimum satisfying weight", out, t0
    )
    assert time.perf_counter() - t0 < 300


def test_criterion_03_threshold_reduction():
    t0 = time.perf_counter()
    out = suite_threshold_reduction(trials=200, max_n=5, peels=100, seed=103)
    _report(
        "criterion 3: thresholds<=2 rewrite preserves optima, n<=5, 200 instances",
        out,
        t0,
    )
    assert time.perf_counter() - t0 < 300


def test_criterion_04_clique_gap_dichotomy():
    t0 = time.perf_counter()
    out = suite_clique_gap(graphs=100, random_seeds=10000, seed=104)
    _report(
        "criterion 4: clique gap, k=4 h=1, yield 160 vs bound 154", out, t0
    )
    assert time.perf_counter() - t0 < 600


def test_criterion_05_influence_decision_biconditional():
    # Stated property: over ALL size-k seed sets of the compiled instance,
    # closed influence <= k is achievable exactly when the source graph has
    # a size-k independent set.  A seed holding an edge vertex together
    # with both its endpoints is activation-closed, so dense graphs defeat
    # the backward direction; the first counterexample is printed below.
    t0 = time.perf_counter()
    rng = random.Random(105)
    for idx in range(500):
        g = random_graph_min_degree_one(rng, 2, 8)
        for k in range(0, min(4, g.n) + 1):
            r = is_to_influence_decision(g, k)
            res = k_influence(r.instance, k, "closed", "min")
            decision = res.value <= (r.ell if r.ell is not None else k)
            has_is = has_independent_set(g, k)
            if decision != has_is:
                elapsed = time.perf_counter() - t0
                print(
                    f"FAIL criterion 5: influence-decision biconditional [{elapsed:.1f}s]"
                )
                print(
                    f"  graph {idx}, k={k}: decision seed {sorted(res.seed)} has closed "
                    f"influence {res.value} <= {k}, but independence is {has_is}"
                )
                print("  source graph:")
                for line in write_instance(Instance(g, [1] * g.n)).splitlines():
                    print(f"    {line}")
                pytest.fail(
                    f"biconditional fails at graph {idx}, k={k}: seed "
                    f"{sorted(res.seed)} is activation-closed without an "
                    f"independent set of size {k}",
                    pytrace=False,
                )
    print(f"PASS criterion 5 [{time.perf_counter() - t0:.1f}s]")


def test_criterion_05a_influence_decision_sound_directions():
    # The directions that do hold: an independent set -> influence stays at
    # the bound; over vertex-side seeds the equivalence is exact (closed
    # and open variants both).
    t0 = time.perf_counter()
    out = suite_independence_decision(graphs=500, k_max=4, seed=105)
    _report(
        "criterion 5a: influence-decision forward direction and vertex-side "
        "equivalence",
        out,
        t0,
    )


def test_criterion_06_min_closed_dichotomy():
    t0 = time.perf_counter()
    out = suite_min_closed_gap(graphs=500, k_max=4, h=3, seed=106)
    _report(
        "criterion 6: min closed influence k vs k+4 dichotomy, h=3", out, t0
    )
    assert time.perf_counter() - t0 < 300


def test_criterion_07_unanimity_min_open():
    t0 = time.perf_counter()
    out = suite_unanimity_min_open(trials=500, max_n=10, seed=107)
    _report(
        "criterion 7: polynomial unanimity min open influence, all k", out, t0
    )
    assert time.perf_counter() - t0 < 120


def test_criterion_08_unanimity_vertex_cover():
    t0 = time.perf_counter()
    out = suite_unanimity_cover(trials=300, max_n=12, seed=108)
    _report(
        "criterion 8: unanimity optimum = cover (+isolated), matching <= 2x",
        out,
        t0,
    )
    assert time.perf_counter() - t0 < 300


def test_criterion_09_gadget_directionality():
    t0 = time.perf_counter()
    out = suite_gadget_direction(max_chain=5)
    _report("criterion 9: one-way gadgets, chains up to 5", out, t0)
    assert time.perf_counter() - t0 < 1


def test_criterion_10_padding_arithmetic():
    t0 = time.perf_counter()
    out = suite_padding(k_lo=4, k_hi=10)
    _report("criterion 10: padding inequalities minimal and tight", out, t0)
    assert time.perf_counter() - t0 < 1
