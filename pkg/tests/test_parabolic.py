from fractions import Fraction
from itertools import combinations

import pytest

from vermabranch.parabolic import (
    AMBIENT_ALGEBRA,
    PAIRS,
    IncompatibleParabolicError,
    enumerate_compatible,
    intersect_parabolic,
    is_compatible,
    solve_linear_2d,
    witness_evaluations,
)
from vermabranch.roots import SIMPLE_ROOTS, ParabolicSpec

EXPECTED = {
    "so7-g2": [set(), {"e2-e3"}, {"e1-e2", "e3"}, {"e1-e2", "e2-e3", "e3"}],
    "g2-sl3": [set(), {"a1"}, {"a2"}, {"a1", "a2"}],
}


def test_census():
    for pair_id in PAIRS:
        got = [set(p.pi) for p in enumerate_compatible(pair_id)]
        assert got == EXPECTED[pair_id]


def test_all_other_subsets_rejected():
    for pair_id in PAIRS:
        simple = SIMPLE_ROOTS[AMBIENT_ALGEBRA[pair_id]]
        for size in range(len(simple) + 1):
            for combo in combinations(simple, size):
                spec = ParabolicSpec(AMBIENT_ALGEBRA[pair_id], frozenset(combo))
                w = is_compatible(spec, pair_id)
                if set(combo) in EXPECTED[pair_id]:
                    assert w is not None, combo
                else:
                    assert w is None, combo


def test_witness_defines_the_parabolic():
    for pair_id in PAIRS:
        for spec in enumerate_compatible(pair_id):
            w = is_compatible(spec, pair_id)
            evals = witness_evaluations(pair_id, w, side="ambient")
            for s, v in evals.items():
                if s in spec.pi:
                    assert v == 0, (spec.pi, s)
                else:
                    assert v > 0, (spec.pi, s)


def test_known_hyperbolic_elements():
    # hand-checked witnesses: (4, 7) cuts out the so7 borel, (2, 3) the
    # e2-e3 parabolic, (1, 2) the {e1-e2, e3} parabolic
    assert witness_evaluations("so7-g2", (4, 7)) == \
        {"e1-e2": 1, "e2-e3": 2, "e3": 1}
    evals = witness_evaluations("so7-g2", (2, 3))
    assert evals["e2-e3"] == 0 and evals["e1-e2"] > 0 and evals["e3"] > 0
    evals = witness_evaluations("so7-g2", (1, 2))
    assert evals["e1-e2"] == 0 and evals["e3"] == 0 and evals["e2-e3"] > 0


def test_intersection_table():
    expected = {
        "so7-g2": {
            frozenset(): set(),
            frozenset({"e2-e3"}): {"a2"},
            frozenset({"e1-e2", "e3"}): {"a1"},
            frozenset({"e1-e2", "e2-e3", "e3"}): {"a1", "a2"},
        },
        "g2-sl3": {
            frozenset(): set(),
            frozenset({"a1"}): set(),
            frozenset({"a2"}): {"n1-n2"},
            frozenset({"a1", "a2"}): {"n1-n2", "n2-n3"},
        },
    }
    for pair_id, table in expected.items():
        for pi, sub_pi in table.items():
            spec = ParabolicSpec(AMBIENT_ALGEBRA[pair_id], pi)
            assert set(intersect_parabolic(spec, pair_id).pi) == sub_pi


def test_intersection_matches_witness_vanishing():
    # the sub simple roots vanishing on any witness must be exactly the
    # frozen intersection set
    for pair_id in PAIRS:
        for spec in enumerate_compatible(pair_id):
            w = is_compatible(spec, pair_id)
            sub_evals = witness_evaluations(pair_id, w, side="sub")
            vanishing = {s for s, v in sub_evals.items() if v == 0}
            assert vanishing == set(intersect_parabolic(spec, pair_id).pi)
            assert all(v >= 0 for v in sub_evals.values()), (pair_id, spec.pi)


def test_incompatible_intersection_raises():
    spec = ParabolicSpec("so7", {"e1-e2"})
    with pytest.raises(IncompatibleParabolicError):
        intersect_parabolic(spec, "so7-g2")
    with pytest.raises(ValueError):
        is_compatible(ParabolicSpec("g2", {"a1"}), "so7-g2")


def test_solver_basics():
    half = Fraction(1, 2)
    # x >= 1, -x >= -3  (i.e. x <= 3)
    assert solve_linear_2d([(1, 0, "ge", 1), (-1, 0, "ge", -3)]) is not None
    # contradictory strict band
    assert solve_linear_2d([(1, 1, "ge", 1), (-1, -1, "ge", 0)]) is None
    # equality pinning both variables
    a, b = solve_linear_2d([(1, 0, "eq", half), (0, 1, "eq", 2)])
    assert (a, b) == (half, 2)
    # equality plus an inequality it violates
    assert solve_linear_2d([(1, 1, "eq", 0), (1, 1, "ge", 1)]) is None
    # feasible two-variable cone
    sol = solve_linear_2d([(2, -1, "ge", 1), (-3, 2, "ge", 1)])
    assert sol is not None
    a, b = sol
    assert 2 * a - b >= 1 and -3 * a + 2 * b >= 1
