import random
from fractions import Fraction

import pytest

from vermabranch.weights import (
    Weight,
    eta_to_g2,
    g2_to_eta,
    is_integer,
    is_natural,
    pair,
    rational,
    restrict_so7_to_g2,
    rho,
)


def test_rational_coercion():
    assert rational(3) == Fraction(3)
    assert rational("2/7") == Fraction(2, 7)
    assert rational(Fraction(1, 2)) == Fraction(1, 2)


def test_natural_includes_zero():
    assert is_natural(0)
    assert is_natural(5)
    assert not is_natural(-1)
    assert not is_natural(Fraction(1, 2))
    assert is_integer(-3) and not is_integer(Fraction(1, 3))


def test_weight_arithmetic():
    w1 = Weight("g2", (1, Fraction(1, 2)))
    w2 = Weight("g2", (2, 3))
    assert (w1 + w2).coords == (3, Fraction(7, 2))
    assert (w1 - w2).coords == (-1, Fraction(-5, 2))
    assert (2 * w1).coords == (2, 1)
    assert (-w2).coords == (-2, -3)
    assert Weight.zero("so7").is_zero()


def test_weight_algebra_mismatch():
    with pytest.raises(ValueError):
        Weight("g2", (1, 2)) + Weight("sl3", (1, 2))
    with pytest.raises(ValueError):
        Weight("so7", (1, 2))
    with pytest.raises(ValueError):
        Weight("su2", (1,))


def test_weight_json_round_trip():
    w = Weight("so7", (Fraction(5, 3), -2, Fraction(1, 2)))
    assert Weight.from_json(w.to_json()) == w
    assert w.to_json()["coords"] == ["5/3", "-2", "1/2"]


def test_rho_pairs_to_one_on_simple_coroots():
    assert pair(rho("so7"), "e1-e2") == 1
    assert pair(rho("so7"), "e2-e3") == 1
    assert pair(rho("so7"), "e3") == 1
    assert pair(rho("g2"), "a1") == 1
    assert pair(rho("g2"), "a2") == 1
    assert pair(rho("sl3"), "n1-n2") == 1
    assert pair(rho("sl3"), "n2-n3") == 1


def test_pairing_sum_of_coroots():
    w = Weight("so7", (2, 1, Fraction(1, 2)))
    assert pair(w, ("e1", "e2+e3")) == pair(w, "e1") + pair(w, "e2+e3")
    with pytest.raises(ValueError):
        pair(w, "a1")


def test_restriction_on_simple_roots():
    assert restrict_so7_to_g2(Weight("so7", (1, -1, 0))).coords == (1, 0)
    assert restrict_so7_to_g2(Weight("so7", (0, 1, -1))).coords == (0, 1)
    assert restrict_so7_to_g2(Weight("so7", (0, 0, 1))).coords == (1, 0)
    with pytest.raises(ValueError):
        restrict_so7_to_g2(Weight("g2", (1, 0)))


def test_restriction_multiset_of_positive_roots():
    # the nine positive roots in epsilon coordinates and their images
    roots = {
        "e1-e2": (1, -1, 0), "e2-e3": (0, 1, -1), "e3": (0, 0, 1),
        "e1-e3": (1, 0, -1), "e2": (0, 1, 0), "e1": (1, 0, 0),
        "e2+e3": (0, 1, 1), "e1+e3": (1, 0, 1), "e1+e2": (1, 1, 0),
    }
    images = sorted(
        restrict_so7_to_g2(Weight("so7", v)).coords for v in roots.values()
    )
    assert images == sorted(
        [(1, 0), (1, 0), (0, 1), (1, 1), (1, 1), (2, 1), (2, 1), (3, 1), (3, 2)]
    )


def test_restriction_is_linear():
    rng = random.Random(7)
    for _ in range(20):
        w1 = Weight("so7", tuple(Fraction(rng.randrange(-9, 10), 3) for _ in range(3)))
        w2 = Weight("so7", tuple(rng.randrange(-5, 6) for _ in range(3)))
        assert restrict_so7_to_g2(w1 + w2) == \
            restrict_so7_to_g2(w1) + restrict_so7_to_g2(w2)


def test_eta_conversion_round_trip():
    rng = random.Random(11)
    for _ in range(20):
        w = Weight("g2", (Fraction(rng.randrange(-20, 21), 4), rng.randrange(-9, 10)))
        assert eta_to_g2(g2_to_eta(w)) == w
    v = Weight("sl3", (Fraction(2, 3), 5))
    assert g2_to_eta(eta_to_g2(v)) == v


def test_shared_cartan_pairings_agree():
    # sl3 coroots act on g2 coordinates through the shared Cartan
    rng = random.Random(13)
    for _ in range(20):
        w = Weight("g2", (Fraction(rng.randrange(-12, 13), 2), rng.randrange(-6, 7)))
        eta = g2_to_eta(w)
        for label in ("n1-n2", "n2-n3", "n1-n3"):
            assert pair(w, label) == pair(eta, label)
