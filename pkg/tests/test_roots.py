import random
from fractions import Fraction

import pytest

from vermabranch.roots import (
    POSITIVE_ROOTS,
    SIMPLE_ROOTS,
    WEYL_G2,
    WEYL_G2_NAMES,
    ParabolicSpec,
    dot_action,
    dot_orbit,
    levi_positive_roots,
    same_linkage_class,
    weyl_apply,
    weyl_multiply,
)
from vermabranch.weights import Weight, rho

# simple roots in each algebra's own weight coordinates
_SIMPLE_COORDS = {
    "so7": {"e1-e2": (1, -1, 0), "e2-e3": (0, 1, -1), "e3": (0, 0, 1)},
    "g2": {"a1": (1, 0), "a2": (0, 1)},
    "sl3": {"n1-n2": (1, -1), "n2-n3": (1, 2)},
}


def _root_coords(algebra, vec):
    simple = [_SIMPLE_COORDS[algebra][s] for s in SIMPLE_ROOTS[algebra]]
    n = len(simple[0])
    return tuple(sum(c * s[i] for c, s in zip(vec, simple)) for i in range(n))


def test_positive_roots_sum_to_twice_rho():
    for algebra in POSITIVE_ROOTS:
        total = [0] * len(rho(algebra).coords)
        for _, vec in POSITIVE_ROOTS[algebra]:
            for i, c in enumerate(_root_coords(algebra, vec)):
                total[i] += c
        assert tuple(total) == (2 * rho(algebra)).coords, algebra


def test_positive_root_counts():
    assert len(POSITIVE_ROOTS["so7"]) == 9
    assert len(POSITIVE_ROOTS["g2"]) == 6
    assert len(POSITIVE_ROOTS["sl3"]) == 3


def test_parabolic_spec_validation():
    p = ParabolicSpec("so7", {"e2-e3"})
    assert p.pi == frozenset({"e2-e3"})
    with pytest.raises(ValueError):
        ParabolicSpec("so7", {"a1"})
    assert ParabolicSpec("g2", ()).to_json() == {"algebra": "g2", "pi": []}


def test_levi_positive_roots():
    assert levi_positive_roots(ParabolicSpec("so7", ())) == []
    assert levi_positive_roots(ParabolicSpec("so7", {"e2-e3"})) == ["e2-e3"]
    assert sorted(levi_positive_roots(ParabolicSpec("so7", {"e1-e2", "e3"}))) == \
        ["e1-e2", "e3"]
    assert len(levi_positive_roots(
        ParabolicSpec("so7", set(SIMPLE_ROOTS["so7"])))) == 9
    assert levi_positive_roots(ParabolicSpec("g2", {"a1"})) == ["a1"]
    assert levi_positive_roots(ParabolicSpec("sl3", {"n1-n2"})) == ["n1-n2"]


def test_weyl_group_is_closed_with_inverses():
    names = WEYL_G2_NAMES
    assert len(names) == 12
    products = {(n1, n2): weyl_multiply(n1, n2) for n1 in names for n2 in names}
    assert set(products.values()) <= set(names)
    for n in names:
        assert any(products[(n, m)] == "1" for m in names), n


def test_simple_reflections_generate():
    reached = {"1"}
    frontier = ["1"]
    while frontier:
        cur = frontier.pop()
        for gen in ("s1", "s2"):
            nxt = weyl_multiply(gen, cur)
            if nxt not in reached:
                reached.add(nxt)
                frontier.append(nxt)
    assert reached == set(WEYL_G2_NAMES)


def test_reflections_fix_orthogonal_weights():
    # s1 negates a1 and fixes the weight pairing to zero against a1
    a1 = Weight("g2", (1, 0))
    assert weyl_apply("s1", a1).coords == (-1, 0)
    a2 = Weight("g2", (0, 1))
    assert weyl_apply("s2", a2).coords == (0, -1)
    assert weyl_apply("-1", Weight("g2", (3, 5))).coords == (-3, -5)


def test_dot_action_identity_and_orbit_size():
    d = Weight("g2", (Fraction(1, 3), 2))
    assert dot_action("1", d) == d
    orbit = dot_orbit(d)
    assert len(orbit) == 12
    assert orbit["1"] == d


def test_linkage_requires_root_lattice_difference():
    # integral weight: the dot image under s1 is linked
    d = Weight("g2", (1, 0))
    assert same_linkage_class(dot_action("s1", d), d)
    assert same_linkage_class(d, d)
    # fractional weight: dot images differ by non-lattice vectors, so the
    # lattice condition rules them out even though they share the orbit
    f = Weight("g2", (Fraction(1, 3), 0))
    assert not same_linkage_class(dot_action("s2", f), f)
    # lattice translate that is not in the orbit
    assert not same_linkage_class(d + Weight("g2", (1, 1)), d)


def test_weyl_apply_rejects_foreign_weights():
    with pytest.raises(ValueError):
        weyl_apply("s1", Weight("so7", (1, 0, 0)))


def test_dot_action_matches_linear_action_shifted():
    rng = random.Random(3)
    r = rho("g2")
    for _ in range(10):
        d = Weight("g2", (Fraction(rng.randrange(-9, 10), 2), rng.randrange(-4, 5)))
        for name in WEYL_G2_NAMES:
            assert dot_action(name, d) == weyl_apply(name, d + r) - r
