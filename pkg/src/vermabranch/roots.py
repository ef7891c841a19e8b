"""Root-system data, the Weyl group of g2 and its dot action.

Roots are identified by the same string labels the pairing tables use and
carry integer coefficient vectors over the simple roots, which is also the
serialization format.  The Weyl group of g2 is stored as twelve explicit
2x2 integer matrices acting on (p, q) simple-root coordinates; the two
simple reflections generate the set (checked in the test suite), but the
closed list is the source of truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .weights import Weight, is_integer, rho

SIMPLE_ROOTS = {
    "so7": ("e1-e2", "e2-e3", "e3"),
    "g2": ("a1", "a2"),
    "sl3": ("n1-n2", "n2-n3"),
}

# label -> coefficients over the simple roots, positive roots only.
POSITIVE_ROOTS = {
    "so7": (
        ("e1-e2", (1, 0, 0)),
        ("e2-e3", (0, 1, 0)),
        ("e3", (0, 0, 1)),
        ("e1-e3", (1, 1, 0)),
        ("e2", (0, 1, 1)),
        ("e1", (1, 1, 1)),
        ("e2+e3", (0, 1, 2)),
        ("e1+e3", (1, 1, 2)),
        ("e1+e2", (1, 2, 2)),
    ),
    "g2": (
        ("a1", (1, 0)),
        ("a2", (0, 1)),
        ("a1+a2", (1, 1)),
        ("2a1+a2", (2, 1)),
        ("3a1+a2", (3, 1)),
        ("3a1+2a2", (3, 2)),
    ),
    "sl3": (
        ("n1-n2", (1, 0)),
        ("n2-n3", (0, 1)),
        ("n1-n3", (1, 1)),
    ),
}


@dataclass(frozen=True)
class ParabolicSpec:
    """A standard parabolic subalgebra, encoded by a subset of simple roots."""

    algebra: str
    pi: frozenset

    def __post_init__(self):
        object.__setattr__(self, "pi", frozenset(self.pi))
        bad = self.pi - set(SIMPLE_ROOTS[self.algebra])
        if bad:
            raise ValueError(f"{sorted(bad)} are not simple roots of {self.algebra}")

    def to_json(self):
        order = SIMPLE_ROOTS[self.algebra]
        return {"algebra": self.algebra, "pi": [s for s in order if s in self.pi]}


def levi_positive_roots(p: ParabolicSpec):
    """Positive roots lying in the N-span of p.pi, as labels."""
    simple = SIMPLE_ROOTS[p.algebra]
    allowed = {i for i, s in enumerate(simple) if s in p.pi}
    out = []
    for label, vec in POSITIVE_ROOTS[p.algebra]:
        if all(c == 0 or i in allowed for i, c in enumerate(vec)):
            out.append(label)
    return out


# The twelve elements of W_g2, as matrices on (p, q) simple-root
# coordinates.  Composition is function composition: "s1s2" applies s2
# first.  The second half is the negative of the first.
WEYL_G2 = {
    "1": ((1, 0), (0, 1)),
    "s1": ((-1, 3), (0, 1)),
    "s2": ((1, 0), (1, -1)),
    "s2s1": ((-1, 3), (-1, 2)),
    "s1s2": ((2, -3), (1, -1)),
    "s1s2s1": ((-2, 3), (-1, 2)),
    "-1": ((-1, 0), (0, -1)),
    "-s1": ((1, -3), (0, -1)),
    "-s2": ((-1, 0), (-1, 1)),
    "-s2s1": ((1, -3), (1, -2)),
    "-s1s2": ((-2, 3), (-1, 1)),
    "-s1s2s1": ((2, -3), (1, -2)),
}

WEYL_G2_NAMES = tuple(WEYL_G2)


def weyl_apply(name: str, w: Weight) -> Weight:
    """Linear action of a Weyl element on a g2 weight."""
    if w.algebra != "g2":
        raise ValueError("Weyl group of g2 acts on g2 weights")
    (m00, m01), (m10, m11) = WEYL_G2[name]
    p, q = w.coords
    return Weight("g2", (m00 * p + m01 * q, m10 * p + m11 * q))


def weyl_multiply(n1: str, n2: str) -> str:
    """Name of the product (n1 after n2); the twelve matrices are closed."""
    a, b = WEYL_G2[n1], WEYL_G2[n2]
    prod = tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )
    for name, m in WEYL_G2.items():
        if m == prod:
            return name
    raise AssertionError("product left the twelve-element set")


def dot_action(name: str, delta: Weight) -> Weight:
    """rho-shifted action w . delta = w(delta + rho) - rho."""
    r = rho("g2")
    return weyl_apply(name, delta + r) - r


def dot_orbit(delta: Weight):
    """The twelve dot-action images, keyed by element name."""
    return {name: dot_action(name, delta) for name in WEYL_G2_NAMES}


def same_linkage_class(d1: Weight, d2: Weight) -> bool:
    """Whether d1 and d2 are linked: they differ by an element of the root
    lattice and lie in one rho-shifted Weyl orbit."""
    diff = d1 - d2
    if not all(is_integer(c) for c in diff.coords):
        return False
    return any(dot_action(name, d2) == d1 for name in WEYL_G2_NAMES)
