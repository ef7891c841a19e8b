"""Genericity hypotheses, simplicity tests and linkage separation.

A hypothesis set is a conjunction of atoms, each constraining one coroot
pairing of the inducing weight: required natural, required non-natural
after an integer shift, or required non-integral.  The per-case sets
below are exactly the conditions under which each closed-form branching
is a decomposition into simple modules; the ``linked-*`` sets isolate the
integrality conditions that force distinct summands into distinct
linkage classes.

``sample_generic`` draws weights from a hypothesis set constructively:
coordinates get denominators from distinct primes larger than any shift
in play, which satisfies every non-integrality atom identically, and the
required natural pairings are solved for exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .roots import POSITIVE_ROOTS, ParabolicSpec, dot_orbit, levi_positive_roots, same_linkage_class
from .weights import Weight, is_integer, is_natural, pair, rational, rho


@dataclass(frozen=True)
class ConditionAtom:
    coroot: object  # label or tuple of labels summed
    shift: int
    kind: str  # "natural" | "not-natural" | "not-integer"

    def value(self, w: Weight) -> Fraction:
        return pair(w, self.coroot) + self.shift

    def holds(self, w: Weight) -> bool:
        v = self.value(w)
        if self.kind == "natural":
            return is_natural(v)
        if self.kind == "not-natural":
            return not is_natural(v)
        if self.kind == "not-integer":
            return not is_integer(v)
        raise ValueError(f"unknown atom kind {self.kind!r}")

    def describe(self) -> str:
        h = self.coroot if isinstance(self.coroot, str) else "+".join(self.coroot)
        shift = f"{self.shift:+d}" if self.shift else ""
        target = {"natural": "in N", "not-natural": "not in N", "not-integer": "not in Z"}
        return f"(H_{{{h}}}){shift} {target[self.kind]}"


def _atoms(spec):
    return tuple(ConditionAtom(c, s, k) for c, s, k in spec)


# Each entry: (algebra of the weight, atoms).  The "generic-<case>" sets
# gate the simple-decomposition statements; "simple-*" are the Jantzen
# sufficient conditions for the ambient module itself; "linked-*" are the
# integrality conditions separating the emitted linkage classes.
HYPOTHESES = {
    "generic-b3-borel": ("so7", _atoms([
        ("e1", 4, "not-natural"),
        ("e2", 2, "not-natural"),
        ("e3", 0, "not-natural"),
        ("e1-e2", 0, "not-natural"),
        ("e1-e3", 1, "not-natural"),
        ("e2+e3", 1, "not-natural"),
        ("e1+e2", 0, "not-integer"),
        ("e1+e3", 0, "not-integer"),
        ("e2-e3", 0, "not-integer"),
        (("e1-e2", "e3"), 0, "not-integer"),
        (("e1-e3", "e2"), 0, "not-integer"),
        (("e1", "e2+e3"), 0, "not-integer"),
    ])),
    "generic-b3-p23": ("so7", _atoms([
        ("e2-e3", 0, "natural"),
        ("e1", 4, "not-natural"),
        ("e2", 2, "not-natural"),
        (("e1", "e2+e3"), 0, "not-integer"),
    ])),
    "generic-b3-p12-3": ("so7", _atoms([
        ("e1-e2", 0, "natural"),
        ("e3", 0, "natural"),
        ("e1+e2", 0, "not-integer"),
        (("e1", "e2+e3"), 0, "not-integer"),
    ])),
    "generic-g2-borel": ("g2", _atoms([
        ("a1", 0, "not-natural"),
        ("a1+a2", 3, "not-natural"),
        ("2a1+a2", 4, "not-natural"),
        ("a2", 0, "not-integer"),
        ("3a1+a2", 0, "not-integer"),
        ("3a1+2a2", 0, "not-integer"),
    ])),
    "generic-g2-p1": ("g2", _atoms([
        ("a1", 0, "natural"),
        ("2a1+a2", 4, "not-natural"),
        ("3a1+2a2", 0, "not-integer"),
    ])),
    "generic-g2-p2": ("g2", _atoms([
        ("a2", 0, "natural"),
        ("2a1+a2", 0, "not-integer"),
    ])),
    "simple-b3-borel": ("so7", _atoms([
        ("e1", 4, "not-natural"),
        ("e2", 2, "not-natural"),
        ("e3", 0, "not-natural"),
        ("e1-e2", 0, "not-natural"),
        ("e2-e3", 0, "not-natural"),
        ("e1-e3", 1, "not-natural"),
        ("e1+e2", 3, "not-natural"),
        ("e2+e3", 1, "not-natural"),
        ("e1+e3", 2, "not-natural"),
    ])),
    "simple-b3-p23": ("so7", _atoms([
        ("e1", 4, "not-natural"),
        ("e2", 2, "not-natural"),
        ("e3", 0, "not-natural"),
        ("e1-e2", 0, "not-natural"),
        ("e1-e3", 1, "not-natural"),
        ("e1+e2", 3, "not-natural"),
        ("e2+e3", 1, "not-natural"),
        ("e1+e3", 2, "not-natural"),
    ])),
    "simple-b3-p12-3": ("so7", _atoms([
        ("e1", 4, "not-natural"),
        ("e2", 2, "not-natural"),
        ("e2-e3", 0, "not-natural"),
        ("e1-e3", 1, "not-natural"),
        ("e1+e2", 3, "not-natural"),
        ("e2+e3", 1, "not-natural"),
        ("e1+e3", 2, "not-natural"),
    ])),
    "linked-b3-borel": ("so7", _atoms([
        (("e1-e2", "e3"), 0, "not-integer"),
        ("e2-e3", 0, "not-integer"),
        (("e1-e3", "e2"), 0, "not-integer"),
        (("e1", "e2+e3"), 0, "not-integer"),
        ("e1+e3", 0, "not-integer"),
        ("e1+e2", 0, "not-integer"),
    ])),
    "linked-b3-p23": ("so7", _atoms([
        (("e1-e2", "e3"), 0, "not-integer"),
        (("e1", "e2+e3"), 0, "not-integer"),
        (("e1-e3", "e2"), 0, "not-integer"),
        ("e1+e2", 0, "not-integer"),
        ("e1+e3", 0, "not-integer"),
    ])),
    "linked-b3-p12-3": ("so7", _atoms([
        ("e2-e3", 0, "not-integer"),
        (("e1", "e2+e3"), 0, "not-integer"),
        (("e1-e3", "e2"), 0, "not-integer"),
        ("e1+e2", 0, "not-integer"),
        ("e1+e3", 0, "not-integer"),
    ])),
}

# hypothesis set gating each closed-form case's simple decomposition
GENERIC_FOR_CASE = {
    "b3-borel": "generic-b3-borel",
    "b3-p23": "generic-b3-p23",
    "b3-p12-3": "generic-b3-p12-3",
    "g2-borel": "generic-g2-borel",
    "g2-p1": "generic-g2-p1",
    "g2-p2": "generic-g2-p2",
}


def in_hypothesis(name, w: Weight):
    """Check membership; returns (bool, descriptions of failing atoms)."""
    algebra, atoms = HYPOTHESES[name]
    if w.algebra != algebra:
        raise ValueError(f"{name} constrains {algebra} weights, got {w.algebra}")
    failures = [a.describe() for a in atoms if not a.holds(w)]
    return not failures, failures


def jantzen_simple(p: ParabolicSpec, w: Weight) -> bool:
    """Sufficient simplicity test for the generalized Verma of highest
    weight w: (w + rho) must avoid positive integers on every coroot of a
    positive root outside the Levi span."""
    shifted = w + rho(p.algebra)
    levi = set(levi_positive_roots(p))
    for label, _ in POSITIVE_ROOTS[p.algebra]:
        if label in levi:
            continue
        v = pair(shifted, label)
        if is_integer(v) and v >= 1:
            return False
    return True


def _nonmultiple(rng, modulus):
    while True:
        n = rng.randrange(-40, 41)
        if n % modulus:
            return n


def sample_generic(name, seed) -> Weight:
    """A pseudorandom weight in the named hypothesis set.

    Denominators 13, 17, 19 keep every shifted pairing off the integers;
    the construction is verified against the atoms before returning."""
    rng = random.Random(f"{name}:{seed}")
    for _ in range(50):
        if name in ("generic-b3-borel", "simple-b3-borel", "linked-b3-borel"):
            w = Weight("so7", (
                Fraction(_nonmultiple(rng, 13), 13),
                Fraction(_nonmultiple(rng, 17), 17),
                Fraction(_nonmultiple(rng, 19), 19),
            ))
        elif name in ("generic-b3-p23", "simple-b3-p23", "linked-b3-p23"):
            c = Fraction(_nonmultiple(rng, 17), 17)
            b = c + rng.randrange(0, 7)
            a = Fraction(_nonmultiple(rng, 13), 13)
            w = Weight("so7", (a, b, c))
        elif name in ("generic-b3-p12-3", "simple-b3-p12-3", "linked-b3-p12-3"):
            b = Fraction(_nonmultiple(rng, 13), 13)
            a = b + rng.randrange(0, 7)
            c = Fraction(rng.randrange(0, 7), 2)
            w = Weight("so7", (a, b, c))
        elif name == "generic-g2-borel":
            w = Weight("g2", (
                Fraction(_nonmultiple(rng, 13), 13),
                Fraction(_nonmultiple(rng, 17), 17),
            ))
        elif name == "generic-g2-p1":
            n = rng.randrange(0, 7)
            q = Fraction(_nonmultiple(rng, 13), 13)
            w = Weight("g2", (Fraction(n + 3 * q, 2), q))
        elif name == "generic-g2-p2":
            n = rng.randrange(0, 7)
            q = Fraction(_nonmultiple(rng, 13), 13)
            w = Weight("g2", (2 * q - n, q))
        else:
            raise ValueError(f"no sampler for hypothesis set {name!r}")
        ok, _ = in_hypothesis(name, w)
        if ok:
            return w
    raise RuntimeError(f"sampler for {name} failed to hit the set")


def linkage_disjoint(case, deltas) -> bool:
    """Whether the g2 highest weights lie in pairwise distinct linkage
    classes.  Only meaningful when the subalgebra is g2; sl3 targets are
    rejected because the dot action implemented here is the g2 one."""
    from .branching import get_case

    case = get_case(case)
    if case.pair_id != "so7-g2":
        raise ValueError("linkage separation is only defined for the g2 target")
    deltas = list(deltas)
    # orbit fingerprints cut the quadratic pass down to genuine candidates
    orbits = [frozenset(w.coords for w in dot_orbit(d).values()) for d in deltas]
    for i in range(len(deltas)):
        for j in range(i + 1, len(deltas)):
            if deltas[i].coords in orbits[j] or orbits[i] & orbits[j]:
                if same_linkage_class(deltas[i], deltas[j]):
                    return False
    return True
