"""Exact weights and coroot pairings for so(7,C), g2 and sl(3,C).

Coordinates per algebra:

  so7: (a, b, c) over the orthogonal basis e1, e2, e3
  g2:  (p, q) over the simple roots a1, a2
  sl3: (x, y) over eta1, eta2, with eta3 eliminated via eta1+eta2+eta3 = 0

All coordinates are ``fractions.Fraction``; every operation is exact and
every value is immutable, so concurrent use needs no locking.

Coroot pairings are frozen literal tables keyed by root label ("e1-e2",
"3a1+2a2", "n2-n3", ...).  A sum of coroots is written as a tuple of
labels.  The Cartan of sl3 coincides with the Cartan of g2, so sl3 coroot
labels may also be paired against g2-coordinate weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ALGEBRAS = ("so7", "g2", "sl3")
RANK = {"so7": 3, "g2": 2, "sl3": 2}


def rational(x) -> Fraction:
    """Coerce ints / 'num/den' strings / Fractions to an exact Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


def is_integer(x) -> bool:
    return Fraction(x).denominator == 1


def is_natural(x) -> bool:
    """Membership in N, which includes 0."""
    x = Fraction(x)
    return x.denominator == 1 and x >= 0


@dataclass(frozen=True)
class Weight:
    algebra: str
    coords: tuple

    def __post_init__(self):
        if self.algebra not in ALGEBRAS:
            raise ValueError(f"unknown algebra {self.algebra!r}")
        coords = tuple(rational(c) for c in self.coords)
        if len(coords) != RANK[self.algebra]:
            raise ValueError(
                f"{self.algebra} weight needs {RANK[self.algebra]} coordinates, "
                f"got {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    def _check_same(self, other):
        if not isinstance(other, Weight) or other.algebra != self.algebra:
            raise ValueError("weights live over different algebras")

    def __add__(self, other):
        self._check_same(other)
        return Weight(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check_same(other)
        return Weight(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(self.algebra, tuple(-a for a in self.coords))

    def __rmul__(self, scalar):
        s = rational(scalar)
        return Weight(self.algebra, tuple(s * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def to_json(self) -> dict:
        return {"algebra": self.algebra, "coords": [str(c) for c in self.coords]}

    @classmethod
    def from_json(cls, obj) -> "Weight":
        return cls(obj["algebra"], tuple(rational(c) for c in obj["coords"]))

    @classmethod
    def zero(cls, algebra) -> "Weight":
        return cls(algebra, (0,) * RANK[algebra])


# Frozen pairing tables: coroot label -> linear form on the coordinates.
# so7, w = a e1 + b e2 + c e3:
PAIRING_SO7 = {
    "e1": (2, 0, 0),
    "e2": (0, 2, 0),
    "e3": (0, 0, 2),
    "e1-e2": (1, -1, 0),
    "e1-e3": (1, 0, -1),
    "e2-e3": (0, 1, -1),
    "e1+e2": (1, 1, 0),
    "e1+e3": (1, 0, 1),
    "e2+e3": (0, 1, 1),
}

# g2, w = p a1 + q a2 (a1 short, a2 long):
PAIRING_G2 = {
    "a1": (2, -3),
    "a2": (-1, 2),
    "a1+a2": (-1, 3),
    "2a1+a2": (1, 0),
    "3a1+a2": (1, -1),
    "3a1+2a2": (0, 1),
}

# sl3, w = x eta1 + y eta2:
PAIRING_SL3 = {
    "n1-n2": (1, -1),
    "n2-n3": (0, 1),
    "n1-n3": (1, 0),
}

# sl3 coroots evaluated on g2-coordinate weights; this uses the
# identifications H_{n1-n2} = H_{a2} and H_{n2-n3} = H_{3a1+a2} on the
# shared Cartan.
PAIRING_SL3_ON_G2 = {
    "n1-n2": PAIRING_G2["a2"],
    "n2-n3": PAIRING_G2["3a1+a2"],
    "n1-n3": (0, 1),
}

_TABLES = {"so7": PAIRING_SO7, "g2": PAIRING_G2, "sl3": PAIRING_SL3}


def pair(w: Weight, coroot) -> Fraction:
    """Evaluate a weight on a coroot (or a sum of coroots, given as a tuple)."""
    if isinstance(coroot, (tuple, list)):
        return sum((pair(w, h) for h in coroot), Fraction(0))
    table = _TABLES[w.algebra]
    form = table.get(coroot)
    if form is None and w.algebra == "g2":
        form = PAIRING_SL3_ON_G2.get(coroot)
    if form is None:
        raise ValueError(f"coroot {coroot!r} is not defined for {w.algebra} weights")
    return sum((f * c for f, c in zip(form, w.coords)), Fraction(0))


def restrict_so7_to_g2(w: Weight) -> Weight:
    """Restriction along the Cartan inclusion h_g2 < h_so7.

    a e1 + b e2 + c e3 |-> (2a+b+c) a1 + (a+b) a2.
    """
    if w.algebra != "so7":
        raise ValueError("restriction expects an so7 weight")
    a, b, c = w.coords
    return Weight("g2", (2 * a + b + c, a + b))


def g2_to_eta(w: Weight) -> Weight:
    """Rewrite a shared-Cartan weight p a1 + q a2 as x eta1 + y eta2.

    Solving the sl3 pairing table against the shared-Cartan identifications
    gives x = q, y = p - q.
    """
    if w.algebra != "g2":
        raise ValueError("expected g2 coordinates")
    p, q = w.coords
    return Weight("sl3", (q, p - q))


def eta_to_g2(w: Weight) -> Weight:
    """Inverse of :func:`g2_to_eta`: p = x + y, q = x."""
    if w.algebra != "sl3":
        raise ValueError("expected sl3 coordinates")
    x, y = w.coords
    return Weight("g2", (x + y, x))


_RHO = {
    "so7": Weight("so7", (Fraction(5, 2), Fraction(3, 2), Fraction(1, 2))),
    "g2": Weight("g2", (5, 3)),
    "sl3": Weight("sl3", (2, 1)),
}


def rho(algebra: str) -> Weight:
    """Half-sum of positive roots in the algebra's own coordinates."""
    return _RHO[algebra]
