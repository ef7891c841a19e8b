"""Closed-form branching of scalar-type generalized Verma modules.

Six cases are supported, one per compatible proper parabolic of the two
pairs so7 > g2 and g2 > sl3.  Each case record carries the data the
multiplicity formula and both verification oracles consume: the ambient
and intersected parabolics, the restricted root multisets, the Levi sl2
strings of the inducing representation, and the offsets generating the
symmetric algebra of u^- / (u^- intersect g').

Branching terms are indexed by integer offsets (p, q) on the shared
Cartan: the emitted highest weight is Res(lambda) - p a1 - q a2, reported
in eta coordinates when the subalgebra is sl3.  ``multiplicity_at`` is
the closed form; ``lattice_point_oracle`` recounts the same number by the
Clebsch-Gordan / lattice-point enumeration underlying each case's proof
and shares no code with the formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .roots import ParabolicSpec
from .weights import Weight, g2_to_eta, is_integer, is_natural, pair, restrict_so7_to_g2


class DominanceError(ValueError):
    """The inducing weight fails integral dominance for the Levi factor."""

    def __init__(self, case_id, coroot, value):
        self.case_id = case_id
        self.coroot = coroot
        self.value = value
        super().__init__(
            f"{case_id}: lambda pairs to {value} on H_{{{coroot}}}, "
            "which is not a nonnegative integer"
        )


@dataclass(frozen=True)
class BranchingCase:
    id: str
    pair_id: str
    parabolic: ParabolicSpec
    sub_parabolic: ParabolicSpec
    # coroot labels that must pair lambda into N
    dominance_coroots: tuple
    # ambient Levi sl2 strings as ((p, q) step, coroot label)
    levi_strings: tuple
    # offsets generating S(u^- / u^- /\ g'), with multiplicity
    quotient_offsets: tuple
    # restricted multiset of all ambient u^- roots
    ambient_u_offsets: tuple
    # u^- of the intersected parabolic, shared-Cartan offsets
    sub_u_offsets: tuple
    # ((p, q) step, coroot label) when the sub Levi has an sl2 factor
    sub_levi: tuple | None

    @property
    def ambient_algebra(self):
        return self.parabolic.algebra


_G2_POSITIVE_OFFSETS = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))

CASES = {
    "b3-borel": BranchingCase(
        id="b3-borel",
        pair_id="so7-g2",
        parabolic=ParabolicSpec("so7", frozenset()),
        sub_parabolic=ParabolicSpec("g2", frozenset()),
        dominance_coroots=(),
        levi_strings=(),
        quotient_offsets=((1, 0), (1, 1), (2, 1)),
        ambient_u_offsets=(
            (1, 0), (1, 0), (0, 1), (1, 1), (1, 1), (2, 1), (2, 1), (3, 1), (3, 2),
        ),
        sub_u_offsets=_G2_POSITIVE_OFFSETS,
        sub_levi=None,
    ),
    "b3-p23": BranchingCase(
        id="b3-p23",
        pair_id="so7-g2",
        parabolic=ParabolicSpec("so7", frozenset({"e2-e3"})),
        sub_parabolic=ParabolicSpec("g2", frozenset({"a2"})),
        dominance_coroots=("e2-e3",),
        levi_strings=(((0, 1), "e2-e3"),),
        quotient_offsets=((1, 0), (1, 1), (2, 1)),
        ambient_u_offsets=(
            (1, 0), (1, 0), (1, 1), (1, 1), (2, 1), (2, 1), (3, 1), (3, 2),
        ),
        sub_u_offsets=((1, 0), (1, 1), (2, 1), (3, 1), (3, 2)),
        sub_levi=((0, 1), "a2"),
    ),
    "b3-p12-3": BranchingCase(
        id="b3-p12-3",
        pair_id="so7-g2",
        parabolic=ParabolicSpec("so7", frozenset({"e1-e2", "e3"})),
        sub_parabolic=ParabolicSpec("g2", frozenset({"a1"})),
        dominance_coroots=("e1-e2", "e3"),
        levi_strings=(((1, 0), "e1-e2"), ((1, 0), "e3")),
        quotient_offsets=((1, 1), (2, 1)),
        ambient_u_offsets=(
            (0, 1), (1, 1), (1, 1), (2, 1), (2, 1), (3, 1), (3, 2),
        ),
        sub_u_offsets=((0, 1), (1, 1), (2, 1), (3, 1), (3, 2)),
        sub_levi=((1, 0), "a1"),
    ),
    "g2-borel": BranchingCase(
        id="g2-borel",
        pair_id="g2-sl3",
        parabolic=ParabolicSpec("g2", frozenset()),
        sub_parabolic=ParabolicSpec("sl3", frozenset()),
        dominance_coroots=(),
        levi_strings=(),
        quotient_offsets=((1, 0), (1, 1), (2, 1)),
        ambient_u_offsets=_G2_POSITIVE_OFFSETS,
        sub_u_offsets=((0, 1), (3, 1), (3, 2)),
        sub_levi=None,
    ),
    "g2-p1": BranchingCase(
        id="g2-p1",
        pair_id="g2-sl3",
        parabolic=ParabolicSpec("g2", frozenset({"a1"})),
        sub_parabolic=ParabolicSpec("sl3", frozenset()),
        dominance_coroots=("a1",),
        levi_strings=(((1, 0), "a1"),),
        quotient_offsets=((1, 1), (2, 1)),
        ambient_u_offsets=((0, 1), (1, 1), (2, 1), (3, 1), (3, 2)),
        sub_u_offsets=((0, 1), (3, 1), (3, 2)),
        sub_levi=None,
    ),
    "g2-p2": BranchingCase(
        id="g2-p2",
        pair_id="g2-sl3",
        parabolic=ParabolicSpec("g2", frozenset({"a2"})),
        sub_parabolic=ParabolicSpec("sl3", frozenset({"n1-n2"})),
        dominance_coroots=("a2",),
        levi_strings=(((0, 1), "a2"),),
        quotient_offsets=((1, 0), (1, 1), (2, 1)),
        ambient_u_offsets=((1, 0), (1, 1), (2, 1), (3, 1), (3, 2)),
        sub_u_offsets=((3, 1), (3, 2)),
        sub_levi=((0, 1), "n1-n2"),
    ),
}

CASE_IDS = tuple(CASES)


def get_case(case) -> BranchingCase:
    if isinstance(case, BranchingCase):
        return case
    try:
        return CASES[case]
    except KeyError:
        raise ValueError(f"unknown branching case {case!r}") from None


def check_dominance(case, lam: Weight):
    """Require the Levi-dominance pairings of lambda to lie in N."""
    case = get_case(case)
    if lam.algebra != case.ambient_algebra:
        raise ValueError(
            f"{case.id} expects a {case.ambient_algebra} weight, got {lam.algebra}"
        )
    for label in case.dominance_coroots:
        v = pair(lam, label)
        if not is_natural(v):
            raise DominanceError(case.id, label, v)


def restricted_highest_weight(case, lam: Weight) -> Weight:
    """Res(lambda) on the shared Cartan, in g2 coordinates."""
    case = get_case(case)
    if lam.algebra != case.ambient_algebra:
        raise ValueError(
            f"{case.id} expects a {case.ambient_algebra} weight, got {lam.algebra}"
        )
    return restrict_so7_to_g2(lam) if lam.algebra == "so7" else lam


def multiplicity_at(case, lam: Weight, p, q) -> int:
    """Closed-form multiplicity of the term at offset (p, q) from Res(lambda)."""
    case = get_case(case)
    check_dominance(case, lam)
    if not (is_integer(p) and is_integer(q)):
        return 0
    p, q = int(p), int(q)
    cid = case.id

    if cid in ("b3-borel", "g2-borel"):
        if q < 0 or p - q < 0:
            return 0
        return 1 + min(q, p - q)

    if cid == "g2-p1":
        n = int(pair(lam, "a1"))
        if q < 0 or p - q < 0:
            return 0
        return max(0, 1 + min(q, p - q) - max(p - q - n, 0))

    if cid in ("b3-p23", "g2-p2"):
        n2 = int(pair(lam, "e2-e3" if cid == "b3-p23" else "a2"))
        if q < 0 or p - q < 0 or n2 + p - 2 * q < 0:
            return 0
        top = min(p, 2 * n2 + p - 2 * q)
        return 1 + (top - abs(2 * q - p)) // 2

    # b3-p12-3
    n1 = int(pair(lam, "e1-e2"))
    n3 = int(pair(lam, "e3"))
    d = (n1 + n3) - (2 * p - 3 * q)
    hi = min(q + d, n1 + n3)
    lo = max(abs(q - d), abs(n1 - n3))
    if lo > hi:
        return 0
    return 1 + (hi - lo) // 2


def multiplicity(case, lam: Weight, delta: Weight) -> int:
    """Multiplicity of the sub generalized Verma with highest weight delta."""
    case = get_case(case)
    lam0 = restricted_highest_weight(case, lam)
    if case.pair_id == "g2-sl3":
        if delta.algebra != "sl3":
            raise ValueError("g2-sl3 cases take delta in eta coordinates")
        from .weights import eta_to_g2

        delta = eta_to_g2(delta)
    elif delta.algebra != "g2":
        raise ValueError("so7-g2 cases take delta in g2 coordinates")
    off = lam0 - delta
    return multiplicity_at(case, lam, off.coords[0], off.coords[1])


def lattice_point_oracle(case, lam: Weight, p, q) -> int:
    """Recount the multiplicity by the enumeration used in the case's proof.

    Torus sub-Levi cases count monomials of S(u^-/u^- /\\ g') spread along
    the ambient Levi strings; sl2 sub-Levi cases count Clebsch-Gordan
    components of the relevant string tensor products.  No code is shared
    with ``multiplicity_at``.
    """
    case = get_case(case)
    check_dominance(case, lam)
    if not (is_integer(p) and is_integer(q)):
        return 0
    p, q = int(p), int(q)
    cid = case.id
    count = 0

    if cid in ("b3-borel", "g2-borel"):
        # monomials (1,0)^i (1,1)^j (2,1)^k hitting (p, q)
        if p >= 0 and q >= 0:
            for j in range(q + 1):
                for k in range(q + 1):
                    i = p - j - 2 * k
                    if i >= 0 and j + k == q:
                        count += 1
        return count

    if cid == "g2-p1":
        # string step t along (1,0), then monomials (1,1)^i (2,1)^j
        n = int(pair(lam, "a1"))
        if p >= 0 and q >= 0:
            for t in range(n + 1):
                for j in range(q + 1):
                    i = q - j
                    if i >= 0 and t + i + 2 * j == p:
                        count += 1
        return count

    if cid in ("b3-p23", "g2-p2"):
        # Sym^i of the two (+1, -1)-weight quotient roots carries spin i;
        # tensor against the spin-n2 Levi string, center degree i + 2j = p.
        n2 = int(pair(lam, "e2-e3" if cid == "b3-p23" else "a2"))
        d2 = n2 + p - 2 * q
        if d2 >= 0 and p >= 0:
            for i in range(p % 2, p + 1, 2):
                if abs(n2 - i) <= d2 <= n2 + i and (d2 - (n2 + i)) % 2 == 0:
                    count += 1
        return count

    # b3-p12-3: two Levi strings couple to spin i, the quotient Sym^q
    # carries spin q, and the component spin is pinned by (p, q).
    n1 = int(pair(lam, "e1-e2"))
    n3 = int(pair(lam, "e3"))
    d = (n1 + n3) - (2 * p - 3 * q)
    if q >= 0:
        for i in range(abs(n1 - n3), n1 + n3 + 1, 2):
            if abs(i - q) <= d <= i + q and (d - (i + q)) % 2 == 0:
                count += 1
    return count


@dataclass(frozen=True)
class BranchingTerm:
    delta: Weight
    offset: tuple
    multiplicity: int

    def to_json(self):
        return {
            "delta": self.delta.to_json(),
            "offset": [int(self.offset[0]), int(self.offset[1])],
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class Decomposition:
    case_id: str
    lam: Weight
    depth: int
    terms: tuple

    def to_json(self):
        case = CASES[self.case_id]
        return {
            "case": self.case_id,
            "pair": case.pair_id,
            "parabolic": case.parabolic.to_json(),
            "sub_parabolic": case.sub_parabolic.to_json(),
            "lambda": self.lam.to_json(),
            "depth": self.depth,
            "terms": [t.to_json() for t in self.terms],
        }

    def to_latex(self):
        parts = []
        for t in self.terms:
            cs = ", ".join(str(c) for c in t.delta.coords)
            coeff = "" if t.multiplicity == 1 else f"{t.multiplicity}\\, "
            parts.append(f"{coeff}M_{{\\mathfrak{{p}}'}}({cs})")
        body = " \\oplus ".join(parts) if parts else "0"
        return (
            f"M_{{\\mathfrak{{p}}}}(\\lambda) \\equiv {body} "
            f"\\pmod{{\\text{{degree}} > {self.depth}}}"
        )


def enumerate_decomposition(case, lam: Weight, depth: int) -> Decomposition:
    """All terms of offset degree p + q <= depth, sorted by (p + q, p).

    The offset grid deliberately overshoots into negative coordinates so
    the formula's own gates, not the loop bounds, decide what is emitted.
    """
    case = get_case(case)
    check_dominance(case, lam)
    lam0 = restricted_highest_weight(case, lam)
    terms = []
    for s in range(depth + 1):
        for p in range(-depth, 2 * depth + 1):
            q = s - p
            m = multiplicity_at(case, lam, p, q)
            if m > 0:
                delta = lam0 - Weight("g2", (p, q))
                if case.pair_id == "g2-sl3":
                    delta = g2_to_eta(delta)
                terms.append(BranchingTerm(delta, (p, q), m))
    return Decomposition(case.id, lam, depth, tuple(terms))
