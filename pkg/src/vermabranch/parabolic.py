"""Compatibility of standard parabolic subalgebras with the fixed subalgebra.

A standard parabolic p_Pi of the ambient algebra is subalgebra-compatible
iff some element H = a H_{a1} + b H_{a2} of the subalgebra's Cartan has
every ambient simple root evaluating to zero on H exactly when the root
lies in Pi and to a positive number otherwise.  The evaluations are frozen
linear forms in (a, b); existence of a witness is a two-variable exact
linear feasibility problem over Q, solved by Fourier-Motzkin elimination
(strict positivity is normalized to ">= 1" by homogeneity).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .roots import ParabolicSpec, SIMPLE_ROOTS

PAIRS = ("so7-g2", "g2-sl3")

# Ambient simple root evaluated on H = a H_{a1} + b H_{a2}.  The so7 forms
# come from H = a H_1 + (b-a) H_2 + (2a-b) H_3.
AMBIENT_FORMS = {
    "so7-g2": {"e1-e2": (2, -1), "e2-e3": (-3, 2), "e3": (2, -1)},
    "g2-sl3": {"a1": (2, -1), "a2": (-3, 2)},
}

# Subalgebra simple root evaluated on the same H.
SUB_FORMS = {
    "so7-g2": {"a1": (2, -1), "a2": (-3, 2)},
    "g2-sl3": {"n1-n2": (-3, 2), "n2-n3": (3, -1)},
}

AMBIENT_ALGEBRA = {"so7-g2": "so7", "g2-sl3": "g2"}
SUB_ALGEBRA = {"so7-g2": "g2", "g2-sl3": "sl3"}

# p' = p /\ g' for each compatible standard parabolic, frozen by hand;
# tests cross-check it against witness vanishing.
_INTERSECTION = {
    "so7-g2": {
        frozenset(): frozenset(),
        frozenset({"e2-e3"}): frozenset({"a2"}),
        frozenset({"e1-e2", "e3"}): frozenset({"a1"}),
        frozenset({"e1-e2", "e2-e3", "e3"}): frozenset({"a1", "a2"}),
    },
    "g2-sl3": {
        frozenset(): frozenset(),
        frozenset({"a1"}): frozenset(),
        frozenset({"a2"}): frozenset({"n1-n2"}),
        frozenset({"a1", "a2"}): frozenset({"n1-n2", "n2-n3"}),
    },
}


class IncompatibleParabolicError(ValueError):
    pass


def _solve_one_var(constraints):
    """Feasibility of {c*x = r} / {c*x >= r} over Q; returns x or None."""
    lo, hi = None, None
    fixed = None
    for c, rel, r in constraints:
        if c == 0:
            ok = (r == 0) if rel == "eq" else (0 >= r)
            if not ok:
                return None
            continue
        bound = Fraction(r, c)
        if rel == "eq":
            if fixed is not None and fixed != bound:
                return None
            fixed = bound
        elif c > 0:
            lo = bound if lo is None else max(lo, bound)
        else:
            hi = bound if hi is None else min(hi, bound)
    if fixed is not None:
        if lo is not None and fixed < lo:
            return None
        if hi is not None and fixed > hi:
            return None
        return fixed
    if lo is not None and hi is not None and lo > hi:
        return None
    if lo is not None:
        return lo
    if hi is not None:
        return hi
    return Fraction(0)


def solve_linear_2d(constraints):
    """Exact feasibility for {ca*a + cb*b (=|>=) r}; returns (a, b) or None.

    Equalities are substituted first; the remaining inequalities go through
    one step of Fourier-Motzkin elimination.
    """
    for ca, cb, rel, r in constraints:
        if rel != "eq" or (ca == 0 and cb == 0):
            continue
        # Substitute the equality and recurse on the reduced system.
        if cb != 0:
            # b = (r - ca*a) / cb
            reduced = []
            for da, db, rel2, r2 in constraints:
                coeff = da - Fraction(db * ca, cb)
                rhs = r2 - Fraction(db * r, cb)
                reduced.append((coeff, rel2, rhs))
            a = _solve_one_var(reduced)
            if a is None:
                return None
            return a, Fraction(r - ca * a, cb)
        # ca != 0, cb == 0: a is fixed.
        a = Fraction(r, ca)
        reduced = [(db, rel2, r2 - da * a) for da, db, rel2, r2 in constraints]
        b = _solve_one_var(reduced)
        if b is None:
            return None
        return a, b

    # No usable equality: pure inequalities.  Eliminate b.
    lowers, uppers, free = [], [], []  # bounds on b as affine functions of a
    for ca, cb, rel, r in constraints:
        if rel == "eq":
            if r != 0:
                return None
            continue
        if cb == 0:
            free.append((ca, "ge", r))
        elif cb > 0:
            lowers.append((Fraction(-ca, cb), Fraction(r, cb)))
        else:
            uppers.append((Fraction(-ca, cb), Fraction(r, cb)))
    derived = list(free)
    for (ls, lr), (us, ur) in ((lo, up) for lo in lowers for up in uppers):
        # upper(a) - lower(a) >= 0
        derived.append((us - ls, "ge", lr - ur))
    a = _solve_one_var(derived)
    if a is None:
        return None
    blo = [s * a + t for s, t in lowers]
    bhi = [s * a + t for s, t in uppers]
    if blo:
        b = max(blo)
    elif bhi:
        b = min(bhi)
    else:
        b = Fraction(0)
    return a, b


def is_compatible(p: ParabolicSpec, pair_id: str):
    """Return a hyperbolic witness (a, b) for p, or None if incompatible."""
    forms = AMBIENT_FORMS[pair_id]
    if p.algebra != AMBIENT_ALGEBRA[pair_id]:
        raise ValueError(f"{pair_id} expects a {AMBIENT_ALGEBRA[pair_id]} parabolic")
    constraints = []
    for s in SIMPLE_ROOTS[p.algebra]:
        ca, cb = forms[s]
        if s in p.pi:
            constraints.append((ca, cb, "eq", Fraction(0)))
        else:
            constraints.append((ca, cb, "ge", Fraction(1)))
    return solve_linear_2d(constraints)


def witness_evaluations(pair_id: str, witness, side="ambient"):
    """Evaluations of the (ambient or sub) simple roots on the witness."""
    a, b = witness
    forms = AMBIENT_FORMS[pair_id] if side == "ambient" else SUB_FORMS[pair_id]
    return {s: ca * a + cb * b for s, (ca, cb) in forms.items()}


def intersect_parabolic(p: ParabolicSpec, pair_id: str) -> ParabolicSpec:
    """p' = p /\\ g' as a standard parabolic of the subalgebra."""
    if is_compatible(p, pair_id) is None:
        raise IncompatibleParabolicError(
            f"{sorted(p.pi)} is not a compatible parabolic for {pair_id}"
        )
    return ParabolicSpec(SUB_ALGEBRA[pair_id], _INTERSECTION[pair_id][p.pi])


def enumerate_compatible(pair_id: str):
    """All compatible standard parabolics, in subset-lattice order."""
    simple = SIMPLE_ROOTS[AMBIENT_ALGEBRA[pair_id]]
    out = []
    for size in range(len(simple) + 1):
        for combo in combinations(simple, size):
            spec = ParabolicSpec(AMBIENT_ALGEBRA[pair_id], frozenset(combo))
            if is_compatible(spec, pair_id) is not None:
                out.append(spec)
    return out
