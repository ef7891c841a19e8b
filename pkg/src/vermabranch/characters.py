"""Truncated formal characters on the shared Cartan and two slow oracles.

A character is a sparse dict mapping integer offsets (p, q) to
multiplicities; the offset is measured downward from an anchor weight, so
the anchor itself is the key (0, 0).  Everything is truncated to total
offset degree p + q <= depth, and every operation preserves that
truncation, which keeps the degree-by-degree bookkeeping exact.

Two verification paths live here.  ``hom_multiplicity`` recounts a
branching multiplicity from raw weight multisets: it builds the character
of Res F_lambda tensor S(u^-/u^- /\\ g') and strips sub-Levi sl2 strings
by the difference rule m(d) = N(d) - N(d + 2).  ``peel`` verifies the
whole decomposition at once: it greedily subtracts sub generalized Verma
characters from the restricted ambient character and fails loudly if a
remainder coefficient is negative or sits at a non-dominant offset.
"""

from __future__ import annotations

import json
from functools import lru_cache

from .branching import CASES, check_dominance, get_case, restricted_highest_weight
from .weights import Weight, g2_to_eta, is_integer, pair


def truncate(char: dict, depth: int) -> dict:
    return {k: v for k, v in char.items() if k[0] + k[1] <= depth and v}


def convolve(c1: dict, c2: dict, depth: int) -> dict:
    out = {}
    for (p1, q1), v1 in c1.items():
        for (p2, q2), v2 in c2.items():
            p, q = p1 + p2, q1 + q2
            if p + q <= depth:
                out[(p, q)] = out.get((p, q), 0) + v1 * v2
    return {k: v for k, v in out.items() if v}


def geometric(offset, depth: int) -> dict:
    """(1 - e^{-beta})^{-1} truncated: all N-multiples of the offset."""
    dp, dq = offset
    out = {}
    k = 0
    while k * (dp + dq) <= depth:
        out[(k * dp, k * dq)] = 1
        k += 1
    return out


@lru_cache(maxsize=None)
def _geometric_product(offsets: tuple, depth: int) -> dict:
    out = {(0, 0): 1}
    for off in offsets:
        out = convolve(out, geometric(off, depth), depth)
    return out


def string_character(step, length, depth: int) -> dict:
    """Weights of an sl2 string: t * step for t = 0..length, truncated."""
    dp, dq = step
    out = {}
    for t in range(length + 1):
        if t * (dp + dq) > depth:
            break
        out[(t * dp, t * dq)] = 1
    return out


def levi_character(case, lam: Weight, depth: int) -> dict:
    """Res of the inducing Levi representation, anchored at Res(lambda)."""
    case = get_case(case)
    check_dominance(case, lam)
    out = {(0, 0): 1}
    for step, coroot in case.levi_strings:
        out = convolve(out, string_character(step, int(pair(lam, coroot)), depth), depth)
    return out


def module_character(case, lam: Weight, depth: int) -> dict:
    """Res of the full ambient generalized Verma, anchored at Res(lambda)."""
    case = get_case(case)
    return convolve(
        levi_character(case, lam, depth),
        dict(_geometric_product(case.ambient_u_offsets, depth)),
        depth,
    )


def quotient_tensor_character(case, lam: Weight, depth: int) -> dict:
    """Res F_lambda tensor S(u^-/u^- /\\ g'), the branching-space character."""
    case = get_case(case)
    return convolve(
        levi_character(case, lam, depth),
        dict(_geometric_product(case.quotient_offsets, depth)),
        depth,
    )


def sub_module_character(case, string_length, depth: int) -> dict:
    """Sub generalized Verma character anchored at its own highest weight.

    ``string_length`` is delta paired against the sub-Levi coroot; it is
    ignored for torus sub-Levis.
    """
    case = get_case(case)
    out = dict(_geometric_product(case.sub_u_offsets, depth))
    if case.sub_levi is not None:
        step, _ = case.sub_levi
        out = convolve(out, string_character(step, string_length, depth), depth)
    return out


def sub_dominance_pairing(case, lam: Weight, p, q):
    """delta paired on the sub-Levi coroot, or None for a torus sub-Levi."""
    case = get_case(case)
    if case.sub_levi is None:
        return None
    _, coroot = case.sub_levi
    lam0 = restricted_highest_weight(case, lam)
    delta = lam0 - Weight("g2", (p, q))
    return pair(delta, coroot)


def hom_multiplicity(case, lam: Weight, p, q, depth: int, _table=None) -> int:
    """Branching multiplicity recounted from weight multisets.

    Requires p + q <= depth - 1 when the sub-Levi has an sl2 factor, since
    the string-stripping rule reads one degree past the offset.
    """
    case = get_case(case)
    if not (is_integer(p) and is_integer(q)):
        return 0
    p, q = int(p), int(q)
    table = _table if _table is not None else quotient_tensor_character(case, lam, depth)
    if case.sub_levi is None:
        return table.get((p, q), 0)
    d = sub_dominance_pairing(case, lam, p, q)
    if not (is_integer(d) and d >= 0):
        return 0
    step = case.sub_levi[0]
    n_here = table.get((p, q), 0)
    n_next = table.get((p - step[0], q - step[1]), 0)
    return n_here - n_next


def hom_surface(case, lam: Weight, depth: int) -> dict:
    """All positive hom multiplicities at offset degree <= depth."""
    case = get_case(case)
    # one extra degree so the string-stripping difference is never clipped
    table = quotient_tensor_character(case, lam, depth + 1)
    out = {}
    for (p, q) in sorted(table, key=lambda k: (k[0] + k[1], k[0])):
        if p + q > depth:
            continue
        m = hom_multiplicity(case, lam, p, q, depth + 1, _table=table)
        if m > 0:
            out[(p, q)] = m
    return out


class OracleFailure(Exception):
    """Character peeling hit a remainder it cannot attribute to any term."""

    def __init__(self, case_id, lam, offset, remainder_coefficient):
        self.case_id = case_id
        self.lam = lam
        self.offset = offset
        self.remainder_coefficient = remainder_coefficient
        super().__init__(json.dumps(self.to_json()))

    def to_json(self):
        return {
            "case": self.case_id,
            "lambda": self.lam.to_json(),
            "offset": [int(self.offset[0]), int(self.offset[1])],
            "remainder_coefficient": int(self.remainder_coefficient),
        }


def peel(case, lam: Weight, depth: int) -> dict:
    """Decompose the restricted ambient character by subtracting sub
    generalized Verma characters, smallest (p + q, p) offset first.

    Returns {offset: multiplicity}; raises :class:`OracleFailure` when a
    leading remainder coefficient is negative or its offset is not
    sub-dominant."""
    case = get_case(case)
    remainder = module_character(case, lam, depth)
    found = {}
    while True:
        live = [k for k, v in remainder.items() if v]
        if not live:
            return found
        off = min(live, key=lambda k: (k[0] + k[1], k[0]))
        c = remainder[off]
        d = sub_dominance_pairing(case, lam, off[0], off[1])
        if c < 0 or (d is not None and (not is_integer(d) or d < 0)):
            raise OracleFailure(case.id, lam, off, c)
        length = 0 if d is None else int(d)
        sub = sub_module_character(case, length, depth - off[0] - off[1])
        for (sp, sq), sv in sub.items():
            k = (off[0] + sp, off[1] + sq)
            nv = remainder.get(k, 0) - c * sv
            if nv:
                remainder[k] = nv
            else:
                remainder.pop(k, None)
        found[off] = c


def peel_decomposition(case, lam: Weight, depth: int):
    """Peel, reported in the same shape as the closed-form enumeration:
    a list of (delta, offset, multiplicity) sorted by (p + q, p)."""
    case = get_case(case)
    lam0 = restricted_highest_weight(case, lam)
    out = []
    for off in sorted(peel(case, lam, depth), key=lambda k: (k[0] + k[1], k[0])):
        delta = lam0 - Weight("g2", off)
        if case.pair_id == "g2-sl3":
            delta = g2_to_eta(delta)
        out.append((delta, off))
    return out


def degree_totals(char: dict, depth: int) -> list:
    """Total multiplicity per offset degree 0..depth."""
    out = [0] * (depth + 1)
    for (p, q), v in char.items():
        if 0 <= p + q <= depth:
            out[p + q] += v
    return out


def gl2_tensor_decompose(i: int, n: int) -> list:
    """Spins in the tensor product of sl2 irreps of spins i and n."""
    if i < 0 or n < 0:
        raise ValueError("spins are nonnegative integers")
    return list(range(abs(n - i), n + i + 1, 2))
