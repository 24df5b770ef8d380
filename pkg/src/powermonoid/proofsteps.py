"""Separating witnesses for pairs of sets with the same bounds.

Two distinct zero-anchored sets with equal minimum and maximum have run
endpoint sequences that first differ at some index v.  Padding both sets
with a suitable helper then yields a point lying in one padded sum but not
the other, while strictly shrinking the combined boxing dimension; that
descent is the engine of the uniqueness argument.  The divergence splits
into two shapes: at a run's start (v even) a short interval [[0,d]] exposes
the gap below it, at a run's end (v odd) a far-away interval block C makes
everything above the diverging run collapse while the point just past the
shorter run survives on one side only.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .boxing import bdim, runs
from .finset import FinSet, interval, make_set, sumset
from .monoid import ZeroSet, as_zero_set


class Divergence(Enum):
    RUN_START = "run-start"
    RUN_END = "run-end"
    NONE = "none"


class OrientationError(ValueError):
    """The pair is valid but the arguments are in the wrong order."""


@dataclass(frozen=True)
class DivergenceWitness:
    case: Divergence
    v: int
    helper: FinSet
    witness_point: int
    lhs: FinSet
    rhs: FinSet


def _coerce_pair(a: FinSet, b: FinSet) -> tuple[ZeroSet, ZeroSet]:
    a, b = as_zero_set(a), as_zero_set(b)
    if (a.min, a.max) != (b.min, b.max):
        raise ValueError("endpoint bounds of the two sets must agree")
    if not (a.min < 0 < a.max):
        raise ValueError("bounds must straddle zero strictly")
    return a, b


def first_divergence(a: FinSet, b: FinSet) -> tuple[int | None, Divergence]:
    """Index and kind of the first endpoint-sequence difference.

    Returns (None, Divergence.NONE) when the sets are equal.  Comparison
    never needs to look past the shorter endpoint sequence: equal bounds
    force a difference before it runs out.
    """
    a, b = _coerce_pair(a, b)
    ea, eb = runs(a).endpoints, runs(b).endpoints
    for v, (x, y) in enumerate(zip(ea, eb)):
        if x != y:
            kind = Divergence.RUN_START if v % 2 == 0 else Divergence.RUN_END
            return v, kind
    if a == b:
        return None, Divergence.NONE
    raise AssertionError("distinct sets with agreeing endpoint prefixes")


def run_start_witness(a: FinSet, b: FinSet) -> DivergenceWitness:
    """Witness for a pair whose endpoints first differ at a run start.

    Orientation contract: the first set must own the earlier run start
    (a_v < b_v); otherwise OrientationError tells the caller to swap.
    """
    a, b = _coerce_pair(a, b)
    v, kind = first_divergence(a, b)
    if kind is not Divergence.RUN_START:
        raise ValueError(f"pair does not diverge at a run start (divergence: {kind.value})")
    ea = runs(a).endpoints
    eb = runs(b).endpoints
    if ea[v] > eb[v]:
        raise OrientationError("the second set owns the earlier run start; swap the arguments")
    # v is even and positive: index 0 is the shared minimum
    d = ea[v] - ea[v - 1] - 1
    helper = interval(0, d)
    lhs = sumset(a, helper)
    rhs = sumset(b, helper)
    w = ea[v]
    if w not in lhs or w in rhs:
        raise AssertionError("separating point failed its membership contract")
    if bdim(lhs) > bdim(a) - 1:
        raise AssertionError("padding did not shrink the boxing dimension")
    return DivergenceWitness(Divergence.RUN_START, v, helper, w, lhs, rhs)


def run_end_witness(a: FinSet, b: FinSet, c: int | None = None) -> DivergenceWitness:
    """Witness for a pair whose endpoints first differ at a run end.

    Orientation contract: the first set must own the later run end
    (a_v > b_v).  The padding block C = [[-min+a_v+1, c]] needs c at least
    wide enough to bridge every gap of both sets; c defaults to that
    minimum width and smaller values are rejected.
    """
    a, b = _coerce_pair(a, b)
    v, kind = first_divergence(a, b)
    if kind is not Divergence.RUN_END:
        raise ValueError(f"pair does not diverge at a run end (divergence: {kind.value})")
    ea = runs(a).endpoints
    eb = runs(b).endpoints
    u = (v - 1) // 2
    r = bdim(a) - 1
    s = bdim(b) - 1
    if u == 0:
        raise ValueError(
            "divergence at the end of the first run is outside the supported cases; flagged for manual review"
        )
    if u >= r:
        raise ValueError("divergence at the end of the final run is outside the supported cases")
    if ea[v] < eb[v]:
        raise OrientationError("the second set owns the later run end; swap the arguments")
    lo = a.min
    c0 = -lo + ea[v] + max(ea[2 * r] - ea[1], eb[2 * s] - eb[1])
    if c is None:
        c = c0
    elif c < c0:
        raise ValueError(f"c below the minimum padding width {c0}")
    block = interval(-lo + ea[v] + 1, c)
    collapsed = interval(ea[v] + 1, a.max + c)
    if sumset(a, block) != collapsed or sumset(b, block) != collapsed:
        raise AssertionError("padding block failed to collapse both sets to one interval")
    helper = make_set((0,) + block.elems)
    lhs = sumset(a, helper)
    rhs = sumset(b, helper)
    # run structure of the padded sums: low runs survive, the rest is one interval
    lhs_expect = set(range(ea[2 * u], a.max + c + 1))
    for j in range(u):
        lhs_expect.update(range(ea[2 * j], ea[2 * j + 1] + 1))
    h = min(eb[2 * s], ea[v] + 1)
    rhs_expect = set(range(h, b.max + c + 1))
    for j in range(s):
        rhs_expect.update(range(eb[2 * j], eb[2 * j + 1] + 1))
    if lhs != make_set(lhs_expect) or rhs != make_set(rhs_expect):
        raise AssertionError("padded sums do not match their predicted run structure")
    w = eb[v] + 1
    if w not in lhs or w in rhs:
        raise AssertionError("separating point failed its membership contract")
    if bdim(lhs) > bdim(a) - 1:
        raise AssertionError("padding did not shrink the boxing dimension")
    return DivergenceWitness(Divergence.RUN_END, v, helper, w, lhs, rhs)


def induction_measure(a: FinSet, b: FinSet) -> int:
    """bdim(a) + bdim(b), the quantity the descent shrinks."""
    return bdim(a) + bdim(b)


def _random_profile(rng: random.Random, min_runs: int) -> list[tuple[int, int]]:
    """Random run profile containing 0 with min < 0 < max."""
    while True:
        nr = rng.randint(min_runs, min_runs + 3)
        pos = 0
        raw = []
        for _ in range(nr):
            length = rng.randint(1, 4)
            raw.append((pos, pos + length - 1))
            pos += length - 1 + rng.randint(2, 5)
        j0 = rng.randrange(nr)
        lo, hi = raw[j0]
        # anchor 0 strictly inside the overall span
        lo_ok = lo + 1 if j0 == 0 else lo
        hi_ok = hi - 1 if j0 == nr - 1 else hi
        if lo_ok > hi_ok:
            continue
        shift = rng.randint(lo_ok, hi_ok)
        return [(a - shift, b - shift) for a, b in raw]


def _materialize(profile: list[tuple[int, int]]) -> ZeroSet:
    elems = []
    for lo, hi in profile:
        elems.extend(range(lo, hi + 1))
    return as_zero_set(elems)


def random_run_start_pair(rng: random.Random) -> tuple[ZeroSet, ZeroSet]:
    """Seeded (A, B) pair diverging first at a run start, A oriented first."""
    while True:
        profile = _random_profile(rng, 2)
        nr = len(profile)
        u = rng.randint(1, nr - 1)
        lo, hi = profile[u]
        top = min(hi, 0 if lo <= 0 <= hi else hi)
        if lo + 1 > top:
            continue
        delta = rng.randint(1, top - lo)
        b_profile = list(profile)
        b_profile[u] = (lo + delta, hi)
        return _materialize(profile), _materialize(b_profile)


def random_run_end_pair(rng: random.Random) -> tuple[ZeroSet, ZeroSet]:
    """Seeded (A, B) pair diverging first at an interior run end, A oriented first."""
    while True:
        profile = _random_profile(rng, 3)
        nr = len(profile)
        u = rng.randint(1, nr - 2)
        lo, hi = profile[u]
        bottom = max(lo, 0 if lo <= 0 <= hi else lo)
        if bottom > hi - 1:
            continue
        delta = rng.randint(1, hi - bottom)
        b_profile = list(profile)
        b_profile[u] = (lo, hi - delta)
        return _materialize(profile), _materialize(b_profile)
