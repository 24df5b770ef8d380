"""The reduced power monoid: sets containing 0, atoms, factorizations.

Restricting the power monoid to sets with 0 as an element quotients away
translation and makes factorization meaningful: {0} is the unit, and since
0 in Z forces Y to be a subset of Y + Z, both halves of any factorization of
X are subsets of X.  That containment bound is what keeps the enumeration
here exact and finite.
"""

from __future__ import annotations

from collections.abc import Iterable

from .finset import FinSet, sumset

# Factorization enumeration is exponential in |X|; refuse past this size
# unless the caller raises the cap explicitly.
DEFAULT_MAX_SIZE = 24


class ZeroSet(FinSet):
    """A FinSet required to contain 0."""

    __slots__ = ()

    def __init__(self, values: Iterable[int]):
        super().__init__(values)
        if 0 not in self:
            raise ValueError("set does not contain 0")


UNIT = ZeroSet((0,))


def as_zero_set(x: FinSet | Iterable[int]) -> ZeroSet:
    """Coerce to a ZeroSet, rejecting sets without 0."""
    if isinstance(x, ZeroSet):
        return x
    return ZeroSet(x)


def _free_elems(x: ZeroSet) -> list[int]:
    return [v for v in x if v != 0]


def _from_mask(free: list[int], mask: int) -> ZeroSet:
    # bit i of mask selects free[i]; 0 always included
    chosen = [0]
    i = 0
    while mask:
        if mask & 1:
            chosen.append(free[i])
        mask >>= 1
        i += 1
    return ZeroSet(chosen)


def _check_cap(x: ZeroSet, max_size: int) -> None:
    if len(x) > max_size:
        raise ValueError(f"set has {len(x)} elements, above the enumeration cap {max_size}")


def _cofactor_mask(x: ZeroSet, y: ZeroSet, free: list[int], pos: dict[int, int]) -> int:
    """Mask of the largest Z with Y + Z inside x (0 excluded from the mask).

    Any factorization Y + Z = x has Z below this mask, and Y plus the full
    mask set reaching x is necessary and sufficient for one to exist.
    """
    xset = set(x.elems)
    zm = 0
    for z in x:
        if z != 0 and all(v + z in xset for v in y):
            zm |= 1 << pos[z]
    return zm


def factorizations(x: FinSet, max_size: int = DEFAULT_MAX_SIZE) -> list[tuple[ZeroSet, ZeroSet]]:
    """All nontrivial factorizations of x in the reduced power monoid.

    Returns every unordered pair {Y, Z} of ZeroSets, both != {0}, with
    Y + Z = x; each pair appears once, lexicographically least element
    first, and the list of pairs is itself sorted lexicographically.
    """
    x = as_zero_set(x)
    _check_cap(x, max_size)
    free = _free_elems(x)
    pos = {v: i for i, v in enumerate(free)}
    found = []
    for my in range(1, 1 << len(free)):
        y = _from_mask(free, my)
        zm = _cofactor_mask(x, y, free, pos)
        if zm == 0 or sumset(y, _from_mask(free, zm)) != x:
            continue
        # walk submasks of zm; only s >= my so each unordered pair shows once
        s = zm
        while True:
            if s >= my and sumset(y, (z := _from_mask(free, s))) == x:
                found.append((y, z) if y.elems <= z.elems else (z, y))
            if s == 0:
                break
            s = (s - 1) & zm
    found.sort(key=lambda p: (p[0].elems, p[1].elems))
    return found


def is_atom(x: FinSet, max_size: int = DEFAULT_MAX_SIZE) -> bool:
    """True when x is an atom: not the unit and with no nontrivial factorization."""
    x = as_zero_set(x)
    if x == UNIT:
        return False
    _check_cap(x, max_size)
    free = _free_elems(x)
    pos = {v: i for i, v in enumerate(free)}
    for my in range(1, 1 << len(free)):
        y = _from_mask(free, my)
        zm = _cofactor_mask(x, y, free, pos)
        if zm and sumset(y, _from_mask(free, zm)) == x:
            return False
    return True


def candidates_with_bounds(lo: int, hi: int) -> list[ZeroSet]:
    """All ZeroSets with the given minimum and maximum, in mask order.

    Elements strictly between the endpoints are free except 0, which is
    forced.  Returns [] when no ZeroSet can have these bounds.
    """
    if lo > hi or lo > 0 or hi < 0:
        return []
    forced = {lo, 0, hi}
    free = [v for v in range(lo + 1, hi) if v != 0]
    out = []
    for mask in range(1 << len(free)):
        chosen = set(forced)
        m = mask
        i = 0
        while m:
            if m & 1:
                chosen.add(free[i])
            m >>= 1
            i += 1
        out.append(ZeroSet(chosen))
    return out
