"""Exact arithmetic on finite sets of integers.

The basic object is :class:`FinSet`, an immutable sorted set of integers in
the signed 64-bit range.  Sets combine under the Minkowski sum
``X + Y = {x + y : x in X, y in Y}``, the product of the power monoid the
rest of the package studies.  Two independent implementations of the sum are
kept side by side on purpose: :func:`sumset` is the bit-parallel fast path
used everywhere, :func:`sumset_naive` is the pairwise reference oracle the
test suite checks it against.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

# Magnitude cap standing in for a native signed 64-bit width; results that
# would leave the range raise OverflowError instead of wrapping.
MAX_ELEMENT = 2**63 - 1

# Sumsets wider than this many bits take the pairwise route; a sparse set
# like {0, 2**40} must not allocate a 2**40-bit mask.
_DENSE_SPAN_LIMIT = 1 << 20


class FinSet:
    """Immutable nonempty finite set of integers, stored sorted.

    Supports ``+`` as the Minkowski sum, iteration in ascending order,
    ``in``, ``len``, equality and hashing by element sequence.
    """

    __slots__ = ("_elems",)

    def __init__(self, values: Iterable[int]):
        seen = set()
        for v in values:
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"set elements must be integers, got {v!r}")
            if v > MAX_ELEMENT or v < -MAX_ELEMENT:
                raise OverflowError(f"element {v} outside the supported integer range")
            seen.add(v)
        if not seen:
            raise ValueError("empty set is not an element of the power monoid")
        self._elems = tuple(sorted(seen))

    @property
    def elems(self) -> tuple[int, ...]:
        return self._elems

    @property
    def min(self) -> int:
        return self._elems[0]

    @property
    def max(self) -> int:
        return self._elems[-1]

    def __iter__(self) -> Iterator[int]:
        return iter(self._elems)

    def __len__(self) -> int:
        return len(self._elems)

    def __contains__(self, v: object) -> bool:
        return v in self._elems

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinSet):
            return NotImplemented
        return self._elems == other._elems

    def __hash__(self) -> int:
        return hash(self._elems)

    def __add__(self, other: object) -> "FinSet":
        if not isinstance(other, FinSet):
            return NotImplemented
        return sumset(self, other)

    def __str__(self) -> str:
        return format_set(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_set(self)})"


def make_set(values: Iterable[int]) -> FinSet:
    """Build a :class:`FinSet` from any iterable of integers."""
    return FinSet(values)


def interval(lo: int, hi: int) -> FinSet:
    """The discrete interval {lo, lo+1, ..., hi}; lo > hi is an error."""
    if lo > hi:
        raise ValueError(f"empty interval [{lo},{hi}]")
    return FinSet(range(lo, hi + 1))


def bounds(x: FinSet) -> tuple[int, int]:
    return (x.min, x.max)


def translate(x: FinSet, t: int) -> FinSet:
    """x + t elementwise."""
    return FinSet(v + t for v in x)


def reflect(x: FinSet, t: int) -> FinSet:
    """t - x elementwise (reflection through t/2)."""
    return FinSet(t - v for v in x)


def sumset_naive(x: FinSet, y: FinSet) -> FinSet:
    """Minkowski sum by direct pairwise enumeration.  Reference oracle."""
    return FinSet({a + b for a in x for b in y})


def _bit_mask(x: FinSet) -> int:
    # bit i set  <=>  x.min + i in x
    base = x.min
    m = 0
    for v in x:
        m |= 1 << (v - base)
    return m


def _from_mask(mask: int, base: int) -> FinSet:
    elems = []
    while mask:
        low = mask & -mask
        elems.append(base + low.bit_length() - 1)
        mask ^= low
    return FinSet(elems)


def sumset(x: FinSet, y: FinSet) -> FinSet:
    """Minkowski sum x + y, bit-parallel.

    The sum is the union of |y| shifted copies of x; with x as a dense bit
    vector anchored at its minimum, each copy is one shift and the union is
    bitwise or.  Falls back to :func:`sumset_naive` when the result span is
    too wide for a dense mask.
    """
    lo = x.min + y.min
    hi = x.max + y.max
    if hi - lo > _DENSE_SPAN_LIMIT:
        return sumset_naive(x, y)
    mx = _bit_mask(x)
    ybase = y.min
    acc = 0
    for v in y:
        acc |= mx << (v - ybase)
    return _from_mask(acc, lo)


def kfold(x: FinSet, k: int) -> FinSet:
    """k-fold sumset x + x + ... + x; the empty fold (k = 0) is {0}."""
    if k < 0:
        raise ValueError("fold count must be nonnegative")
    acc = FinSet((0,))
    base = x
    while k:
        if k & 1:
            acc = sumset(acc, base)
        k >>= 1
        if k:
            base = sumset(base, base)
    return acc


def format_set(x: FinSet) -> str:
    """Canonical literal: ascending, comma-separated, no spaces."""
    return "{" + ",".join(str(v) for v in x) + "}"


def parse_set(text: str) -> FinSet:
    """Parse a set literal ``{1,2,3}`` or interval shorthand ``LO..HI``.

    Raises ValueError naming the offending token on malformed input.
    """
    s = text.strip()
    if s.startswith("{"):
        if not s.endswith("}"):
            raise ValueError(f"unterminated set literal {text!r}")
        body = s[1:-1]
        if not body.strip():
            raise ValueError("empty set literal {}")
        elems = []
        for tok in body.split(","):
            tok = tok.strip()
            if not tok:
                raise ValueError(f"empty element in set literal {text!r}")
            try:
                elems.append(int(tok))
            except ValueError:
                raise ValueError(f"bad integer {tok!r} in set literal") from None
        return FinSet(elems)
    if ".." in s:
        left, _, right = s.partition("..")
        try:
            lo, hi = int(left.strip()), int(right.strip())
        except ValueError:
            bad = left if _is_bad_int(left) else right
            raise ValueError(f"bad integer {bad.strip()!r} in interval shorthand") from None
        return interval(lo, hi)
    raise ValueError(f"expected a set literal or LO..HI interval, got {text!r}")


def _is_bad_int(tok: str) -> bool:
    try:
        int(tok.strip())
    except ValueError:
        return True
    return False
