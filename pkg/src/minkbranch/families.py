"""Splitting families: the sets of points at which two scenarios diverge.

A splitting family is a pairwise space-like set of points.  Four kinds are
supported, each with closed-form membership and cone queries so that the
infinite kinds never need enumeration to answer a question:

* FiniteFamily    - an explicit finite set, any dimension
* IntegerRow      - {(t0, n) : n = 0, 1, 2, ...} in two dimensions
* HarmonicPair    - {center +- (0, 1/n) : n >= 1} in two dimensions
* DifferenceRow   - {(0, j) : j in zeros_a symmetric-difference zeros_b},
                    the positions where two binary sequences (encoded by
                    their finite zero sets) disagree

Every closed form is obligated to agree with brute-force enumeration over
truncated member lists; the oracle module cross-checks that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Iterator, Union

from .errors import DimensionMismatch
from .minkowski import Point, leq, lt, point, rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _check_planar(x: Point) -> None:
    if x.dimension != 2:
        raise DimensionMismatch("this family kind lives in two dimensions")


def _unit_fraction_in(lo: Fraction, hi: Fraction) -> int | None:
    """Some integer n >= 1 with lo <= 1/n <= hi, or None.

    Returns the smallest such n (the largest qualifying unit fraction).
    """
    if hi <= 0:
        return None
    n = 1 if hi >= 1 else ceil(_ONE / hi)
    if lo <= 0 or Fraction(1, n) >= lo:
        return n
    return None


@dataclass(frozen=True)
class FiniteFamily:
    """An explicit finite splitting set (deduplicated, kept in sorted order)."""

    points: tuple[Point, ...]

    def __post_init__(self):
        coerced = tuple(p if isinstance(p, Point) else Point(tuple(p))
                        for p in self.points)
        pts = tuple(sorted(set(coerced), key=lambda p: p.coords))
        if pts:
            d = pts[0].dimension
            for p in pts:
                if p.dimension != d:
                    raise ValueError("family members must share one dimension")
        object.__setattr__(self, "points", pts)

    is_finite = True
    slr_by_construction = False

    @property
    def dimension(self) -> int | None:
        return self.points[0].dimension if self.points else None

    def members(self, limit: int | None = None) -> Iterator[Point]:
        return iter(self.points)

    def contains(self, x: Point) -> bool:
        return x in self.points

    def any_strictly_below(self, x: Point) -> bool:
        return any(lt(m, x) for m in self.points)

    def any_weakly_below(self, x: Point) -> bool:
        return any(leq(m, x) for m in self.points)

    def first_strictly_below(self, x: Point) -> Point | None:
        for m in self.points:
            if lt(m, x):
                return m
        return None

    def accumulation_points(self) -> tuple[Point, ...]:
        return ()

    def slr_violation(self) -> tuple[Point, Point] | None:
        """First ordered member pair, if the set is not pairwise space-like."""
        for i, a in enumerate(self.points):
            for b in self.points[i + 1:]:
                if leq(a, b) or leq(b, a):
                    return (a, b)
        return None


@dataclass(frozen=True)
class IntegerRow:
    """All points (t0, n) for natural n, on one simultaneity slice of the plane."""

    t0: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t0", rational(self.t0))

    is_finite = False
    slr_by_construction = True
    dimension = 2

    def members(self, limit: int | None = None) -> Iterator[Point]:
        if limit is None:
            raise ValueError("IntegerRow is infinite; enumeration needs a limit")
        for n in range(limit + 1):
            yield point(self.t0, n)

    def contains(self, x: Point) -> bool:
        if x.dimension != 2 or x.coords[0] != self.t0:
            return False
        u = x.coords[1]
        return u.denominator == 1 and u >= 0

    def _bounds(self, x: Point) -> tuple[int, int] | None:
        # Integers n >= 0 with (t0, n) weakly below x: |x1 - n| <= x0 - t0.
        dt = x.coords[0] - self.t0
        if dt < 0:
            return None
        u = x.coords[1]
        n_lo = max(0, ceil(u - dt))
        n_hi = floor(u + dt)
        return (n_lo, n_hi) if n_lo <= n_hi else None

    def any_strictly_below(self, x: Point) -> bool:
        _check_planar(x)
        dt = x.coords[0] - self.t0
        if dt <= 0:
            # On the slice itself only the member equal to x is weakly below.
            return False
        return self._bounds(x) is not None

    def any_weakly_below(self, x: Point) -> bool:
        return self.any_strictly_below(x) or self.contains(x)

    def first_strictly_below(self, x: Point) -> Point | None:
        if not self.any_strictly_below(x):
            return None
        n_lo, _ = self._bounds(x)
        return point(self.t0, n_lo)

    def accumulation_points(self) -> tuple[Point, ...]:
        return ()


@dataclass(frozen=True)
class HarmonicPair:
    """Two rows of points center +- (0, 1/n), accumulating at the center.

    The center itself is not a member, but it is a limit of members on both
    sides, which is what makes it an emergent (non-generated) choice point.
    """

    center: Point

    def __post_init__(self):
        if self.center.dimension != 2:
            raise ValueError("HarmonicPair lives in two dimensions")

    is_finite = False
    slr_by_construction = True
    dimension = 2

    def members(self, limit: int | None = None) -> Iterator[Point]:
        if limit is None:
            raise ValueError("HarmonicPair is infinite; enumeration needs a limit")
        c0, c1 = self.center.coords
        for n in range(1, limit + 1):
            step = Fraction(1, n)
            yield point(c0, c1 + step)
            yield point(c0, c1 - step)

    def contains(self, x: Point) -> bool:
        if x.dimension != 2 or x.coords[0] != self.center.coords[0]:
            return False
        u = x.coords[1] - self.center.coords[1]
        if u == 0:
            return False
        inv = _ONE / abs(u)
        return inv.denominator == 1

    def any_strictly_below(self, x: Point) -> bool:
        _check_planar(x)
        dt = x.coords[0] - self.center.coords[0]
        if dt <= 0:
            return False
        u = x.coords[1] - self.center.coords[1]
        return (_unit_fraction_in(u - dt, u + dt) is not None
                or _unit_fraction_in(-u - dt, -u + dt) is not None)

    def any_weakly_below(self, x: Point) -> bool:
        return self.any_strictly_below(x) or self.contains(x)

    def first_strictly_below(self, x: Point) -> Point | None:
        _check_planar(x)
        c0, c1 = self.center.coords
        dt = x.coords[0] - c0
        if dt <= 0:
            return None
        u = x.coords[1] - c1
        n = _unit_fraction_in(u - dt, u + dt)
        if n is not None:
            return point(c0, c1 + Fraction(1, n))
        n = _unit_fraction_in(-u - dt, -u + dt)
        if n is not None:
            return point(c0, c1 - Fraction(1, n))
        return None

    def accumulation_points(self) -> tuple[Point, ...]:
        return (self.center,)


@dataclass(frozen=True)
class DifferenceRow:
    """Splitting points of two binary sequences: (0, j) where their bits differ.

    A sequence is encoded by its finite set of zero positions, so the
    difference positions are the symmetric difference of the two sets,
    which is always finite.
    """

    zeros_a: frozenset[int]
    zeros_b: frozenset[int]
    positions: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        za = frozenset(self._check_position(k) for k in self.zeros_a)
        zb = frozenset(self._check_position(k) for k in self.zeros_b)
        object.__setattr__(self, "zeros_a", za)
        object.__setattr__(self, "zeros_b", zb)
        object.__setattr__(self, "positions", tuple(sorted(za ^ zb)))

    @staticmethod
    def _check_position(k) -> int:
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            raise ValueError(f"zero positions must be nonnegative integers, got {k!r}")
        return k

    is_finite = True
    slr_by_construction = True
    dimension = 2
    row_time = _ZERO

    def members(self, limit: int | None = None) -> Iterator[Point]:
        for j in self.positions:
            yield point(self.row_time, j)

    def contains(self, x: Point) -> bool:
        if x.dimension != 2 or x.coords[0] != self.row_time:
            return False
        u = x.coords[1]
        return u.denominator == 1 and int(u) in self.zeros_a ^ self.zeros_b

    def any_strictly_below(self, x: Point) -> bool:
        return any(lt(m, x) for m in self.members())

    def any_weakly_below(self, x: Point) -> bool:
        return any(leq(m, x) for m in self.members())

    def first_strictly_below(self, x: Point) -> Point | None:
        for m in self.members():
            if lt(m, x):
                return m
        return None

    def accumulation_points(self) -> tuple[Point, ...]:
        return ()


SplittingFamily = Union[FiniteFamily, IntegerRow, HarmonicPair, DifferenceRow]

KIND_NAMES = {
    FiniteFamily: "finite",
    IntegerRow: "integer_row",
    HarmonicPair: "harmonic_pair",
    DifferenceRow: "difference_row",
}


def family_kind(family: SplittingFamily) -> str:
    return KIND_NAMES[type(family)]


def is_empty(family: SplittingFamily) -> bool:
    if isinstance(family, FiniteFamily):
        return not family.points
    if isinstance(family, DifferenceRow):
        return not family.positions
    return False
