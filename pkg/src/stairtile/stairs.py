"""Canonical stair polygons, gcd counting rules, and the selection stair.

The canonical (2j-1)-stair has unit columns of heights 2j, 2j-1, ..., 1
and area j(2j+1).  The lattice generated by (1, m) and (0, 2j+1) tiles the
plane exactly j-fold with that stair precisely when gcd(m, 2j+1) and
gcd(m+1, 2j+1) are both 1; both directions of that statement are exercised
here, the forward one by direct multiplicity checks and the converse one by
exhausting a bounded rational search space.

``selection_stair`` builds, for any lattice L, the half open stair formed by
keeping the j first points (in the coordinate-sum order) of every residue
class inside the critical covering triangle.  Its column heights are swept
exactly: for a fixed x, the height is the level where the j-th preceding
competitor enters, capped by the triangle hypotenuse.  The construction then
validates shape, exact j-fold tiling, and the area identity
area = j * d(L), and aborts loudly if any of those fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .geometry import (Box, Point, StairPolygon, format_rational, frac,
                       prec_negative)
from .lattice import (Lattice, enumerate_integer_sublattices, shift_lattice,
                      points_in_box)
from .multiplicity import is_exact_jfold_tiling
from .scales import lambda_lower

_F0 = Fraction(0)


class SelectionStairError(RuntimeError):
    """The swept stair failed validation; the candidate set has a gap."""


@dataclass(frozen=True)
class HalfOpenBox:
    """[x_min, x_max) x [y_min, y_max)."""

    x_min: Fraction
    x_max: Fraction
    y_min: Fraction
    y_max: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x_min", frac(self.x_min))
        object.__setattr__(self, "x_max", frac(self.x_max))
        object.__setattr__(self, "y_min", frac(self.y_min))
        object.__setattr__(self, "y_max", frac(self.y_max))
        if self.x_min >= self.x_max or self.y_min >= self.y_max:
            raise ValueError(f"empty half open box: {self}")

    def contains(self, p: Point) -> bool:
        return (self.x_min <= p.x < self.x_max
                and self.y_min <= p.y < self.y_max)

    def translated(self, w: Point) -> "HalfOpenBox":
        return HalfOpenBox(self.x_min + w.x, self.x_max + w.x,
                           self.y_min + w.y, self.y_max + w.y)

    def area(self) -> Fraction:
        return (self.x_max - self.x_min) * (self.y_max - self.y_min)


def canonical_stair(j: int) -> StairPolygon:
    """The canonical stair: unit columns over [i, i+1) of heights 2j - i."""
    if j < 1:
        raise ValueError(f"need j >= 1: {j}")
    return StairPolygon(tuple(Fraction(i) for i in range(2 * j + 1)),
                        tuple(Fraction(2 * j - i) for i in range(2 * j)))


@dataclass(frozen=True)
class CanonicalRegions:
    """The unit-cell regions that drive the gcd counting rules.

    stair (S), upper_stair (S*), and diagonal (D) are mutually disjoint and
    partition the square U = [0, 2j+1)^2; strip_b (B) and strip_c (C) are
    the left column and bottom row of U.
    """

    j: int
    stair: StairPolygon
    upper_stair: tuple[HalfOpenBox, ...]
    diagonal: tuple[HalfOpenBox, ...]
    strip_b: tuple[HalfOpenBox, ...]
    strip_c: tuple[HalfOpenBox, ...]
    square: tuple[HalfOpenBox, ...]

    def stair_boxes(self) -> tuple[HalfOpenBox, ...]:
        return tuple(HalfOpenBox(lo, hi, _F0, h)
                     for lo, hi, h in self.stair.columns())


def canonical_regions(j: int) -> CanonicalRegions:
    if j < 1:
        raise ValueError(f"need j >= 1: {j}")
    n = 2 * j + 1
    upper = tuple(HalfOpenBox(i, i + 1, n - i, n) for i in range(1, n))
    diag = tuple(HalfOpenBox(i, i + 1, n - 1 - i, n - i) for i in range(n))
    strip_b = (HalfOpenBox(0, 1, 0, n),)
    strip_c = (HalfOpenBox(0, n, 0, 1),)
    square = (HalfOpenBox(0, n, 0, n),)
    return CanonicalRegions(j, canonical_stair(j), upper, diag,
                            strip_b, strip_c, square)


def count_in_halfopen_boxes(lat: Lattice, boxes: tuple[HalfOpenBox, ...],
                            offset: Point) -> int:
    """card{lat intersect (offset + union of boxes)}; boxes must be
    pairwise disjoint."""
    total = 0
    for b in boxes:
        shifted = b.translated(offset)
        closed = Box(shifted.x_min, shifted.x_max,
                     shifted.y_min, shifted.y_max)
        total += sum(1 for p in points_in_box(lat, closed)
                     if shifted.contains(p))
    return total


_REGION_NAMES = ("B", "C", "D", "S")


def count_region(m: int, j: int, region: str, s: int, t: int) -> int:
    """Number of shift_lattice(m, j) points in the translated region.

    region is one of "B", "C", "D", "S" (left strip, bottom strip, diagonal,
    stair), all half open as defined.
    """
    if region not in _REGION_NAMES:
        raise ValueError(f"region must be one of {_REGION_NAMES}: {region}")
    regs = canonical_regions(j)
    boxes = {"B": regs.strip_b, "C": regs.strip_c, "D": regs.diagonal,
             "S": regs.stair_boxes()}[region]
    return count_in_halfopen_boxes(shift_lattice(m, j), boxes, Point(s, t))


def admissible_shifts(j: int) -> list[int]:
    """The m in 1..2j+1 with gcd(m, 2j+1) = gcd(m+1, 2j+1) = 1."""
    n = 2 * j + 1
    return [m for m in range(1, n + 1)
            if gcd(m, n) == 1 and gcd(m + 1, n) == 1]


def verify_stair_tiling_forward(j: int) -> list[tuple[int, bool]]:
    """(m, does the canonical stair tile exactly j-fold with
    shift_lattice(m, j)) for every m in 1..2j+1."""
    s = canonical_stair(j)
    return [(m, is_exact_jfold_tiling(s, shift_lattice(m, j), j))
            for m in range(1, 2 * j + 2)]


def verify_stair_tiling_converse(j: int, denominator_bound: int) -> list[Lattice]:
    """All exact j-fold tilers of the canonical stair in a bounded space.

    The space is every integer sublattice of (1/q)Z^2 with q up to the bound
    and determinant exactly 2j+1.  A desk-scale stand-in for the
    unrestricted converse: the result should coincide with the admissible
    shift_lattice family.
    """
    if denominator_bound < 1:
        raise ValueError(f"need a positive bound: {denominator_bound}")
    s = canonical_stair(j)
    seen: set[Lattice] = set()
    found: list[Lattice] = []
    for q in range(1, denominator_bound + 1):
        index = (2 * j + 1) * q * q
        for integral in enumerate_integer_sublattices(index):
            lat = integral.scaled(Fraction(1, q))
            if lat in seen:
                continue
            seen.add(lat)
            if is_exact_jfold_tiling(s, lat, j):
                found.append(lat)
    found.sort(key=lambda lat: lat.canonical_key())
    return found


def selection_member(lat: Lattice, j: int, p: Point, scale) -> bool:
    """Is p kept when each residue class retains its j first points (in the
    coordinate-sum order) inside the closed triangle scale*T?

    True iff p lies in the closed triangle and fewer than j lattice
    translates of p both precede it and stay inside the triangle.  Preceding
    is a property of the lattice vector alone, since the order is
    translation invariant.
    """
    scale = frac(scale)
    if p.x < 0 or p.y < 0 or p.x + p.y > scale:
        return False
    vbox = Box(-p.x, scale - p.x, -p.y, scale - p.y)
    competitors = 0
    for v in points_in_box(lat, vbox):
        if not prec_negative(v):
            continue
        q = p + v
        if q.x >= 0 and q.y >= 0 and q.x + q.y <= scale:
            competitors += 1
            if competitors >= j:
                return False
    return True


@dataclass(frozen=True)
class SelectionStair:
    """The first-j selection stair of a lattice, with its corner data.

    corners lists the inner step corners (x_i, y_i), i = 1..r; the extreme
    corners are (0, y_0) and (x_{r+1}, 0); scale is the critical covering
    scale of the triangle for this lattice.
    """

    stair: StairPolygon
    corners: tuple[Point, ...]
    extreme_corners: tuple[Point, Point]
    scale: Fraction

    def to_json(self) -> dict:
        return {
            "stair": self.stair.to_json(),
            "corners": [c.to_json() for c in self.corners],
            "extreme_corners": [c.to_json() for c in self.extreme_corners],
            "scale": format_rational(self.scale),
        }


def _column_height(x: Fraction, lam: Fraction, preceding: list[Point],
                   j: int) -> Fraction:
    """Height of the selection stair's column at abscissa x.

    Sweeps the y-levels where preceding competitors enter or leave the
    closed triangle; the column ends at the j-th net entry, or at the
    hypotenuse if fewer than j competitors ever stack up.
    """
    if x < 0 or x > lam:
        return _F0
    cap = lam - x
    events: list[tuple[Fraction, int]] = []
    for v in preceding:
        if x + v.x < 0 or x + v.x > lam:
            continue
        enter = max(_F0, -v.y)
        leave = lam - x - v.x - v.y
        if leave < enter or enter > cap:
            continue
        events.append((enter, 0))
        if leave < cap:
            events.append((leave, 1))
    events.sort()
    active = 0
    for y, kind in events:
        if kind == 0:
            active += 1
            if active >= j:
                return y
        else:
            active -= 1
    return cap


def selection_stair(lat: Lattice, j: int) -> SelectionStair:
    """Build the exact first-j selection stair of the lattice.

    Candidate column breaks are the abscissas where a competitor's entry
    level or triangle wall can cross another's: differences of lattice
    coordinates and of hypotenuse intercepts.  Heights are swept per
    candidate and equal neighbours merged; the result is validated as a
    strict stair that tiles exactly j-fold with area j * d(lat), any failure
    aborting with diagnostics.
    """
    if j < 1:
        raise ValueError(f"need j >= 1: {j}")
    lam = lambda_lower(lat, j).value
    window = points_in_box(lat, Box(-lam, lam, -lam, lam))
    preceding = [v for v in window if prec_negative(v)]
    anchors = preceding + [Point(_F0, _F0)]

    xcand: set[Fraction] = {_F0, lam}
    for v in anchors:
        if _F0 <= -v.x <= lam:
            xcand.add(-v.x)
        base = lam - v.x - v.y
        for w in anchors:
            val = base + w.y
            if _F0 <= val <= lam:
                xcand.add(val)
    xs = sorted(xcand)

    heights = [_column_height(x, lam, preceding, j) for x in xs]
    breaks: list[Fraction] = [xs[0]]
    col_heights: list[Fraction] = []
    for x, h in zip(xs, heights):
        if not col_heights:
            col_heights.append(h)
            continue
        if h == col_heights[-1]:
            continue
        if h > col_heights[-1]:
            raise SelectionStairError(
                f"column heights increased at x={x}: {h} after "
                f"{col_heights[-1]}; candidate abscissa set has a gap")
        breaks.append(x)
        col_heights.append(h)
    if col_heights and col_heights[-1] == 0:
        col_heights.pop()
    else:
        raise SelectionStairError(
            "selection stair never closed before the triangle wall")
    if not col_heights or any(h <= 0 for h in col_heights):
        raise SelectionStairError(
            f"degenerate column heights {col_heights} for lattice "
            f"{lat.to_json()}")
    breaks = breaks[:len(col_heights) + 1]
    stair = StairPolygon(tuple(breaks), tuple(col_heights))

    if stair.area() != j * lat.d:
        raise SelectionStairError(
            f"area {stair.area()} != j*d = {j * lat.d}; candidate gap")
    if not is_exact_jfold_tiling(stair, lat, j):
        raise SelectionStairError(
            f"swept stair is not an exact {j}-fold tile for lattice "
            f"{lat.to_json()}")
    if stair.r > 2 * j - 1:
        raise SelectionStairError(
            f"stair has {stair.r} steps, exceeding the 2j-1 bound")

    corners = tuple(Point(breaks[i], col_heights[i])
                    for i in range(1, len(col_heights)))
    extremes = (Point(_F0, col_heights[0]), Point(breaks[-1], _F0))
    return SelectionStair(stair, corners, extremes, lam)
