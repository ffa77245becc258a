"""Planar lattices: bases, determinants, point enumeration, canonical forms.

A lattice is stored as an ordered basis but compared as a point set: two
``Lattice`` values are equal iff each basis vector of one is an integer
combination of the other's, which we decide by reducing both to the unique
lower-triangular canonical basis ((x1, y1), (0, y2)) with x1, y2 > 0 and
0 <= y1 < y2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, lcm

from .geometry import Box, Point, RationalLike, frac


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _canonical_triple(u1: Point, u2: Point) -> tuple[Fraction, Fraction, Fraction]:
    """Canonical (x1, y1, y2) of the lattice spanned by u1, u2."""
    den = lcm(u1.x.denominator, u2.x.denominator)
    n1 = int(u1.x * den)
    n2 = int(u2.x * den)
    if n1 == 0 and n2 == 0:
        raise ValueError("both basis x-coordinates vanish; basis is singular")
    g, s, t = _xgcd(n1, n2)
    v1 = u1.scaled(s) + u2.scaled(t)          # x-coordinate g/den > 0
    k1, k2 = -(n2 // g), n1 // g              # primitive kernel of the x-map
    v2 = u1.scaled(k1) + u2.scaled(k2)        # x-coordinate 0
    if v2.y < 0:
        v2 = -v2
    if v2.y == 0:
        raise ValueError("basis is singular")
    shift = floor(v1.y / v2.y)
    v1 = v1 - v2.scaled(shift)
    return v1.x, v1.y, v2.y


@dataclass(frozen=True, eq=False)
class Lattice:
    """Rank-2 lattice given by two basis vectors with nonzero determinant."""

    u1: Point
    u2: Point

    def __post_init__(self) -> None:
        if self.det == 0:
            raise ValueError(f"singular basis: {self.u1}, {self.u2}")
        object.__setattr__(self, "_key", _canonical_triple(self.u1, self.u2))

    @property
    def det(self) -> Fraction:
        return self.u1.x * self.u2.y - self.u1.y * self.u2.x

    @property
    def d(self) -> Fraction:
        """Fundamental-domain area |det|."""
        return abs(self.det)

    def canonical_key(self) -> tuple[Fraction, Fraction, Fraction]:
        return self._key  # type: ignore[attr-defined]

    def canonical(self) -> "Lattice":
        """The lower-triangular canonical basis generating the same lattice."""
        x1, y1, y2 = self.canonical_key()
        return Lattice(Point(x1, y1), Point(Fraction(0), y2))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def coefficients(self, p: Point) -> tuple[Fraction, Fraction]:
        """Exact (a, b) with p = a*u1 + b*u2."""
        det = self.det
        a = (p.x * self.u2.y - p.y * self.u2.x) / det
        b = (self.u1.x * p.y - self.u1.y * p.x) / det
        return a, b

    def contains(self, p: Point) -> bool:
        a, b = self.coefficients(p)
        return a.denominator == 1 and b.denominator == 1

    def point(self, a: int, b: int) -> Point:
        return self.u1.scaled(a) + self.u2.scaled(b)

    def scaled(self, c: RationalLike) -> "Lattice":
        c = frac(c)
        if c == 0:
            raise ValueError("scale factor must be nonzero")
        return Lattice(self.u1.scaled(c), self.u2.scaled(c))

    def to_json(self) -> dict:
        return {"u1": self.u1.to_json(), "u2": self.u2.to_json()}

    @staticmethod
    def from_json(data: dict) -> "Lattice":
        return Lattice(Point.from_json(data["u1"]), Point.from_json(data["u2"]))


def make_lattice(u1: Point, u2: Point) -> Lattice:
    """Build a lattice, rejecting singular bases."""
    return Lattice(u1, u2)


def integer_lattice() -> Lattice:
    """The standard lattice Z^2."""
    return Lattice(Point(1, 0), Point(0, 1))


def shift_lattice(m: int, j: int) -> Lattice:
    """The lattice generated by (1, m) and (0, 2j+1); determinant 2j+1."""
    if m < 1 or j < 1:
        raise ValueError(f"need m >= 1 and j >= 1, got m={m}, j={j}")
    return Lattice(Point(1, m), Point(0, 2 * j + 1))


def points_in_box(lat: Lattice, box: Box) -> list[Point]:
    """All lattice points in a closed box, each exactly once.

    The basis is inverted exactly, the box corners are mapped to coefficient
    space, and the integer points of the coefficient bounding box are
    enumerated and filtered.  Exact bounds mean no point is ever missed.
    """
    corners = (Point(box.x_min, box.y_min), Point(box.x_min, box.y_max),
               Point(box.x_max, box.y_min), Point(box.x_max, box.y_max))
    coeffs = [lat.coefficients(c) for c in corners]
    a_lo = ceil(min(a for a, _ in coeffs))
    a_hi = floor(max(a for a, _ in coeffs))
    b_lo = ceil(min(b for _, b in coeffs))
    b_hi = floor(max(b for _, b in coeffs))
    out = []
    for a in range(a_lo, a_hi + 1):
        base = lat.u1.scaled(a)
        for b in range(b_lo, b_hi + 1):
            p = base + lat.u2.scaled(b)
            if box.contains(p):
                out.append(p)
    out.sort(key=lambda p: (p.x, p.y))
    return out


def enumerate_integer_sublattices(det_target: int) -> list[Lattice]:
    """All sublattices of Z^2 of index det_target, in triangular form.

    Each sublattice appears exactly once as ((a, b), (0, c)) with a*c equal
    to the target and 0 <= b < c; the count is the divisor sum sigma(n).
    """
    if det_target < 1:
        raise ValueError(f"index must be positive: {det_target}")
    out = []
    for a in range(1, det_target + 1):
        if det_target % a:
            continue
        c = det_target // a
        for b in range(c):
            out.append(Lattice(Point(a, b), Point(0, c)))
    return out


def rational_dilates(lattices: list[Lattice],
                     denominators: list[int]) -> list[Lattice]:
    """Scale every lattice by 1/q for each q; duplicates are kept."""
    out = []
    for lat in lattices:
        for q in denominators:
            if q < 1:
                raise ValueError(f"denominator must be positive: {q}")
            out.append(lat.scaled(Fraction(1, q)))
    return out


@dataclass(frozen=True)
class FundamentalDomain:
    """Half open parallelogram {a*u1 + b*u2 : 0 <= a, b < 1}.

    Its lattice translates partition the plane: every point reduces to
    exactly one representative.
    """

    lattice: Lattice

    def contains(self, p: Point) -> bool:
        a, b = self.lattice.coefficients(p)
        return 0 <= a < 1 and 0 <= b < 1

    def reduce(self, p: Point) -> Point:
        a, b = self.lattice.coefficients(p)
        return (self.lattice.u1.scaled(a - floor(a))
                + self.lattice.u2.scaled(b - floor(b)))

    def area(self) -> Fraction:
        return self.lattice.d


def fundamental_rect(lat: Lattice) -> tuple[Fraction, Fraction]:
    """(w, h) of the half open rectangle [0, w) x [0, h) that is a
    fundamental domain of the lattice (read off the canonical basis)."""
    x1, _, y2 = lat.canonical_key()
    return x1, y2


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"need a positive integer: {n}")
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out
