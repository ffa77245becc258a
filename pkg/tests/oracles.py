"""Independent brute-force oracles used to derive frozen expected values.

Everything here deliberately avoids the library's own algorithms: critical
scales come from corner/subset enumeration, areas from summation, counts
from naive double loops.  Slow and only correct at desk scale, which is all
the tests need.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from stairtile import Box, Lattice, Point, points_in_box


def covering_scale_oracle(lat: Lattice, j: int, window: int) -> Fraction:
    """Smallest l so that closed l*T translates cover j-fold.

    The worst points of a covering sit just below corners (vx, wy) built
    from one lattice x-coordinate and one lattice y-coordinate; the scale
    needed there is vx + wy minus the j-th largest coordinate sum among
    lattice points strictly dominated by the corner.  Corner residues
    repeat modulo the lattice, so corners are taken from one fundamental
    rectangle while the dominated points range over a generous window
    (which must extend at least the answer below the rectangle).
    """
    x1, _, y2 = lat.canonical_key()
    pts = points_in_box(lat, Box(-window, window + x1, -window,
                                 window + y2))
    xs = sorted({p.x for p in pts if 0 <= p.x <= x1})
    ys = sorted({p.y for p in pts if 0 <= p.y <= y2})
    best: Fraction | None = None
    for vx in xs:
        for wy in ys:
            sums = sorted((z.x + z.y for z in pts
                           if z.x < vx and z.y < wy), reverse=True)
            if len(sums) < j:
                continue
            cand = vx + wy - sums[j - 1]
            if best is None or cand > best:
                best = cand
    assert best is not None, "window too small for the covering oracle"
    assert best <= window, "window too small for the covering oracle"
    return best


def packing_scale_oracle(lat: Lattice, j: int, window: int) -> Fraction:
    """Largest l so that open l*T translates overlap at most j deep.

    j+1 open triangle translates anchored at lattice points first share a
    point when l exceeds max(x) + max(y) - min(x + y) over the anchors, so
    the packing scale is the minimum of that expression over all
    (j+1)-subsets in a window.
    """
    pts = points_in_box(lat, Box(-window, window, -window, window))
    best: Fraction | None = None
    for subset in combinations(pts, j + 1):
        expr = (max(p.x for p in subset) + max(p.y for p in subset)
                - min(p.x + p.y for p in subset))
        if best is None or expr < best:
            best = expr
    assert best is not None
    return best


def lattice_points_bruteforce(lat: Lattice, box: Box,
                              coeff: int = 12) -> list[Point]:
    """Lattice points in a closed box by sweeping small basis coefficients."""
    out = []
    for a in range(-coeff, coeff + 1):
        for b in range(-coeff, coeff + 1):
            p = lat.point(a, b)
            if box.contains(p):
                out.append(p)
    out.sort(key=lambda p: (p.x, p.y))
    return out


def stair_area_by_columns(j: int) -> Fraction:
    """Area of the canonical stair as the plain sum 2j + (2j-1) + ... + 1."""
    return Fraction(sum(range(1, 2 * j + 1)))
