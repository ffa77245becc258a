"""Desk-scale optimization evidence for the closed-form densities.

Two independent kinds of evidence: a brute-force sweep over a bounded grid
of rational lattices, whose best packing/covering densities must land
exactly on the closed forms once the optimal lattices enter the search
space, and a floating-point coordinate-ascent optimizer for the largest
stair polygon inside the triangle (resp. smallest stair containing its
interior), whose optima must approach j/(2j+1) and (2j+1)/(4j).

The stair optimizers are the only place in the package where inexact
numbers appear; the best layout found is afterwards snapped to nearby
small-denominator rationals and its area re-evaluated exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .geometry import Point, ScaledTriangle, format_rational
from .lattice import Lattice
from .multiplicity import Mode, Region, is_jfold_covering, is_jfold_packing
from .density import COVERING, PACKING


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a brute-force lattice sweep."""

    best_value: Fraction | None
    best_lattices: tuple[Lattice, ...]
    space_size: int
    parameters: dict

    def to_json(self) -> dict:
        return {
            "best_value": (None if self.best_value is None
                           else format_rational(self.best_value)),
            "best_lattices": [lat.to_json() for lat in self.best_lattices],
            "space_size": self.space_size,
            "parameters": self.parameters,
        }


def lattice_search_space(denominator_bound: int,
                         coefficient_bound: int) -> list[Lattice]:
    """Distinct lattices with a triangular basis ((a/q, b/q), (0, c/q)),
    1 <= a, c <= coefficient_bound, 0 <= b < c, 1 <= q <= denominator_bound.

    Every planar lattice has a triangular basis after column reduction, so
    this is a genuine bounded slice of lattice space; duplicates arising
    from different (q, a, b, c) encodings are removed.
    """
    if denominator_bound < 1 or coefficient_bound < 1:
        raise ValueError("bounds must be positive")
    seen: set[Lattice] = set()
    out: list[Lattice] = []
    for q in range(1, denominator_bound + 1):
        for a in range(1, coefficient_bound + 1):
            for c in range(1, coefficient_bound + 1):
                for b in range(c):
                    lat = Lattice(Point(Fraction(a, q), Fraction(b, q)),
                                  Point(Fraction(0), Fraction(c, q)))
                    if lat in seen:
                        continue
                    seen.add(lat)
                    out.append(lat)
    return out


def _search(j: int, denominator_bound: int, coefficient_bound: int,
            kind: str) -> SearchReport:
    space = lattice_search_space(denominator_bound, coefficient_bound)
    if kind == PACKING:
        region = Region(ScaledTriangle(Fraction(1)), Mode.INTERIOR)
        passes = lambda lat: is_jfold_packing(region, lat, j)
        better = lambda new, best: best is None or new > best
    else:
        region = Region(ScaledTriangle(Fraction(1)), Mode.CLOSED)
        passes = lambda lat: is_jfold_covering(region, lat, j)
        better = lambda new, best: best is None or new < best
    best_value: Fraction | None = None
    best: list[Lattice] = []
    for lat in space:
        if not passes(lat):
            continue
        value = Fraction(1, 2) / lat.d
        if better(value, best_value):
            best_value = value
            best = [lat]
        elif value == best_value:
            best.append(lat)
    best.sort(key=lambda lat: lat.canonical_key())
    params = {"j": j, "denominator_bound": denominator_bound,
              "coefficient_bound": coefficient_bound, "kind": kind}
    return SearchReport(best_value, tuple(best), len(space), params)


def search_packing(j: int, denominator_bound: int,
                   coefficient_bound: int) -> SearchReport:
    """Maximal density 1/(2 d) over lattices in the bounded space whose unit
    triangle translates form a j-fold packing; never exceeds the closed
    form, and reaches it once the optimal lattices are inside the bounds."""
    if j < 1:
        raise ValueError(f"need j >= 1: {j}")
    return _search(j, denominator_bound, coefficient_bound, PACKING)


def search_covering(j: int, denominator_bound: int,
                    coefficient_bound: int) -> SearchReport:
    """Minimal density over j-fold covering lattices in the bounded space;
    never below the closed form."""
    if j < 1:
        raise ValueError(f"need j >= 1: {j}")
    return _search(j, denominator_bound, coefficient_bound, COVERING)


@dataclass(frozen=True)
class AreaOptimum:
    """Result of a numeric stair-area optimization run.

    value is the best area found (floating point), corner_layout the
    breakpoints achieving it, target the analytic optimum; the gap and the
    worst bound violation seen over all iterates are reported, never
    hidden.  snapped_area re-evaluates the layout exactly after rounding
    the breakpoints to nearby small-denominator rationals.
    """

    value: float
    corner_layout: tuple[float, ...]
    target: Fraction
    gap: float
    max_bound_violation: float
    snapped_area: Fraction

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "corner_layout": list(self.corner_layout),
            "target": format_rational(self.target),
            "gap": self.gap,
            "max_bound_violation": self.max_bound_violation,
            "snapped_area": format_rational(self.snapped_area),
        }


def _inscribed_area(xs: list[float]) -> float:
    """Area of the stair with breakpoints [0] + xs and the tight heights
    1 - x_{i+1} allowed inside the closed unit triangle."""
    area = 0.0
    prev = 0.0
    for x in xs:
        area += (x - prev) * (1.0 - x)
        prev = x
    return area


def _circumscribed_area(xs: list[float]) -> float:
    """Area of the stair with breakpoints [0] + xs + [1] and the tight
    heights 1 - x_i needed to contain the open unit triangle."""
    pts = [0.0] + xs + [1.0]
    return sum((pts[i + 1] - pts[i]) * (1.0 - pts[i])
               for i in range(len(pts) - 1))


def _snap_layout(xs: list[float], max_den: int) -> list[Fraction]:
    return [Fraction(x).limit_denominator(max_den) for x in xs]


def optimize_inscribed_stair(j: int, iterations: int,
                             seed: int = 0) -> AreaOptimum:
    """Numerically maximize the area of a stair with at most 2j-1 steps
    inside the closed unit triangle.

    Coordinate ascent over the interior breakpoints (each one-dimensional
    update has a closed form) with seeded random restarts.  Every iterate
    is feasible, so no area may exceed the analytic optimum j/(2j+1) beyond
    float noise; the worst violation observed is reported.
    """
    if j < 1 or iterations < 1:
        raise ValueError("need j >= 1 and iterations >= 1")
    target = Fraction(j, 2 * j + 1)
    target_f = float(target)
    n_vars = 2 * j  # breakpoints x_1 .. x_{r+1}, r = 2j - 1
    rng = random.Random(seed)
    restarts = 3
    sweeps = max(1, iterations // restarts)
    best_area = -1.0
    best_xs: list[float] = []
    worst_violation = 0.0
    for _ in range(restarts):
        xs = sorted(rng.random() for _ in range(n_vars))
        for _ in range(sweeps):
            for k in range(n_vars):
                left = xs[k - 1] if k else 0.0
                if k + 1 < n_vars:
                    xs[k] = (left + xs[k + 1]) / 2.0
                else:
                    xs[k] = (left + 1.0) / 2.0
            area = _inscribed_area(xs)
            worst_violation = max(worst_violation, area - target_f)
            if area > best_area:
                best_area = area
                best_xs = xs.copy()
    snapped = _snap_layout(best_xs, 4 * (2 * j + 1))
    exact_area = Fraction(0)
    prev = Fraction(0)
    for x in snapped:
        exact_area += (x - prev) * (1 - x)
        prev = x
    return AreaOptimum(best_area, tuple(best_xs), target,
                       abs(best_area - target_f), worst_violation,
                       exact_area)


def optimize_circumscribed_stair(j: int, iterations: int,
                                 seed: int = 0) -> AreaOptimum:
    """Numerically minimize the area of a stair with at most 2j-1 steps
    containing the open unit triangle; dual of the inscribed optimizer with
    analytic optimum (2j+1)/(4j)."""
    if j < 1 or iterations < 1:
        raise ValueError("need j >= 1 and iterations >= 1")
    target = Fraction(2 * j + 1, 4 * j)
    target_f = float(target)
    n_vars = 2 * j - 1  # interior breakpoints x_1 .. x_r
    rng = random.Random(seed)
    restarts = 3
    sweeps = max(1, iterations // restarts)
    best_area = float("inf")
    best_xs: list[float] = []
    worst_violation = 0.0
    for _ in range(restarts):
        xs = sorted(rng.random() for _ in range(n_vars))
        for _ in range(sweeps):
            for k in range(n_vars):
                left = xs[k - 1] if k else 0.0
                right = xs[k + 1] if k + 1 < n_vars else 1.0
                xs[k] = (left + right) / 2.0
            area = _circumscribed_area(xs)
            worst_violation = max(worst_violation, target_f - area)
            if area < best_area:
                best_area = area
                best_xs = xs.copy()
    snapped = _snap_layout(best_xs, 4 * (2 * j + 1))
    pts = [Fraction(0)] + snapped + [Fraction(1)]
    exact_area = sum(((pts[i + 1] - pts[i]) * (1 - pts[i])
                      for i in range(len(pts) - 1)), Fraction(0))
    return AreaOptimum(best_area, tuple(best_xs), target,
                       abs(best_area - target_f), worst_violation,
                       exact_area)
