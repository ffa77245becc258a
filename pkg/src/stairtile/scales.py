"""Critical triangle scales for a fixed lattice.

For a lattice L, ``lambda_upper`` finds the largest l such that the open
translates of l*T never overlap more than j deep (the j-fold packing scale),
and ``lambda_lower`` the smallest l such that the closed translates cover
every point at least j deep (the j-fold covering scale).

Both predicates are monotone in l and can only flip where a translate vertex
meets a translate edge or three boundary lines concur.  For triangles whose
boundary lines come in the three families x = c, y = c, x + y = c, every
such degeneracy happens at a scale of one of the difference forms produced
by ``candidate_scales``, so a binary search over the candidate list plus a
flip certificate at the adjacent midpoints pins the answer down exactly.  A
failed certificate aborts loudly instead of returning a wrong value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import Box, Point, format_rational, frac
from .lattice import Lattice, points_in_box
from .multiplicity import (Mode, Region, ScaledTriangle, is_jfold_covering,
                           is_jfold_packing)


class CandidateGapError(RuntimeError):
    """The flip scale fell between candidates; the candidate set has a gap."""


@dataclass(frozen=True)
class ScaleCertificate:
    """A critical scale plus the predicate probes that certify it.

    The predicate holds at ``value`` and flips across it: the recorded
    booleans at the probe scales just below and above reproduce on
    re-evaluation.
    """

    value: Fraction
    predicate_at_value: bool
    below_scale: Fraction
    predicate_below: bool
    above_scale: Fraction
    predicate_above: bool

    def to_json(self) -> dict:
        return {
            "value": format_rational(self.value),
            "predicate_at_value": self.predicate_at_value,
            "below_scale": format_rational(self.below_scale),
            "predicate_below": self.predicate_below,
            "above_scale": format_rational(self.above_scale),
            "predicate_above": self.predicate_above,
        }


def covering_predicate(lat: Lattice, j: int, scale) -> bool:
    """True iff closed scale*T translates cover every point >= j deep."""
    return is_jfold_covering(Region(ScaledTriangle(frac(scale)), Mode.CLOSED),
                             lat, j)


def packing_predicate(lat: Lattice, j: int, scale) -> bool:
    """True iff open scale*T translates overlap at most j deep."""
    return is_jfold_packing(Region(ScaledTriangle(frac(scale)),
                                   Mode.INTERIOR), lat, j)


def candidate_scales(lat: Lattice, l_max) -> list[Fraction]:
    """Every scale in (0, l_max] at which a covering or packing multiplicity
    can change.

    The values have the forms w_x + w'_y - z_x - z_y, w_x - v_x, and
    w_y - v_y over lattice points of the enumeration window (the bounding
    box of the fundamental parallelogram inflated by l_max on all sides).
    """
    l_max = frac(l_max)
    if l_max <= 0:
        raise ValueError(f"l_max must be positive: {l_max}")
    can = lat.canonical()
    corners = [Point(Fraction(0), Fraction(0)), can.u1, can.u2,
               can.u1 + can.u2]
    window = Box(min(p.x for p in corners), max(p.x for p in corners),
                 min(p.y for p in corners),
                 max(p.y for p in corners)).inflated(l_max)
    pts = points_in_box(lat, window)
    xs = sorted({p.x for p in pts})
    ys = sorted({p.y for p in pts})
    sums = sorted({p.x + p.y for p in pts})
    values: set[Fraction] = set()
    for x in xs:
        for x2 in xs:
            values.add(x - x2)
    for y in ys:
        for y2 in ys:
            values.add(y - y2)
    xy = {x + y for x in xs for y in ys}
    for s in xy:
        for s2 in sums:
            values.add(s - s2)
    return sorted(v for v in values if 0 < v <= l_max)


def _first_true(cands: list[Fraction], pred) -> int:
    """Index of the first candidate where the monotone predicate holds."""
    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if pred(cands[mid]):
            hi = mid
        else:
            lo = mid + 1
    return lo


def lambda_lower(lat: Lattice, j: int) -> ScaleCertificate:
    """Smallest scale making closed triangle translates a j-fold covering."""
    if j < 1:
        raise ValueError(f"need j >= 1: {j}")
    l_max = Fraction(1)
    while not covering_predicate(lat, j, l_max):
        l_max *= 2
    cands = candidate_scales(lat, l_max)
    idx = _first_true(cands, lambda l: covering_predicate(lat, j, l))
    value = cands[idx]
    if not covering_predicate(lat, j, value):
        raise CandidateGapError(
            f"no candidate scale <= {l_max} satisfies the covering "
            f"predicate for j={j}")
    below = value / 2 if idx == 0 else (cands[idx - 1] + value) / 2
    if covering_predicate(lat, j, below):
        raise CandidateGapError(
            f"covering predicate already holds at probe {below} below "
            f"certified scale {value}; candidate set has a gap")
    above = ((value + cands[idx + 1]) / 2 if idx + 1 < len(cands)
             else value + Fraction(1, 2))
    return ScaleCertificate(value, True, below, False, above,
                            covering_predicate(lat, j, above))


def lambda_upper(lat: Lattice, j: int) -> ScaleCertificate:
    """Largest scale keeping open triangle translates a j-fold packing."""
    if j < 1:
        raise ValueError(f"need j >= 1: {j}")
    l_max = Fraction(1)
    while packing_predicate(lat, j, l_max):
        l_max *= 2
    cands = candidate_scales(lat, l_max)
    idx = _first_true(cands, lambda l: not packing_predicate(lat, j, l))
    if packing_predicate(lat, j, cands[idx]):
        raise CandidateGapError(
            f"packing predicate never fails on candidates up to {l_max} "
            f"although it fails at {l_max}; candidate set has a gap")
    if idx == 0:
        raise CandidateGapError(
            "packing predicate fails at the smallest candidate scale; "
            "candidate set has a gap below it")
    idx -= 1
    value = cands[idx]
    above = (value + cands[idx + 1]) / 2
    if packing_predicate(lat, j, above):
        raise CandidateGapError(
            f"packing predicate still holds at probe {above} above "
            f"certified scale {value}; candidate set has a gap")
    below = value / 2 if idx == 0 else (cands[idx - 1] + value) / 2
    return ScaleCertificate(value, True, below,
                            packing_predicate(lat, j, below), above, False)
