import random
from fractions import Fraction as F

import pytest

from stairtile import (Box, FundamentalDomain, Lattice, Point,
                       enumerate_integer_sublattices, fundamental_rect,
                       integer_lattice, shift_lattice, make_lattice,
                       points_in_box, rational_dilates)

from oracles import lattice_points_bruteforce


def test_make_lattice_examples():
    assert make_lattice(Point(1, 0), Point(0, 1)).det == 1
    assert make_lattice(Point(1, 1), Point(0, 3)).det == 3
    with pytest.raises(ValueError):
        make_lattice(Point(1, 2), Point(2, 4))


def test_shift_lattice_examples():
    l11 = shift_lattice(1, 1)
    assert (l11.u1, l11.u2) == (Point(1, 1), Point(0, 3))
    l22 = shift_lattice(2, 2)
    assert (l22.u1, l22.u2) == (Point(1, 2), Point(0, 5))
    assert l22.det == 5
    with pytest.raises(ValueError):
        shift_lattice(0, 1)


def test_shift_lattice_membership_combination_oracle():
    rng = random.Random(3)
    for _ in range(20):
        m = rng.randint(1, 9)
        j = rng.randint(1, 4)
        b = rng.randint(-3, 3)
        lat = shift_lattice(m, j)
        # a*(1,m) + b*(0,2j+1) with a = 5
        assert lat.contains(Point(5, 5 * m + b * (2 * j + 1)))
        assert not lat.contains(Point(5, 5 * m + b * (2 * j + 1) + 1)) or \
            (2 * j + 1) == 1


def test_points_in_box_examples():
    nine = points_in_box(integer_lattice(), Box(0, 2, 0, 2))
    assert len(nine) == 9
    diag = points_in_box(shift_lattice(1, 1), Box(0, 2, 0, 2))
    assert diag == [Point(0, 0), Point(1, 1), Point(2, 2)]
    only_origin = points_in_box(shift_lattice(2, 2), Box(0, 0, 0, 4))
    assert only_origin == [Point(0, 0)]


def test_points_in_box_matches_bruteforce():
    rng = random.Random(11)
    for _ in range(25):
        q = rng.choice([1, 2, 3])
        while True:
            u1 = Point(F(rng.randint(-3, 3), q), F(rng.randint(-3, 3), q))
            u2 = Point(F(rng.randint(-3, 3), q), F(rng.randint(-3, 3), q))
            if u1.x * u2.y != u1.y * u2.x:
                break
        lat = Lattice(u1, u2)
        box = Box(F(rng.randint(-4, 0)), F(rng.randint(1, 4)),
                  F(rng.randint(-4, 0)), F(rng.randint(1, 4)))
        got = points_in_box(lat, box)
        assert got == lattice_points_bruteforce(lat, box, coeff=30)
        # every point solves back to integer coefficients
        for p in got:
            a, b = lat.coefficients(p)
            assert a.denominator == 1 and b.denominator == 1


def test_points_in_box_negation_closure():
    lat = shift_lattice(2, 1)
    box = Box(F(-2), F(3), F(-1), F(4))
    neg_box = Box(-box.x_max, -box.x_min, -box.y_max, -box.y_min)
    pts = {(p.x, p.y) for p in points_in_box(lat, box)}
    neg = {(-p.x, -p.y) for p in points_in_box(lat, neg_box)}
    assert pts == neg


def test_enumerate_integer_sublattices_examples():
    got = enumerate_integer_sublattices(3)
    assert [(l.u1, l.u2) for l in got] == [
        (Point(1, 0), Point(0, 3)), (Point(1, 1), Point(0, 3)),
        (Point(1, 2), Point(0, 3)), (Point(3, 0), Point(0, 1))]
    assert enumerate_integer_sublattices(1) == [integer_lattice()]
    assert len(enumerate_integer_sublattices(5)) == 6  # sigma(5)


def test_enumerate_integer_sublattices_pairwise_distinct():
    for n in (4, 6, 12):
        lats = enumerate_integer_sublattices(n)
        assert len(set(lats)) == len(lats)
        # distinctness is witnessed by basis membership, not basis labels
        for i, a in enumerate(lats):
            for b in lats[i + 1:]:
                assert not (b.contains(a.u1) and b.contains(a.u2)
                            and a.contains(b.u1) and a.contains(b.u2))


def test_rational_dilates_examples():
    half = rational_dilates([integer_lattice()], [2])[0]
    assert half == Lattice(Point(F(1, 2), 0), Point(0, F(1, 2)))
    best_cover = rational_dilates([shift_lattice(1, 1)], [3])[0]
    assert best_cover == Lattice(Point(F(1, 3), F(1, 3)), Point(0, 1))
    assert best_cover.d == F(1, 3)
    best_pack = rational_dilates([shift_lattice(1, 1)], [2])[0]
    assert best_pack == Lattice(Point(F(1, 2), F(1, 2)), Point(0, F(3, 2)))
    assert best_pack.d == F(3, 4)


def test_scaled_determinant_quadratic():
    lat = shift_lattice(3, 2)
    for c in (F(1, 2), F(2, 3), F(5)):
        assert lat.scaled(c).d == c * c * lat.d


def test_lattice_equality_is_basis_membership():
    assert Lattice(Point(0, 1), Point(1, 0)) == integer_lattice()
    assert Lattice(Point(1, 1), Point(0, 1)) == integer_lattice()
    assert Lattice(Point(2, 1), Point(1, 1)) == integer_lattice()
    assert Lattice(Point(1, 1), Point(1, -1)) != integer_lattice()
    assert len({Lattice(Point(0, 1), Point(1, 0)), integer_lattice()}) == 1


def test_canonical_form_shape():
    lat = Lattice(Point(F(-1, 2), F(3, 4)), Point(F(1, 2), F(1, 4)))
    can = lat.canonical()
    assert can == lat
    assert can.u2.x == 0
    assert can.u1.x > 0 and can.u2.y > 0
    assert 0 <= can.u1.y < can.u2.y


def test_fundamental_domain_reduce():
    lat = shift_lattice(2, 1)
    dom = FundamentalDomain(lat)
    rng = random.Random(5)
    for _ in range(50):
        p = Point(F(rng.randint(-40, 40), 7), F(rng.randint(-40, 40), 7))
        r = dom.reduce(p)
        assert dom.contains(r)
        assert lat.contains(p - r)
    assert dom.area() == lat.d


def test_fundamental_rect_is_fundamental():
    lat = shift_lattice(2, 1)
    w, h = fundamental_rect(lat)
    assert w * h == lat.d
    rng = random.Random(9)
    for _ in range(50):
        p = Point(F(rng.randint(-30, 30), 5), F(rng.randint(-30, 30), 5))
        # exactly one translate of p lands in the rectangle
        hits = [v for v in points_in_box(
            lat, Box(-p.x - w, -p.x + w, -p.y - h, -p.y + h))
            if 0 <= p.x + v.x < w and 0 <= p.y + v.y < h]
        assert len(hits) == 1


def test_lattice_json_round_trip():
    lat = Lattice(Point(F(1, 3), F(2, 3)), Point(0, 1))
    assert Lattice.from_json(lat.to_json()) == lat
