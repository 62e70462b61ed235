"""Interval maps between cylinder interfaces, window searches, transverse
crossing-cylinder witnesses for the stacked configurations, and the window
inequalities."""

from fractions import Fraction

import pytest

from conftest import exemplar, random_case4a_net, torus, wollmilchsau
from squaretiled.cylinders import horizontal_decomposition
from squaretiled.errors import CaseMismatch, LengthMismatch
from squaretiled.transverse import (
    IntervalMap,
    WindowConstraint,
    boundary_hit,
    build_interval_map,
    case4a_window_map,
    find_crossing_cylinder,
    find_window_hit,
    net_case_label,
    window_feasible,
    window_feasible_pairs,
)


def total_length(intervals):
    return sum(b - a for a, b in intervals)


def test_interval_map_normalization_and_apply():
    f = IntervalMap(4, [(0, 3, 1), (3, 4, 1)])
    assert f.apply(0) == 1
    assert f.apply(Fraction(5, 2)) == Fraction(7, 2)
    assert f.apply(3) == 0
    assert f.piece_at(Fraction(7, 2)) == (3, 4, 1)


def test_interval_map_requires_partition():
    with pytest.raises(Exception):
        IntervalMap(2, [(0, 1, 0)])
    with pytest.raises(Exception):
        IntervalMap(2, [(0, 1, 0), (1, 2, 1)])


def test_interval_map_measure_preservation(rng):
    for _ in range(40):
        n = rng.randint(1, 5)
        cuts = sorted(rng.sample(range(1, 24), n - 1)) if n > 1 else []
        bounds = [0] + [Fraction(c, 4) for c in cuts] + [6]
        pieces = [(bounds[i], bounds[i + 1],
                   Fraction(rng.randint(0, 23), 4))
                  for i in range(n)]
        try:
            f = IntervalMap(6, pieces)
        except Exception:
            continue  # the random offsets produced overlapping images
        assert total_length([(a, b) for a, b, _ in f.pieces]) == 6
        assert total_length(f.image_intervals()) == 6


def test_torus_interface_map_is_twist_translation():
    net = horizontal_decomposition(torus()).to_net()
    f = build_interval_map(net, ("bottom", 0), ("top", 0))
    assert f.pieces == ((0, 1, 0),)


def test_wollmilchsau_interface_map_oracle():
    net = horizontal_decomposition(wollmilchsau()).to_net()
    f = build_interval_map(net, ("bottom", 0), ("top", 1))
    assert f.pieces == ((0, 1, 2), (1, 2, 0), (2, 3, 2), (3, 4, 0))


def test_interface_map_rejects_mismatched_interfaces():
    net = horizontal_decomposition(wollmilchsau()).to_net()
    with pytest.raises((LengthMismatch, KeyError, AssertionError)):
        build_interval_map(net, ("bottom", 0), ("bottom", 1))


def test_find_window_hit_basic():
    swap = IntervalMap(4, [(0, 2, 2), (2, 4, 2)])
    assert find_window_hit(swap, (0, 4), (0, 1)) == (2, 3)
    assert find_window_hit(swap, (0, 2), (0, 2)) is None


def test_find_window_hit_picks_leftmost_among_longest():
    rot = IntervalMap(3, [(0, 3, 1)])
    assert find_window_hit(rot, (0, 3), (0, 2)) == (0, 1)


def test_boundary_hit():
    f = IntervalMap(2, [(0, 2, Fraction(1, 2))])
    assert boundary_hit(f, 1) == Fraction(1, 2)


def test_net_case_labels():
    for name in ("Case1", "Case2", "Case4A", "Case4B"):
        net = horizontal_decomposition(exemplar(name)).to_net()
        expected = "Case4" if name.startswith("Case4") else name
        assert str(net_case_label(net)) == expected


@pytest.mark.parametrize("name", ["Case1", "Case2", "Case4A", "Case4B"])
def test_exemplar_witnesses(name):
    net = horizontal_decomposition(exemplar(name)).to_net()
    witness = find_crossing_cylinder(net, name)
    assert witness is not None
    assert witness.width > 0
    a, b = witness.start_interval
    assert a < b


def test_witness_case_validation():
    net = horizontal_decomposition(exemplar("Case1")).to_net()
    with pytest.raises(CaseMismatch):
        find_crossing_cylinder(net, "Case2")


def brute_window_point(net, denominator=16):
    """Independent existence check for the four-cylinder witness: scan grid
    points on the re-cut bottom of the lower outer cylinder and follow the
    boundary gluing by hand, without the window-search machinery."""
    from squaretiled.transverse import _matched_pair, _saddle_arc

    c1, c4, middles = _matched_pair(net)
    wide = max(middles, key=lambda c: (net.cylinders[c].circumference, c))
    w = net.cylinders[c1].circumference
    s = net.cylinders[wide].circumference
    lengths = net.saddle_lengths
    a_top = _saddle_arc(net.diagram.top_words[c1], net.top_positions(c1),
                        lengths, set(net.diagram.bottom_words[wide]), w)[0]
    a_bot = _saddle_arc(net.diagram.bottom_words[c4],
                        net.bottom_positions(c4),
                        lengths, set(net.diagram.top_words[wide]), w)[0]
    bp1 = net.bottom_positions(c1)
    tp4 = net.top_positions(c4)
    hits = []
    grid = [Fraction(k, denominator) for k in range(1, int(s * denominator))]
    for x in grid:
        xa = (a_top + x) % w
        for sid in net.diagram.bottom_words[c1]:
            lo = bp1[sid]
            if lo < xa < lo + lengths[sid]:
                ya = (tp4[sid] + (xa - lo)) % w
                y = (ya - a_bot) % w
                if 0 < y < s:
                    hits.append(x)
    return hits


def test_case4a_random_nets_with_brute_oracle(rng):
    for _ in range(60):
        net = random_case4a_net(rng)
        witness = find_crossing_cylinder(net, "Case4A")
        assert witness is not None
        f, s = case4a_window_map(net)
        a, b = witness.start_interval
        mid = a + (b - a) / 2
        assert 0 <= a < b <= s
        assert 0 <= f.apply(mid) < s
        assert brute_window_point(net), "brute scan must confirm existence"


def test_window_feasible_known_points():
    q = Fraction(1, 4)
    rec = window_feasible(WindowConstraint(q, q, 0, q))
    assert rec.feasible and rec.boundary and rec.slack == 0
    rec = window_feasible(WindowConstraint(Fraction(1, 3), q, 0, q))
    assert not rec.feasible
    assert rec.slack == Fraction(-1, 6)


def test_window_feasible_pairs_unique():
    assert window_feasible_pairs(40) == [(Fraction(1, 4), Fraction(1, 4))]
