"""Shared fixtures: frozen exemplar surfaces (one per pinch shape) and
random-instance generators used across the suite."""

import random
from fractions import Fraction

import pytest

from squaretiled.cylinders import CylinderDiagram
from squaretiled.errors import NotTransitive
from squaretiled.surface import (
    CylinderGeometry,
    build_net,
    build_origami,
    perm_from_cycles,
)


def wollmilchsau():
    return build_origami(
        perm_from_cycles([(0, 1, 2, 3), (4, 7, 6, 5)], 8),
        perm_from_cycles([(0, 4, 2, 6), (1, 5, 3, 7)], 8),
    )


def l_origami():
    """Three-square genus-2 surface: two squares in a row, one on top."""
    return build_origami(perm_from_cycles([(0, 1)], 3),
                         perm_from_cycles([(0, 2)], 3))


def torus():
    return build_origami((0,), (0,))


# one frozen genus-3 origami per horizontal pinch shape
EXEMPLARS = {
    "Case1": ((0, 3, 4, 2, 1, 5), (5, 0, 1, 3, 4, 2)),
    "Case2": ((1, 6, 5, 2, 4, 3, 7, 0), (4, 2, 1, 6, 0, 7, 5, 3)),
    "Case3": ((6, 1, 3, 4, 2, 0, 5), (2, 3, 5, 6, 0, 4, 1)),
    "Case4A": ((1, 2, 3, 0, 5, 4, 7, 6, 9, 10, 11, 8),
               (6, 4, 5, 7, 9, 8, 10, 11, 3, 2, 1, 0)),
    "Case4B": (tuple(perm_from_cycles(
        [(0, 1, 2, 3), (4, 5, 6, 7, 8), (10, 11, 12, 13)], 14)),
        (5, 6, 7, 8, 9, 10, 11, 12, 13, 4, 3, 2, 1, 0)),
    "Case5": ((2, 5, 1, 0, 3, 4), (2, 1, 0, 5, 3, 4)),
    "Case6": ((2, 3, 5, 4, 1, 0), (3, 5, 1, 2, 0, 4)),
}


def exemplar(name):
    h, v = EXEMPLARS[name]
    return build_origami(h, v)


def random_origami(rng, max_squares=10):
    """A uniformly sampled transitive origami with 2..max_squares squares."""
    while True:
        n = rng.randint(2, max_squares)
        h = list(range(n))
        v = list(range(n))
        rng.shuffle(h)
        rng.shuffle(v)
        try:
            return build_origami(tuple(h), tuple(v))
        except NotTransitive:
            continue


# the four-cylinder "stacked pair with two middles" diagram: outer
# cylinders 0 and 3 share a full interface, middles 1 (wide) and 2 sit
# between the top of 0 and the bottom of 3
CASE4A_DIAGRAM = CylinderDiagram(
    bottom_words={0: (0, 1, 2, 3), 1: (4,), 2: (5,), 3: (6, 7)},
    top_words={0: (4, 5), 1: (6,), 2: (7,), 3: (3, 2, 1, 0)},
    saddle_zeros={0: (0, 1), 1: (1, 0), 2: (0, 1), 3: (1, 0),
                  4: (2, 2), 5: (2, 2), 6: (5, 5), 7: (5, 5)},
)


def random_case4a_net(rng, denominator=8):
    """A random metric net over the four-cylinder stacked diagram.

    All saddle lengths and twists are multiples of ``1/denominator`` and
    the wide middle is strictly wider than half the outer circumference,
    so any nonempty open window hit contains a grid point of denominator
    ``2*denominator``."""
    q = Fraction(1, denominator)

    def composition(total_units, parts):
        cuts = sorted(rng.sample(range(1, total_units), parts - 1))
        prev, out = 0, []
        for c in cuts + [total_units]:
            out.append((c - prev) * q)
            prev = c
        return out

    l0, l1, l2, l3 = composition(denominator, 4)
    l4 = rng.choice([k for k in range(1, denominator)
                     if 2 * k != denominator]) * q
    l5 = 1 - l4
    lengths = {0: l0, 1: l1, 2: l2, 3: l3, 4: l4, 5: l5, 6: l4, 7: l5}
    widths = {0: Fraction(1), 1: l4, 2: l5, 3: Fraction(1)}

    def geom(cid):
        h = Fraction(rng.randint(1, 4), rng.choice([1, 2]))
        twist = rng.randrange(int(widths[cid] / q)) * q
        return CylinderGeometry(widths[cid], h, twist)

    return build_net({c: geom(c) for c in range(4)}, CASE4A_DIAGRAM,
                     lengths)


@pytest.fixture
def rng():
    return random.Random(20260824)
