r"""
Cylinder decompositions of origamis in periodic directions.

A periodic direction decomposes a translation surface into maximal metric
cylinders; for an origami and the horizontal direction this is a purely
combinatorial computation on the two permutations.  This module computes

- the horizontal decomposition (:func:`horizontal_decomposition`): maximal
  stacks of ``h``-cycles glued along cone-point-free interfaces, together
  with all saddle connections on the cylinder boundaries,
- decompositions in arbitrary rational directions
  (:func:`periodic_decomposition`) by shearing the direction to horizontal
  with an ``SL(2, Z)`` word,
- the combinatorial cylinder diagram with a relabeling-invariant canonical
  form (:class:`CylinderDiagram`),
- integer moduli exponents (:func:`moduli_exponents`), and
- matching of a pinch dual graph against the six genus-3 reference shapes
  (:func:`classify_case`).

EXAMPLES::

    >>> from squaretiled.surface import build_origami, perm_from_cycles
    >>> o = build_origami(perm_from_cycles([(0, 1)], 3),
    ...                   perm_from_cycles([(0, 2)], 3))
    >>> d = horizontal_decomposition(o)
    >>> [(c.circumference, c.height) for c in d.cylinders]
    [(Fraction(2, 1), Fraction(1, 1)), (Fraction(1, 1), Fraction(1, 1))]
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .errors import Incommensurable
from .surface import (
    CylinderGeometry,
    Origami,
    act_sl2z,
    build_net,
    matrix_word,
    perm_cycles,
)


@dataclass(frozen=True)
class Cylinder:
    """A maximal horizontal cylinder of an origami decomposition.

    ``rows`` lists the constituent ``h``-cycles from bottom to top, each
    rotated so that its first square sits at ``x = 0`` of the cylinder.
    """

    id: int
    rows: tuple
    circumference: Fraction
    height: Fraction

    @property
    def squares(self):
        """All squares of the cylinder."""
        return tuple(sq for row in self.rows for sq in row)

    @property
    def modulus(self) -> Fraction:
        """height / circumference."""
        return self.height / self.circumference


@dataclass(frozen=True)
class DecompositionSaddle:
    """A saddle connection on a horizontal boundary: its unit squares (the
    bottom edges traversed left to right) and zero labels at both ends."""

    id: int
    squares: tuple
    start_zero: int
    end_zero: int

    @property
    def length(self) -> Fraction:
        return Fraction(len(self.squares))


@dataclass
class CylinderDiagram:
    """Combinatorics of a cylinder decomposition with metric data forgotten.

    ``bottom_words`` and ``top_words`` map each cylinder id to the cyclic
    sequence of saddle ids along that boundary; ``saddle_zeros`` maps each
    saddle id to the pair (zero at its start, zero at its end).  Every
    saddle id appears exactly once among the bottom words and exactly once
    among the top words.
    """

    bottom_words: dict
    top_words: dict
    saddle_zeros: dict

    @property
    def cylinder_ids(self):
        return sorted(self.bottom_words)

    def validate(self):
        bottoms = [s for w in self.bottom_words.values() for s in w]
        tops = [s for w in self.top_words.values() for s in w]
        assert sorted(bottoms) == sorted(set(bottoms)), "saddle repeated on bottoms"
        assert sorted(tops) == sorted(set(tops)), "saddle repeated on tops"
        assert sorted(bottoms) == sorted(tops), "tops and bottoms disagree"

    def canonical_key(self):
        r"""
        A hashable encoding, equal for two diagrams if and only if they
        differ by relabeling of cylinders, saddles and zeros and by
        rotations of the cyclic boundary words.

        The encoding is the minimum, over every cylinder ordering and every
        rotation of each boundary word, of the word list with saddles and
        zeros renamed in first-seen order.

        EXAMPLES::

            >>> d1 = CylinderDiagram({0: ("a", "b")}, {0: ("b", "a")},
            ...                      {"a": (0, 0), "b": (0, 0)})
            >>> d2 = CylinderDiagram({5: ("x", "y")}, {5: ("x", "y")},
            ...                      {"x": (1, 1), "y": (1, 1)})
            >>> d1.canonical_key() == d2.canonical_key()
            True
        """
        cids = self.cylinder_ids
        best = None
        rotation_sets = []
        for cid in cids:
            nb, nt = len(self.bottom_words[cid]), len(self.top_words[cid])
            rotation_sets.append([(rb, rt) for rb in range(max(nb, 1))
                                  for rt in range(max(nt, 1))])
        for order in itertools.permutations(range(len(cids))):
            for rots in itertools.product(*(rotation_sets[i] for i in order)):
                saddle_map, zero_map = {}, {}
                enc = []

                def rename(sid):
                    if sid not in saddle_map:
                        saddle_map[sid] = len(saddle_map)
                    return saddle_map[sid]

                def rename_zero(z):
                    if z not in zero_map:
                        zero_map[z] = len(zero_map)
                    return zero_map[z]

                for pos, i in enumerate(order):
                    cid = cids[i]
                    rb, rt = rots[pos]
                    bw = self.bottom_words[cid]
                    tw = self.top_words[cid]
                    bw = bw[rb:] + bw[:rb]
                    tw = tw[rt:] + tw[:rt]
                    enc.append((
                        tuple(rename(s) for s in bw),
                        tuple(rename(s) for s in tw),
                    ))
                zenc = tuple(
                    (rename_zero(self.saddle_zeros[sid][0]),
                     rename_zero(self.saddle_zeros[sid][1]))
                    for sid, _ in sorted(saddle_map.items(), key=lambda kv: kv[1])
                )
                cand = (tuple(enc), zenc)
                if best is None or cand < best:
                    best = cand
        return best


@dataclass
class CylinderDecomposition:
    """A cylinder decomposition of an origami in a periodic direction.

    All combinatorial and metric data refer to the sheared origami
    ``origami`` in whose coordinates the direction is horizontal;
    ``word`` is the ``SL(2, Z)`` word carrying ``base_origami`` there
    (empty for the horizontal direction).  ``direction`` is the primitive
    direction vector ``(dx, dy)`` in base coordinates.
    """

    origami: Origami
    base_origami: Origami
    word: tuple
    direction: tuple
    cylinders: tuple
    diagram: CylinderDiagram
    saddles: dict
    square_cylinder: dict = field(repr=False)
    square_x: dict = field(repr=False)
    bottom_positions: dict = field(repr=False)
    top_positions: dict = field(repr=False)

    @property
    def area(self) -> Fraction:
        return sum((c.circumference * c.height for c in self.cylinders), Fraction(0))

    def cylinder(self, cid) -> Cylinder:
        return self.cylinders[cid]

    def core_row(self, cid):
        """The bottom row of cylinder ``cid``; its squares' bottom edges sum
        to a core-curve representative."""
        return self.cylinders[cid].rows[0]

    def to_net(self):
        """The decomposition as a metric :class:`FlatSurfaceNet` (twists are
        read off from the square coordinates)."""
        geoms = {}
        for c in self.cylinders:
            first_top = self.diagram.top_words[c.id][0]
            geoms[c.id] = CylinderGeometry(
                c.circumference, c.height, self.top_positions[c.id][first_top]
            )
        lengths = {sid: s.length for sid, s in self.saddles.items()}
        return build_net(geoms, self.diagram, lengths)


def _marked_corners(o: Origami):
    """Corners carrying cone points; for genus one (no cone points) the
    single corner of square 0 is marked so boundaries carry a saddle."""
    orbits = o.vertex_orbits()
    corner_class = {}
    for idx, orbit in enumerate(orbits):
        for sq in orbit:
            corner_class[sq] = idx
    marked = {sq for orbit in orbits if len(orbit) > 1 for sq in orbit}
    if not marked:
        marked = {0}
    return marked, corner_class


def horizontal_decomposition(o: Origami, base=None, word=(), direction=(1, 0)):
    r"""
    Decompose an origami into maximal horizontal cylinders.

    Each cylinder is a maximal stack of ``h``-cycles glued along interfaces
    free of cone points; circumference is the cycle length and height the
    stack depth.  Saddle connections are the maximal cone-point-free runs
    of unit edges on the cylinder boundaries, and the diagram records their
    cyclic order on every top and bottom.

    EXAMPLES::

        >>> from squaretiled.surface import build_origami
        >>> torus = build_origami((0,), (0,))
        >>> d = horizontal_decomposition(torus)
        >>> len(d.cylinders), d.cylinders[0].circumference
        (1, Fraction(1, 1))
        >>> d.diagram.bottom_words, d.diagram.top_words
        ({0: (0,)}, {0: (0,)})
    """
    n = o.n
    marked, corner_class = _marked_corners(o)
    rows = perm_cycles(o.h)
    row_of = {}
    for ri, row in enumerate(rows):
        for sq in row:
            row_of[sq] = ri

    # merge rows across interfaces without marked corners
    parent = list(range(len(rows)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    above = {}  # row -> row directly above, when the interface is regular
    for ri, row in enumerate(rows):
        upstairs = [o.v[sq] for sq in row]
        if not any(sq in marked for sq in upstairs):
            rj = row_of[upstairs[0]]
            above[ri] = rj
            ra, rb = find(ri), find(rj)
            if ra != rb:
                parent[ra] = rb

    components = {}
    for ri in range(len(rows)):
        components.setdefault(find(ri), []).append(ri)

    cylinders = []
    square_cylinder = {}
    square_x = {}
    for comp in components.values():
        merged_up = set(above.get(ri) for ri in comp)
        bottoms = [ri for ri in comp if ri not in merged_up]
        assert len(bottoms) == 1, "cylinder stack must have a unique bottom row"
        chain = [bottoms[0]]
        while chain[-1] in above:
            chain.append(above[chain[-1]])
        assert sorted(chain) == sorted(comp)
        # rotate the bottom row to start at its smallest marked corner
        r0 = rows[chain[0]]
        start = min(i for i, sq in enumerate(r0) if sq in marked)
        r0 = r0[start:] + r0[:start]
        cid = len(cylinders)
        stacked = [r0]
        for sq_i, sq in enumerate(r0):
            square_x[sq] = sq_i
        for ri in chain[1:]:
            prev = stacked[-1]
            nxt = tuple(o.v[sq] for sq in prev)
            for sq, below in zip(nxt, prev):
                square_x[sq] = square_x[below]
            stacked.append(nxt)
        for row in stacked:
            for sq in row:
                square_cylinder[sq] = cid
        cylinders.append(Cylinder(
            cid, tuple(stacked), Fraction(len(r0)), Fraction(len(stacked))
        ))
    # deterministic ids: sort by smallest square of the bottom row
    cylinders.sort(key=lambda c: min(c.rows[0]))
    remap = {}
    relabeled = []
    for new_id, c in enumerate(cylinders):
        remap[c.id] = new_id
        relabeled.append(Cylinder(new_id, c.rows, c.circumference, c.height))
    cylinders = relabeled
    square_cylinder = {sq: remap[cid] for sq, cid in square_cylinder.items()}

    # saddle connections: runs between marked corners on each bottom row
    saddles = {}
    edge_saddle = {}
    bottom_words = {}
    bottom_positions = {}
    for c in cylinders:
        word_ids = []
        positions = {}
        run = []
        run_start_x = 0
        for i, sq in enumerate(c.rows[0]):
            if sq in marked and run:
                sid = len(saddles)
                _close_run(saddles, edge_saddle, sid, run, corner_class, o)
                word_ids.append(sid)
                positions[sid] = Fraction(run_start_x)
                run = []
            if not run:
                run_start_x = i
            run.append(sq)
        sid = len(saddles)
        _close_run(saddles, edge_saddle, sid, run, corner_class, o)
        word_ids.append(sid)
        positions[sid] = Fraction(run_start_x)
        bottom_words[c.id] = tuple(word_ids)
        bottom_positions[c.id] = positions

    # top words: read the same quotient edges along each cylinder's top row
    top_words = {}
    top_positions = {}
    for c in cylinders:
        rt = c.rows[-1]
        w = len(rt)
        starts = [i for i, sq in enumerate(rt) if o.v[sq] in marked]
        assert starts, "top boundary must contain a marked corner"
        k0 = min(starts, key=lambda i: square_x[rt[i]])
        rt = rt[k0:] + rt[:k0]
        word_ids = []
        positions = {}
        run_edges = []
        run_start = None
        for sq in rt:
            edge = o.v[sq]
            if edge in marked and run_edges:
                word_ids.append(_close_top_run(run_edges, edge_saddle, saddles))
                positions[word_ids[-1]] = Fraction(square_x[run_start])
                run_edges = []
            if not run_edges:
                run_start = sq
            run_edges.append(edge)
        word_ids.append(_close_top_run(run_edges, edge_saddle, saddles))
        positions[word_ids[-1]] = Fraction(square_x[run_start])
        top_words[c.id] = tuple(word_ids)
        top_positions[c.id] = positions

    diagram = CylinderDiagram(bottom_words, top_words,
                              {sid: (s.start_zero, s.end_zero)
                               for sid, s in saddles.items()})
    diagram.validate()
    d = CylinderDecomposition(
        origami=o,
        base_origami=base if base is not None else o,
        word=tuple(word),
        direction=tuple(direction),
        cylinders=tuple(cylinders),
        diagram=diagram,
        saddles=saddles,
        square_cylinder=square_cylinder,
        square_x=square_x,
        bottom_positions=bottom_positions,
        top_positions=top_positions,
    )
    assert d.area == n, "cylinder areas must sum to the number of squares"
    return d


def _close_run(saddles, edge_saddle, sid, run, corner_class, o):
    start = run[0]
    end = o.h[run[-1]]
    saddles[sid] = DecompositionSaddle(
        sid, tuple(run), corner_class[start], corner_class[end]
    )
    for sq in run:
        edge_saddle[sq] = sid


def _close_top_run(run_edges, edge_saddle, saddles):
    sid = edge_saddle[run_edges[0]]
    assert all(edge_saddle[e] == sid for e in run_edges), \
        "top run crosses a saddle boundary"
    assert len(run_edges) == len(saddles[sid].squares), \
        "top run length disagrees with its saddle"
    return sid


def periodic_decomposition(o: Origami, slope):
    r"""
    Cylinder decomposition of ``o`` in the rational direction of ``slope``.

    ``slope`` is a reduced pair ``(p, q)`` meaning direction vector
    ``(q, p)``; ``(1, 0)`` is the vertical direction and ``(0, 1)``
    horizontal.  The origami is carried to a horizontally periodic one by
    an ``SL(2, Z)`` word (recorded on the result) and decomposed there.

    EXAMPLES::

        >>> from squaretiled.surface import build_origami, perm_from_cycles
        >>> ew = build_origami(perm_from_cycles([(0, 1, 2, 3), (4, 7, 6, 5)], 8),
        ...                    perm_from_cycles([(0, 4, 2, 6), (1, 5, 3, 7)], 8))
        >>> dv = periodic_decomposition(ew, (1, 0))   # vertical
        >>> [(c.circumference, c.height) for c in dv.cylinders]
        [(Fraction(4, 1), Fraction(1, 1)), (Fraction(4, 1), Fraction(1, 1))]
    """
    p, q = slope
    if gcd(p, q) != 1:
        raise ValueError(f"slope {slope} is not reduced")
    # direction vector (q, p); find M in SL(2, Z) with M (q, p)^T = (1, 0)^T
    if (q, p) == (1, 0):
        word = []
    else:
        # a*q + b*p == 1 via the extended Euclidean algorithm
        a, b = _bezout(q, p)
        m = ((a, b), (-p, q))
        word = matrix_word(m)
    sheared = act_sl2z(o, word)
    return horizontal_decomposition(sheared, base=o, word=tuple(word),
                                    direction=(q, p))


def _bezout(x, y):
    """Coefficients (a, b) with a*x + b*y == gcd(x, y)."""
    old_r, r = x, y
    old_a, a = 1, 0
    old_b, b = 0, 1
    while r != 0:
        qq = old_r // r
        old_r, r = r, old_r - qq * r
        old_a, a = a, old_a - qq * a
        old_b, b = b, old_b - qq * b
    if old_r < 0:
        old_a, old_b = -old_a, -old_b
    return old_a, old_b


def moduli_exponents(d):
    r"""
    Integer exponents ``r_e`` proportional to the cylinder moduli with
    overall gcd one.

    Accepts a :class:`CylinderDecomposition`, a net, or a plain iterable of
    exact rational moduli.

    EXAMPLES::

        >>> moduli_exponents([Fraction(1, 2), Fraction(1, 3)])
        (3, 2)
        >>> moduli_exponents([Fraction(1, 4), Fraction(1, 4)])
        (1, 1)
    """
    if hasattr(d, "cylinders"):
        cyls = d.cylinders.values() if isinstance(d.cylinders, dict) else d.cylinders
        moduli = [c.modulus for c in cyls]
    else:
        moduli = list(d)
    if not moduli:
        return ()
    for m in moduli:
        if not isinstance(m, (int, Fraction)):
            raise Incommensurable(f"modulus {m!r} is not an exact rational")
    scale = lcm(*(Fraction(m).denominator for m in moduli)) if len(moduli) > 1 \
        else Fraction(moduli[0]).denominator
    ints = [int(Fraction(m) * scale) for m in moduli]
    g = gcd(*ints) if len(ints) > 1 else ints[0]
    return tuple(x // g for x in ints)


class CaseLabel(enum.Enum):
    """The six reference dual-graph shapes of genus-3 cylinder pinches."""

    CASE1 = 1
    CASE2 = 2
    CASE3 = 3
    CASE4 = 4
    CASE5 = 5
    CASE6 = 6

    def __str__(self):
        return f"Case{self.value}"


def _reference_graphs():
    # (genus labels, edges as vertex-index pairs)
    return {
        CaseLabel.CASE1: ([1], [(0, 0), (0, 0)]),
        CaseLabel.CASE2: ([0, 1], [(0, 1), (0, 1), (0, 1)]),
        CaseLabel.CASE3: ([0, 1], [(0, 0), (0, 1), (0, 1)]),
        CaseLabel.CASE4: ([0, 0, 1], [(0, 1), (0, 1), (0, 2), (1, 2)]),
        CaseLabel.CASE5: ([2], [(0, 0)]),
        CaseLabel.CASE6: ([1, 1], [(0, 1), (0, 1)]),
    }


def _multigraph_isomorphic(genera_a, edges_a, genera_b, edges_b):
    if sorted(genera_a) != sorted(genera_b) or len(edges_a) != len(edges_b):
        return False
    nv = len(genera_a)
    for perm in itertools.permutations(range(nv)):
        if any(genera_a[i] != genera_b[perm[i]] for i in range(nv)):
            continue
        mapped = sorted(tuple(sorted((perm[u], perm[w]))) for u, w in edges_a)
        if mapped == sorted(tuple(sorted(e)) for e in edges_b):
            return True
    return False


def classify_case(g):
    r"""
    Match a pinch dual graph against the six genus-3 reference shapes.

    Returns the :class:`CaseLabel`, or ``None`` when the graph matches no
    reference shape (in particular for every input whose genus labels and
    cycle rank do not add up to genus 3).

    EXAMPLES::

        >>> from squaretiled.homology import DualGraph
        >>> g = DualGraph(vertices=((0, 1), (1, 1)),
        ...               edges=((0, (0, 1)), (1, (0, 1))))
        >>> str(classify_case(g))
        'Case6'
    """
    index = {vid: i for i, (vid, _) in enumerate(g.vertices)}
    genera = [genus for _, genus in g.vertices]
    edges = [(index[u], index[w]) for _, (u, w) in g.edges]
    for label, (ref_genera, ref_edges) in _reference_graphs().items():
        if _multigraph_isomorphic(genera, edges, ref_genera, ref_edges):
            return label
    return None
