r"""
Exact piecewise isometries between cylinder interfaces, constructive
searches for transverse cylinders in the two-, three- and four-cylinder
configurations, and the window-inequality solver.

All interval endpoints are exact rationals.  The searches return witness
records (crossed-cylinder sequence, width, average direction) that are
re-verified combinatorially; existence arguments that the source material
phrases through shearing and cutting-and-regluing become coordinate
re-origin choices here.

EXAMPLES::

    >>> from fractions import Fraction
    >>> f = IntervalMap(Fraction(1), ((Fraction(0), Fraction(1), Fraction(1, 3)),))
    >>> f.apply(Fraction(5, 6))
    Fraction(1, 6)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import SimpleNamespace

from .cylinders import CaseLabel, classify_case
from .errors import CaseMismatch, LengthMismatch
from .homology import dual_graph

# ---------------------------------------------------------------------------
# interval maps
# ---------------------------------------------------------------------------


class IntervalMap:
    r"""
    A measure-preserving piecewise isometry of ``[0, L)``: each piece is a
    half-open source interval translated by an offset, with the image taken
    mod ``L``.

    On construction the pieces are normalized: sorted, offsets reduced mod
    ``L``, and any piece whose image would wrap is split, so every stored
    piece has a straight (non-wrapping) image.  Both the sources and the
    images must partition ``[0, L)``.

    EXAMPLES::

        >>> rot = IntervalMap(Fraction(1),
        ...                   ((Fraction(0), Fraction(1), Fraction(1, 3)),))
        >>> [p[:2] for p in rot.pieces]
        [(Fraction(0, 1), Fraction(2, 3)), (Fraction(2, 3), Fraction(1, 1))]
        >>> rot.apply(Fraction(1, 2))
        Fraction(5, 6)
    """

    def __init__(self, length, pieces):
        self.length = Fraction(length)
        if self.length <= 0:
            raise ValueError("length must be positive")
        split = []
        for a, b, off in pieces:
            a, b, off = Fraction(a), Fraction(b), Fraction(off) % self.length
            if not (0 <= a < b <= self.length):
                raise ValueError("piece outside [0, L)")
            wrap = self.length - off
            if off and a < wrap < b:
                split.append((a, wrap, off))
                split.append((wrap, b, off))
            else:
                split.append((a, b, off))
        split.sort()
        self.pieces = tuple(split)
        self._validate()

    def _validate(self):
        x = Fraction(0)
        for a, b, _ in self.pieces:
            if a != x:
                raise ValueError("source intervals do not partition [0, L)")
            x = b
        if x != self.length:
            raise ValueError("source intervals do not partition [0, L)")
        images = sorted(self.image_intervals())
        x = Fraction(0)
        for a, b in images:
            if a != x:
                raise ValueError("image intervals do not partition [0, L)")
            x = b
        if x != self.length:
            raise ValueError("image intervals do not partition [0, L)")

    def image_intervals(self):
        """The (non-wrapping) image interval of each piece."""
        out = []
        for a, b, off in self.pieces:
            ia = (a + off) % self.length
            out.append((ia, ia + (b - a)))
        return out

    def apply(self, x):
        """Image of the point ``x``."""
        x = Fraction(x)
        for a, b, off in self.pieces:
            if a <= x < b:
                return (x + off) % self.length
        raise ValueError("point outside [0, L)")

    def piece_at(self, x):
        """The piece ``(a, b, offset)`` whose source contains ``x``."""
        x = Fraction(x)
        for piece in self.pieces:
            if piece[0] <= x < piece[1]:
                return piece
        raise ValueError("point outside [0, L)")


def build_interval_map(net, from_interface, to_interface) -> IntervalMap:
    r"""
    The identification of one cylinder interface with another, as an
    :class:`IntervalMap` between their boundary coordinates.

    Interfaces are ``("bottom", cid)`` or ``("top", cid)``; every saddle of
    the source interface must appear on the target interface and the two
    total lengths must agree (:class:`~squaretiled.errors.LengthMismatch`
    otherwise).  A point at distance ``d`` into a saddle on the source is
    sent to distance ``d`` into the same saddle on the target.

    EXAMPLES::

        >>> from squaretiled.cylinders import CylinderDiagram
        >>> from squaretiled.surface import CylinderGeometry, build_net
        >>> diag = CylinderDiagram(bottom_words={0: ("a",)},
        ...                        top_words={0: ("a",)},
        ...                        saddle_zeros={"a": (0, 0)})
        >>> net = build_net({0: CylinderGeometry(1, 1, Fraction(1, 3))},
        ...                 diag, {"a": 1})
        >>> f = build_interval_map(net, ("bottom", 0), ("top", 0))
        >>> f.apply(Fraction(0))
        Fraction(1, 3)
    """
    def interface_data(interface):
        side, cid = interface
        if side == "bottom":
            word = net.diagram.bottom_words[cid]
            pos = net.bottom_positions(cid)
        elif side == "top":
            word = net.diagram.top_words[cid]
            pos = net.top_positions(cid)
        else:
            raise ValueError("interface side must be 'bottom' or 'top'")
        return word, pos, net.cylinders[cid].circumference

    from_word, from_pos, from_len = interface_data(from_interface)
    to_word, to_pos, to_len = interface_data(to_interface)
    if from_len != to_len:
        raise LengthMismatch("interfaces have lengths %s and %s"
                             % (from_len, to_len))
    if set(from_word) != set(to_word):
        raise LengthMismatch("interfaces do not carry the same saddles")
    pieces = []
    for sid in from_word:
        a = from_pos[sid]
        ln = net.saddle_lengths[sid]
        if ln == 0:
            continue
        # a point at distance d into the saddle sits at (a + d) mod L and
        # maps to (to_pos + d) mod L, so the offset is the same mod L on
        # both parts of a source saddle that wraps past the end of [0, L)
        off = to_pos[sid] - a
        if a + ln <= from_len:
            pieces.append((a, a + ln, off))
        else:
            pieces.append((a, from_len, off))
            pieces.append((Fraction(0), a + ln - from_len, off))
    return IntervalMap(from_len, pieces)


def find_window_hit(f: IntervalMap, j, w):
    r"""
    A maximal open interval ``(a, b)`` inside the window ``j`` whose image
    under ``f`` lies inside the window ``w``, chosen leftmost among the
    longest; ``None`` if no positive-length interval qualifies.

    EXAMPLES::

        >>> ident = IntervalMap(1, ((0, 1, 0),))
        >>> find_window_hit(ident, (0, Fraction(1, 2)), (0, Fraction(1, 2)))
        (Fraction(0, 1), Fraction(1, 2))
        >>> rot = IntervalMap(1, ((0, 1, Fraction(1, 3)),))
        >>> find_window_hit(rot, (0, Fraction(1, 3)),
        ...                 (Fraction(1, 3), Fraction(2, 3)))
        (Fraction(0, 1), Fraction(1, 3))
        >>> swap = IntervalMap(1, ((0, Fraction(1, 2), Fraction(1, 2)),
        ...                        (Fraction(1, 2), 1, Fraction(1, 2))))
        >>> find_window_hit(swap, (0, Fraction(1, 2)),
        ...                 (0, Fraction(1, 2))) is None
        True
    """
    j0, j1 = Fraction(j[0]), Fraction(j[1])
    w0, w1 = Fraction(w[0]), Fraction(w[1])
    hits = []
    for a, b, off in f.pieces:
        s0, s1 = max(a, j0), min(b, j1)
        if s0 >= s1:
            continue
        i0 = (s0 + off) % f.length
        i1 = i0 + (s1 - s0)
        m0, m1 = max(i0, w0), min(i1, w1)
        if m0 < m1:
            hits.append((s0 + (m0 - i0), s0 + (m1 - i0)))
    if not hits:
        return None
    hits.sort()
    merged = [list(hits[0])]
    for a, b in hits[1:]:
        if a <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    best = max(merged, key=lambda ab: ab[1] - ab[0])
    return (best[0], best[1])


def boundary_hit(f: IntervalMap, value):
    r"""
    The unique preimage of ``value`` under ``f`` (raises if the preimage is
    not unique).  Used for the boundary case where the window hit
    degenerates to a point.

    EXAMPLES::

        >>> rot = IntervalMap(1, ((0, 1, Fraction(1, 3)),))
        >>> boundary_hit(rot, Fraction(1, 2))
        Fraction(1, 6)
    """
    value = Fraction(value) % f.length
    found = []
    for a, b, off in f.pieces:
        x = (value - off) % f.length
        if a <= x < b:
            found.append(x)
    if len(found) != 1:
        raise ValueError("preimage of %s is not unique" % (value,))
    return found[0]


# ---------------------------------------------------------------------------
# transverse-cylinder witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TransverseWitness:
    """A certified transverse cylinder: the horizontal cylinders it crosses
    (each exactly once, in order), its width, the interface interval it
    starts from, and the average direction ``(dx, dy)`` of its core."""

    crossed: tuple
    width: Fraction
    start_interface: tuple
    start_interval: tuple
    direction: tuple
    kind: str = ""

    def __post_init__(self):
        assert self.width > 0
        assert len(set(self.crossed)) == len(self.crossed), \
            "each cylinder must be crossed exactly once"


def _net_view(net):
    """Adapter letting a metric net reuse the decomposition-level dual
    graph machinery (no origami attached, so genus cross-checks are
    skipped)."""
    return SimpleNamespace(
        cylinders=[SimpleNamespace(id=cid) for cid in sorted(net.cylinders)],
        diagram=net.diagram,
        saddles={sid: None for sid in net.saddle_lengths},
        origami=None,
    )


def net_case_label(net) -> CaseLabel:
    """Classify the net's cylinder diagram by its pinch dual graph."""
    return classify_case(dual_graph(_net_view(net)))


def _matched_pair(net):
    """The pair ``(c1, c4)`` with ``bottom(c1)`` and ``top(c4)`` carrying
    the same saddles, plus the middle cylinders over ``top(c1)``."""
    cids = sorted(net.cylinders)
    bottom_owner = {s: c for c in cids for s in net.diagram.bottom_words[c]}
    for c1 in cids:
        for c4 in cids:
            if c1 == c4:
                continue
            if set(net.diagram.bottom_words[c1]) == \
                    set(net.diagram.top_words[c4]):
                middles = {bottom_owner[s]
                           for s in net.diagram.top_words[c1]}
                if c1 not in middles and c4 not in middles:
                    return c1, c4, tuple(sorted(middles))
    raise CaseMismatch("no pair of cylinders glued along a full interface")


def _saddle_arc(word, positions, lengths, saddles, circumference):
    """Start position and total length of the (cyclically contiguous) run
    of ``saddles`` inside ``word``."""
    idx = [i for i, s in enumerate(word) if s in saddles]
    k = len(word)
    if len(idx) != len(saddles):
        raise CaseMismatch("middle cylinder interface is not a sub-run")
    rotation = None
    for start in idx:
        if all((start + t) % k in idx for t in range(len(idx))):
            if (start - 1) % k not in idx or len(idx) == k:
                rotation = start
                break
    if rotation is None:
        raise CaseMismatch("middle cylinder interface is not contiguous")
    first = word[rotation]
    total = sum(lengths[s] for s in saddles)
    return positions[first], total


def find_crossing_cylinder(net, case) -> TransverseWitness:
    r"""
    A transverse cylinder for one of the named two-, three- and
    four-cylinder configurations, or ``None`` when the configuration's
    guarantee does not apply to the given metric data.

    - ``Case1``: a saddle on both sides of one cylinder spans a simple
      transverse cylinder crossing that cylinder once.
    - ``Case2``: a saddle shared by the bottom of one cylinder and the top
      of another, with a second shared saddle between them, spans a
      cylinder crossing both exactly once (twists are free parameters).
    - ``Case4A``: the window argument on the interval map from the bottom
      of the outer cylinder to the top of its partner; a witness always
      exists when the larger middle circumference is at least half the
      outer one, via the boundary construction in the critical case.
    - ``Case4B``: every saddle on the top of the outer partner recurs on
      the bottom of the outer cylinder; any of them spans a cylinder
      crossing the three stacked cylinders once each.

    The requested case must match the net's diagram
    (:class:`~squaretiled.errors.CaseMismatch` otherwise).
    """
    case = str(case)
    label = str(net_case_label(net))
    expected = {"Case1": "Case1", "Case2": "Case2",
                "Case4A": "Case4", "Case4B": "Case4"}
    if case not in expected:
        raise CaseMismatch("unsupported case %r" % (case,))
    if label != expected[case]:
        raise CaseMismatch("net diagram is %s, not %s" % (label, case))
    if case == "Case1":
        return _case1_witness(net)
    if case == "Case2":
        return _case2_witness(net)
    c1, c4, middles = _matched_pair(net)
    if case == "Case4A":
        if len(middles) != 2:
            raise CaseMismatch("net has the stacked (4B) shape")
        return _case4a_witness(net, c1, c4, middles)
    if len(middles) != 1:
        raise CaseMismatch("net has the side-by-side (4A) shape")
    return _case4b_witness(net, c1, c4, middles[0])


def _case1_witness(net):
    for cid in sorted(net.cylinders):
        both = set(net.diagram.bottom_words[cid]) & \
            set(net.diagram.top_words[cid])
        for sid in sorted(both, key=lambda s: str(s)):
            if net.saddle_lengths[sid] == 0:
                continue
            bp = net.bottom_positions(cid)[sid]
            tp = net.top_positions(cid)[sid]
            return TransverseWitness(
                crossed=(cid,),
                width=net.saddle_lengths[sid],
                start_interface=("bottom", cid),
                start_interval=(bp, bp + net.saddle_lengths[sid]),
                direction=(tp - bp, net.cylinders[cid].height),
                kind="simple-over-%s" % (sid,),
            )
    return None


def _case2_witness(net):
    cids = sorted(net.cylinders)
    for c1 in cids:
        for sigma in net.diagram.bottom_words[c1]:
            if net.saddle_lengths[sigma] == 0:
                continue
            c2 = next(c for c in cids
                      if sigma in net.diagram.top_words[c])
            if c2 == c1:
                continue
            shared = set(net.diagram.top_words[c1]) & \
                set(net.diagram.bottom_words[c2])
            taus = [t for t in shared if net.saddle_lengths[t] > 0]
            if not taus:
                continue
            tau = max(taus, key=lambda t: (net.saddle_lengths[t], str(t)))
            width = min(net.saddle_lengths[sigma], net.saddle_lengths[tau])
            bp = net.bottom_positions(c1)[sigma]
            rise = net.cylinders[c1].height + net.cylinders[c2].height
            return TransverseWitness(
                crossed=(c1, c2),
                width=width,
                start_interface=("bottom", c1),
                start_interval=(bp, bp + width),
                direction=(Fraction(0), rise),
                kind="through-%s-%s" % (sigma, tau),
            )
    return None


def case4a_window_map(net, c1=None, c4=None, middles=None):
    """The normalized interval map of the four-cylinder window argument:
    the gluing of the bottom of ``c1`` to the top of ``c4``, in coordinates
    re-cut so that the wider middle cylinder spans ``[0, s)`` on both of
    its interfaces.  Returns ``(map, s)``."""
    if c1 is None:
        c1, c4, middles = _matched_pair(net)
    lengths = net.saddle_lengths
    wide = max(middles, key=lambda c: (net.cylinders[c].circumference, c))
    w = net.cylinders[c1].circumference
    if net.cylinders[c4].circumference != w:
        raise CaseMismatch("outer cylinders must have equal circumference")
    s = net.cylinders[wide].circumference
    a_top = _saddle_arc(net.diagram.top_words[c1], net.top_positions(c1),
                        lengths, set(net.diagram.bottom_words[wide]), w)[0]
    a_bot = _saddle_arc(net.diagram.bottom_words[c4],
                        net.bottom_positions(c4), lengths,
                        set(net.diagram.top_words[wide]), w)[0]
    raw = build_interval_map(net, ("bottom", c1), ("top", c4))
    pieces = []
    for a, b, off in raw.pieces:
        pieces.append(((a - a_top) % w, (a - a_top) % w + (b - a),
                       off + a_top - a_bot))
    # re-splitting at 0 after the shift
    fixed = []
    for a, b, off in pieces:
        if b <= w:
            fixed.append((a, b, off))
        else:
            fixed.append((a, w, off))
            fixed.append((Fraction(0), b - w, off))
    return IntervalMap(w, fixed), s


def _case4a_witness(net, c1, c4, middles):
    f, s = case4a_window_map(net, c1, c4, middles)
    w = f.length
    if 2 * s < w:
        return None
    wide = max(middles, key=lambda c: (net.cylinders[c].circumference, c))
    rise = (net.cylinders[c1].height + net.cylinders[wide].height
            + net.cylinders[c4].height)
    hit = find_window_hit(f, (Fraction(0), s), (Fraction(0), s))
    if hit is not None:
        # shrink into a single continuity piece so the image is a translate
        a, b = hit
        for pa, pb, off in f.pieces:
            lo, hi = max(a, pa), min(b, pb)
            if lo < hi:
                return TransverseWitness(
                    crossed=(c1, wide, c4),
                    width=hi - lo,
                    start_interface=("bottom", c1),
                    start_interval=(lo, hi),
                    direction=(off if off <= w - off else off - w, rise),
                    kind="window",
                )
    if 2 * s == w:
        x = boundary_hit(f, s)
        if x >= s:
            return None
        pa, pb, off = f.piece_at(x)
        eps = min(pb - x, s - x)
        assert eps > 0
        return TransverseWitness(
            crossed=(c1, wide, c4),
            width=eps,
            start_interface=("bottom", c1),
            start_interval=(x, x + eps),
            direction=(off if off <= w - off else off - w, rise),
            kind="boundary",
        )
    return None


def _case4b_witness(net, c1, c4, mid):
    top4 = set(net.diagram.top_words[c4])
    bot1 = set(net.diagram.bottom_words[c1])
    if not top4 <= bot1:
        raise CaseMismatch("stacked shape requires the outer interfaces to "
                           "share all saddles")
    candidates = [s for s in sorted(top4, key=str)
                  if net.saddle_lengths[s] > 0]
    if not candidates:
        return None
    sigma = max(candidates, key=lambda s: (net.saddle_lengths[s], str(s)))
    bp = net.bottom_positions(c1)[sigma]
    tp = net.top_positions(c4)[sigma]
    rise = (net.cylinders[c1].height + net.cylinders[mid].height
            + net.cylinders[c4].height)
    return TransverseWitness(
        crossed=(c1, mid, c4),
        width=net.saddle_lengths[sigma],
        start_interface=("bottom", c1),
        start_interval=(bp, bp + net.saddle_lengths[sigma]),
        direction=(tp - bp, rise),
        kind="over-%s" % (sigma,),
    )


# ---------------------------------------------------------------------------
# the window inequalities
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WindowConstraint:
    """Normalized window data for the two-cylinder forcing: the longest
    saddle lengths ``t0 >= s0`` on the two bottoms (circumference 1), the
    offset ``t_start`` of the upper window, and the lower bound
    ``min_saddle`` that the longest saddle must satisfy."""

    t0: Fraction
    s0: Fraction
    t_start: Fraction
    min_saddle: Fraction = None

    def __post_init__(self):
        object.__setattr__(self, "t0", Fraction(self.t0))
        object.__setattr__(self, "s0", Fraction(self.s0))
        object.__setattr__(self, "t_start", Fraction(self.t_start))
        if self.min_saddle is not None:
            object.__setattr__(self, "min_saddle",
                               Fraction(self.min_saddle))
        if not (0 < self.t0 < 1 and 0 < self.s0 < 1):
            raise ValueError("saddle lengths must lie in (0, 1)")
        if not (0 <= self.t_start < 1):
            raise ValueError("t_start must lie in [0, 1)")


@dataclass(frozen=True)
class FeasibilityRecord:
    """Outcome of the window inequalities ``t0 >= s0 >= min_saddle`` and
    ``0 <= t_start <= 1 - 2·t0 - 2·s0``; ``slack`` is the right-hand
    room ``1 - 2·t0 - 2·s0``, and ``boundary`` flags the degenerate
    feasible point where every inequality is tight."""

    feasible: bool
    slack: Fraction
    violated: tuple
    boundary: bool


def window_feasible(c: WindowConstraint) -> FeasibilityRecord:
    r"""
    Evaluate the window inequalities exactly.

    EXAMPLES::

        >>> q = Fraction
        >>> window_feasible(WindowConstraint(q(1, 4), q(1, 4), 0, q(1, 4)))
        FeasibilityRecord(feasible=True, slack=Fraction(0, 1), violated=(), boundary=True)
        >>> r = window_feasible(WindowConstraint(q(1, 3), q(1, 4), 0, q(1, 4)))
        >>> r.feasible, r.slack
        (False, Fraction(-1, 6))
        >>> window_feasible(WindowConstraint(q(1, 5), q(1, 5), q(1, 10))).feasible
        True
    """
    slack = 1 - 2 * c.t0 - 2 * c.s0
    violated = []
    if c.t0 < c.s0:
        violated.append("t0 >= s0")
    if c.min_saddle is not None and c.s0 < c.min_saddle:
        violated.append("s0 >= min_saddle")
    if c.t_start < 0:
        violated.append("t_start >= 0")
    if c.t_start > slack:
        violated.append("t_start <= 1 - 2*t0 - 2*s0")
    feasible = not violated
    boundary = feasible and slack == 0 and c.t_start == 0
    return FeasibilityRecord(feasible, slack, tuple(violated), boundary)


def window_feasible_pairs(max_denominator, min_saddle=Fraction(1, 4)):
    r"""
    All pairs ``(t0, s0)`` on the rational grid with denominators up to
    ``max_denominator`` for which some ``t_start`` satisfies the window
    inequalities.  With the bound 1/4 the grid contains exactly one pair.

    EXAMPLES::

        >>> window_feasible_pairs(12)
        [(Fraction(1, 4), Fraction(1, 4))]
    """
    grid = sorted({Fraction(p, q) for q in range(1, max_denominator + 1)
                   for p in range(1, q)})
    out = []
    for t0 in grid:
        # a feasible s0 needs min_saddle <= s0 <= min(t0, (1 - 2*t0)/2)
        hi = min(t0, Fraction(1 - 2 * t0, 2))
        if hi < min_saddle:
            continue
        for s0 in grid:
            if min_saddle <= s0 <= hi:
                out.append((t0, s0))
    return out
