r"""
Square-tiled translation surfaces (origamis) and metric cylinder-strip nets.

An origami is a translation surface tiled by ``n`` unit squares, encoded by
two permutations of ``{0, ..., n-1}``: ``h`` sends each square to its right
neighbor and ``v`` to its upper neighbor.  This module provides

- construction and validation (:func:`build_origami`, the one-line text
  format of :func:`parse_origami`),
- the stratum of the associated Abelian differential
  (:func:`singularity_data`),
- the shear/rotation action of ``SL(2, Z)`` (:func:`act_sl2z`),
- relabeling-invariant canonical forms (:func:`canonical_form`,
  :func:`origami_isomorphism`), and
- exact metric nets of cylinders glued along saddle connections
  (:func:`build_net`), the input to the transverse-cylinder searches.

EXAMPLES::

    >>> o = build_origami(perm_from_cycles([(0, 1, 2, 3), (4, 7, 6, 5)], 8),
    ...                   perm_from_cycles([(0, 4, 2, 6), (1, 5, 3, 7)], 8))
    >>> singularity_data(o)
    Stratum(kappa=(1, 1, 1, 1), genus=3)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeLength, NotTransitive, SumMismatch

# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

Perm = tuple[int, ...]


def perm_from_cycles(cycles, n=None) -> Perm:
    r"""
    Build a permutation of ``{0, ..., n-1}`` from disjoint cycles.

    Fixed points may be omitted; ``n`` defaults to one more than the largest
    entry mentioned.

    EXAMPLES::

        >>> perm_from_cycles([(0, 1)], 3)
        (1, 0, 2)
        >>> perm_from_cycles([], 2)
        (0, 1)
    """
    if n is None:
        n = 1 + max((x for c in cycles for x in c), default=-1)
    p = list(range(n))
    seen = set()
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + type(cycle)((cycle[0],))):
            if a in seen:
                raise ValueError(f"entry {a} repeated in cycle notation")
            seen.add(a)
            p[a] = b
    return tuple(p)


def perm_inverse(p: Perm) -> Perm:
    """Return the inverse permutation.

    EXAMPLES::

        >>> perm_inverse((1, 2, 0))
        (2, 0, 1)
    """
    q = [0] * len(p)
    for i, j in enumerate(p):
        q[j] = i
    return tuple(q)


def perm_compose(p: Perm, q: Perm) -> Perm:
    """Return the composition ``p∘q``, i.e. ``i ↦ p[q[i]]``.

    EXAMPLES::

        >>> perm_compose((1, 0, 2), (0, 2, 1))
        (1, 2, 0)
    """
    return tuple(p[q[i]] for i in range(len(p)))


def perm_cycles(p: Perm, include_fixed=True):
    r"""
    Return the cycles of ``p`` as tuples, each starting at its minimum.

    EXAMPLES::

        >>> perm_cycles((1, 0, 2))
        [(0, 1), (2,)]
        >>> perm_cycles((1, 0, 2), include_fixed=False)
        [(0, 1)]
    """
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        if len(cyc) > 1 or include_fixed:
            cycles.append(tuple(cyc))
    return cycles


def cycles_str(p: Perm) -> str:
    """Cycle-notation string with fixed points omitted; identity is ``()``.

    EXAMPLES::

        >>> cycles_str((1, 0, 2))
        '(0 1)'
    """
    parts = ["(" + " ".join(map(str, c)) + ")" for c in perm_cycles(p, include_fixed=False)]
    return "".join(parts) if parts else "()"


# ---------------------------------------------------------------------------
# origamis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Origami:
    """A square-tiled surface given by right- and up-neighbor permutations.

    Instances are immutable; use :func:`build_origami` to get the
    transitivity check.
    """

    h: Perm
    v: Perm

    @property
    def n(self) -> int:
        """Number of unit squares."""
        return len(self.h)

    def commutator(self) -> Perm:
        r"""
        The corner permutation ``h∘v∘h⁻¹∘v⁻¹``.

        Its orbit through a square ``i`` walks the squares whose bottom-left
        corners meet at a single vertex of the surface; orbits of length one
        are regular points, longer orbits are cone points.

        EXAMPLES::

            >>> build_origami((0,), (0,)).commutator()
            (0,)
        """
        hi, vi = perm_inverse(self.h), perm_inverse(self.v)
        return tuple(self.h[self.v[hi[vi[i]]]] for i in range(self.n))

    def vertex_orbits(self):
        """Orbits of :meth:`commutator`, one per vertex of the square tiling."""
        return perm_cycles(self.commutator())

    def __str__(self):
        return f'origami n={self.n} h="{cycles_str(self.h)}" v="{cycles_str(self.v)}"'


@dataclass(frozen=True)
class Stratum:
    """Zero orders ``kappa`` (sorted descending) and the genus they force."""

    kappa: tuple[int, ...]
    genus: int

    def __post_init__(self):
        if sum(self.kappa) != 2 * self.genus - 2:
            raise ValueError(
                f"kappa {self.kappa} incompatible with genus {self.genus}"
            )

    def __str__(self):
        return "H(" + (",".join(map(str, self.kappa)) if self.kappa else "0") + ")"


def build_origami(h, v) -> Origami:
    r"""
    Validate the permutation pair and return the origami.

    Raises :class:`~squaretiled.errors.NotTransitive` when the group
    generated by ``h`` and ``v`` does not act transitively, i.e. the glued
    surface would be disconnected.

    EXAMPLES::

        >>> build_origami((0,), (0,)).n
        1
        >>> build_origami((1, 0, 2), (0, 2, 1)).n
        3
        >>> build_origami((1, 0, 2, 3), (1, 0, 3, 2))
        Traceback (most recent call last):
        ...
        squaretiled.errors.NotTransitive: squares {2, 3} are not connected to square 0
    """
    h, v = tuple(h), tuple(v)
    if len(h) != len(v):
        raise ValueError("h and v must permute the same set")
    n = len(h)
    if n < 1:
        raise ValueError("an origami needs at least one square")
    if sorted(h) != list(range(n)) or sorted(v) != list(range(n)):
        raise ValueError("h and v must be permutations of 0..n-1")
    seen = {0}
    frontier = [0]
    hi, vi = perm_inverse(h), perm_inverse(v)
    while frontier:
        i = frontier.pop()
        for j in (h[i], hi[i], v[i], vi[i]):
            if j not in seen:
                seen.add(j)
                frontier.append(j)
    if len(seen) != n:
        missing = set(range(n)) - seen
        raise NotTransitive(f"squares {missing} are not connected to square 0")
    return Origami(h, v)


def singularity_data(o: Origami) -> Stratum:
    r"""
    Stratum of the origami: cone angles from commutator orbits, genus from
    the Euler characteristic of the square tiling.

    EXAMPLES::

        >>> singularity_data(build_origami((0,), (0,)))
        Stratum(kappa=(), genus=1)
        >>> singularity_data(build_origami((1, 0, 2), (0, 2, 1)))
        Stratum(kappa=(2,), genus=2)
    """
    orbits = o.vertex_orbits()
    kappa = tuple(sorted((len(c) - 1 for c in orbits if len(c) > 1), reverse=True))
    # V - E + F with V = #orbits, E = 2n, F = n
    euler = len(orbits) - 2 * o.n + o.n
    genus = (2 - euler) // 2
    return Stratum(kappa, genus)


# -- SL(2, Z) action ---------------------------------------------------------

#: Matrices of the three generator letters, acting on column vectors.
LETTER_MATRICES = {
    "T": ((1, 1), (0, 1)),
    "T^-1": ((1, -1), (0, 1)),
    "S": ((0, -1), (1, 0)),
}


def act_letter(o: Origami, letter: str) -> Origami:
    r"""
    Apply one generator: ``T`` is the full right Dehn shear of every
    horizontal cylinder, ``S`` the counterclockwise quarter turn.

    On permutation pairs: ``T: (h, v) ↦ (h, v∘h⁻¹)``,
    ``T^-1: (h, v) ↦ (h, v∘h)``, ``S: (h, v) ↦ (v, h⁻¹)``.

    EXAMPLES::

        >>> o = build_origami((1, 2, 0), (0, 1, 2))
        >>> act_letter(o, "S").h
        (0, 1, 2)
    """
    if letter == "T":
        return Origami(o.h, perm_compose(o.v, perm_inverse(o.h)))
    if letter == "T^-1":
        return Origami(o.h, perm_compose(o.v, o.h))
    if letter == "S":
        return Origami(o.v, perm_inverse(o.h))
    raise ValueError(f"unknown generator letter {letter!r}")


def act_sl2z(o: Origami, word) -> Origami:
    r"""
    Apply a word over ``{"T", "T^-1", "S"}``, first letter first.

    The result corresponds to acting by the matrix product
    ``M(word[-1]) ··· M(word[0])``.

    EXAMPLES::

        >>> o = build_origami((0,), (0,))
        >>> act_sl2z(o, ["T"]) == o
        True
        >>> act_sl2z(o, ["S", "S", "S", "S"]) == o
        True
    """
    for letter in word:
        o = act_letter(o, letter)
    return o


def word_matrix(word):
    """The 2x2 integer matrix of an ``act_sl2z`` word (first letter first).

    EXAMPLES::

        >>> word_matrix(["T", "T"])
        ((1, 2), (0, 1))
    """
    m = ((1, 0), (0, 1))
    for letter in word:
        a = LETTER_MATRICES[letter]
        m = (
            (a[0][0] * m[0][0] + a[0][1] * m[1][0], a[0][0] * m[0][1] + a[0][1] * m[1][1]),
            (a[1][0] * m[0][0] + a[1][1] * m[1][0], a[1][0] * m[0][1] + a[1][1] * m[1][1]),
        )
    return m


def matrix_word(m):
    r"""
    A word over ``{"T", "T^-1", "S"}`` whose :func:`word_matrix` equals the
    given ``SL(2, Z)`` matrix.

    EXAMPLES::

        >>> word_matrix(matrix_word(((0, -1), (1, 0))))
        ((0, -1), (1, 0))
        >>> word_matrix(matrix_word(((2, 3), (1, 2))))
        ((2, 3), (1, 2))
    """
    (a, b), (c, d) = m
    if a * d - b * c != 1:
        raise ValueError("matrix is not in SL(2, Z)")
    # Peel generators off on the left: find w with M(w) * m = I, then invert.
    left = []  # letters applied on the left, in application order
    while c != 0:
        if abs(a) >= abs(c):
            q = a // c
            # T^-q * m
            left.extend(["T^-1"] * q if q >= 0 else ["T"] * (-q))
            a, b = a - q * c, b - q * d
        else:
            # S^-1 * m = rotate: (a,b;c,d) -> (c,d;-a,-b)
            left.extend(["S", "S", "S"])
            a, b, c, d = c, d, -a, -b
    # now c == 0, a*d == 1, so a = d = ±1
    if a < 0:
        left.extend(["S", "S"])  # S^2 = -I
        a, b, d = -a, -b, -d
    if b != 0:
        left.extend(["T^-1"] * b if b >= 0 else ["T"] * (-b))
    # left, applied first-to-last, reduces m to the identity:
    #   M(left[-1]) ··· M(left[0]) · m = I, so m is the product of the
    #   inverses in reverse order.
    inverse = {"T": "T^-1", "T^-1": "T"}
    word = []
    for letter in reversed(left):
        if letter == "S":
            word.extend(["S", "S", "S"])
        else:
            word.append(inverse[letter])
    # simplify S^4 runs for readability
    out = []
    for letter in word:
        out.append(letter)
        if len(out) >= 4 and out[-4:] == ["S", "S", "S", "S"]:
            del out[-4:]
        if len(out) >= 2 and out[-2:] in (["T", "T^-1"], ["T^-1", "T"]):
            del out[-2:]
    return out


# -- isomorphism and canonical forms ----------------------------------------


def origami_isomorphism(a: Origami, b: Origami):
    r"""
    A relabeling permutation ``p`` with ``p∘a.h = b.h∘p`` and
    ``p∘a.v = b.v∘p``, or ``None`` when the origamis are not isomorphic.

    EXAMPLES::

        >>> a = build_origami((1, 0, 2), (0, 2, 1))
        >>> origami_isomorphism(a, a)
        (0, 1, 2)
    """
    if a.n != b.n:
        return None
    n = a.n
    for image in range(n):
        p = [None] * n
        p[0] = image
        frontier = [0]
        ok = True
        while frontier and ok:
            i = frontier.pop()
            for pa, pb in ((a.h, b.h), (a.v, b.v)):
                j, pj = pa[i], pb[p[i]]
                if p[j] is None:
                    p[j] = pj
                    frontier.append(j)
                elif p[j] != pj:
                    ok = False
                    break
        if ok and None not in p and sorted(p) == list(range(n)):
            # transitivity makes the propagation reach every square
            if all(p[a.h[i]] == b.h[p[i]] and p[a.v[i]] == b.v[p[i]] for i in range(n)):
                return tuple(p)
    return None


def canonical_form(o: Origami) -> Origami:
    r"""
    Lexicographically minimal relabeling of the origami.

    The relabeling is produced by breadth-first traversals (neighbors in the
    fixed order right, left, up, down) from every start square; two origamis
    are isomorphic exactly when their canonical forms are equal.

    EXAMPLES::

        >>> a = build_origami((1, 0, 2), (0, 2, 1))
        >>> b = build_origami((0, 2, 1), (1, 0, 2))   # relabeled copy of a
        >>> canonical_form(a) == canonical_form(b)
        True
    """
    n = o.n
    hi, vi = perm_inverse(o.h), perm_inverse(o.v)
    best = None
    for start in range(n):
        label = [None] * n
        label[start] = 0
        order = [start]
        head = 0
        while head < len(order):
            i = order[head]
            head += 1
            for j in (o.h[i], hi[i], o.v[i], vi[i]):
                if label[j] is None:
                    label[j] = len(order)
                    order.append(j)
        new_h = tuple(label[o.h[order[k]]] for k in range(n))
        new_v = tuple(label[o.v[order[k]]] for k in range(n))
        cand = (new_h, new_v)
        if best is None or cand < best:
            best = cand
    return Origami(*best)


# -- text format -------------------------------------------------------------

_ORIGAMI_RE = re.compile(
    r'^\s*origami\s+(?:n=(?P<n>\d+)\s+)?h="(?P<h>[^"]*)"\s+v="(?P<v>[^"]*)"\s*$'
)


def _parse_cycles(text):
    cycles = []
    for part in re.findall(r"\(([^()]*)\)", text):
        entries = tuple(int(x) for x in part.split())
        if entries:
            cycles.append(entries)
    return cycles


def parse_origami(line: str) -> Origami:
    r"""
    Parse the one-line text format
    ``origami h="(0 1 2 3)(4 7 6 5)" v="(0 4 2 6)(1 5 3 7)"``.

    Cycles are space-separated integers and fixed points may be omitted; an
    optional ``n=<count>`` attribute pins the square count when fixed points
    leave it ambiguous.

    EXAMPLES::

        >>> parse_origami('origami h="(0 1)" v="(0 2)"').n
        3
        >>> parse_origami('origami n=1 h="" v=""').n
        1
    """
    m = _ORIGAMI_RE.match(line)
    if not m:
        raise ValueError(f"not a valid origami line: {line!r}")
    hc, vc = _parse_cycles(m.group("h")), _parse_cycles(m.group("v"))
    n = int(m.group("n")) if m.group("n") else 1 + max(
        (x for c in hc + vc for x in c), default=0
    )
    return build_origami(perm_from_cycles(hc, n), perm_from_cycles(vc, n))


# ---------------------------------------------------------------------------
# metric nets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SaddleConnection:
    """A horizontal boundary edge of a net: id, exact length and the zero
    labels at its two endpoints (start, end along the boundary orientation)."""

    id: object
    length: Fraction
    endpoints: tuple

    def __post_init__(self):
        object.__setattr__(self, "length", Fraction(self.length))


@dataclass(frozen=True)
class CylinderGeometry:
    """Metric data of one net cylinder: circumference, height and twist."""

    circumference: Fraction
    height: Fraction
    twist: Fraction

    def __post_init__(self):
        for field in ("circumference", "height", "twist"):
            object.__setattr__(self, field, Fraction(getattr(self, field)))


@dataclass(frozen=True)
class FlatSurfaceNet:
    """A translation surface presented as horizontal cylinders glued along
    labeled saddle connections.

    ``cylinders`` maps a cylinder id to its :class:`CylinderGeometry`;
    ``diagram`` provides the cyclic boundary words (``bottom_words`` /
    ``top_words`` mapping cylinder id to a tuple of saddle ids);
    ``saddle_lengths`` assigns an exact length to every saddle id.

    Coordinates: each cylinder is the rectangle ``[0, w) x [0, height]``.
    Its bottom word is laid out left to right starting at ``x = 0`` and its
    top word starting at ``x = twist`` (mod ``w``); vertical straight-line
    flow connects equal ``x``.
    """

    cylinders: dict
    diagram: object
    saddle_lengths: dict

    def bottom_positions(self, cid):
        """Map saddle id -> start coordinate on the bottom of cylinder ``cid``."""
        pos, x = {}, Fraction(0)
        for sid in self.diagram.bottom_words[cid]:
            pos[sid] = x
            x += self.saddle_lengths[sid]
        return pos

    def top_positions(self, cid):
        """Map saddle id -> start coordinate on the top of cylinder ``cid``,
        reduced mod the circumference."""
        w = self.cylinders[cid].circumference
        pos, x = {}, self.cylinders[cid].twist % w
        for sid in self.diagram.top_words[cid]:
            pos[sid] = x % w
            x += self.saddle_lengths[sid]
        return pos


def build_net(cylinders, diagram, saddle_lengths, degenerate_saddle=None) -> FlatSurfaceNet:
    r"""
    Validate and assemble a :class:`FlatSurfaceNet`.

    Saddle lengths must be positive and, per cylinder, sum to the
    circumference on the top and on the bottom.  Degeneration mode: passing
    ``degenerate_saddle=<id>`` permits that single saddle to have length
    zero (collapsing two zeros into one of higher order).

    EXAMPLES::

        >>> from squaretiled.cylinders import CylinderDiagram
        >>> diag = CylinderDiagram(bottom_words={0: ("a",)}, top_words={0: ("a",)},
        ...                        saddle_zeros={"a": (0, 0)})
        >>> net = build_net({0: CylinderGeometry(1, 1, 0)}, diag, {"a": 1})
        >>> net.cylinders[0].height
        Fraction(1, 1)
    """
    geoms = {}
    for cid, geom in cylinders.items():
        if not isinstance(geom, CylinderGeometry):
            geom = CylinderGeometry(*geom)
        if geom.circumference <= 0 or geom.height <= 0:
            raise NegativeLength(f"cylinder {cid} must have positive dimensions")
        if not 0 <= geom.twist < geom.circumference:
            raise ValueError(f"cylinder {cid}: twist must lie in [0, circumference)")
        geoms[cid] = geom
    lengths = {sid: Fraction(val) for sid, val in saddle_lengths.items()}
    for sid, val in lengths.items():
        if val < 0 or (val == 0 and sid != degenerate_saddle):
            raise NegativeLength(f"saddle {sid} must have positive length")
    for cid, geom in geoms.items():
        for side, words in (("bottom", diagram.bottom_words), ("top", diagram.top_words)):
            total = sum(lengths[sid] for sid in words[cid])
            if total != geom.circumference:
                raise SumMismatch(
                    f"cylinder {cid}: {side} saddle lengths sum to {total}, "
                    f"expected {geom.circumference}"
                )
    return FlatSurfaceNet(geoms, diagram, lengths)
