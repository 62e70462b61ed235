r"""
The end-to-end classification of genus-3 square-tiled surfaces: analyze
every periodic direction up to a bound, exclude each non-survivor pinch
shape by its dedicated mechanism, force the two-cylinder metric
constraints, and either certify equivalence with the unique 8-square
survivor or report a trivial isometric subspace.

The survivor is the 8-square origami with ``h = (0 1 2 3)(4 7 6 5)`` and
``v = (0 4 2 6)(1 5 3 7)``: two horizontal 4x1 cylinders with homologous
core curves, all four zeros simple, all eight saddle connections of equal
length.

EXAMPLES::

    >>> classify_surface(reference_surface(), direction_bound=1).status
    'WollmilchsauEquivalent'
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .cylinders import (
    CaseLabel,
    classify_case,
    horizontal_decomposition,
    moduli_exponents,
    periodic_decomposition,
)
from .errors import CaseMismatch, GenusMismatch
from .homology import dual_graph
from .jump import WeightedDualGraph, case3_verdict, case6_moduli_forcing
from .monodromy import enumerate_slopes
from .surface import (
    Origami,
    Stratum,
    build_origami,
    perm_from_cycles,
    singularity_data,
)
from .transverse import (
    WindowConstraint,
    find_crossing_cylinder,
    window_feasible,
)

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


def reference_surface() -> Origami:
    r"""
    The 8-square genus-3 survivor origami.

    EXAMPLES::

        >>> str(singularity_data(reference_surface()))
        'H(1,1,1,1)'
    """
    return build_origami(
        perm_from_cycles([(0, 1, 2, 3), (4, 7, 6, 5)], 8),
        perm_from_cycles([(0, 4, 2, 6), (1, 5, 3, 7)], 8),
    )


# ---------------------------------------------------------------------------
# verdicts and per-direction records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DirectionRecord:
    """One analyzed direction: the reduced slope, the pinch case label (or
    ``None`` for an unmatched graph), the exclusion mechanism applied, and
    the supporting witness object."""

    slope: tuple
    label: str
    mechanism: str
    witness: object = None


@dataclass(frozen=True)
class Verdict:
    """Classification outcome with its per-direction evidence trail.

    ``status`` is ``TrivialForni``, ``WollmilchsauEquivalent`` or
    ``Undetermined``; ``WollmilchsauEquivalent`` is only ever produced when
    every analyzed direction carries the two-homologous-cylinders label and
    the metric constraints resolve to the reference surface."""

    status: str
    evidence: tuple
    origami: Origami = None

    def __post_init__(self):
        if self.status == "WollmilchsauEquivalent":
            assert all(r.label == "Case6" for r in self.evidence
                       if r.mechanism != "window forcing"), \
                "survivor verdicts require every direction in Case 6"


@dataclass(frozen=True)
class EquivalenceResult:
    """Boolean-valued outcome of the two-cylinder metric chain with the
    decisive record attached: a moduli forcing verdict, a window
    feasibility record, or the final diagram comparison."""

    value: bool
    reason: str
    constraint: WindowConstraint = None
    record: object = None
    forcing: object = None

    def __bool__(self):
        return self.value


# ---------------------------------------------------------------------------
# the two-cylinder metric chain
# ---------------------------------------------------------------------------


def _window_extraction(d, c1, c2):
    """Normalized window coordinates (t0, s0, t_start) for cylinder ``c1``
    (carrying the longest bottom saddle) against ``c2``.

    A straight trajectory starting inside the longest bottom saddle of
    ``c1``, piercing the longest bottom saddle of ``c2`` and closing when
    it returns through its starting saddle has its per-cylinder drift
    pinned modulo 1/2; the window coordinate ``t_start`` measures how far
    the starting saddle sits from the nearer forbidden interval.  The
    surface survives only when no such trajectory exists, i.e. when
    ``0 <= t_start <= 1 - 2*t0 - 2*s0``."""
    net = d.to_net()
    w = net.cylinders[c1].circumference
    assert net.cylinders[c2].circumference == w

    def longest_bottom(cid):
        word = net.diagram.bottom_words[cid]
        sid = max(word, key=lambda s: (net.saddle_lengths[s], -word.index(s)))
        return sid, net.saddle_lengths[sid] / w

    tau0, t0 = longest_bottom(c1)
    sigma0, s0 = longest_bottom(c2)
    q1 = net.bottom_positions(c1)[tau0] / w
    q2 = net.top_positions(c2)[tau0] / w
    p1 = net.top_positions(c1)[sigma0] / w
    p2 = net.bottom_positions(c2)[sigma0] / w
    # drift t of a crossing trajectory through the interiors of both
    # saddles: closing forces 2t = q2 - q1 + p1 - p2 (mod 1), so the two
    # crossing families sit at drifts t_close and t_close + 1/2
    t_close = ((q2 - q1 + p1 - p2) % 1) / 2
    # position, relative to tau0, of the interval of starting points whose
    # drift-t_close trajectory pierces sigma0; the second copy is 1/2 away
    gap = ((p1 - t_close - q1) % 1) % _HALF
    t_start = (2 * ((gap - t0) % _HALF)) % 1
    return t0, s0, t_start


def _metric_chain(d, graph) -> EquivalenceResult:
    """Moduli forcing plus window feasibility for one two-homologous-
    cylinder decomposition; truthy when the metric constraints are
    consistent with the reference surface (diagram not yet compared)."""
    cids = [c.id for c in d.cylinders]
    r1, r2 = moduli_exponents(d)
    forcing = case6_moduli_forcing(r1, r2,
                                   {"theta1_p1": 1, "theta2_p2": 1},
                                   graph=graph)
    if forcing.verdict != "consistent":
        return EquivalenceResult(False, "unequal moduli are forced away",
                                 forcing=forcing)
    # order the cylinders so the first carries the longest bottom saddle
    best = None
    for c1, c2 in (cids, cids[::-1]):
        t0, s0, t_start = _window_extraction(d, c1, c2)
        if t0 >= s0:
            best = (t0, s0, t_start)
            break
    t0, s0, t_start = best if best is not None else \
        _window_extraction(d, *cids)
    constraint = WindowConstraint(t0, s0, t_start, min_saddle=_QUARTER)
    record = window_feasible(constraint)
    if not record.feasible:
        return EquivalenceResult(False, "window inequalities violated",
                                 constraint=constraint, record=record)
    return EquivalenceResult(True, "metric constraints consistent",
                             constraint=constraint, record=record)


def wollmilchsau_equivalent(o: Origami) -> EquivalenceResult:
    r"""
    Decide whether a horizontally two-cylinder surface with homologous
    cores is the reference survivor: force equal moduli, extract the
    normalized window coordinates, check the window inequalities (feasible
    only at ``t0 = s0 = 1/4``, ``t_start = 0``), and compare cylinder
    diagrams.

    Raises :class:`~squaretiled.errors.CaseMismatch` when the horizontal
    pinch is not two genus-1 components joined at two nodes.  The result is
    truthy exactly on surfaces equivalent to the reference; falsy results
    carry the violated constraint or forcing verdict.

    EXAMPLES::

        >>> bool(wollmilchsau_equivalent(reference_surface()))
        True
    """
    d = horizontal_decomposition(o)
    graph = dual_graph(d)
    if classify_case(graph) is not CaseLabel.CASE6:
        raise CaseMismatch("horizontal pinch is not two elliptic "
                           "components joined at two nodes")
    chain = _metric_chain(d, graph)
    if not chain:
        return chain
    constraint, record = chain.constraint, chain.record

    # feasibility pins every saddle length to a quarter circumference;
    # the unique matching diagram is the reference one
    net = d.to_net()
    w = net.cylinders[d.cylinders[0].id].circumference
    if any(length / w != _QUARTER
           for length in net.saddle_lengths.values()):
        return EquivalenceResult(False, "saddle lengths are not all equal",
                                 constraint=constraint, record=record)
    ref = horizontal_decomposition(reference_surface())
    if d.diagram.canonical_key() != ref.diagram.canonical_key():
        return EquivalenceResult(False, "cylinder diagram differs from the "
                                 "reference", constraint=constraint,
                                 record=record)
    return EquivalenceResult(True, "window forcing resolves to the "
                             "reference surface", constraint=constraint,
                             record=record)


# ---------------------------------------------------------------------------
# per-direction analysis
# ---------------------------------------------------------------------------


def _case3_weighted_graph(d, graph):
    exps = moduli_exponents(d)
    n_e = {c.id: exps[i] for i, c in enumerate(d.cylinders)}
    a_e = {c.id: 1 for c in d.cylinders}
    node_points = {}
    for e, _ in graph.edges:
        node_points[(e, 0)] = ("n", e, 0)
        node_points[(e, 1)] = ("n", e, 1)
    return WeightedDualGraph(graph, n_e, a_e, node_points)


_GENERIC_CASE3_VALUES = {"theta1_p": 1, "theta1_q": 1,
                         "theta3_0": 1, "theta3_1": 1}


def _analyze_direction(o: Origami, slope):
    """Record for one direction, plus ``True`` when the direction excludes
    a nontrivial isometric subspace on its own."""
    d = periodic_decomposition(o, slope)
    graph = dual_graph(d)
    label = classify_case(graph)
    name = str(label) if label is not None else None
    if label is None:
        return DirectionRecord(slope, None, "unmatched pinch graph"), False
    if label in (CaseLabel.CASE1, CaseLabel.CASE2, CaseLabel.CASE4):
        net = d.to_net()
        if label is CaseLabel.CASE4:
            try:
                witness = find_crossing_cylinder(net, "Case4A")
            except CaseMismatch:
                witness = find_crossing_cylinder(net, "Case4B")
        else:
            witness = find_crossing_cylinder(net, name)
        return DirectionRecord(slope, name, "transverse crossing cylinder",
                               witness), True
    if label is CaseLabel.CASE3:
        verdict = case3_verdict(_case3_weighted_graph(d, graph),
                                _GENERIC_CASE3_VALUES)
        return DirectionRecord(slope, name, "period forcing", verdict), True
    if label is CaseLabel.CASE5:
        return DirectionRecord(slope, name, "defer to a simple transverse "
                               "cylinder"), False
    chain = _metric_chain(d, graph)
    if not chain:
        return DirectionRecord(slope, name, "window forcing", chain), True
    return DirectionRecord(slope, name, "two homologous cylinders",
                           chain), False


def _simple_cylinder_exclusion(o: Origami, direction_bound):
    """Resolve a fully-periodic one-cylinder direction by locating a
    transverse direction with a simple cylinder (one saddle per boundary)
    and excluding through that direction's own mechanism."""
    for slope in enumerate_slopes(direction_bound):
        d = periodic_decomposition(o, slope)
        simple = any(
            len(d.diagram.bottom_words[c.id]) == 1
            and len(d.diagram.top_words[c.id]) == 1
            for c in d.cylinders
        )
        if not simple:
            continue
        record, excludes = _analyze_direction(o, slope)
        if excludes:
            return DirectionRecord(
                record.slope, record.label,
                "simple transverse cylinder; " + record.mechanism,
                record.witness)
    return None


def classify_surface(o: Origami, direction_bound=3,
                     max_workers=4) -> Verdict:
    r"""
    Classify a genus-3 origami by analyzing every reduced direction up to
    ``direction_bound``: any direction with a non-two-homologous-cylinder
    pinch shape is excluded by its mechanism (trivial isometric subspace);
    if every direction shows the two-cylinder shape the metric window
    chain decides between the reference survivor and triviality.

    EXAMPLES::

        >>> classify_surface(reference_surface()).status
        'WollmilchsauEquivalent'
        >>> from squaretiled.surface import build_origami
        >>> classify_surface(build_origami((1, 2, 0), (0, 2, 1)))
        Traceback (most recent call last):
        ...
        squaretiled.errors.GenusMismatch: genus 2 surface; this classification needs genus 3
    """
    stratum = singularity_data(o)
    if stratum.genus != 3:
        raise GenusMismatch("genus %d surface; this classification needs "
                            "genus 3" % stratum.genus)
    slopes = enumerate_slopes(direction_bound)
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        results = list(pool.map(lambda s: _analyze_direction(o, s), slopes))
    evidence = []
    exclusion = None
    saw_case5 = False
    unresolved = False
    for record, excludes in results:
        evidence.append(record)
        if excludes and exclusion is None:
            exclusion = record
        if record.label == "Case5":
            saw_case5 = True
        if record.label is None:
            unresolved = True
    if exclusion is not None:
        return Verdict("TrivialForni", tuple(evidence), o)
    if saw_case5:
        record = _simple_cylinder_exclusion(o, direction_bound)
        if record is not None:
            evidence.append(record)
            return Verdict("TrivialForni", tuple(evidence), o)
        unresolved = True
    if unresolved:
        return Verdict("Undetermined", tuple(evidence), o)
    # every analyzed direction shows two homologous cylinders
    result = wollmilchsau_equivalent(o)
    evidence.append(DirectionRecord((0, 1), "Case6", "window forcing",
                                    result))
    if result:
        return Verdict("WollmilchsauEquivalent", tuple(evidence), o)
    return Verdict("TrivialForni", tuple(evidence), o)


# ---------------------------------------------------------------------------
# diagram catalogs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiagramCatalog:
    """Exhaustive list of cylinder diagrams of a given shape in a stratum,
    up to relabeling and rotation; entries are pairwise non-isomorphic."""

    stratum: Stratum
    shape: str
    diagrams: tuple

    def __len__(self):
        return len(self.diagrams)


def _as_stratum(stratum):
    if isinstance(stratum, Stratum):
        return stratum
    kappa = tuple(sorted(stratum, reverse=True))
    return Stratum(kappa, (sum(kappa) + 2) // 2)


def _one_cylinder_diagrams(stratum: Stratum):
    m = sum(stratum.kappa) + len(stratum.kappa)
    h = tuple((i + 1) % m for i in range(m))
    seen = {}
    for v in itertools.permutations(range(m)):
        o = build_origami(h, v)
        if singularity_data(o).kappa != stratum.kappa:
            continue
        d = horizontal_decomposition(o)
        if len(d.cylinders) != 1:
            continue
        seen.setdefault(d.diagram.canonical_key(), d.diagram)
    return tuple(seen[k] for k in sorted(seen))


def _case6_diagrams(stratum: Stratum):
    total = sum(stratum.kappa) + len(stratum.kappa)
    if total % 2:
        return ()
    k = total // 2
    h = perm_from_cycles([tuple(range(k)), tuple(range(k, 2 * k))], 2 * k)
    top1 = tuple(range(k))
    bottom2 = tuple(range(k, 2 * k))
    seen = {}
    for img1 in itertools.permutations(bottom2):
        for img2 in itertools.permutations(top1):
            v = [0] * (2 * k)
            for i, j in zip(top1, img1):
                v[i] = j
            for i, j in zip(bottom2, img2):
                v[i] = j
            o = build_origami(h, tuple(v))
            if singularity_data(o).kappa != stratum.kappa:
                continue
            d = horizontal_decomposition(o)
            if len(d.cylinders) != 2:
                continue
            if classify_case(dual_graph(d)) is not CaseLabel.CASE6:
                continue
            seen.setdefault(d.diagram.canonical_key(), d.diagram)
    return tuple(seen[key] for key in sorted(seen))


def enumerate_diagrams(stratum, shape) -> DiagramCatalog:
    r"""
    Exhaustive catalog of cylinder diagrams in a genus <= 3 stratum, up to
    relabeling and boundary rotation.  ``shape`` is ``"one_cylinder"`` for
    single-cylinder diagrams or ``"case6"`` for two cylinders exchanging
    their boundaries.

    EXAMPLES::

        >>> len(enumerate_diagrams((1, 1), "one_cylinder"))
        1
        >>> len(enumerate_diagrams((2,), "one_cylinder"))
        1
    """
    stratum = _as_stratum(stratum)
    if stratum.genus > 3:
        raise ValueError("catalogs cover genus at most 3")
    if shape == "one_cylinder":
        diagrams = _one_cylinder_diagrams(stratum)
    elif shape == "case6":
        diagrams = _case6_diagrams(stratum)
    else:
        raise ValueError("shape must be 'one_cylinder' or 'case6'")
    return DiagramCatalog(stratum, shape, diagrams)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


def _svg_document(elements, width, height):
    body = "\n".join("  " + e for e in elements)
    return ('<svg xmlns="http://www.w3.org/2000/svg" '
            'width="%d" height="%d" viewBox="0 0 %d %d">\n%s\n</svg>\n'
            % (width, height, width, height, body))


def _svg_rect(x, y, w, h, fill="#eef"):
    return ('<rect x="%.2f" y="%.2f" width="%.2f" height="%.2f" '
            'fill="%s" stroke="black"/>' % (x, y, w, h, fill))


def _svg_text(x, y, text, size=12):
    return ('<text x="%.2f" y="%.2f" font-size="%d" '
            'font-family="monospace">%s</text>' % (x, y, size, text))


def _svg_line(x1, y1, x2, y2):
    return ('<line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f" '
            'stroke="black"/>' % (x1, y1, x2, y2))


def _diagram_svg(diagram, scale=40):
    """Stacked labeled rectangles, one per cylinder, saddle ids marked
    along both boundaries."""
    elements = []
    y = 20
    max_w = 1
    for cid in diagram.cylinder_ids:
        bottom = diagram.bottom_words[cid]
        top = diagram.top_words[cid]
        w = max(len(bottom), len(top), 1) * scale
        max_w = max(max_w, w)
        elements.append(_svg_rect(20, y, w, scale))
        for i, sid in enumerate(top):
            elements.append(_svg_text(24 + i * scale, y - 4, str(sid), 10))
        for i, sid in enumerate(bottom):
            elements.append(_svg_text(24 + i * scale, y + scale + 12,
                                      str(sid), 10))
        elements.append(_svg_text(26 + w, y + scale // 2 + 4,
                                  "cyl %s" % cid, 11))
        y += scale + 40
    return _svg_document(elements, max_w + 120, y)


def _dual_graph_svg(graph, scale=60):
    """Genus-labeled vertices on a circle with straight edges (loops as
    small circles)."""
    import math

    vs = [v for v, _ in graph.vertices]
    genera = dict(graph.vertices)
    n = max(len(vs), 1)
    cx, cy, r = 2 * scale, 2 * scale, scale
    pos = {}
    for i, v in enumerate(vs):
        ang = 2 * math.pi * i / n
        pos[v] = (cx + r * math.cos(ang), cy + r * math.sin(ang))
    elements = []
    for e, (a, b) in graph.edges:
        xa, ya = pos[a]
        if a == b:
            elements.append('<circle cx="%.2f" cy="%.2f" r="12" '
                            'fill="none" stroke="black"/>'
                            % (xa + 18, ya - 18))
        else:
            xb, yb = pos[b]
            elements.append(_svg_line(xa, ya, xb, yb))
    for v in vs:
        x, y = pos[v]
        elements.append('<circle cx="%.2f" cy="%.2f" r="14" fill="#fee" '
                        'stroke="black"/>' % (x, y))
        elements.append(_svg_text(x - 4, y + 4, str(genera[v]), 11))
    return _svg_document(elements, 4 * scale + 40, 4 * scale + 40)


def _verdict_text(verdict: Verdict):
    lines = ["classification: %s" % verdict.status,
             "directions analyzed: %d" % len(verdict.evidence), ""]
    for rec in verdict.evidence:
        label = rec.label if rec.label is not None else "unmatched"
        lines.append("  slope %-8s %-9s %s"
                     % (str(rec.slope), label, rec.mechanism))
        if isinstance(rec.witness, EquivalenceResult):
            w = rec.witness
            lines.append("    -> %s" % w.reason)
            if w.constraint is not None:
                lines.append("    -> t0=%s s0=%s t_start=%s slack=%s"
                             % (w.constraint.t0, w.constraint.s0,
                                w.constraint.t_start, w.record.slack))
            if w.record is not None and w.record.violated:
                lines.append("    -> violated: %s"
                             % ", ".join(w.record.violated))
    return "\n".join(lines) + "\n"


def _catalog_text(catalog: DiagramCatalog):
    lines = ["stratum %s, shape %s: %d diagram%s"
             % (catalog.stratum, catalog.shape, len(catalog),
                "" if len(catalog) == 1 else "s")]
    for i, diagram in enumerate(catalog.diagrams):
        lines.append("  diagram %d:" % i)
        for cid in diagram.cylinder_ids:
            lines.append("    cyl %s  bottom %s  top %s"
                         % (cid, diagram.bottom_words[cid],
                            diagram.top_words[cid]))
    return "\n".join(lines) + "\n"


def render_report(record, format="text"):
    r"""
    Deterministic report of a :class:`Verdict` or :class:`DiagramCatalog`.

    ``format="text"`` returns a string; ``format="svg"`` returns a mapping
    of file names to SVG documents — cylinder decompositions and dual
    graphs per analyzed direction for a verdict, one drawing per diagram
    for a catalog.

    EXAMPLES::

        >>> catalog = enumerate_diagrams((2,), "one_cylinder")
        >>> print(render_report(catalog), end="")
        stratum H(2), shape one_cylinder: 1 diagram
          diagram 0:
            cyl 0  bottom (0, 1, 2)  top (0, 2, 1)
        >>> sorted(render_report(catalog, format="svg"))
        ['diagram-0.svg']
    """
    if format not in ("text", "svg"):
        raise ValueError("format must be 'text' or 'svg'")
    if isinstance(record, Verdict):
        if format == "text":
            return _verdict_text(record)
        out = {}
        for rec in record.evidence:
            if rec.mechanism == "window forcing" or record.origami is None:
                continue
            d = periodic_decomposition(record.origami, rec.slope)
            tag = "%d_%d" % rec.slope
            out["direction-%s-cylinders.svg" % tag] = \
                _diagram_svg(d.diagram)
            out["direction-%s-dual-graph.svg" % tag] = \
                _dual_graph_svg(dual_graph(d))
        return out
    if isinstance(record, DiagramCatalog):
        if format == "text":
            return _catalog_text(record)
        return {"diagram-%d.svg" % i: _diagram_svg(diagram)
                for i, diagram in enumerate(record.diagrams)}
    raise ValueError("expected a Verdict or a DiagramCatalog")
