r"""
Integer homology of an origami with its intersection form, dual graphs of
cylinder pinches, and symplectic bases adapted to a pinch.

The square tiling is a cell complex: one vertex per cone-point corner
class, edges ``h_i`` (bottom side of square ``i``) and ``v_i`` (left side),
and one square face per square giving the relation
``h_i + v_{h(i)} - h_{v(i)} - v_i = 0``.  First homology is the cycle
lattice modulo the face lattice, computed with an integer Smith normal
form; the algebraic intersection number is evaluated on cycle
representatives directly on the complex.

EXAMPLES::

    >>> from squaretiled.surface import build_origami
    >>> H = homology_basis(build_origami((0,), (0,)))
    >>> H.rank, H.omega
    (2, [[0, 1], [-1, 0]])
"""

from __future__ import annotations

from dataclasses import dataclass

from .intlinalg import (
    det_rational,
    invert_integer_matrix,
    mat_vec,
    rank_rational,
    smith_normal_form,
    snf_rank,
    solve_integer,
)
from .surface import Origami, perm_inverse, singularity_data

# ---------------------------------------------------------------------------
# chains on the square complex
# ---------------------------------------------------------------------------
#
# A chain is a list of 2n integers: entry i is the coefficient of h_i
# (bottom edge of square i, oriented rightward) and entry n+i that of v_i
# (left edge of square i, oriented upward).


def _zero_chain(n):
    return [0] * (2 * n)


def _add_chain(a, b, c=1):
    return [x + c * y for x, y in zip(a, b)]


class HomologyBasis:
    """Integer first homology of an origami, with intersection form.

    Attributes of interest: ``rank`` (2·genus), ``omega`` (the skew
    unimodular Gram matrix of the chosen basis), ``basis_chains`` (cycle
    representatives).  Use :meth:`coords` / :meth:`lift` to move between
    cycles on the complex and coordinate vectors, and :meth:`pair_chains` /
    :meth:`pair` for intersection numbers.
    """

    def __init__(self, o: Origami):
        self.origami = o
        n = o.n
        self.n = n
        self.hi = perm_inverse(o.h)
        self.vi = perm_inverse(o.v)
        orbits = o.vertex_orbits()
        self.corner_class = {}
        for idx, orbit in enumerate(orbits):
            for sq in orbit:
                self.corner_class[sq] = idx
        self.num_vertices = len(orbits)

        # spanning tree of the 1-skeleton on the vertex classes
        endpoints = []
        for i in range(n):
            endpoints.append((self.corner_class[i], self.corner_class[o.h[i]]))
        for i in range(n):
            endpoints.append((self.corner_class[i], self.corner_class[o.v[i]]))
        self.edge_endpoints = endpoints
        in_tree = [False] * (2 * n)
        parent = {0: None}  # vertex -> (edge index, direction) into the tree
        frontier = [0]
        while frontier:
            base = frontier.pop(0)
            for e, (u, w) in enumerate(endpoints):
                if in_tree[e]:
                    continue
                if u == base and w not in parent:
                    parent[w] = (e, +1)
                    in_tree[e] = True
                    frontier.append(w)
                elif w == base and u not in parent:
                    parent[u] = (e, -1)
                    in_tree[e] = True
                    frontier.append(u)
        assert len(parent) == self.num_vertices, "complex must be connected"
        self._tree_parent = parent
        self.nontree_edges = [e for e in range(2 * n) if not in_tree[e]]
        self._nontree_index = {e: k for k, e in enumerate(self.nontree_edges)}

        # fundamental cycle of each non-tree edge
        self.fundamental_cycles = []
        for e in self.nontree_edges:
            u, w = endpoints[e]
            chain = _zero_chain(n)
            chain[e] += 1
            # walk w back to the root, then the root out to u
            chain = _add_chain(chain, self._tree_path(w), -1)
            chain = _add_chain(chain, self._tree_path(u), +1)
            assert self.boundary(chain) == [0] * self.num_vertices
            self.fundamental_cycles.append(chain)

        # face relations in fundamental-cycle coordinates
        k = len(self.nontree_edges)
        faces = [self.face_chain(i) for i in range(n)]
        face_cols = [[f[e] for e in self.nontree_edges] for f in faces]
        a = [[face_cols[i][j] for i in range(n)] for j in range(k)]  # k x n
        u_mat, s, _ = smith_normal_form(a)
        r = snf_rank(s)
        assert all(s[i][i] == 1 for i in range(r)), "face lattice must be primitive"
        self._proj_rows = u_mat[r:]  # quotient coordinates: x -> (Ux)[r:]
        u_inv = invert_integer_matrix(u_mat)
        self._lift_cols = [[u_inv[i][r + j] for i in range(k)]
                           for j in range(k - r)]
        self.rank = k - r
        stratum = singularity_data(o)
        assert self.rank == 2 * stratum.genus

        self.basis_chains = [self._chain_from_fc(col) for col in self._lift_cols]
        self.omega = [[self.pair_chains(x, y) for y in self.basis_chains]
                      for x in self.basis_chains]
        assert all(self.omega[i][j] == -self.omega[j][i]
                   for i in range(self.rank) for j in range(self.rank))
        assert abs(det_rational(self.omega)) == 1

    # -- cell complex ------------------------------------------------------

    def _tree_path(self, vertex):
        """Chain of tree edges from the root to ``vertex``."""
        chain = _zero_chain(self.n)
        while self._tree_parent[vertex] is not None:
            e, direction = self._tree_parent[vertex]
            chain[e] += direction
            u, w = self.edge_endpoints[e]
            vertex = u if direction == +1 else w
        return chain

    def face_chain(self, i):
        """The boundary relation of square ``i``."""
        o = self.origami
        chain = _zero_chain(self.n)
        chain[i] += 1
        chain[self.n + o.h[i]] += 1
        chain[o.v[i]] -= 1
        chain[self.n + i] -= 1
        return chain

    def boundary(self, chain):
        """Boundary of a chain as a vector over the vertex classes."""
        out = [0] * self.num_vertices
        for e, coeff in enumerate(chain):
            if coeff:
                u, w = self.edge_endpoints[e]
                out[u] -= coeff
                out[w] += coeff
        return out

    # -- homology coordinates ---------------------------------------------

    def _fc_coords(self, chain):
        coeffs = [chain[e] for e in self.nontree_edges]
        recombined = _zero_chain(self.n)
        for c, fc in zip(coeffs, self.fundamental_cycles):
            if c:
                recombined = _add_chain(recombined, fc, c)
        assert recombined == list(chain), "chain is not a cycle"
        return coeffs

    def _chain_from_fc(self, coeffs):
        chain = _zero_chain(self.n)
        for c, fc in zip(coeffs, self.fundamental_cycles):
            if c:
                chain = _add_chain(chain, fc, c)
        return chain

    def coords(self, chain):
        r"""
        Homology coordinates (length ``2g``) of a cycle.

        EXAMPLES::

            >>> from squaretiled.surface import build_origami
            >>> H = homology_basis(build_origami((0,), (0,)))
            >>> H.coords(H.basis_chains[0])
            [1, 0]
        """
        return mat_vec(self._proj_rows, self._fc_coords(chain))

    def lift(self, coords):
        """A cycle representative of the homology class ``coords``."""
        chain = _zero_chain(self.n)
        for c, col in zip(coords, self._lift_cols):
            if c:
                chain = _add_chain(chain, self._chain_from_fc(col), c)
        return chain

    # -- intersection numbers ---------------------------------------------

    def _corner_imbalance(self, chain):
        """Net chain flow at each corner (a regular point of the complex
        would have zero; cone corners can disagree sheet by sheet)."""
        n, o = self.n, self.origami
        d = [0] * n
        for j in range(n):
            d[j] = (chain[self.hi[j]] + chain[n + self.vi[j]]
                    - chain[j] - chain[n + j])
        return d

    def balance(self, chain):
        r"""
        Add face relations so the chain's flow through every individual
        corner (not just every vertex class) is balanced.

        The intersection formula below counts crossings at square corners
        and is only valid against balanced representatives.
        """
        n, o = self.n, self.origami
        out = list(chain)
        d = self._corner_imbalance(out)
        # rho moves a corner to the next sheet around its vertex; adding the
        # face v^-1(h^-1(x)) moves one unit of imbalance from x to rho(x)
        rho = tuple(o.v[o.h[self.vi[self.hi[x]]]] for x in range(n))
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            x = rho[start]
            while x != start:
                orbit.append(x)
                seen[x] = True
                x = rho[x]
            assert sum(d[x] for x in orbit) == 0, "cycle has nonzero boundary"
            transfer = 0
            for x in orbit:
                transfer += d[x]
                if transfer:
                    face = self.vi[self.hi[x]]
                    out = _add_chain(out, self.face_chain(face), transfer)
        assert all(t == 0 for t in self._corner_imbalance(out))
        return out

    def pair_chains(self, x, y):
        r"""
        Algebraic intersection number of two cycles given as chains.

        EXAMPLES::

            >>> from squaretiled.surface import build_origami
            >>> H = homology_basis(build_origami((0,), (0,)))
            >>> h_edge, v_edge = [1, 0], [0, 1]
            >>> H.pair_chains(h_edge, v_edge)
            1
        """
        n, o = self.n, self.origami
        yb = self.balance(y)
        total = 0
        for i in range(n):
            total += x[o.v[i]] * yb[n + i]
            total -= x[n + o.h[i]] * yb[i]
        return total

    def pair(self, a, b):
        """Intersection number of two classes in homology coordinates."""
        return sum(a[i] * self.omega[i][j] * b[j]
                   for i in range(self.rank) for j in range(self.rank)
                   if a[i] and self.omega[i][j])

    def holonomy_covectors(self):
        """Two integer covectors evaluating horizontal and vertical holonomy
        on the basis classes."""
        hol_x = [sum(c[: self.n]) for c in self.basis_chains]
        hol_y = [sum(c[self.n:]) for c in self.basis_chains]
        return hol_x, hol_y


def homology_basis(o: Origami) -> HomologyBasis:
    r"""
    First integer homology of the origami with its intersection form.

    EXAMPLES::

        >>> from squaretiled.surface import build_origami, perm_from_cycles
        >>> H = homology_basis(build_origami(perm_from_cycles([(0, 1)], 3),
        ...                                  perm_from_cycles([(0, 2)], 3)))
        >>> H.rank
        4
    """
    return HomologyBasis(o)


# ---------------------------------------------------------------------------
# core curves and dual graphs
# ---------------------------------------------------------------------------


def core_curve_chain(d, cid):
    """Chain of the core curve of cylinder ``cid``: the bottom edges of its
    bottom row, oriented rightward."""
    n = d.origami.n
    chain = _zero_chain(n)
    for sq in d.core_row(cid):
        chain[sq] += 1
    return chain


def core_curve_class(d, c, basis: HomologyBasis = None):
    r"""
    Homology class of the core curve of cylinder ``c`` (id or object).

    EXAMPLES::

        >>> from squaretiled.surface import build_origami
        >>> from squaretiled.cylinders import horizontal_decomposition
        >>> d = horizontal_decomposition(build_origami((0,), (0,)))
        >>> core_curve_class(d, 0)
        [1, 0]
    """
    cid = c if isinstance(c, int) else c.id
    if basis is None:
        basis = homology_basis(d.origami)
    return basis.coords(core_curve_chain(d, cid))


@dataclass(frozen=True)
class DualGraph:
    """Dual graph of a cylinder pinch: one genus-labeled vertex per
    component of the surface cut along all core curves, one edge per
    cylinder (loops allowed).

    ``vertices``: tuple of ``(vertex id, genus)``;
    ``edges``: tuple of ``(cylinder id, (vertex, vertex))``.
    """

    vertices: tuple
    edges: tuple
    vertex_saddles: tuple = ()   # per vertex: saddle ids on its boundary circles
    half_assignment: tuple = ()  # ((cid, side) -> vertex) as a sorted tuple

    @property
    def geometric_genus(self):
        return sum(genus for _, genus in self.vertices)


def dual_graph(d) -> DualGraph:
    r"""
    Dual graph of the pinch of decomposition ``d``.

    Vertices are the connected components obtained by cutting every
    cylinder along its core curve; the genus label is computed from the
    Euler characteristic of the component's boundary graph (saddles and
    zeros), and each cylinder becomes an edge joining the components of its
    two halves.

    EXAMPLES::

        >>> from squaretiled.surface import build_origami
        >>> from squaretiled.cylinders import horizontal_decomposition
        >>> g = dual_graph(horizontal_decomposition(build_origami((0,), (0,))))
        >>> g.vertices, g.edges
        (((0, 0),), ((0, (0, 0)),))
    """
    halves = [(c.id, side) for c in d.cylinders for side in ("bot", "top")]
    parent = {h: h for h in halves}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    bottom_owner = {sid: cid for cid, word in d.diagram.bottom_words.items()
                    for sid in word}
    top_owner = {sid: cid for cid, word in d.diagram.top_words.items()
                 for sid in word}
    for sid in d.saddles:
        union((bottom_owner[sid], "bot"), (top_owner[sid], "top"))

    comp_ids = {}
    for h in halves:
        root = find(h)
        if root not in comp_ids:
            comp_ids[root] = len(comp_ids)
    comp_of = {h: comp_ids[find(h)] for h in halves}

    comp_saddles = {v: set() for v in comp_ids.values()}
    for sid in d.saddles:
        comp_saddles[comp_of[(bottom_owner[sid], "bot")]].add(sid)
    comp_ends = {v: 0 for v in comp_ids.values()}
    for h in halves:
        comp_ends[comp_of[h]] += 1

    vertices = []
    vertex_saddles = []
    for vid in sorted(comp_ids.values()):
        saddles = comp_saddles[vid]
        zeros = {z for sid in saddles for z in d.diagram.saddle_zeros[sid]}
        euler = len(zeros) - len(saddles)
        genus2 = 2 - euler - comp_ends[vid]
        assert genus2 >= 0 and genus2 % 2 == 0
        vertices.append((vid, genus2 // 2))
        vertex_saddles.append(tuple(sorted(saddles)))

    edges = tuple(
        (c.id, (comp_of[(c.id, "bot")], comp_of[(c.id, "top")]))
        for c in d.cylinders
    )
    g = DualGraph(tuple(vertices), edges, tuple(vertex_saddles),
                  tuple(sorted(comp_of.items())))
    # stable-curve genus formula: sum of genera plus cycle rank of the graph
    if getattr(d, "origami", None) is not None:
        total = g.geometric_genus + (len(g.edges) - len(g.vertices) + 1)
        assert total * 2 == homology_rank_of(d)
    return g


def homology_rank_of(d):
    """2·genus of the decomposition's origami, from its stratum."""
    return 2 * singularity_data(d.origami).genus


def core_span_rank(d) -> int:
    r"""
    Rank of the span of all core-curve classes of the decomposition.

    EXAMPLES::

        >>> from squaretiled.surface import build_origami, perm_from_cycles
        >>> from squaretiled.cylinders import horizontal_decomposition
        >>> o = build_origami(perm_from_cycles([(0, 1)], 3),
        ...                   perm_from_cycles([(0, 2)], 3))
        >>> core_span_rank(horizontal_decomposition(o))
        2
    """
    basis = homology_basis(d.origami)
    rows = [core_curve_class(d, c.id, basis) for c in d.cylinders]
    return rank_rational(rows)


# ---------------------------------------------------------------------------
# adapted symplectic bases
# ---------------------------------------------------------------------------


@dataclass
class AdaptedBasis:
    """A symplectic basis adapted to a cylinder pinch.

    Indices ``0..g_prime-1`` carry pairs supported on single positive-genus
    components (``component_assignment`` maps the index to the dual-graph
    vertex); indices ``g_prime..g-1`` have core-curve alphas
    (``core_flags`` maps the index to the cylinder id).
    ``cylinder_cores`` stores the core class of every cylinder, independent
    subset or not, for intersection bookkeeping.
    """

    alphas: list
    betas: list
    g_prime: int
    core_flags: dict
    component_assignment: dict
    basis: HomologyBasis
    graph: DualGraph
    cylinder_cores: dict

    @property
    def genus(self):
        return len(self.alphas)

    def pair(self, a, b):
        return self.basis.pair(a, b)


def _symplectic_pairs(vectors, pair_fn):
    """Integer symplectic Gram-Schmidt: return (pairs, radical) where pairs
    are (a, b) with <a,b> = 1 and everything else orthogonal."""
    work = [list(v) for v in vectors]
    pairs = []
    while True:
        k = len(work)
        p = [[pair_fn(work[i], work[j]) for j in range(k)] for i in range(k)]
        best = None
        for i in range(k):
            for j in range(k):
                if p[i][j] != 0 and (best is None or abs(p[i][j]) < abs(p[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            return pairs, work
        a, b = best
        m = p[a][b]
        if m < 0:
            a, b = b, a
            m = -m
        if m > 1:
            reduced = False
            for c in range(k):
                if c in (a, b):
                    continue
                if p[a][c] % m != 0:
                    q = p[a][c] // m
                    work[c] = [x - q * y for x, y in zip(work[c], work[b])]
                    reduced = True
                elif p[b][c] % m != 0:
                    q = p[b][c] // m
                    work[c] = [x + q * y for x, y in zip(work[c], work[a])]
                    reduced = True
            if not reduced:
                raise AssertionError(
                    "component pairing is not unimodular; no symplectic basis"
                )
            continue
        alpha, beta = work[a], work[b]
        rest = [work[c] for c in range(k) if c not in (a, b)]
        cleaned = []
        for c in rest:
            c1 = [x - pair_fn(alpha, c) * y for x, y in zip(c, beta)]
            c2 = [x + pair_fn(beta, c1) * y for x, y in zip(c1, alpha)]
            cleaned.append(c2)
        pairs.append((alpha, beta))
        work = cleaned


def adapted_basis(d) -> AdaptedBasis:
    r"""
    Construct a symplectic basis adapted to the pinch of ``d``.

    For every positive-genus component of the cut surface, a symplectic
    basis supported on that component is extracted from the cycle space of
    its boundary graph; a maximal independent subset of core-curve classes
    (lowest cylinder id first) supplies the remaining alphas, and their
    betas are completed by integer linear algebra.

    EXAMPLES::

        >>> from squaretiled.surface import build_origami
        >>> from squaretiled.cylinders import horizontal_decomposition
        >>> ab = adapted_basis(horizontal_decomposition(build_origami((0,), (0,))))
        >>> ab.g_prime, ab.core_flags
        (0, {0: 0})
    """
    basis = homology_basis(d.origami)
    graph = dual_graph(d)
    g = basis.rank // 2

    comp_pairs = []  # (vertex id, [(alpha, beta), ...])
    for (vid, genus), saddles in zip(graph.vertices, graph.vertex_saddles):
        if genus == 0:
            continue
        # cycle space of the component's boundary graph (vertices = zeros,
        # edges = saddles), as chains on the square complex
        zeros = sorted({z for sid in saddles
                        for z in d.diagram.saddle_zeros[sid]})
        tree = {zeros[0]: None}
        in_tree = set()
        changed = True
        while changed:
            changed = False
            for sid in saddles:
                if sid in in_tree:
                    continue
                a, b = d.diagram.saddle_zeros[sid]
                if a in tree and b not in tree:
                    tree[b] = (sid, +1)
                    in_tree.add(sid)
                    changed = True
                elif b in tree and a not in tree:
                    tree[a] = (sid, -1)
                    in_tree.add(sid)
                    changed = True
        assert len(tree) == len(zeros), "component boundary graph is connected"

        def saddle_chain(sid):
            chain = _zero_chain(d.origami.n)
            for sq in d.saddles[sid].squares:
                chain[sq] += 1
            return chain

        def path_to_root(z):
            chain = _zero_chain(d.origami.n)
            while tree[z] is not None:
                sid, direction = tree[z]
                chain = _add_chain(chain, saddle_chain(sid), -direction)
                a, b = d.diagram.saddle_zeros[sid]
                z = a if direction == +1 else b
            return chain

        candidates = []
        for sid in saddles:
            if sid in in_tree:
                continue
            a, b = d.diagram.saddle_zeros[sid]
            cyc = saddle_chain(sid)
            cyc = _add_chain(cyc, path_to_root(b), +1)
            cyc = _add_chain(cyc, path_to_root(a), -1)
            candidates.append(basis.coords(cyc))
        pairs, _radical = _symplectic_pairs(candidates, basis.pair)
        assert len(pairs) == genus, "component symplectic rank must match genus"
        comp_pairs.append((vid, pairs))

    cylinder_cores = {c.id: basis.coords(core_curve_chain(d, c.id))
                      for c in d.cylinders}
    core_subset = []
    for cid in sorted(cylinder_cores):
        if rank_rational([cylinder_cores[c] for c in core_subset + [cid]]) \
                == len(core_subset) + 1:
            core_subset.append(cid)

    alphas, betas = [], []
    component_assignment = {}
    for vid, pairs in sorted(comp_pairs):
        for alpha, beta in pairs:
            component_assignment[len(alphas)] = vid
            alphas.append(alpha)
            betas.append(beta)
    g_prime = len(alphas)
    assert g_prime == graph.geometric_genus
    assert g_prime + len(core_subset) == g

    core_flags = {}
    for cid in core_subset:
        core_flags[len(alphas)] = cid
        alphas.append(cylinder_cores[cid])

    # complete the core alphas to a symplectic basis: solve for integral
    # betas pairing 1 with their own core and 0 with everything else chosen
    known = [(vec, 0) for vec in alphas[:g_prime]] + \
            [(vec, 0) for vec in betas[:g_prime]]
    core_betas = []
    for j, cid in enumerate(core_subset):
        rows, rhs = [], []
        for vec, _ in known:
            rows.append(mat_vec(basis.omega, vec))
            rhs.append(0)
        for m, cid_m in enumerate(core_subset):
            rows.append(mat_vec(basis.omega, alphas[g_prime + m]))
            rhs.append(1 if m == j else 0)
        # <u, x> = u^T Omega x = ((Omega^T) u)^T x and Omega^T = -Omega
        rows = [[-x for x in row] for row in rows]
        sol = solve_integer(rows, rhs)
        assert sol is not None, "symplectic completion must exist"
        core_betas.append(sol)
    # zero the beta-beta pairings without disturbing anything else
    for j in range(len(core_betas)):
        for m in range(j):
            t = basis.pair(core_betas[m], core_betas[j])
            if t:
                core_betas[j] = _add_chain(core_betas[j], alphas[g_prime + m], t)
    betas.extend(core_betas)

    ab = AdaptedBasis(alphas, betas, g_prime, core_flags,
                      component_assignment, basis, graph, cylinder_cores)
    _assert_symplectic(ab)
    return ab


def _assert_symplectic(ab: AdaptedBasis):
    g = ab.genus
    for i in range(g):
        for j in range(g):
            assert ab.pair(ab.alphas[i], ab.alphas[j]) == 0
            assert ab.pair(ab.betas[i], ab.betas[j]) == 0
            assert ab.pair(ab.alphas[i], ab.betas[j]) == (1 if i == j else 0)


# ---------------------------------------------------------------------------
# homology action of the shear and rotation generators
# ---------------------------------------------------------------------------


def letter_action_matrix(o: Origami, letter: str,
                         source: HomologyBasis = None):
    r"""
    Matrix of the chain map induced by one generator letter.

    Returns ``(target_basis, m)`` where ``m`` maps homology coordinates on
    ``o`` to coordinates on the transformed origami (columns are images of
    the source basis).  The map is induced by the affine homeomorphism, so
    it preserves intersection numbers and transforms holonomy by the
    letter's matrix.

    EXAMPLES::

        >>> from squaretiled.surface import build_origami
        >>> _, m = letter_action_matrix(build_origami((0,), (0,)), "T")
        >>> m
        [[1, 1], [0, 1]]
    """
    from .surface import act_letter

    if source is None:
        source = HomologyBasis(o)
    n = o.n
    if letter == "T^-1":
        o1 = act_letter(o, "T^-1")
        b1 = HomologyBasis(o1)
        _, m_fwd = letter_action_matrix(o1, "T", source=b1)
        m = invert_integer_matrix(m_fwd)
        return b1, m

    o1 = act_letter(o, letter)
    target = HomologyBasis(o1)

    def push(chain):
        out = _zero_chain(n)
        if letter == "T":
            # the shear keeps bottom edges and sends each left edge to the
            # diagonal of its image square
            for i in range(n):
                out[i] += chain[i]
                out[n + i] += chain[n + i]
                out[o1.v[i]] += chain[n + i]
        elif letter == "S":
            # quarter rotation: bottom edges become left edges; left edges
            # reverse onto bottom edges of the image squares
            for i in range(n):
                out[n + i] += chain[i]
                out[o1.v[i]] -= chain[n + i]
        else:
            raise ValueError("unknown letter: %r" % (letter,))
        return out

    cols = [target.coords(push(c)) for c in source.basis_chains]
    m = [[cols[j][i] for j in range(source.rank)] for i in range(source.rank)]
    return target, m


def word_action_matrix(o: Origami, word,
                       source: HomologyBasis = None):
    r"""
    Matrix of the chain map induced by a word in ``T``, ``T^-1``, ``S``
    (letters applied first to last), from homology coordinates on ``o``
    to coordinates on the transformed origami.

    Returns ``(target_basis, m)``.

    EXAMPLES::

        >>> from squaretiled.surface import build_origami
        >>> from squaretiled.surface import word_matrix
        >>> _, m = word_action_matrix(build_origami((0,), (0,)), ["T", "S"])
        >>> m == [list(row) for row in word_matrix(["T", "S"])]
        True
    """
    from .intlinalg import mat_mul

    if source is None:
        source = HomologyBasis(o)
    current_o, current_b = o, source
    m = [[1 if i == j else 0 for j in range(source.rank)]
         for i in range(source.rank)]
    for letter in word:
        current_b, step = letter_action_matrix(current_o, letter,
                                               source=current_b)
        from .surface import act_letter
        current_o = act_letter(current_o, letter)
        m = mat_mul(step, m)
    return current_b, m


def relabel_action_matrix(source: HomologyBasis, target: HomologyBasis,
                          relabeling):
    """Matrix of the isomorphism sending square ``i`` of the source origami
    to square ``relabeling[i]`` of the target origami."""
    n = source.n
    cols = []
    for chain in source.basis_chains:
        out = _zero_chain(n)
        for i in range(n):
            out[relabeling[i]] += chain[i]
            out[n + relabeling[i]] += chain[n + i]
        cols.append(target.coords(out))
    return [[cols[j][i] for j in range(source.rank)]
            for i in range(source.rank)]


