"""Integer homology: ranks, the intersection pairing, holonomy, dual
graphs, adapted symplectic bases, and the homology action of shears."""

from conftest import exemplar, l_origami, torus, wollmilchsau, random_origami
from squaretiled.cylinders import horizontal_decomposition, \
    periodic_decomposition
from squaretiled.homology import (
    adapted_basis,
    core_curve_class,
    core_span_rank,
    dual_graph,
    homology_basis,
    letter_action_matrix,
    relabel_action_matrix,
    word_action_matrix,
)
from squaretiled.intlinalg import mat_mul, mat_vec
from squaretiled.surface import act_sl2z, singularity_data, word_matrix


def test_rank_is_twice_genus():
    for o in (torus(), l_origami(), wollmilchsau()):
        basis = homology_basis(o)
        assert basis.rank == 2 * singularity_data(o).genus


def test_torus_intersection_number():
    b = homology_basis(torus())
    h = b.coords([1, 0])
    v = b.coords([0, 1])
    assert abs(b.pair(h, v)) == 1


def test_pairing_is_antisymmetric_and_unimodular(rng):
    for _ in range(10):
        o = random_origami(rng)
        b = homology_basis(o)
        omega = b.omega
        n = b.rank
        for i in range(n):
            for j in range(n):
                assert omega[i][j] == -omega[j][i]
        # a symplectic form on the full lattice has determinant one
        from squaretiled.intlinalg import det_rational
        assert abs(det_rational(omega)) == 1


def test_holonomy_covectors_on_core_curves():
    o = wollmilchsau()
    b = homology_basis(o)
    hx, hy = b.holonomy_covectors()
    d = horizontal_decomposition(o)
    for c in d.cylinders:
        cls = core_curve_class(d, c.id, b)
        assert sum(x * y for x, y in zip(hx, cls)) == c.circumference
        assert sum(x * y for x, y in zip(hy, cls)) == 0


def test_wollmilchsau_core_curves_homologous():
    o = wollmilchsau()
    b = homology_basis(o)
    d = horizontal_decomposition(o)
    c1, c2 = (core_curve_class(d, c.id, b) for c in d.cylinders)
    assert list(c1) == list(c2)


def test_dual_graph_shapes():
    g = dual_graph(horizontal_decomposition(wollmilchsau()))
    assert sorted(gn for _, gn in g.vertices) == [1, 1]
    assert len(g.edges) == 2
    assert g.geometric_genus == 2
    g1 = dual_graph(horizontal_decomposition(exemplar("Case1")))
    assert g1.geometric_genus == 1


def test_core_span_ranks():
    d = horizontal_decomposition(wollmilchsau())
    assert core_span_rank(d) == 1
    d5 = horizontal_decomposition(exemplar("Case5"))
    assert core_span_rank(d5) == 1


def test_adapted_basis_is_symplectic(rng):
    for _ in range(12):
        o = random_origami(rng)
        for slope in ((0, 1), (1, 1)):
            d = periodic_decomposition(o, slope)
            ab = adapted_basis(d)
            n = len(ab.alphas)
            assert len(ab.betas) == n
            for i in range(n):
                for j in range(n):
                    assert ab.pair(ab.alphas[i], ab.alphas[j]) == 0
                    assert ab.pair(ab.betas[i], ab.betas[j]) == 0
                    assert ab.pair(ab.alphas[i], ab.betas[j]) == \
                        (1 if i == j else 0)


def test_adapted_basis_core_block():
    d = horizontal_decomposition(wollmilchsau())
    ab = adapted_basis(d)
    assert ab.core_flags
    for index, cid in ab.core_flags.items():
        core = list(ab.cylinder_cores[cid])
        alpha = list(ab.alphas[index])
        assert alpha == core or alpha == [-x for x in core]


def test_letter_action_preserves_intersection(rng):
    for _ in range(12):
        o = random_origami(rng)
        b = homology_basis(o)
        for letter in ("T", "T^-1", "S"):
            target, m = letter_action_matrix(o, letter, source=b)
            mt = [[m[i][j] for i in range(len(m))] for j in range(len(m))]
            assert mat_mul(mt, mat_mul(target.omega, m)) == b.omega


def test_word_action_composes(rng):
    for _ in range(8):
        o = random_origami(rng)
        b = homology_basis(o)
        w1 = [rng.choice(["T", "T^-1", "S"]) for _ in range(2)]
        w2 = [rng.choice(["T", "T^-1", "S"]) for _ in range(2)]
        t1, m1 = word_action_matrix(o, w1, source=b)
        o1 = act_sl2z(o, w1)
        t2, m2 = word_action_matrix(o1, w2, source=t1)
        t12, m12 = word_action_matrix(o, w1 + w2, source=b)
        assert mat_mul(m2, m1) == m12


def test_holonomy_transforms_by_word_matrix(rng):
    for _ in range(10):
        o = random_origami(rng)
        b = homology_basis(o)
        word = [rng.choice(["T", "T^-1", "S"]) for _ in range(3)]
        target, m = word_action_matrix(o, word, source=b)
        a = word_matrix(word)
        hx, hy = b.holonomy_covectors()
        tx, ty = target.holonomy_covectors()
        for col in range(b.rank):
            e = [1 if i == col else 0 for i in range(b.rank)]
            img = mat_vec(m, e)
            x0 = sum(p * q for p, q in zip(hx, e))
            y0 = sum(p * q for p, q in zip(hy, e))
            x1 = sum(p * q for p, q in zip(tx, img))
            y1 = sum(p * q for p, q in zip(ty, img))
            assert (x1, y1) == (a[0][0] * x0 + a[0][1] * y0,
                                a[1][0] * x0 + a[1][1] * y0)


def test_relabel_action_identity():
    o = wollmilchsau()
    b = homology_basis(o)
    ident = relabel_action_matrix(b, b, tuple(range(o.n)))
    n = b.rank
    assert ident == [[1 if i == j else 0 for j in range(n)]
                     for i in range(n)]
