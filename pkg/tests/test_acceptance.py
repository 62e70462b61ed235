"""End-to-end acceptance gate: the eight headline guarantees with their
runtime budgets, checked in exact rational arithmetic."""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

from conftest import (
    l_origami,
    random_case4a_net,
    random_origami,
    torus,
    wollmilchsau,
)
from test_transverse import brute_window_point, total_length
from squaretiled.cylinders import classify_case, horizontal_decomposition, \
    periodic_decomposition
from squaretiled.homology import adapted_basis, core_curve_class, \
    dual_graph, homology_basis
from squaretiled.jump import case3_verdict, case6_moduli_forcing, \
    log_coefficient
from squaretiled.monodromy import closure_classify, homology_action, \
    restrict_to_zero_holonomy, stabilizer_generators
from squaretiled.pipeline import classify_surface, enumerate_diagrams, \
    reference_surface
from squaretiled.surface import singularity_data
from squaretiled.transverse import (
    WindowConstraint,
    build_interval_map,
    case4a_window_map,
    find_crossing_cylinder,
    window_feasible,
    window_feasible_pairs,
)
from test_jump import case3_graph


@contextmanager
def budget(seconds):
    start = time.monotonic()
    yield
    elapsed = time.monotonic() - start
    assert elapsed < seconds, "exceeded %ss budget (%.2fs)" % (seconds,
                                                              elapsed)


def test_criterion_1_reference_end_to_end():
    with budget(1):
        o = reference_surface()
        stratum = singularity_data(o)
        assert stratum.kappa == (1, 1, 1, 1)
        assert stratum.genus == 3
        d = horizontal_decomposition(o)
        assert sorted((c.circumference, c.height) for c in d.cylinders) == \
            [(4, 1), (4, 1)]
        b = homology_basis(o)
        c1, c2 = (core_curve_class(d, c.id, b) for c in d.cylinders)
        assert list(c1) == list(c2)
        assert str(classify_case(dual_graph(d))) == "Case6"
        verdict = classify_surface(o)
        assert verdict.status == "WollmilchsauEquivalent"
        constraint = verdict.evidence[-1].witness.constraint
        q = Fraction(1, 4)
        assert (constraint.t0, constraint.s0, constraint.t_start) == \
            (q, q, Fraction(0))


def test_criterion_2_diagram_uniqueness():
    with budget(10):
        assert len(enumerate_diagrams((1, 1), "one_cylinder")) == 1
        assert len(enumerate_diagrams((2,), "one_cylinder")) == 1
        assert len(enumerate_diagrams((1, 1, 1, 1), "case6")) == 1


def test_criterion_3_randomized_crossing_cylinders():
    with budget(30):
        rng = random.Random(4242)
        for _ in range(200):
            net = random_case4a_net(rng)
            witness = find_crossing_cylinder(net, "Case4A")
            assert witness is not None
            assert witness.width > 0
            assert len(set(witness.crossed)) == 3
            f, s = case4a_window_map(net)
            a, b = witness.start_interval
            assert 0 <= a < b <= s
            # the hit sits inside one continuity piece, so the whole
            # interval maps into the target window by a single translation
            pa, pb, off = f.piece_at(a)
            assert b <= pb
            assert 0 <= (a + off) % f.length
            assert (a + off) % f.length + (b - a) <= s or \
                witness.kind == "boundary"
            assert brute_window_point(net), \
                "independent direction scan must confirm the witness"


def test_criterion_4_case6_forcing_randomized():
    with budget(5):
        rng = random.Random(8899)

        def nonzero():
            x = 0
            while x == 0:
                x = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            return x

        for _ in range(1000):
            r1 = rng.randint(1, 5)
            r2 = rng.randint(1, 5)
            while r2 == r1:
                r2 = rng.randint(1, 5)
            values = {"theta1_p1": nonzero(), "theta2_p2": nonzero()}
            v = case6_moduli_forcing(r1, r2, values)
            assert v.verdict == "r1 = r2 forced"
            assert v.exponent == 2 * min(r1, r2) - 3
            assert v.coefficient != 0
        assert case6_moduli_forcing(3, 3, {"theta1_p1": 1,
                                           "theta2_p2": 1}).verdict == \
            "consistent"


def test_criterion_5_case3_forcing_randomized():
    with budget(5):
        rng = random.Random(1177)

        def nonzero():
            x = 0
            while x == 0:
                x = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            return x

        branches = set()
        for _ in range(1000):
            n1 = rng.randint(1, 4)
            n2 = rng.randint(1, 4)
            values = {"theta1_p": nonzero(), "theta1_q": nonzero(),
                      "theta3_0": nonzero(), "theta3_1": nonzero()}
            v = case3_verdict(case3_graph(n1, n2), values)
            assert v.verdict == "Forni impossible"
            assert v.coefficient != 0
            branches.add(v.branch)
            if v.branch == "equal_exponents":
                assert v.coefficient == \
                    2 * values["theta1_p"] * values["theta1_q"]
        assert branches == {"equal_exponents", "unequal_exponents"}


def test_criterion_6_window_uniqueness():
    with budget(5):
        q = Fraction(1, 4)
        assert window_feasible_pairs(100) == [(q, q)]
        rec = window_feasible(WindowConstraint(Fraction(1, 3), q, 0, q))
        assert not rec.feasible
        assert rec.slack == Fraction(-1, 6)


def test_criterion_7_monodromy_evidence():
    with budget(60):
        o = wollmilchsau()
        b = homology_basis(o)
        gens = stabilizer_generators(o, 2)
        mats = [homology_action(o, g, b) for g in gens]  # asserts symplectic
        restricted = restrict_to_zero_holonomy(mats, b)
        result = closure_classify(restricted)
        assert result.is_finite

        unipotent = homology_action(torus(), ("T",))
        assert closure_classify([unipotent]).status == "Unbounded"


def test_criterion_8_structural_suites():
    with budget(60):
        rng = random.Random(5151)
        corpus = [torus(), l_origami(), wollmilchsau()]
        corpus += [random_origami(rng) for _ in range(50)]
        maps_checked = 0
        for o in corpus:
            d = horizontal_decomposition(o)
            ab = adapted_basis(d)
            n = len(ab.alphas)
            for i in range(n):
                for j in range(n):
                    assert ab.pair(ab.alphas[i], ab.alphas[j]) == 0
                    assert ab.pair(ab.betas[i], ab.betas[j]) == 0
                    assert ab.pair(ab.alphas[i], ab.betas[j]) == \
                        (1 if i == j else 0)
            g = ab.genus
            for i in range(g):
                for j in range(g):
                    coeffs = log_coefficient(ab, i, j)
                    assert coeffs == log_coefficient(ab, j, i)
                    for cid, value in coeffs.items():
                        ci = ab.pair(ab.betas[i], ab.cylinder_cores[cid])
                        cj = ab.pair(ab.betas[j], ab.cylinder_cores[cid])
                        assert value == ci * cj
                        assert (value == 0) == (ci == 0 or cj == 0)
            net = d.to_net()
            for ci in d.cylinders:
                for cj in d.cylinders:
                    if set(net.diagram.bottom_words[ci.id]) != \
                            set(net.diagram.top_words[cj.id]):
                        continue
                    f = build_interval_map(net, ("bottom", ci.id),
                                           ("top", cj.id))
                    assert total_length(f.image_intervals()) == \
                        ci.circumference
                    maps_checked += 1
            for slope in ((0, 1), (1, 0), (1, 1)):
                assert periodic_decomposition(o, slope).area == o.n
        assert maps_checked > 0
