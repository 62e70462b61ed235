"""Cylinder decompositions: areas, saddles, diagram canonical keys, case
classification of pinch graphs, and moduli exponents."""

from fractions import Fraction

import pytest

from conftest import exemplar, l_origami, torus, wollmilchsau, random_origami
from squaretiled.cylinders import (
    CaseLabel,
    classify_case,
    horizontal_decomposition,
    moduli_exponents,
    periodic_decomposition,
)
from squaretiled.errors import Incommensurable
from squaretiled.homology import dual_graph


def cylinder_shapes(d):
    return sorted((c.circumference, c.height) for c in d.cylinders)


def test_wollmilchsau_horizontal_decomposition():
    d = horizontal_decomposition(wollmilchsau())
    assert cylinder_shapes(d) == [(4, 1), (4, 1)]
    assert d.area == 8
    assert all(len(d.diagram.bottom_words[c.id]) == 4 for c in d.cylinders)
    assert all(s.length == 1 for s in d.saddles.values())


def test_simple_decompositions():
    assert cylinder_shapes(horizontal_decomposition(torus())) == [(1, 1)]
    assert cylinder_shapes(horizontal_decomposition(l_origami())) == \
        [(1, 1), (2, 1)]


def test_exemplar_cylinder_shapes():
    assert cylinder_shapes(horizontal_decomposition(exemplar("Case1"))) == \
        [(1, 2), (4, 1)]
    assert cylinder_shapes(horizontal_decomposition(exemplar("Case5"))) == \
        [(6, 1)]
    assert cylinder_shapes(horizontal_decomposition(exemplar("Case6"))) == \
        [(3, 1), (3, 1)]
    assert cylinder_shapes(horizontal_decomposition(exemplar("Case4B"))) == \
        [(1, 1), (4, 1), (4, 1), (5, 1)]


@pytest.mark.parametrize("name,label", [
    ("Case1", CaseLabel.CASE1),
    ("Case2", CaseLabel.CASE2),
    ("Case3", CaseLabel.CASE3),
    ("Case4A", CaseLabel.CASE4),
    ("Case4B", CaseLabel.CASE4),
    ("Case5", CaseLabel.CASE5),
    ("Case6", CaseLabel.CASE6),
])
def test_exemplar_case_labels(name, label):
    d = horizontal_decomposition(exemplar(name))
    assert classify_case(dual_graph(d)) is label


def test_wollmilchsau_slope_one_is_case6():
    d = periodic_decomposition(wollmilchsau(), (1, 1))
    assert classify_case(dual_graph(d)) is CaseLabel.CASE6


def test_genus_two_graphs_match_no_case():
    d = horizontal_decomposition(l_origami())
    assert classify_case(dual_graph(d)) is None


def test_area_conservation_under_direction_change(rng):
    for _ in range(15):
        o = random_origami(rng)
        for slope in ((0, 1), (1, 0), (1, 1), (-1, 2)):
            assert periodic_decomposition(o, slope).area == o.n


def test_saddle_words_partition_boundaries(rng):
    for _ in range(15):
        o = random_origami(rng)
        d = horizontal_decomposition(o)
        d.diagram.validate()
        for c in d.cylinders:
            for words in (d.diagram.bottom_words, d.diagram.top_words):
                total = sum(d.saddles[s].length for s in words[c.id])
                assert total == c.circumference


def test_diagram_canonical_key_invariance(rng):
    d = horizontal_decomposition(wollmilchsau())
    diagram = d.diagram
    relabeled = type(diagram)(
        bottom_words={c + 10: w for c, w in diagram.bottom_words.items()},
        top_words={c + 10: w for c, w in diagram.top_words.items()},
        saddle_zeros=dict(diagram.saddle_zeros),
    )
    assert diagram.canonical_key() == relabeled.canonical_key()


def test_moduli_exponents():
    assert moduli_exponents([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    assert moduli_exponents([Fraction(1, 4), Fraction(1, 4)]) == (1, 1)
    assert moduli_exponents(horizontal_decomposition(wollmilchsau())) == \
        (1, 1)
    with pytest.raises(Incommensurable):
        moduli_exponents([0.5, Fraction(1, 3)])
