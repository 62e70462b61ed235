"""Leading-order series calculus and the degeneration forcing arguments:
distances on weighted dual graphs, period leading terms, and the
case-specific exclusion verdicts."""

import random
from fractions import Fraction

import pytest

from conftest import wollmilchsau
from squaretiled.cylinders import horizontal_decomposition
from squaretiled.errors import ShapeMismatch, ZeroNodeValue
from squaretiled.homology import DualGraph, adapted_basis
from squaretiled.jump import (
    DifferentialSymbol,
    LeadingSeries,
    WeightedDualGraph,
    case3_verdict,
    case6_moduli_forcing,
    jump_distance,
    log_coefficient,
    period_leading,
    s_coordinate,
    series_determinant,
)


def random_series(rng, allow_special=True):
    terms = {rng.randint(-3, 4): Fraction(rng.randint(-5, 5),
                                          rng.randint(1, 4))
             for _ in range(rng.randint(0, 3))}
    order = rng.choice([None, rng.randint(2, 6)])
    if allow_special and rng.random() < 0.3:
        return LeadingSeries(Fraction(rng.randint(-3, 3)), terms, order)
    return LeadingSeries(0, terms, order)


def test_series_ring_axioms(rng):
    for _ in range(150):
        a = random_series(rng, allow_special=False)
        b = random_series(rng, allow_special=False)
        c = random_series(rng, allow_special=False)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        left = (a * (b + c)).terms
        right = ((a * b) + (a * c)).terms
        common = set(left) & set(right)
        assert all(left[k] == right[k] for k in common)


def test_series_leibniz_rule(rng):
    for _ in range(150):
        a = random_series(rng, allow_special=False)
        b = random_series(rng, allow_special=False)
        d1 = (a * b).derivative()
        d2 = a.derivative() * b + a * b.derivative()
        if d1.order is None and d2.order is None:
            assert d1 == d2
        else:
            horizon = min(x for x in (d1.order, d2.order) if x is not None)
            for k in range(-8, horizon):
                assert d1.coefficient(k) == d2.coefficient(k)


def test_unknown_constant_drops_under_derivative():
    s = LeadingSeries.unknown_constant() + LeadingSeries.monomial(3, 2)
    assert s.derivative() == LeadingSeries.monomial(6, 1)


def test_log_derivative():
    assert LeadingSeries.log(5).derivative() == LeadingSeries.monomial(5, -1)


def test_guarded_products():
    log = LeadingSeries.log(1)
    mono = LeadingSeries.monomial(1, 1)
    with pytest.raises(ValueError):
        log * mono
    with pytest.raises(ValueError):
        LeadingSeries.unknown_constant() * mono
    assert (log * LeadingSeries.constant(2)).c_log == 2


def test_series_determinant_two_by_two():
    a = LeadingSeries.monomial(1, 1)
    b = LeadingSeries.monomial(2, 0)
    c = LeadingSeries.monomial(3, 2)
    d = LeadingSeries.monomial(1, -1)
    det = series_determinant([[a, b], [c, d]])
    assert det == a * d - b * c


def test_s_coordinate_monotone():
    assert s_coordinate(Fraction(0), Fraction(1, 4), 1) == 1
    v1 = s_coordinate(Fraction(1), Fraction(1, 4), 1)
    v2 = s_coordinate(Fraction(2), Fraction(1, 4), 1)
    assert 0 < v2 < v1 < 1


def chain_graph(n1, n2):
    graph = DualGraph(((0, 1), (1, 0), (2, 1)),
                      ((0, (0, 1)), (1, (1, 2))))
    return WeightedDualGraph(graph, {0: n1, 1: n2}, {0: 1, 1: 1},
                             {(0, 0): "p", (0, 1): 0,
                              (1, 0): 1, (1, 1): "q"})


def test_jump_distance():
    g = chain_graph(2, 3)
    ti = DifferentialSymbol(0, frozenset({0}))
    tj = DifferentialSymbol(1, frozenset({2}))
    assert jump_distance(g, ti, tj) == 5
    assert jump_distance(g, ti, DifferentialSymbol(0, frozenset({0}))) == 0


def test_period_leading_order_and_symbolic_constant():
    g = chain_graph(2, 3)
    ti = DifferentialSymbol(0, frozenset({0}), node_values={"p": 1, 0: 1})
    tj = DifferentialSymbol(1, frozenset({2}), node_values={1: 1, "q": 1})
    series = period_leading(g, ti, tj)
    assert series.unknown_const
    assert series.order == 6
    k, coeff = series.leading()
    assert k == 5 and coeff != 0


def test_log_coefficient_symmetry():
    ab = adapted_basis(horizontal_decomposition(wollmilchsau()))
    g = ab.genus
    for i in range(g):
        for j in range(g):
            assert log_coefficient(ab, i, j) == log_coefficient(ab, j, i)


def test_log_coefficient_vanishing_condition():
    """The ln(s) coefficient of a period vanishes exactly when, for every
    cylinder, one of the two classes misses its core curve."""
    ab = adapted_basis(horizontal_decomposition(wollmilchsau()))
    g = ab.genus
    for i in range(g):
        for j in range(g):
            coeffs = log_coefficient(ab, i, j)
            for cid, value in coeffs.items():
                ci = ab.pair(ab.betas[i], ab.cylinder_cores[cid])
                cj = ab.pair(ab.betas[j], ab.cylinder_cores[cid])
                assert value == ci * cj
                assert (value == 0) == (ci == 0 or cj == 0)


def case3_graph(n1, n2):
    graph = DualGraph(((0, 1), (1, 0)),
                      ((0, (0, 1)), (1, (0, 1)), (2, (1, 1))))
    return WeightedDualGraph(graph, {0: n1, 1: n2, 2: 1},
                             {0: 1, 1: 1, 2: 1},
                             {(0, 0): "p", (0, 1): 0,
                              (1, 0): "q", (1, 1): 1,
                              (2, 0): "r0", (2, 1): "r1"})


def random_node_values(rng):
    def nz():
        x = 0
        while x == 0:
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        return x
    return {"theta1_p": nz(), "theta1_q": nz(),
            "theta3_0": nz(), "theta3_1": nz()}


def test_case3_known_values():
    v = case3_verdict(case3_graph(1, 2),
                      {"theta1_p": 1, "theta1_q": 1,
                       "theta3_0": 1, "theta3_1": 1})
    assert (v.verdict, v.branch, v.exponent) == \
        ("Forni impossible", "unequal_exponents", 1)
    assert v.coefficient == -1
    v = case3_verdict(case3_graph(1, 1),
                      {"theta1_p": 1, "theta1_q": 1,
                       "theta3_0": 1, "theta3_1": 1})
    assert (v.branch, v.exponent, v.coefficient) == \
        ("equal_exponents", 2, 2)


def test_case3_shape_and_zero_guards():
    bad = WeightedDualGraph(
        DualGraph(((0, 1), (1, 1)), ((0, (0, 1)), (1, (0, 1)))),
        {0: 1, 1: 1}, {0: 1, 1: 1})
    with pytest.raises(ShapeMismatch):
        case3_verdict(bad, {"theta1_p": 1, "theta1_q": 1,
                            "theta3_0": 1, "theta3_1": 1})
    with pytest.raises(ZeroNodeValue):
        case3_verdict(case3_graph(1, 1),
                      {"theta1_p": 0, "theta1_q": 1,
                       "theta3_0": 1, "theta3_1": 1})


def test_case6_known_values():
    v = case6_moduli_forcing(1, 2, {"theta1_p1": 1, "theta2_p2": 1})
    assert v.verdict == "r1 = r2 forced"
    assert v.exponent == -1
    assert v.coefficient == 3
    assert case6_moduli_forcing(3, 3, {"theta1_p1": 1,
                                       "theta2_p2": 1}).verdict == \
        "consistent"


def test_case6_guards():
    with pytest.raises(ZeroNodeValue):
        case6_moduli_forcing(1, 2, {"theta1_p1": 0, "theta2_p2": 1})
    with pytest.raises(ValueError):
        case6_moduli_forcing(0, 2, {"theta1_p1": 1, "theta2_p2": 1})
