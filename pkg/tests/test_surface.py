"""Surface layer: permutation plumbing, strata, the shear/rotate action,
isomorphism and canonical forms, the text format, and metric nets."""

import random

import pytest

from conftest import l_origami, torus, wollmilchsau, random_origami
from squaretiled.errors import NotTransitive
from squaretiled.surface import (
    act_letter,
    act_sl2z,
    build_origami,
    canonical_form,
    matrix_word,
    origami_isomorphism,
    parse_origami,
    perm_compose,
    perm_from_cycles,
    perm_inverse,
    singularity_data,
    word_matrix,
)


def test_known_strata():
    assert str(singularity_data(torus())) == "H(0)"
    assert singularity_data(l_origami()).kappa == (2,)
    assert singularity_data(l_origami()).genus == 2
    ew = singularity_data(wollmilchsau())
    assert ew.kappa == (1, 1, 1, 1)
    assert ew.genus == 3


def test_transitivity_required():
    with pytest.raises(NotTransitive):
        build_origami((1, 0, 2), (0, 1, 2))


def test_perm_utilities():
    p = perm_from_cycles([(0, 2, 1)], 4)
    assert p == (2, 0, 1, 3)
    assert perm_compose(p, perm_inverse(p)) == (0, 1, 2, 3)


def test_word_matrix_roundtrip():
    rng = random.Random(7)
    letters = ["T", "T^-1", "S"]
    for _ in range(50):
        word = [rng.choice(letters) for _ in range(rng.randint(0, 6))]
        m = word_matrix(word)
        assert word_matrix(matrix_word(m)) == m


def test_action_letter_inverses():
    rng = random.Random(11)
    for _ in range(20):
        o = random_origami(rng)
        assert act_letter(act_letter(o, "T"), "T^-1").v == o.v
        assert act_sl2z(o, ["S", "S", "S", "S"]).h == o.h


def test_action_is_stratum_preserving(rng):
    for _ in range(20):
        o = random_origami(rng)
        word = [rng.choice(["T", "T^-1", "S"]) for _ in range(4)]
        assert singularity_data(act_sl2z(o, word)).kappa == \
            singularity_data(o).kappa


def test_isomorphism_and_canonical_form(rng):
    for _ in range(20):
        o = random_origami(rng)
        relabel = list(range(o.n))
        rng.shuffle(relabel)
        inv = perm_inverse(tuple(relabel))
        other = build_origami(
            tuple(relabel[o.h[inv[i]]] for i in range(o.n)),
            tuple(relabel[o.v[inv[i]]] for i in range(o.n)),
        )
        p = origami_isomorphism(o, other)
        assert p is not None
        assert [p[o.h[i]] for i in range(o.n)] == [other.h[p[i]]
                                                  for i in range(o.n)]
        assert canonical_form(o) == canonical_form(other)


def test_isomorphism_rejects_different_surfaces():
    assert origami_isomorphism(l_origami(), torus()) is None


def test_parse_roundtrip():
    ew = wollmilchsau()
    assert parse_origami(str(ew)) == ew
