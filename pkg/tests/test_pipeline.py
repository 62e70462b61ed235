"""End-to-end classification, diagram catalogs, report rendering, and the
command-line entry points."""

from fractions import Fraction

import pytest

from conftest import EXEMPLARS, exemplar, l_origami, wollmilchsau
from squaretiled.cli import main as cli_main
from squaretiled.cylinders import horizontal_decomposition
from squaretiled.errors import CaseMismatch, GenusMismatch
from squaretiled.pipeline import (
    classify_surface,
    enumerate_diagrams,
    reference_surface,
    render_report,
    wollmilchsau_equivalent,
)
from squaretiled.surface import act_sl2z, origami_isomorphism


def record_for(verdict, slope):
    return next(r for r in verdict.evidence if r.slope == slope)


def test_reference_surface_matches_fixture():
    assert origami_isomorphism(reference_surface(), wollmilchsau()) \
        is not None


def test_reference_surface_survives():
    verdict = classify_surface(reference_surface())
    assert verdict.status == "WollmilchsauEquivalent"
    assert all(r.label == "Case6" for r in verdict.evidence)
    final = verdict.evidence[-1]
    assert final.mechanism == "window forcing"
    result = final.witness
    assert bool(result)
    q = Fraction(1, 4)
    assert (result.constraint.t0, result.constraint.s0,
            result.constraint.t_start) == (q, q, 0)
    assert result.record.boundary


def test_equivalence_gate_requires_two_cylinder_pinch():
    with pytest.raises(CaseMismatch):
        wollmilchsau_equivalent(exemplar("Case1"))


def test_verdict_invariant_under_shears():
    for word in (["T"], ["S"], ["T", "S", "T^-1"]):
        verdict = classify_surface(act_sl2z(reference_surface(), word))
        assert verdict.status == "WollmilchsauEquivalent"


def test_genus_gate():
    with pytest.raises(GenusMismatch):
        classify_surface(l_origami())


EXPECTED_HORIZONTAL = {
    "Case1": ("Case1", "transverse crossing cylinder"),
    "Case2": ("Case2", "transverse crossing cylinder"),
    "Case3": ("Case3", "period forcing"),
    "Case4A": ("Case4", "transverse crossing cylinder"),
    "Case4B": ("Case4", "transverse crossing cylinder"),
    "Case5": ("Case5", "defer to a simple transverse cylinder"),
    "Case6": ("Case6", "window forcing"),
}


@pytest.mark.parametrize("name", sorted(EXEMPLARS))
def test_exemplars_have_trivial_subspaces(name):
    verdict = classify_surface(exemplar(name))
    assert verdict.status == "TrivialForni"
    label, mechanism = EXPECTED_HORIZONTAL[name]
    horizontal = record_for(verdict, (0, 1))
    assert horizontal.label == label
    assert horizontal.mechanism == mechanism


def test_simple_cylinder_fallback():
    from squaretiled.pipeline import _simple_cylinder_exclusion
    record = _simple_cylinder_exclusion(exemplar("Case5"), 3)
    assert record is not None
    assert record.mechanism.startswith("simple transverse cylinder")


def test_case6_nonreference_excluded_by_window():
    verdict = classify_surface(exemplar("Case6"))
    horizontal = record_for(verdict, (0, 1))
    chain = horizontal.witness
    assert not chain
    assert chain.reason == "window inequalities violated"
    assert not chain.record.feasible


def test_catalog_counts():
    assert len(enumerate_diagrams((1, 1), "one_cylinder")) == 1
    assert len(enumerate_diagrams((2,), "one_cylinder")) == 1
    assert len(enumerate_diagrams((1, 1, 1, 1), "case6")) == 1
    assert len(enumerate_diagrams((2,), "case6")) == 0


def test_case6_catalog_entry_is_the_reference_diagram():
    catalog = enumerate_diagrams((1, 1, 1, 1), "case6")
    ref = horizontal_decomposition(reference_surface())
    assert catalog.diagrams[0].canonical_key() == \
        ref.diagram.canonical_key()


def test_catalog_rejects_bad_input():
    with pytest.raises(ValueError):
        enumerate_diagrams((1, 1), "three_cylinder")
    with pytest.raises(ValueError):
        enumerate_diagrams((8,), "one_cylinder")


def test_render_text_reports():
    verdict = classify_surface(reference_surface(), direction_bound=2)
    text = render_report(verdict)
    assert "WollmilchsauEquivalent" in text
    catalog_text = render_report(enumerate_diagrams((1, 1, 1, 1), "case6"))
    assert "H(1,1,1,1)" in catalog_text


def test_render_svg_reports():
    verdict = classify_surface(reference_surface(), direction_bound=2)
    docs = render_report(verdict, format="svg")
    assert docs
    for name, content in docs.items():
        assert name.endswith(".svg")
        assert content.startswith("<svg")


def origami_file(tmp_path, o):
    path = tmp_path / "surface.txt"
    path.write_text("# input\n%s\n" % o, encoding="utf-8")
    return str(path)


def test_cli_analyze_and_report(tmp_path, capsys):
    path = origami_file(tmp_path, wollmilchsau())
    out = str(tmp_path / "svg")
    assert cli_main(["analyze", path, "--direction-bound", "2",
                     "--format", "svg", "--out", out]) == 0
    captured = capsys.readouterr()
    assert "WollmilchsauEquivalent" in captured.out
    assert list((tmp_path / "svg").glob("*.svg"))


def test_cli_enumerate(capsys):
    assert cli_main(["enumerate", "--stratum", "1,1,1,1",
                     "--shape", "case6"]) == 0
    assert "1" in capsys.readouterr().out


def test_cli_monodromy(tmp_path, capsys):
    path = origami_file(tmp_path, wollmilchsau())
    assert cli_main(["monodromy", path]) == 0
    out = capsys.readouterr().out
    assert "restricted closure: Finite" in out
    assert "dimension bound: 4" in out


def test_cli_error_exits(tmp_path):
    assert cli_main(["analyze", str(tmp_path / "missing.txt")]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("not an origami line\n", encoding="utf-8")
    assert cli_main(["analyze", str(bad)]) == 2
    genus2 = origami_file(tmp_path, l_origami())
    assert cli_main(["analyze", genus2]) == 2
