"""Twist family: bundled link, generated knots, evidence pipelines."""

import json

import pytest

from surgeon import family
from surgeon.diagram import (check_dt_text, insert_annulus_twists,
                             insert_full_twists)
from surgeon.surgery import Slope

from test_diagram import face_count


def test_load_base_passes_its_gate():
    d, regions, notes = family.load_base()
    assert d.comp_names == ["k", "l1", "l2", "l3"]
    assert len(d.crossings) == 16
    assert set(regions) == {"A", "l3"}
    assert notes["p_orientation"]["eps"] == [-1, -1]


def test_base_linking_sheet():
    d, _, _ = family.load_base()
    assert d.linking_table() == [
        [0, 0, 0, 1],
        [0, 0, 0, 1],
        [0, 0, 0, 1],
        [1, 1, 1, 0],
    ]
    for i in range(4):
        assert d.writhe(i) == 0


def test_validate_base_rejects_tampering():
    d, _, _ = family.load_base()
    meta = json.loads(json.dumps({
        "linking": [[0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 1], [1, 1, 1, 0]],
        "regions": {},
    }))
    with pytest.raises(family.FamilyError):
        family.validate_base(d, meta)


def test_disk_twist_insertion_counts():
    d, regions, _ = family.load_base()
    for t in (1, -1, 2, -3):
        out = insert_full_twists(d, regions["l3"], t)
        assert len(out.crossings) == 16 + 6 * abs(t)
        assert face_count(out) == len(out.crossings) + 2
        assert out.linking_number("l1", "l2") == t


def test_annulus_twist_insertion_counts():
    d, regions, _ = family.load_base()
    for t, want in ((1, 42), (-1, 42), (2, 70)):
        out = insert_annulus_twists(d, regions["A"], t)
        assert len(out.crossings) == want
        assert face_count(out) == len(out.crossings) + 2
        # the annulus sweep leaves pairwise linking with l3 alone
        assert out.linking_number("k", "l3") == 1


def test_zero_twists_return_same_diagram():
    d, regions, _ = family.load_base()
    assert insert_full_twists(d, regions["l3"], 0) == d
    assert insert_annulus_twists(d, regions["A"], 0) == d


def test_expected_knot_crossings_grid():
    cases = {
        (0, 0): 0, (0, 3): 0, (0, -2): 0,
        (1, 0): 18, (-1, 0): 18,
        (1, 1): 38, (1, -1): 38, (-1, 1): 38,
        (1, 2): 58, (1, -2): 58,
        (2, 0): 38, (2, 1): 110, (-2, 1): 110, (2, 2): 182,
        (3, 0): 58, (3, 1): 214, (3, -1): 214, (3, 2): 370, (-3, 2): 370,
    }
    for (m, n), want in cases.items():
        assert family.expected_knot_crossings(m, n) == want, (m, n)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (0, 2), (1, 1), (-1, 1),
                                 (2, 1), (1, -2), (2, 2)])
def test_knot_diagram_structure(m, n):
    d = family.knot_diagram(m, n)
    assert d.component_count() == 1
    assert len(d.crossings) == family.expected_knot_crossings(m, n)
    if d.crossings:
        assert face_count(d) == len(d.crossings) + 2
    else:
        assert d.loops == 1


def test_knot_trace_is_self_certifying():
    trace = family.knot_trace(2, 1, with_diagram=False)
    homs = trace.homologies()
    assert all(h == homs[0] for h in homs)
    assert trace.final.describe() == "L(*)"


def test_surgered_homology_depends_only_on_n():
    for n in (-2, 0, 3):
        values = {family.surgered_presentation(m, n, with_diagram=False)
                  .first_homology() for m in range(0, 6)}
        assert len(values) == 1


def test_induced_slope_negative_m():
    assert family.induced_surgery_slope(-4, 3) == Slope(3, 1)
    assert family.induced_surgery_slope(5, -2) == Slope(-2, 1)


def test_export_dt_is_checkable():
    text = family.export_knot_dt(1, 1)
    check_dt_text(text)
    assert len(text.split()) == 38


def test_same_surgery_evidence_matches():
    ev = family.same_surgery_evidence(2, 0, 5)
    assert ev["match"] is True
    assert ev["induced_slopes"] == ["2/1", "2/1"]
    assert ev["normal_form"].comps == ["k", "l3"]


def test_s3_evidence_runs_clean():
    trace = family.s3_evidence(2, 3)
    assert trace.final.comps == ["k"]
    assert trace.final.is_homology_sphere()


def test_base_presentation_unfilled():
    pres = family.base_presentation()
    assert pres.slopes == [None, None, None, None]
    assert pres.first_homology() == (4, ())
