"""Surgery layer: slopes, moves, homology, Smith normal form."""

import random

import pytest

from surgeon import snf
from surgeon.surgery import (MoveError, Slope, SurgeryError,
                             SurgeryPresentation, apply_move_script,
                             cable_surgery_reduction, format_homology,
                             format_slope, parse_slope)


def test_slope_normalization():
    assert Slope(6, 2) == Slope(3, 1)
    assert Slope(-4, -6) == Slope(2, 3)
    assert Slope(-3, 0) == Slope(1, 0)
    assert Slope(7, 0) == Slope(1, 0)
    assert Slope(0, 5) == Slope(0, 1)
    assert hash(Slope(3, 1)) == hash(Slope(6, 2))
    with pytest.raises(SurgeryError):
        Slope(0, 0)


def test_slope_parsing_and_formatting():
    assert parse_slope("-1/3") == Slope(-1, 3)
    assert parse_slope("7/0") == Slope(1, 0)
    assert format_slope(Slope(-3, 4)) == "-3/4"
    with pytest.raises(SurgeryError):
        parse_slope("three halves")


def test_slope_meridian():
    assert Slope(1, 0).is_meridian()
    assert not Slope(0, 1).is_meridian()


def test_format_homology():
    assert format_homology(0, ()) == "trivial"
    assert format_homology(1, ()) == "Z"
    assert format_homology(2, (2, 6)) == "Z^2 + Z/2 + Z/6"
    assert format_homology(0, (7,)) == "Z/7"


def test_first_homology_lens_and_friends():
    lens = SurgeryPresentation(["u"], [Slope(7, 2)], [[0]])
    assert lens.first_homology() == (0, (7,))
    zero = SurgeryPresentation(["u"], [Slope(0, 1)], [[0]])
    assert zero.first_homology() == (1, ())
    hopf = SurgeryPresentation(["a", "b"], [Slope(0, 1), Slope(0, 1)],
                               [[0, 1], [1, 0]])
    assert hopf.first_homology() == (0, ())
    unfilled = SurgeryPresentation(["a", "b"], [None, Slope(3, 1)],
                                   [[0, 0], [0, 0]])
    assert unfilled.first_homology() == (1, (3,))


def test_rolfsen_twist_table_arithmetic():
    p = SurgeryPresentation(["a", "b"], [Slope(3, 1), Slope(5, 2)],
                            [[0, 2], [2, 0]],
                            annotations={"unknotted": ["a", "b"]})
    q = p.rolfsen_twist("a", 1)
    assert q.slope("a") == Slope(3, 4)
    assert q.slope("b") == Slope(13, 2)
    assert q.linking == p.linking
    assert q.first_homology() == p.first_homology()


def test_rolfsen_twist_needs_unknot_annotation():
    p = SurgeryPresentation(["a"], [Slope(3, 1)], [[0]])
    with pytest.raises(MoveError):
        p.rolfsen_twist("a", 1)


def test_rolfsen_twist_needs_filling():
    p = SurgeryPresentation(["a"], [None], [[0]],
                            annotations={"unknotted": ["a"]})
    with pytest.raises(MoveError):
        p.rolfsen_twist("a", 1)


def test_annulus_twist_arithmetic():
    p = SurgeryPresentation(["a", "b"], [Slope(1, 1), Slope(3, 1)],
                            [[0, 2], [2, 0]])
    q = p.annulus_twist("a", "b", 1)
    assert q.slope("a") == Slope(1, 0)
    assert q.slope("b") == Slope(1, 0)
    assert q.first_homology() == p.first_homology()


def test_annulus_twist_sweep_condition():
    table = [[0, 0, 1], [0, 0, 2], [1, 2, 0]]
    p = SurgeryPresentation(["a", "b", "c"],
                            [Slope(1, 1), Slope(1, 1), Slope(5, 1)], table)
    with pytest.raises(MoveError):
        p.annulus_twist("a", "b", 1)


def test_delete_meridional():
    p = SurgeryPresentation(["a", "b"], [Slope(1, 0), Slope(5, 1)],
                            [[0, 3], [3, 0]])
    q = p.delete_meridional("a")
    assert q.comps == ["b"]
    assert q.linking == [[0]]
    assert q.first_homology() == p.first_homology()
    with pytest.raises(MoveError):
        p.delete_meridional("b")


def test_apply_move_script_trace():
    p = SurgeryPresentation(["a", "b"], [Slope(1, 0), Slope(5, 1)],
                            [[0, 3], [3, 0]],
                            annotations={"unknotted": ["a", "b"]})
    trace = apply_move_script(p, [("rolfsen", "b", 1), ("delete", "a")])
    assert trace.initial == p
    assert trace.final.comps == ["b"]
    assert trace.descriptions()[0] == "initial"
    assert len(trace.descriptions()) == 3
    homs = trace.homologies()
    assert homs[0] == homs[-1]


def test_apply_move_script_reports_failing_step():
    p = SurgeryPresentation(["a"], [None], [[0]])
    with pytest.raises(MoveError) as err:
        apply_move_script(p, [("delete", "a")])
    assert "step 0" in str(err.value)


def test_apply_move_script_rejects_unknown_kind():
    p = SurgeryPresentation(["a"], [Slope(1, 0)], [[0]])
    with pytest.raises(MoveError):
        apply_move_script(p, [("blowup", "a")])


def test_presentation_json_roundtrip():
    p = SurgeryPresentation(["a", "b"], [Slope(1, 0), None],
                            [[0, 3], [3, 0]],
                            annotations={"unknotted": ["a"]}, label="demo")
    q = SurgeryPresentation.from_json(p.to_json())
    assert q == p
    assert q.label == "demo"
    assert q.annotations == {"unknotted": ["a"]}


def test_cable_surgery_reduction_example():
    assert cable_surgery_reduction(Slope(-3, 1), 2, -1) == Slope(-3, 4)


def test_cable_surgery_reduction_precondition():
    with pytest.raises(SurgeryError):
        cable_surgery_reduction(Slope(0, 1), 2, -1)


def test_smith_small_cases():
    d, u, v = snf.smith_normal_form([[2, 4], [6, 8]])
    assert [d[0][0], d[1][1]] == [2, 4]
    assert snf.matmul(snf.matmul(u, [[2, 4], [6, 8]]), v) == d
    assert snf.divisors([[0, 0], [0, 0]]) == [0, 0]
    assert snf.divisors([[1]]) == [1]
    assert snf.divisors([]) == []
    assert snf.divisors([[6, 0], [0, 10]]) == [2, 30]


def test_smith_nonsquare():
    a = [[2, 3, 5]]
    d, u, v = snf.smith_normal_form(a)
    assert snf.matmul(snf.matmul(u, a), v) == d
    assert d[0][0] == 1
    assert abs(snf.det(v)) == 1


def test_smith_large_entries_terminate_quickly():
    # repeated twists produce presentations whose relation matrices
    # carry entries this large; the reduction has to stay polynomial
    rng = random.Random(7)
    a = [[rng.randint(-10 ** 30, 10 ** 30) for _ in range(5)]
         for _ in range(5)]
    d, u, v = snf.smith_normal_form(a)
    assert snf.matmul(snf.matmul(u, a), v) == d
    assert abs(snf.det(u)) == 1
    assert abs(snf.det(v)) == 1
    diag = [d[i][i] for i in range(5)]
    nz = [x for x in diag if x]
    for x, y in zip(nz, nz[1:]):
        assert y % x == 0


def test_det():
    assert snf.det([[2, 0], [0, 3]]) == 6
    assert snf.det([[1, 2], [3, 4]]) == -2
    assert snf.det([]) == 1
    assert snf.det([[0, 1], [0, 0]]) == 0
