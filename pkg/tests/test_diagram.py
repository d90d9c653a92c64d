"""Diagram layer: PD parsing, counts, canonical form, DT codes."""

import pytest

from surgeon.diagram import (DiagramError, LinkDiagram, check_dt_text,
                             dt_code, dt_export, make_crossing, parse_pd,
                             remove_component, serialize_pd)

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIG8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
HOPF = "X+[1,4,2,3] X+[4,1,3,2]"


def face_count(d):
    """Faces of the 4-valent projection; crossings + 2 iff planar."""
    ends = {}
    for ci, x in enumerate(d.crossings):
        for p in range(4):
            ends.setdefault(x[p], []).append((ci, p))
    alpha = {}
    for e, spots in ends.items():
        assert len(spots) == 2
        a, b = spots
        alpha[a] = b
        alpha[b] = a
    darts = set(alpha)
    faces = 0
    while darts:
        start = darts.pop()
        cur = start
        while True:
            ci, p = alpha[cur]
            cur = (ci, (p + 1) % 4)
            if cur == start:
                break
            darts.discard(cur)
        faces += 1
    return faces


def test_parse_counts():
    d = parse_pd(TREFOIL)
    assert len(d.crossings) == 3
    assert d.component_count() == 1
    assert d.loops == 0


def test_parse_headers_and_loops():
    d = parse_pd("# name: sample\n# components: a b c\nX+[1,4,2,3] X+[4,1,3,2]\nO\n")
    assert d.name == "sample"
    assert d.loops == 1
    assert d.component_count() == 3
    assert d.comp_names == ["a", "b", "c"]


def test_named_components_roundtrip():
    d = parse_pd("# components: a b\n" + HOPF)
    assert d.comp_names == ["a", "b"]
    assert d.linking_number("a", "b") == 1


def test_writhe_and_linking():
    tre = parse_pd(TREFOIL)
    assert tre.total_writhe() == -3
    assert tre.writhe(0) == -3
    hopf = parse_pd(HOPF)
    assert hopf.linking_number(0, 1) == 1
    assert hopf.linking_table() == [[0, 1], [1, 0]]
    with pytest.raises(DiagramError):
        hopf.linking_number(0, 0)


def test_serialize_parse_fixed_point():
    for text in (TREFOIL, FIG8, HOPF):
        d = parse_pd(text)
        out = serialize_pd(d)
        assert serialize_pd(parse_pd(out)) == out
        assert parse_pd(out) == d.canonical()


def test_make_crossing_roles():
    x = make_crossing(1, 2, 3, 4, 1)
    assert x == (1, 4, 2, 3, 1)
    x = make_crossing(1, 2, 3, 4, -1)
    assert x == (1, 3, 2, 4, -1)


def test_validation_rejects_bad_edges():
    with pytest.raises(DiagramError):
        parse_pd("X[1,2,3,4]")
    with pytest.raises(DiagramError):
        parse_pd("X+[1,4,2,3] X+[1,4,2,3]")
    with pytest.raises(DiagramError):
        LinkDiagram([(1, 2, 3, 4, 5)])
    with pytest.raises(DiagramError):
        parse_pd("Y[1,2,3,4]")


def test_unsigned_hopf_is_ambiguous():
    # two-edge components admit both orientations of the over strand,
    # so the parser cannot infer crossing signs here
    with pytest.raises(DiagramError):
        parse_pd("X[1,4,2,3] X[4,1,3,2]")


def test_component_name_count_must_match():
    with pytest.raises(DiagramError):
        parse_pd("# components: a b c\n" + HOPF)


def test_planarity_of_references():
    for text in (TREFOIL, FIG8, HOPF):
        d = parse_pd(text)
        assert face_count(d) == len(d.crossings) + 2


def test_canonical_is_idempotent():
    d = parse_pd(FIG8)
    c = d.canonical()
    assert c.canonical() == c
    assert sorted(e for cyc in c.components for e in cyc) == list(range(1, 9))


def test_dt_code_trefoil():
    d = parse_pd(TREFOIL)
    assert dt_code(d) == [4, 6, 2]
    assert dt_export(d) == "4 6 2"
    check_dt_text(dt_export(d))


def test_dt_rejects_links():
    with pytest.raises(DiagramError):
        dt_code(parse_pd(HOPF))


def test_check_dt_text_rejects_garbage():
    with pytest.raises(DiagramError):
        check_dt_text("4 6 5")
    with pytest.raises(DiagramError):
        check_dt_text("4 4 2")


def test_remove_component_keeps_sublink():
    d = parse_pd("# components: a b\n" + HOPF)
    r = remove_component(d, "b")
    assert r.component_count() == 1
    assert len(r.crossings) == 0
    assert r.loops == 1
    assert r.comp_names == ["a"]


def test_remove_component_unknown_name():
    d = parse_pd("# components: a b\n" + HOPF)
    with pytest.raises(DiagramError):
        remove_component(d, "z")


def test_diagram_json_roundtrip():
    d = parse_pd("# name: sample\n# components: a b\n" + HOPF)
    back = LinkDiagram.from_json(d.to_json())
    assert back == d
    assert back.comp_names == ["a", "b"]
    assert back.name == "sample"
