"""Knot group presentations and Alexander polynomials.

The reference values below are the standard table entries for the small
knots, written with centered exponents and value 1 at t = 1.  The sympy
comparison recomputes the same minor determinant symbolically, so the
fast elimination path is checked against an unrelated implementation.
"""

import pytest

from surgeon import family
from surgeon.diagram import LinkDiagram, parse_pd
from surgeon.invariants import (GroupPresentation, alexander_matrix,
                                alexander_polynomial, determinant, wirtinger)
from surgeon.poly import LaurentPoly

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIG8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
K5_1 = "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]"
K5_2 = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]"
K6_1 = ("X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] "
        "X[5,12,6,1] X[11,6,12,7]")

TABLE = [
    (TREFOIL, {1: 1, 0: -1, -1: 1}, 3),
    (FIG8, {1: -1, 0: 3, -1: -1}, 5),
    (K5_1, {2: 1, 1: -1, 0: 1, -1: -1, -2: 1}, 5),
    (K5_2, {1: 2, 0: -3, -1: 2}, 7),
    (K6_1, {1: -2, 0: 5, -1: -2}, 9),
]


def test_wirtinger_unknot():
    pres = wirtinger(LinkDiagram([], loops=1))
    assert pres.generators == [1]
    assert pres.relators == []


def test_wirtinger_trefoil_structure():
    pres = wirtinger(parse_pd(TREFOIL))
    assert len(pres.generators) == 3
    assert len(pres.relators) == 3
    for word in pres.relators:
        assert sum(e for _, e in word) == 0
        for g, e in word:
            assert g in pres.generators
            assert e in (1, -1)


def test_wirtinger_rejects_links():
    from surgeon.diagram import DiagramError
    with pytest.raises(DiagramError):
        wirtinger(parse_pd("X+[1,4,2,3] X+[4,1,3,2]"))


def test_group_presentation_validates():
    with pytest.raises(ValueError):
        GroupPresentation([1, 1], [])
    with pytest.raises(ValueError):
        GroupPresentation([1], [[(2, 1)]])


def test_alexander_matrix_shape():
    pres = wirtinger(parse_pd(TREFOIL))
    rows = alexander_matrix(pres)
    assert len(rows) == 3
    assert all(len(r) == 3 for r in rows)
    one = LaurentPoly.one()
    for row in rows:
        total = LaurentPoly.zero()
        for entry in row:
            total = total + entry
        assert total(1) == 0
    assert one(1) == 1


@pytest.mark.parametrize("text,coeffs,det", TABLE)
def test_alexander_table(text, coeffs, det):
    d = parse_pd(text)
    p = alexander_polynomial(d)
    assert p == LaurentPoly(coeffs)
    assert determinant(d) == det
    assert p(1) == 1
    assert p.is_palindromic()


def test_alexander_unknot():
    assert alexander_polynomial(LinkDiagram([], loops=1)) == LaurentPoly.one()
    assert determinant(LinkDiagram([], loops=1)) == 1


def test_alexander_against_sympy():
    sympy = pytest.importorskip("sympy")
    t = sympy.symbols("t")

    def monomial_free(expr):
        # coefficient list with powers of t and a global sign stripped
        poly = sympy.Poly(sympy.expand(expr * t ** 12), t)
        coeffs = poly.all_coeffs()
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if coeffs and coeffs[0] < 0:
            coeffs = [-c for c in coeffs]
        return coeffs

    for text, coeffs, _ in TABLE[:3]:
        pres = wirtinger(parse_pd(text))
        rows = alexander_matrix(pres)
        n = len(rows)
        mat = sympy.Matrix(
            n - 1, n - 1,
            lambda i, j: sum(c * t ** e
                             for e, c in rows[i + 1][j + 1].coeffs().items()))
        raw = sympy.expand(mat.det())
        mine = sum(c * t ** e for e, c in LaurentPoly(coeffs).coeffs().items())
        assert monomial_free(raw) == monomial_free(mine)


def test_family_member_polynomial_properties():
    d = family.knot_diagram(2, 1)
    p = alexander_polynomial(d)
    assert p(1) == 1
    assert p.is_palindromic()
    assert determinant(d) % 2 == 1


def test_polynomial_str_and_json():
    p = LaurentPoly({1: 1, 0: -1, -1: 1})
    assert str(p) == "t - 1 + t^-1"
    assert LaurentPoly.from_json(p.to_json()) == p
    assert p.unit_equivalent(p.shift(3))
    assert p.unit_equivalent(LaurentPoly({1: -1, 0: 1, -1: -1}).shift(-2))
