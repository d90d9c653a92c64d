"""Knot-group presentations and Alexander polynomials.

The chain here is the classical one.  A knot diagram yields a Wirtinger
presentation of the knot group (one generator per over-arc, one
conjugation relator per crossing).  Fox derivatives of the relators,
abelianized by sending every generator to t, give the Alexander matrix
over integer Laurent polynomials.  Deleting one generator column and
one relator row leaves a square matrix whose determinant is the
Alexander polynomial up to a unit; a fixed normalization then makes the
result comparable across diagrams.
"""

from surgeon.diagram import DiagramError, over_in, over_out
from surgeon.poly import LaurentPoly, det as poly_det


class GroupPresentation:
    """A finitely presented group: generator labels plus relator words.

    Relators are tuples of (generator, exponent) letters with exponent
    +1 or -1.  Wirtinger relators always have four letters.
    """

    __slots__ = ("generators", "relators")

    def __init__(self, generators, relators):
        self.generators = list(generators)
        self.relators = [tuple(word) for word in relators]
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise ValueError("generator labels must be distinct")
        for word in self.relators:
            for g, e in word:
                if g not in gens:
                    raise ValueError("relator uses unknown generator %r" % (g,))
                if e not in (1, -1):
                    raise ValueError("letter exponents must be +1 or -1")

    def __repr__(self):
        return "GroupPresentation(%d generators, %d relators)" % (
            len(self.generators), len(self.relators))


def _require_knot(d):
    if d.crossings:
        if d.loops or d.component_count() != 1:
            raise DiagramError("invariant needs a 1-component knot diagram")
    elif d.loops != 1:
        raise DiagramError("invariant needs a 1-component knot diagram")


def wirtinger(d):
    """Wirtinger presentation of the knot group of a knot diagram.

    Arcs (maximal over-strands) are found by joining the incoming and
    outgoing over-edge at every crossing; each arc is labeled by its
    smallest edge.  Every crossing contributes the conjugation relator
    relating the two under-arcs through the over-arc.
    """
    _require_knot(d)
    if not d.crossings:
        return GroupPresentation([1], [])

    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for e in d.edges():
        parent[e] = e
    for x in d.crossings:
        union(over_in(x), over_out(x))

    arc_of = {}
    for e in d.edges():
        r = find(e)
        if r not in arc_of or e < arc_of[r]:
            arc_of[r] = e
    label = {e: arc_of[find(e)] for e in d.edges()}

    generators = sorted(set(label.values()))
    relators = []
    for x in d.crossings:
        u = label[x[0]]
        v = label[x[2]]
        o = label[over_in(x)]
        if x[4] > 0:
            word = ((o, 1), (u, 1), (o, -1), (v, -1))
        else:
            word = ((o, -1), (u, 1), (o, 1), (v, -1))
        relators.append(word)
    return GroupPresentation(generators, relators)


def fox_row(word, generators):
    """Abelianized Fox derivatives of one relator word.

    Every generator is sent to t (the knot-group abelianization), so
    the derivative with respect to each generator is an integer Laurent
    polynomial.  Returns the list of derivatives in generator order.
    """
    index = {g: i for i, g in enumerate(generators)}
    row = [LaurentPoly.zero() for _ in generators]
    prefix = 0
    for g, e in word:
        if e > 0:
            row[index[g]] = row[index[g]] + LaurentPoly.monomial(1, prefix)
            prefix += 1
        else:
            prefix -= 1
            row[index[g]] = row[index[g]] - LaurentPoly.monomial(1, prefix)
    total = sum((p(1) for p in row), 0)
    if total != 0:
        raise ValueError("Fox row of %r does not abelianize to zero" % (word,))
    return row


def alexander_matrix(pres):
    """Rows of abelianized Fox derivatives, one per relator."""
    return [fox_row(word, pres.generators) for word in pres.relators]


def _unit_pivot_eliminate(rows):
    """Shrink a sparse Laurent matrix by eliminating on unit entries.

    rows is a list of {column: LaurentPoly} dicts.  Any +-t^k entry can
    serve as a pivot; dividing by it is exact and the unit determinant
    factor is irrelevant here because the caller only wants the answer
    up to units.  Pivots are chosen to create as little fill-in as
    possible.  Returns the remaining dense square block.
    """
    live_rows = {i for i, r in enumerate(rows) if r}
    col_use = {}
    for i in live_rows:
        for j in rows[i]:
            col_use.setdefault(j, set()).add(i)

    def drop(i, j):
        col_use[j].discard(i)
        if not col_use[j]:
            del col_use[j]

    while True:
        best = None
        for i in live_rows:
            rlen = len(rows[i])
            for j, val in rows[i].items():
                if not val.is_unit():
                    continue
                cost = (rlen - 1) * (len(col_use[j]) - 1)
                if best is None or cost < best[0]:
                    best = (cost, i, j)
                    if cost == 0:
                        break
            if best and best[0] == 0:
                break
        if best is None:
            break
        _, pi, pj = best
        pivot_row = rows[pi]
        pivot = pivot_row[pj]
        live_rows.discard(pi)
        for j in pivot_row:
            drop(pi, j)
        for i in list(col_use.get(pj, ())):
            row = rows[i]
            factor = row[pj].divexact(pivot)
            for j, val in pivot_row.items():
                if j == pj:
                    continue
                upd = row.get(j, LaurentPoly.zero()) - factor * val
                if upd.is_zero():
                    if j in row:
                        del row[j]
                        drop(i, j)
                else:
                    if j not in row:
                        col_use.setdefault(j, set()).add(i)
                    row[j] = upd
            del row[pj]
            drop(i, pj)

    cols = sorted(col_use)
    order = sorted(live_rows)
    if len(order) != len(cols):
        raise ValueError("matrix is singular after elimination")
    dense = [[rows[i].get(j, LaurentPoly.zero()) for j in cols] for i in order]
    return dense


def _minor_det(matrix, skip_row, skip_col):
    rows = []
    for i, row in enumerate(matrix):
        if i == skip_row:
            continue
        entries = {}
        for j, val in enumerate(row):
            if j != skip_col and not val.is_zero():
                entries[j] = val
        rows.append(entries)
    dense = _unit_pivot_eliminate(rows)
    if not dense:
        return LaurentPoly.one()
    return poly_det(dense)


def normalize_alexander(p):
    """Center the exponents and pin the sign so equal knots compare equal.

    The Alexander polynomial is defined up to +-t^k.  The normal form
    here shifts the exponent range to be symmetric about zero and picks
    the sign with value +1 at t = 1 (knot polynomials always evaluate
    to +-1 there); a zero value at 1 falls back to a positive top
    coefficient.
    """
    if p.is_zero():
        return p
    shift = -(p.min_exp + p.max_exp) // 2
    q = p.shift(shift)
    at_one = q(1)
    if at_one < 0 or (at_one == 0 and q.coefficient(q.max_exp) < 0):
        q = -q
    return q


def alexander_polynomial(d):
    """Normalized Alexander polynomial of a knot diagram.

    Fox calculus on the Wirtinger presentation; one generator column is
    deleted, one relator row is dropped (Wirtinger presentations carry
    one redundant relation), and the determinant of the rest is the
    polynomial up to a unit.  On small presentations a second minor is
    computed as a consistency check.
    """
    _require_knot(d)
    if not d.crossings:
        return LaurentPoly.one()
    pres = wirtinger(d)
    matrix = alexander_matrix(pres)
    n = len(matrix)
    delta = _minor_det(matrix, 0, 0)
    if n <= 60:
        other = _minor_det(matrix, n - 1, len(pres.generators) - 1)
        if not delta.unit_equivalent(other):
            raise ValueError("Alexander minors disagree: %s vs %s"
                             % (delta, other))
    return normalize_alexander(delta)


def determinant(d):
    """The knot determinant |Delta(-1)|."""
    value = alexander_polynomial(d)(-1)
    return abs(int(value))
