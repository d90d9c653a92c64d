"""Self-checks behind the verify subcommand and the release test suite.

Each criterion function returns (ok, detail).  The functions use only
the public package API plus an independent determinant oracle written
here, so a failure points at the library rather than at the checker.
No test framework is imported; the command line tool calls run_all()
directly.
"""

import itertools
import math
import random
import time

from . import family, snf
from .diagram import LinkDiagram, make_crossing, parse_pd, serialize_pd
from .invariants import alexander_polynomial, determinant
from .poly import LaurentPoly
from .surgery import (Slope, SurgeryPresentation, apply_move_script,
                      cable_surgery_reduction, format_homology)


def criterion_1():
    """Zero surgery on k(m, n) is a homology sphere when n is -1 or 1."""
    for n in (-1, 1):
        for m in range(0, 11):
            h = family.surgered_presentation(m, n, with_diagram=False).first_homology()
            if h != (0, ()):
                return False, "S(%d,%d) has H1 = %s" % (m, n, format_homology(*h))
    return True, "H1 trivial for n in {-1, 1}, m = 0..10"


def criterion_2():
    """H1 of the zero surgery depends only on n, never on m."""
    for n in range(-3, 4):
        if n == 0:
            want = (1, ())
        elif abs(n) == 1:
            want = (0, ())
        else:
            want = (0, (abs(n),))
        for m in range(0, 11):
            h = family.surgered_presentation(m, n, with_diagram=False).first_homology()
            if h != want:
                return False, ("S(%d,%d) has H1 = %s, expected %s"
                               % (m, n, format_homology(*h), format_homology(*want)))
    return True, "H1 matches Z/|n| (Z for n = 0) for n = -3..3, m = 0..10"


def criterion_3():
    """The ambient filling induces the slope n/1 on every k(m, n)."""
    for m in range(-5, 6):
        for n in range(-5, 6):
            s = family.induced_surgery_slope(m, n)
            if s != Slope(n, 1):
                return False, "induced slope for (m, n) = (%d, %d) is %s" % (m, n, s)
    return True, "induced slope is n/1 for all m, n in -5..5"


def criterion_4():
    """Twisting along l3 moves lk(l1, l2) by n in table and diagram alike."""
    for n in range(-5, 6):
        pres = family.knot_presentation(0, n)
        out = pres.rolfsen_twist("l3", n)
        if out.lk("l1", "l2") != n:
            return False, ("table lk(l1, l2) = %d after %d twists, expected %d"
                           % (out.lk("l1", "l2"), n, n))
        counted = out.diagram.linking_number("l1", "l2")
        if counted != n:
            return False, ("diagram recount gives lk(l1, l2) = %d after %d "
                           "twists, expected %d" % (counted, n, n))
    return True, "lk(l1, l2) = n after n twists along l3, table and diagram agree"


def criterion_5():
    """Cable slopes -(2m+1)/m on the (2, -1) cable reduce to -(2m+1)/4m."""
    for m in range(1, 21):
        s = Slope(-1 - 2 * m, m)
        r = cable_surgery_reduction(s, 2, -1)
        want = Slope(-1 - 2 * m, 4 * m)
        if r != want:
            return False, "%s reduced to %s, expected %s" % (s, r, want)
    return True, "-(2m+1)/m reduces to -(2m+1)/4m on the (2, -1) cable for m = 1..20"


def _random_presentation(rng):
    nc = rng.randint(1, 5)
    names = ["c%d" % (i + 1) for i in range(nc)]
    table = [[0] * nc for _ in range(nc)]
    for i in range(nc):
        for j in range(i + 1, nc):
            v = rng.randint(-3, 3)
            table[i][j] = table[j][i] = v
    slopes = []
    for _ in range(nc):
        r = rng.random()
        if r < 0.2:
            slopes.append(None)
        elif r < 0.45:
            slopes.append(Slope(1, 0))
        else:
            p = rng.randint(-9, 9)
            q = rng.randint(0, 9)
            if p == 0 and q == 0:
                q = 1
            slopes.append(Slope(p, q))
    return SurgeryPresentation(names, slopes, table,
                               annotations={"unknotted": list(names)})


def criterion_6():
    """Random twist and delete sequences never change first homology."""
    rng = random.Random(1006)
    t0 = time.perf_counter()
    trials = 1000
    total = 0
    for trial in range(trials):
        pres = _random_presentation(rng)
        before = pres.first_homology()
        moves = []
        cur = pres
        for _ in range(5):
            filled = [c for c, s in zip(cur.comps, cur.slopes) if s is not None]
            if not filled:
                break
            merid = [c for c, s in zip(cur.comps, cur.slopes)
                     if s is not None and s.is_meridian()]
            if merid and rng.random() < 0.4:
                mv = ("delete", rng.choice(merid))
                cur = cur.delete_meridional(mv[1])
            else:
                mv = ("rolfsen", rng.choice(filled), rng.choice((-2, -1, 1, 2)))
                cur = cur.rolfsen_twist(mv[1], mv[2])
            moves.append(mv)
        trace = apply_move_script(pres, moves)
        if any(h != before for h in trace.homologies()):
            return False, ("trial %d: H1 drifted from %s along %r"
                           % (trial, format_homology(*before), moves))
        total += len(moves)
    dt = time.perf_counter() - t0
    if dt >= 10.0:
        return False, "sweep took %.1f s, budget is 10 s" % dt
    return True, ("%d moves over %d random presentations kept H1 fixed in %.1f s"
                  % (total, trials, dt))


def _det_int(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    tot = 0
    for j in range(n):
        if mat[0][j]:
            sub = [[row[jj] for jj in range(n) if jj != j] for row in mat[1:]]
            tot += (-1) ** j * mat[0][j] * _det_int(sub)
    return tot


def _divisor_oracle(a):
    """Invariant factors via gcds of k by k minors.

    Shares no code with the elimination in snf: the k-th determinantal
    divisor is the gcd of every k by k minor, and the invariant factors
    are successive quotients while the divisors stay nonzero.
    """
    r = len(a)
    c = len(a[0]) if a else 0
    out = []
    prev = 1
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in itertools.combinations(range(r), k):
            for cols in itertools.combinations(range(c), k):
                g = math.gcd(g, _det_int([[a[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def criterion_7():
    """Smith forms agree with a minor-gcd oracle and carry unimodular certificates."""
    rng = random.Random(1007)
    for trial in range(500):
        r = rng.randint(1, 4)
        c = rng.randint(1, 4)
        a = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        d, u, v = snf.smith_normal_form(a)
        if snf.matmul(snf.matmul(u, a), v) != d:
            return False, "trial %d: u*a*v differs from d for %r" % (trial, a)
        if abs(snf.det(u)) != 1 or abs(snf.det(v)) != 1:
            return False, "trial %d: transform matrices are not unimodular" % trial
        diag = [d[i][i] for i in range(min(r, c))]
        for i in range(r):
            for j in range(c):
                if i != j and d[i][j]:
                    return False, "trial %d: d is not diagonal" % trial
        nz = [x for x in diag if x]
        if any(x < 0 for x in diag) or nz != diag[:len(nz)]:
            return False, "trial %d: diagonal not nonnegative with zeros last" % trial
        for x, y in zip(nz, nz[1:]):
            if y % x:
                return False, "trial %d: %d does not divide %d" % (trial, x, y)
        if nz != _divisor_oracle(a):
            return False, ("trial %d: invariant factors %r but minor gcds give %r"
                           % (trial, nz, _divisor_oracle(a)))
    return True, "500 random Smith forms match the minor-gcd oracle"


def criterion_8():
    """Alexander polynomials are correct on references and sane on the family."""
    unknot = LinkDiagram([], loops=1)
    if alexander_polynomial(unknot) != LaurentPoly.one():
        return False, "unknot polynomial is not 1"
    tre = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
    if alexander_polynomial(tre) != LaurentPoly({1: 1, 0: -1, -1: 1}):
        return False, "trefoil polynomial is not t - 1 + t^-1"
    fig8 = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]")
    if alexander_polynomial(fig8) != LaurentPoly({1: -1, 0: 3, -1: -1}):
        return False, "figure eight polynomial is not -t + 3 - t^-1"
    for m in range(0, 3):
        for n in range(0, 3):
            p = alexander_polynomial(family.knot_diagram(m, n))
            if abs(p(1)) != 1:
                return False, "k(%d,%d): polynomial gives %d at t = 1" % (m, n, p(1))
            if not p.is_palindromic():
                return False, "k(%d,%d): polynomial %s is not palindromic" % (m, n, p)
            det = determinant(family.knot_diagram(m, n))
            if det % 2 == 0:
                return False, "k(%d,%d): determinant %d is even" % (m, n, det)
    return True, ("reference knots exact; family values are palindromic "
                  "units at 1 with odd determinant")


def criterion_9():
    """Blowing everything down certifies each unfilled k(m, n) sits in a sphere."""
    for m in range(0, 4):
        for n in range(0, 4):
            trace = family.s3_evidence(m, n)
            final = trace.final
            if final.comps != ["k"] or final.slopes != [None]:
                return False, "(m, n) = (%d, %d): blow down left %r" % (m, n, final.comps)
            if final.ambient_homology() != (0, ()):
                return False, ("(m, n) = (%d, %d): ambient H1 = %s"
                               % (m, n, format_homology(*final.ambient_homology())))
    return True, "every k(m, n) with m, n = 0..3 lives in a homology sphere"


def criterion_10():
    """The bundled four-component link carries the exact geometry the moves need."""
    d, regions, notes = family.load_base()
    t = d.linking_table()
    names = d.comp_names
    ik, i1, i2, i3 = (names.index(x) for x in ("k", "l1", "l2", "l3"))
    if t[i1][i2] != 0:
        return False, "lk(l1, l2) = %d, expected 0" % t[i1][i2]
    if abs(t[i1][i3]) != 1 or abs(t[i2][i3]) != 1 or t[i1][i3] * t[i2][i3] != 1:
        return False, ("lk(l1, l3) = %d and lk(l2, l3) = %d must be equal "
                       "and unimodular" % (t[i1][i3], t[i2][i3]))
    if abs(t[ik][i3]) != 1:
        return False, "lk(k, l3) = %d, expected a unit" % t[ik][i3]
    ann = regions["A"]
    verts = (ann.geometry or {}).get("verticals") or []
    if len(verts) != 4:
        return False, "annulus records %d passages of k, expected 4" % len(verts)
    down = sum(1 for v in verts if v.get("down"))
    if down != 2:
        return False, ("k passes the annulus %d down and %d up, expected 2 "
                       "and 2" % (down, len(verts) - down))
    for v in verts:
        if d.comp_of(v["edge"]) != ik:
            return False, "annulus passage edge %d is not on k" % v["edge"]
    eps = (notes.get("p_orientation") or {}).get("eps")
    if not eps or len(eps) != 2 or any(e not in (-1, 1) for e in eps):
        return False, "sheet orientation data missing from annotations"
    return True, ("asset linking sheet correct; k meets the annulus four times "
                  "with zero algebraic intersection")


def _random_braid_closure(rng):
    strands = rng.randint(2, 5)
    length = rng.randint(1, 12)
    cur = list(range(1, strands + 1))
    nxt = strands + 1
    crossings = []
    for _ in range(length):
        p = rng.randrange(strands - 1)
        sign = rng.choice((-1, 1))
        u_out, o_out = nxt, nxt + 1
        nxt += 2
        crossings.append(make_crossing(cur[p], u_out, cur[p + 1], o_out, sign))
        cur[p], cur[p + 1] = o_out, u_out
    loops = 0
    rename = {}
    for i in range(strands):
        if cur[i] == i + 1:
            loops += 1
        else:
            rename[cur[i]] = i + 1
    stitched = [tuple(rename.get(v, v) for v in x[:4]) + (x[4],)
                for x in crossings]
    return LinkDiagram(stitched, loops=loops)


def criterion_11():
    """Serialized diagrams round trip and cached command output is bytewise stable."""
    rng = random.Random(1011)
    for trial in range(100):
        d = _random_braid_closure(rng)
        text = serialize_pd(d)
        again = serialize_pd(parse_pd(text))
        if again != text:
            return False, "round trip changed diagram %d" % trial
    import contextlib
    import io
    import tempfile

    from . import cli

    def run(argv):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli.run(argv)
        if code != 0:
            raise RuntimeError("alex exited with %d" % code)
        return buf.getvalue()

    with tempfile.TemporaryDirectory() as tmp:
        argv = ["alex", "--m", "1", "--n", "1", "--json", "--cache", tmp]
        first = run(argv)
        second = run(argv)
    if first.encode() != second.encode():
        return False, "cached rerun of alex produced different bytes"
    return True, "100 diagram round trips exact; cached rerun bytewise identical"


CRITERIA = [
    (1, "homology spheres for n = -1, 1", criterion_1),
    (2, "surgery homology independent of m", criterion_2),
    (3, "induced slope n/1", criterion_3),
    (4, "linking change under disk twists", criterion_4),
    (5, "cable slope reduction", criterion_5),
    (6, "move invariance of homology", criterion_6),
    (7, "Smith form against minor-gcd oracle", criterion_7),
    (8, "Alexander polynomial suite", criterion_8),
    (9, "ambient sphere evidence", criterion_9),
    (10, "bundled link geometry", criterion_10),
    (11, "round trips and cache identity", criterion_11),
]


def run_all():
    """[(number, label, ok, detail)] for every criterion, never raising."""
    results = []
    for num, label, func in CRITERIA:
        try:
            ok, detail = func()
        except Exception as exc:
            ok, detail = False, "%s: %s" % (type(exc).__name__, exc)
        results.append((num, label, ok, detail))
    return results
