"""Surgery presentations: framed links with exact rational slopes.

A presentation is a link with a slope attached to some of its
components.  Slopes are reduced fractions p/q with q >= 0; the
meridional slope is 1/0; an unfilled component carries no slope and is
written "*".  The linking data lives in a symmetric integer table with
zero diagonal, optionally backed by an honest diagram whose pairwise
linking numbers must agree with the table at all times.
"""

from math import gcd

from .diagram import (
    LinkDiagram,
    TwistRegion,
    insert_annulus_twists_ex,
    insert_full_twists_ex,
    remove_component_ex,
)
from .snf import smith_normal_form


class SurgeryError(ValueError):
    """Raised for malformed slopes, tables, or presentations."""


class MoveError(SurgeryError):
    """Raised when a move's preconditions fail."""


class Slope:
    """A reduced surgery coefficient p/q.

    >>> Slope(4, -6)
    Slope(-2, 3)
    >>> Slope(-1, 0)
    Slope(1, 0)
    """

    __slots__ = ("p", "q")

    def __init__(self, p, q=1):
        p = int(p)
        q = int(q)
        if p == 0 and q == 0:
            raise SurgeryError("slope 0/0 is not defined")
        if q == 0:
            p = 1
        else:
            g = gcd(p, q)
            p //= g
            q //= g
            if q < 0:
                p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("Slope is immutable")

    def is_meridian(self):
        return self.q == 0

    def is_integral(self):
        return self.q == 1

    def __eq__(self, other):
        if not isinstance(other, Slope):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return "Slope(%d, %d)" % (self.p, self.q)

    def __str__(self):
        return "%d/%d" % (self.p, self.q)

    def to_json(self):
        return [self.p, self.q]


def parse_slope(text):
    """Parse "p/q", a bare integer, or "*" (returns None for "*").

    >>> parse_slope("-1/3"), parse_slope("4"), parse_slope("*")
    (Slope(-1, 3), Slope(4, 1), None)
    """
    s = text.strip()
    if s == "*":
        return None
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            return Slope(int(num), int(den))
        except ValueError:
            raise SurgeryError("malformed slope %r" % text)
    try:
        return Slope(int(s), 1)
    except ValueError:
        raise SurgeryError("malformed slope %r" % text)


def format_slope(slope):
    return "*" if slope is None else str(slope)


def format_homology(rank, torsion):
    """Human form of (rank, torsion divisors): "trivial", "Z + Z/3", ...

    >>> format_homology(0, ()), format_homology(2, (2, 6))
    ('trivial', 'Z^2 + Z/2 + Z/6')
    """
    parts = []
    if rank == 1:
        parts.append("Z")
    elif rank > 1:
        parts.append("Z^%d" % rank)
    parts.extend("Z/%d" % d for d in torsion)
    return " + ".join(parts) if parts else "trivial"


def cable_surgery_reduction(slope, a, b):
    """Slope on a cable knot C_{a,b} rewritten for the companion.

    Valid only at distance one from the cabling annulus slope ab; the
    companion inherits p/(q*a^2).

    >>> cable_surgery_reduction(Slope(-3, 1), 2, -1)
    Slope(-3, 4)
    """
    if slope is None:
        raise SurgeryError("cable reduction needs a filled slope")
    a = int(a)
    b = int(b)
    if abs(a) < 2:
        raise SurgeryError("cabling index a must satisfy |a| >= 2")
    if abs(slope.p - slope.q * a * b) != 1:
        raise MoveError(
            "slope %s is not distance one from the cabling slope %d" %
            (slope, a * b))
    return Slope(slope.p, slope.q * a * a)


def _check_table(table, n):
    if len(table) != n or any(len(r) != n for r in table):
        raise SurgeryError("linking table must be %d x %d" % (n, n))
    for i in range(n):
        if table[i][i] != 0:
            raise SurgeryError("linking table diagonal must be zero")
        for j in range(n):
            if table[i][j] != table[j][i]:
                raise SurgeryError("linking table must be symmetric")


class SurgeryPresentation:
    """A framed link: component names, slopes, linking table, diagram.

    Instances are immutable; moves return new presentations.  When a
    diagram is attached its linking numbers are recomputed and checked
    against the table on every construction, so a bookkeeping mismatch
    anywhere in a move is an immediate error rather than a silently
    wrong invariant.
    """

    __slots__ = ("comps", "slopes", "linking", "diagram", "regions",
                 "annotations", "label")

    def __init__(self, comps, slopes, linking, diagram=None, regions=None,
                 annotations=None, label=None):
        self.comps = [str(c) for c in comps]
        if len(set(self.comps)) != len(self.comps):
            raise SurgeryError("component names must be distinct")
        n = len(self.comps)
        if len(slopes) != n:
            raise SurgeryError("%d slopes for %d components" % (len(slopes), n))
        for s in slopes:
            if s is not None and not isinstance(s, Slope):
                raise SurgeryError("slopes must be Slope instances or None")
        self.slopes = list(slopes)
        table = [[int(v) for v in row] for row in linking]
        _check_table(table, n)
        self.linking = table
        self.diagram = diagram
        self.regions = dict(regions) if regions else {}
        self.annotations = dict(annotations) if annotations else {}
        self.label = label
        if diagram is not None:
            if diagram.component_count() != n:
                raise SurgeryError(
                    "diagram has %d components, presentation has %d"
                    % (diagram.component_count(), n))
            if diagram.comp_names != self.comps:
                raise SurgeryError("diagram component names disagree")
            if diagram.linking_table() != table:
                raise SurgeryError("diagram linking numbers disagree with table")

    # -- access ---------------------------------------------------------

    def index(self, c):
        if isinstance(c, int):
            if not 0 <= c < len(self.comps):
                raise SurgeryError("no component %d" % c)
            return c
        if c in self.comps:
            return self.comps.index(c)
        raise SurgeryError("no component named %r" % (c,))

    def slope(self, c):
        return self.slopes[self.index(c)]

    def lk(self, a, b):
        return self.linking[self.index(a)][self.index(b)]

    def filled(self):
        return [i for i, s in enumerate(self.slopes) if s is not None]

    def unfilled(self):
        return [i for i, s in enumerate(self.slopes) if s is None]

    def describe(self):
        return "L(%s)" % ", ".join(format_slope(s) for s in self.slopes)

    def __repr__(self):
        return "<SurgeryPresentation %s %s>" % (self.label or "", self.describe())

    def __eq__(self, other):
        """Table-level equality: names, slopes, linking (not diagrams)."""
        if not isinstance(other, SurgeryPresentation):
            return NotImplemented
        return (self.comps == other.comps and self.slopes == other.slopes
                and self.linking == other.linking)

    __hash__ = None

    # -- homology ---------------------------------------------------------

    def h1_relation_matrix(self):
        """One row per filled component over all meridian generators.

        The filled component with slope p/q imposes
        p*mu_i + q * sum_j lk(i, j)*mu_j = 0.
        """
        n = len(self.comps)
        rows = []
        for i in self.filled():
            s = self.slopes[i]
            row = [s.q * self.linking[i][j] for j in range(n)]
            row[i] += s.p
            rows.append(row)
        return rows

    def first_homology(self):
        """(free rank, torsion divisors) of the surgered manifold.

        Unfilled components contribute free generators (the homology is
        that of the filled manifold minus the leftover link).
        """
        n = len(self.comps)
        rows = self.h1_relation_matrix()
        return homology_of_matrix(rows, n)

    def ambient_homology(self):
        """Homology of the filled components alone, ignoring unfilled ones."""
        keep = self.filled()
        pos = {c: k for k, c in enumerate(keep)}
        rows = []
        for i in keep:
            s = self.slopes[i]
            row = [s.q * self.linking[i][j] for j in keep]
            row[pos[i]] += s.p
            rows.append(row)
        return homology_of_matrix(rows, len(keep))

    def is_homology_sphere(self):
        return self.ambient_homology() == (0, ())

    # -- serialization ----------------------------------------------------

    def to_json(self):
        return {
            "format": "surgery/1",
            "label": self.label,
            "components": list(self.comps),
            "slopes": [s.to_json() if s else None for s in self.slopes],
            "linking": [list(r) for r in self.linking],
            "diagram": self.diagram.to_json() if self.diagram else None,
            "regions": {k: r.to_json() for k, r in self.regions.items()} or None,
            "annotations": self.annotations or None,
        }

    @classmethod
    def from_json(cls, obj):
        if obj.get("format") != "surgery/1":
            raise SurgeryError("unsupported presentation format %r"
                               % obj.get("format"))
        slopes = [Slope(*s) if s else None for s in obj["slopes"]]
        diagram = LinkDiagram.from_json(obj["diagram"]) if obj.get("diagram") else None
        regions = {k: TwistRegion.from_json(v)
                   for k, v in (obj.get("regions") or {}).items()}
        return cls(obj["components"], slopes, obj["linking"], diagram=diagram,
                   regions=regions, annotations=obj.get("annotations"),
                   label=obj.get("label"))

    # -- internals for moves ----------------------------------------------

    def _replace(self, **kw):
        args = {
            "comps": self.comps,
            "slopes": self.slopes,
            "linking": self.linking,
            "diagram": self.diagram,
            "regions": self.regions,
            "annotations": self.annotations,
            "label": self.label,
        }
        args.update(kw)
        return SurgeryPresentation(**args)

    def _require_unknotted(self, i):
        name = self.comps[i]
        if name not in self.annotations.get("unknotted", ()):
            raise MoveError(
                "component %r is not marked unknotted; twisting along it "
                "is only defined for unknots" % name)

    def _annulus_region(self, n1, n2):
        for reg in self.regions.values():
            if reg.kind == "annulus" and reg.boundary and \
                    set(reg.boundary) == {n1, n2}:
                return reg
        return None

    def _disk_regions(self):
        return {k: r for k, r in self.regions.items() if r.kind == "disk"}

    # -- moves -------------------------------------------------------------

    def rolfsen_twist(self, c, t):
        """Twist t times along the disk bounded by unknot component c.

        c must be filled; its slope p/q becomes p/(q + t*p).  Every
        other filled slope gains t*q_i*lk(i,c)^2 on the numerator, and
        linking numbers transform by lk(i,j) += t*lk(i,c)*lk(j,c).
        """
        t = int(t)
        ci = self.index(c)
        self._require_unknotted(ci)
        s = self.slopes[ci]
        if s is None:
            raise MoveError("cannot twist along unfilled component %r"
                            % self.comps[ci])
        n = len(self.comps)
        slopes = list(self.slopes)
        slopes[ci] = Slope(s.p, s.q + t * s.p)
        for i in range(n):
            if i == ci or self.slopes[i] is None:
                continue
            si = self.slopes[i]
            slopes[i] = Slope(si.p + t * si.q * self.linking[i][ci] ** 2, si.q)
        table = [list(r) for r in self.linking]
        for i in range(n):
            for j in range(n):
                if i != j and i != ci and j != ci:
                    table[i][j] += t * self.linking[i][ci] * self.linking[j][ci]
        diagram = self.diagram
        regions = self.regions
        if diagram is not None and t != 0:
            name = self.comps[ci]
            reg = self.regions.get(name)
            if reg is None or reg.kind != "disk":
                raise MoveError(
                    "presentation carries a diagram but no twist disk for %r"
                    % name)
            diagram, reg2 = insert_full_twists_ex(diagram, reg, t)
            regions = {name: reg2}
        return self._replace(slopes=slopes, linking=table, diagram=diagram,
                             regions=regions)

    def annulus_twist(self, c1, c2, t):
        """Twist t times along an annulus with boundary c1 and c2.

        Requires every other component to link c1 and c2 equally (the
        annulus sweep condition).  Writing each boundary slope in
        annulus coordinates d = p - q*l with l = lk(c1,c2), the move
        sends q1 to q1 + t*d1 and q2 to q2 - t*d2 and changes nothing
        else.
        """
        t = int(t)
        i1 = self.index(c1)
        i2 = self.index(c2)
        if i1 == i2:
            raise MoveError("annulus boundary components must differ")
        for g in range(len(self.comps)):
            if g in (i1, i2):
                continue
            if self.linking[g][i1] != self.linking[g][i2]:
                raise MoveError(
                    "component %r links the annulus boundaries unequally "
                    "(%d vs %d)" % (self.comps[g], self.linking[g][i1],
                                    self.linking[g][i2]))
        ell = self.linking[i1][i2]
        slopes = list(self.slopes)
        for idx, sgn in ((i1, 1), (i2, -1)):
            s = self.slopes[idx]
            if s is None:
                raise MoveError("cannot annulus-twist unfilled component %r"
                                % self.comps[idx])
            d = s.p - s.q * ell
            q2 = s.q + sgn * t * d
            slopes[idx] = Slope(d + q2 * ell, q2)
        diagram = self.diagram
        regions = self.regions
        if diagram is not None and t != 0:
            n1, n2 = self.comps[i1], self.comps[i2]
            reg = self._annulus_region(n1, n2)
            if reg is None:
                raise MoveError(
                    "presentation carries a diagram but no annulus region "
                    "for %r, %r" % (n1, n2))
            disks = self._disk_regions()
            if len(disks) > 1:
                raise MoveError("cannot thread more than one twist disk")
            dname, disk = (next(iter(disks.items())) if disks else (None, None))
            diagram, disk2 = insert_annulus_twists_ex(diagram, reg, t, disk)
            regions = {dname: disk2} if dname else {}
        return self._replace(slopes=slopes, diagram=diagram, regions=regions)

    def delete_meridional(self, c):
        """Remove a component filled with the meridional slope 1/0."""
        ci = self.index(c)
        s = self.slopes[ci]
        if s is None or not s.is_meridian():
            raise MoveError("component %r is not filled meridionally"
                            % self.comps[ci])
        name = self.comps[ci]
        keep = [i for i in range(len(self.comps)) if i != ci]
        comps = [self.comps[i] for i in keep]
        slopes = [self.slopes[i] for i in keep]
        table = [[self.linking[i][j] for j in keep] for i in keep]
        diagram = self.diagram
        regions = {}
        if diagram is not None:
            old = diagram
            diagram, edge_map = remove_component_ex(old, name)
            for rname, reg in self.regions.items():
                reg2 = _remap_region(reg, old, ci, name, edge_map)
                if reg2 is not None:
                    regions[rname] = reg2
        annotations = dict(self.annotations)
        if "unknotted" in annotations:
            annotations["unknotted"] = [x for x in annotations["unknotted"]
                                        if x != name]
        return SurgeryPresentation(comps, slopes, table, diagram=diagram,
                                   regions=regions, annotations=annotations,
                                   label=self.label)


def _remap_region(reg, old_diagram, dead_index, dead_name, edge_map):
    """Carry a region across a component deletion, or drop it."""
    if reg.anchor == dead_name:
        return None
    if reg.boundary and dead_name in reg.boundary:
        return None
    strands = []
    radii = []
    old_radii = (reg.geometry or {}).get("radii")
    for k, (e, dirn) in enumerate(reg.strands):
        if old_diagram.comp_of(e) == dead_index:
            continue
        if e not in edge_map:
            return None
        strands.append((edge_map[e], dirn))
        if old_radii is not None:
            radii.append(old_radii[k])
    geometry = reg.geometry
    if reg.kind == "annulus":
        geom = reg.geometry or {}
        refs = [v["edge"] for v in geom.get("verticals", ())]
        gate = geom.get("gate")
        if gate:
            refs += [gate["south_edge"], gate["north_edge"], gate["dip_edge"]]
        if any(e not in edge_map or edge_map[e] != e for e in refs):
            return None
    elif old_radii is not None:
        geometry = dict(reg.geometry)
        geometry["radii"] = radii
    return TwistRegion(reg.kind, strands, anchor=reg.anchor,
                       boundary=reg.boundary, geometry=geometry)


def homology_of_matrix(rows, n):
    """Cokernel of an integer relation matrix on n generators.

    Returns (free rank, torsion divisors), each divisor > 1 and each
    dividing the next.
    """
    if n == 0:
        return (0, ())
    if not rows:
        return (n, ())
    d, _, _ = smith_normal_form(rows)
    diag = [d[i][i] for i in range(min(len(d), n))]
    nonzero = [x for x in diag if x != 0]
    torsion = tuple(abs(x) for x in nonzero if abs(x) > 1)
    return (n - len(nonzero), torsion)


class Trace:
    """Record of a move script: snapshots before, between, after moves.

    Every move in a script must preserve the first homology of the
    presentation; apply_move_script checks this at each step and fails
    loudly, so a passing trace certifies the invariant.
    """

    def __init__(self, steps):
        self.steps = steps  # [(description, presentation)]

    @property
    def initial(self):
        return self.steps[0][1]

    @property
    def final(self):
        return self.steps[-1][1]

    def descriptions(self):
        return [s for s, _ in self.steps]

    def homologies(self):
        return [p.first_homology() for _, p in self.steps]


def apply_move_script(pres, moves, check_ambient=False):
    """Apply [(kind, args...)] moves, verifying homology at each step.

    Kinds: ("rolfsen", c, t), ("annulus", c1, c2, t), ("delete", c).
    Returns a Trace.  Raises MoveError, mentioning the step index, if a
    move fails or an invariant breaks.
    """
    steps = [("initial", pres)]
    h0 = pres.first_homology()
    cur = pres
    for idx, move in enumerate(moves):
        kind = move[0]
        try:
            if kind == "rolfsen":
                _, c, t = move
                cur = cur.rolfsen_twist(c, t)
                desc = "rolfsen %s t=%d" % (c, t)
            elif kind == "annulus":
                _, c1, c2, t = move
                cur = cur.annulus_twist(c1, c2, t)
                desc = "annulus %s,%s t=%d" % (c1, c2, t)
            elif kind == "delete":
                _, c = move
                cur = cur.delete_meridional(c)
                desc = "delete %s" % c
            else:
                raise MoveError("unknown move kind %r" % (kind,))
        except MoveError as exc:
            raise MoveError("step %d (%r): %s" % (idx, move, exc))
        h = cur.first_homology()
        if h != h0:
            raise MoveError(
                "step %d (%s) changed first homology from %s to %s"
                % (idx, desc, format_homology(*h0), format_homology(*h)))
        if check_ambient and cur.ambient_homology() != (0, ()):
            raise MoveError("step %d (%s) left a nontrivial ambient manifold"
                            % (idx, desc))
        steps.append((desc, cur))
    return Trace(steps)
