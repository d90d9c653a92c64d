"""Oriented link diagrams as PD codes.

A diagram is a list of crossings over positive integer edge labels.
Every edge label appears exactly twice (once entering a crossing, once
leaving one); following the exits partitions the edges into oriented
cycles, one per component.  Crossing-free unknot components are carried
separately as "loops" since a PD tuple cannot mention them.

Text grammar (one or more whitespace-separated tokens, '#' comments):

    X[a,b,c,d]     crossing, over-strand direction inferred from
                   consecutive edge numbering along the component
    X+[a,b,c,d]    crossing of sign +1
    X-[a,b,c,d]    crossing of sign -1
    O              crossing-free unknot component

    # name: <text>            optional diagram name
    # components: <n1> <n2>   optional component names, in order

The tuple convention is the usual one: the four edges are listed
counterclockwise starting from the incoming under-strand, so the
under-strand enters at position a and leaves at position c.  For a
positive crossing the over-strand runs d to b, for a negative one b to
d.  Calibration: "X[1,3,2,4] X[3,1,4,2]" is the positive Hopf link
(linking number +1).
"""

import json


class DiagramError(ValueError):
    """Raised for syntax errors and invalid diagram structure."""


def make_crossing(u_in, u_out, o_in, o_out, sign):
    """Assemble a PD tuple from strand roles and the crossing sign."""
    if sign > 0:
        return (u_in, o_out, u_out, o_in, 1)
    return (u_in, o_in, u_out, o_out, -1)


def over_in(x):
    return x[3] if x[4] > 0 else x[1]


def over_out(x):
    return x[1] if x[4] > 0 else x[3]


class TwistRegion:
    """A marked disk (or annulus) that strands pass through.

    ``strands`` is an ordered list of (edge label, direction sign)
    pairs; the order is the linear order in which the strands lie
    across the region.  ``anchor`` names the component bounding the
    disk; its unknottedness is a trusted annotation supplied with the
    asset, never computed.  Annulus regions carry their two boundary
    components and a geometry payload describing how new strand loops
    thread the diagram.
    """

    __slots__ = ("kind", "anchor", "strands", "boundary", "geometry")

    def __init__(self, kind, strands, anchor=None, boundary=None, geometry=None):
        if kind not in ("disk", "annulus"):
            raise DiagramError("unknown region kind %r" % (kind,))
        self.kind = kind
        self.strands = [(int(e), int(s)) for e, s in strands]
        for _, s in self.strands:
            if s not in (1, -1):
                raise DiagramError("strand direction must be +1 or -1")
        self.anchor = anchor
        self.boundary = tuple(boundary) if boundary is not None else None
        self.geometry = geometry

    def to_json(self):
        return {
            "kind": self.kind,
            "strands": [list(p) for p in self.strands],
            "anchor": self.anchor,
            "boundary": list(self.boundary) if self.boundary else None,
            "geometry": self.geometry,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            obj["kind"],
            [tuple(p) for p in obj["strands"]],
            anchor=obj.get("anchor"),
            boundary=tuple(obj["boundary"]) if obj.get("boundary") else None,
            geometry=obj.get("geometry"),
        )


class LinkDiagram:
    """An oriented link diagram.

    Instances are immutable; all operations return new diagrams.
    """

    __slots__ = ("crossings", "loops", "name", "comp_names", "_components", "_comp_of")

    def __init__(self, crossings, loops=0, name=None, comp_names=None):
        self.crossings = tuple(tuple(int(v) for v in x) for x in crossings)
        self.loops = int(loops)
        self.name = name
        for x in self.crossings:
            if len(x) != 5 or x[4] not in (1, -1):
                raise DiagramError("malformed crossing %r" % (x,))
        self._components = None
        self._comp_of = None
        self._validate()
        names = list(comp_names) if comp_names else None
        if names is not None and len(names) != self.component_count():
            raise DiagramError(
                "%d component names for %d components"
                % (len(names), self.component_count())
            )
        self.comp_names = names

    # -- structure ----------------------------------------------------

    def _validate(self):
        seen_in = {}
        seen_out = {}
        for idx, x in enumerate(self.crossings):
            a, _, c, _, _ = x
            for e, slot in ((a, seen_in), (over_in(x), seen_in),
                            (c, seen_out), (over_out(x), seen_out)):
                if e in slot:
                    raise DiagramError("edge %d used twice in the same role" % e)
                slot[e] = idx
        if set(seen_in) != set(seen_out):
            bad = set(seen_in) ^ set(seen_out)
            raise DiagramError(
                "edges %s do not appear exactly once in and once out"
                % sorted(bad)
            )
        # build oriented cycles
        succ = {}
        for x in self.crossings:
            succ[x[0]] = x[2]
            succ[over_in(x)] = over_out(x)
        comps = []
        visited = set()
        for start in sorted(succ):
            if start in visited:
                continue
            cyc = [start]
            visited.add(start)
            e = succ[start]
            while e != start:
                if e in visited:
                    raise DiagramError("component through edge %d is not a cycle" % start)
                cyc.append(e)
                visited.add(e)
                e = succ[e]
            comps.append(cyc)
        comps.sort(key=lambda c: min(c))
        comps.extend([[]] * self.loops)
        cof = {}
        for i, cyc in enumerate(comps):
            for e in cyc:
                cof[e] = i
        self._components = comps
        self._comp_of = cof

    @property
    def components(self):
        """Edge cycles, one per component; [] for a crossing-free loop."""
        return self._components

    def component_count(self):
        return len(self._components)

    def comp_of(self, edge):
        return self._comp_of[edge]

    def edges(self):
        return set(self._comp_of)

    def component_index(self, key):
        """Resolve a component given an index or a name."""
        if isinstance(key, int):
            if not 0 <= key < self.component_count():
                raise DiagramError("no component %d" % key)
            return key
        if self.comp_names and key in self.comp_names:
            return self.comp_names.index(key)
        raise DiagramError("no component named %r" % (key,))

    def crossing_passes(self, x):
        """((under component, over component)) of a crossing tuple."""
        return self.comp_of(x[0]), self.comp_of(over_in(x))

    # -- invariants ----------------------------------------------------

    def linking_number(self, i, j):
        """Half the signed count of crossings between components i, j.

        >>> parse_pd("X+[1,4,2,3] X+[4,1,3,2]").linking_number(0, 1)
        1
        """
        i = self.component_index(i)
        j = self.component_index(j)
        if i == j:
            raise DiagramError("self-linking is undefined; use writhe")
        tot = 0
        for x in self.crossings:
            u, o = self.crossing_passes(x)
            if (u, o) in ((i, j), (j, i)):
                tot += x[4]
        if tot % 2:
            raise DiagramError("odd signed crossing count between components")
        return tot // 2

    def writhe(self, i):
        """Signed count of self-crossings of component i."""
        i = self.component_index(i)
        return sum(x[4] for x in self.crossings if self.crossing_passes(x) == (i, i))

    def total_writhe(self):
        return sum(x[4] for x in self.crossings)

    def linking_table(self):
        n = self.component_count()
        t = [[0] * n for _ in range(n)]
        for x in self.crossings:
            u, o = self.crossing_passes(x)
            if u != o:
                t[u][o] += x[4]
                t[o][u] += x[4]
        for r in range(n):
            for c in range(n):
                if t[r][c] % 2:
                    raise DiagramError("odd signed crossing count between components")
                t[r][c] //= 2
        return t

    # -- canonical form and serialization ------------------------------

    def canonical(self):
        """Relabel edges 1..E, each cycle starting at its least label.

        Component order is preserved.  Two diagrams that differ only by
        edge relabeling within each component compare equal after
        canonicalization.
        """
        relabel = {}
        nxt = 1
        for cyc in self._components:
            if not cyc:
                continue
            k = cyc.index(min(cyc))
            for e in cyc[k:] + cyc[:k]:
                relabel[e] = nxt
                nxt += 1
        xs = []
        for x in self.crossings:
            a, b, c, d, s = x
            xs.append((relabel[a], relabel[b], relabel[c], relabel[d], s))
        xs.sort()
        return LinkDiagram(xs, loops=self.loops, name=self.name,
                           comp_names=self.comp_names)

    def __eq__(self, other):
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return (self.crossings == other.crossings and self.loops == other.loops
                and self.comp_names == other.comp_names)

    def __hash__(self):
        return hash((self.crossings, self.loops))

    def __repr__(self):
        return "<LinkDiagram %s: %d crossings, %d components>" % (
            self.name or "(unnamed)", len(self.crossings), self.component_count())

    def to_json(self):
        return {
            "format": "linkpd/1",
            "name": self.name,
            "components": self.comp_names,
            "crossings": [list(x) for x in self.crossings],
            "loops": self.loops,
        }

    @classmethod
    def from_json(cls, obj):
        if obj.get("format") != "linkpd/1":
            raise DiagramError("unsupported diagram format %r" % obj.get("format"))
        return cls(
            [tuple(x) for x in obj["crossings"]],
            loops=obj.get("loops", 0),
            name=obj.get("name"),
            comp_names=obj.get("components"),
        )


# -- text format ------------------------------------------------------


def _parse_token(tok, pos):
    sign = 0
    body = tok
    if tok.startswith("X+"):
        sign, body = 1, tok[2:]
    elif tok.startswith("X-"):
        sign, body = -1, tok[2:]
    elif tok.startswith("X"):
        body = tok[1:]
    else:
        raise DiagramError("unrecognized token %r at position %d" % (tok, pos))
    if not (body.startswith("[") and body.endswith("]")):
        raise DiagramError("malformed crossing %r at position %d" % (tok, pos))
    try:
        vals = [int(v) for v in body[1:-1].split(",")]
    except ValueError:
        raise DiagramError("non-integer edge label in %r at position %d" % (tok, pos))
    if len(vals) != 4:
        raise DiagramError("crossing %r needs 4 edge labels (position %d)" % (tok, pos))
    if any(v < 1 for v in vals):
        raise DiagramError("edge labels must be positive in %r (position %d)" % (tok, pos))
    return vals, sign


def parse_pd(text):
    """Parse PD-code text into a LinkDiagram.

    >>> d = parse_pd("X+[1,4,2,3] X+[4,1,3,2]")
    >>> d.component_count(), len(d.crossings)
    (2, 2)
    """
    name = None
    comp_names = None
    tokens = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            body = stripped.lstrip("#").strip()
            if body.startswith("name:"):
                name = body[5:].strip() or None
            elif body.startswith("components:"):
                comp_names = body[len("components:"):].split() or None
            continue
        tokens.extend(line.split())
    raw = []
    loops = 0
    for pos, tok in enumerate(tokens):
        if tok == "O":
            loops += 1
            continue
        raw.append(_parse_token(tok, pos))

    # undirected component partition, for inferring over-strand direction
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    counts = {}
    for vals, _ in raw:
        a, b, c, d = vals
        union(a, c)
        union(b, d)
        for v in vals:
            counts[v] = counts.get(v, 0) + 1
    for e, n in counts.items():
        if n != 2:
            raise DiagramError("edge %d appears %d times (needs exactly 2)" % (e, n))
    groups = {}
    for e in counts:
        groups.setdefault(find(e), []).append(e)
    succ_in_group = {}
    for g in groups.values():
        g.sort()
        for idx, e in enumerate(g):
            succ_in_group[e] = g[(idx + 1) % len(g)]

    crossings = []
    for vals, sign in raw:
        a, b, c, d = vals
        if sign == 0:
            if succ_in_group[b] == d:
                sign = -1  # over-strand runs b -> d
            elif succ_in_group[d] == b:
                sign = 1  # over-strand runs d -> b
            else:
                raise DiagramError(
                    "cannot infer over-strand direction of X%s; "
                    "label it X+[...] or X-[...]" % (list(vals),))
        crossings.append((a, b, c, d, sign))
    return LinkDiagram(crossings, loops=loops, name=name, comp_names=comp_names)


def serialize_pd(d):
    """Canonical PD text; parse_pd(serialize_pd(d)) == d.canonical().

    >>> serialize_pd(parse_pd("X+[1,4,2,3] X+[4,1,3,2]"))
    'X+[1,4,2,3] X+[4,1,3,2]'
    """
    c = d.canonical()
    parts = []
    for x in c.crossings:
        a, b, cc, dd, s = x
        parts.append("X%s[%d,%d,%d,%d]" % ("+" if s > 0 else "-", a, b, cc, dd))
    parts.extend(["O"] * c.loops)
    body = " ".join(parts)
    header = []
    if c.name:
        header.append("# name: %s" % c.name)
    if c.comp_names:
        header.append("# components: %s" % " ".join(c.comp_names))
    if header:
        return "\n".join(header + [body]) if body else "\n".join(header)
    return body


# -- component removal -------------------------------------------------


def remove_component(d, comp):
    """Erase one component's strands from the diagram."""
    return remove_component_ex(d, comp)[0]


def remove_component_ex(d, comp):
    """Erase one component; also report where surviving edges went.

    For a surgery presentation this realizes meridional filling: the
    removed strands never obstruct the rest, so the remaining sublink
    keeps its own crossings verbatim.  A surviving component whose
    crossings all involved the removed one becomes a crossing-free
    loop.

    Returns (diagram, edge_map) where edge_map sends each old edge
    label of a surviving strand to its label in the new diagram (edges
    separated only by dropped crossings merge into one label, the one
    that was upstream).  Edges of components that became crossing-free
    loops are absent from the map.
    """
    comp = d.component_index(comp)
    if not d.components[comp]:
        nm = list(d.comp_names) if d.comp_names else None
        if nm:
            nm.pop(comp)
        out = LinkDiagram(d.crossings, loops=d.loops - 1, name=d.name,
                          comp_names=nm)
        ident = {e: e for cyc in d.components for e in cyc}
        return out, ident

    # merge map: when a kept strand passes through a dropped crossing,
    # its outgoing edge is identified with its incoming edge
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    kept = []
    for x in d.crossings:
        u, o = d.crossing_passes(x)
        if u == comp and o == comp:
            continue
        if u == comp:
            parent[find(over_out(x))] = find(over_in(x))
            continue
        if o == comp:
            parent[find(x[2])] = find(x[0])
            continue
        kept.append(x)

    survivors = [i for i in range(d.component_count()) if i != comp]
    xs = []
    for x in kept:
        a, b, c, dd, s = x
        xs.append((find(a), find(b), find(c), find(dd), s))
    touched = {d.comp_of(e) for x in xs for e in (x[0], over_in(x))}
    new_loops = d.loops + sum(
        1 for i in survivors if d.components[i] and i not in touched)
    out = LinkDiagram(xs, loops=new_loops, name=d.name)
    nm = None
    if d.comp_names:
        # edge cycles first, matched through surviving labels, then the
        # freshly stranded loops, then the loops that already existed
        nm = [d.comp_names[d.comp_of(cyc[0])] for cyc in out.components if cyc]
        nm += [d.comp_names[i] for i in survivors
               if d.components[i] and i not in touched]
        nm += [d.comp_names[i] for i in survivors if not d.components[i]]
        out = LinkDiagram(xs, loops=new_loops, name=d.name, comp_names=nm)
    edge_map = {}
    for i in survivors:
        if i in touched:
            for e in d.components[i]:
                edge_map[e] = find(e)
    return out, edge_map


# -- DT codes ----------------------------------------------------------


def dt_code(d):
    """Dowker-Thistlethwaite sequence of a knot diagram.

    Passages are numbered 1..2N along the knot; each crossing pairs an
    odd passage with an even one.  The code lists, for odd passages in
    order, the even partner, negated when the odd passage goes over.

    >>> dt_code(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"))
    [4, 6, 2]
    """
    nonempty = [c for c in d.components if c]
    if d.component_count() != 1:
        raise DiagramError("DT codes are defined for knots (1 component)")
    if not nonempty:
        return []
    cyc = nonempty[0]
    passage = {e: i + 1 for i, e in enumerate(cyc)}
    pairs = {}
    for x in d.crossings:
        pu = passage[x[0]]
        po = passage[over_in(x)]
        if (pu + po) % 2 == 0:
            raise DiagramError("crossing passages %d, %d have equal parity" % (pu, po))
        for mine, other, is_over in ((pu, po, False), (po, pu, True)):
            if mine % 2:
                pairs[mine] = -other if is_over else other
    return [pairs[o] for o in sorted(pairs)]


def dt_export(d):
    """DT code as text (spaces between entries)."""
    return " ".join(str(v) for v in dt_code(d))


def check_dt_text(text):
    """Validate DT text: even entries, each abs value once, proper range.

    Returns the number of crossings.  Raises DiagramError on malformed
    input.  This is the acceptance check applied to exported codes in
    place of feeding them to an external program.
    """
    entries = [int(v) for v in text.split()]
    n = len(entries)
    need = set(range(2, 2 * n + 1, 2))
    got = {abs(v) for v in entries}
    if any(v == 0 or v % 2 for v in entries) or got != need:
        raise DiagramError("not a valid DT sequence: %r" % (text,))
    return n


# -- full twist insertion ----------------------------------------------


def _fresh_labels(d, count):
    base = max(d.edges(), default=0)
    return iter(range(base + 1, base + 1 + count))


def _edge_slots(d):
    """edge -> (crossing idx where it leaves, slot), for rewiring."""
    into = {}
    for idx, x in enumerate(d.crossings):
        into[x[0]] = (idx, "under")
        into[over_in(x)] = (idx, "over")
    return into


def _rewrite_incoming(crossings, idx, slot, new_edge):
    a, b, c, dd, s = crossings[idx]
    if slot == "under":
        crossings[idx] = (new_edge, b, c, dd, s)
    else:
        if s > 0:
            crossings[idx] = (a, b, c, new_edge, s)
        else:
            crossings[idx] = (a, new_edge, c, dd, s)


def insert_full_twists_ex(d, region, t):
    """Full-twist insertion returning (diagram, updated region).

    The strands through the marked disk are replaced by t full twists.
    The braid box realizing the twists is a repetition of adjacent
    transpositions; for t > 0 the strand moving from position i to
    position i+1 passes over.  In the right handed frame (position
    axis, progress axis) that choice makes the drawn crossing sign
    equal sign(t) * dir_i * dir_j, which is exactly what the
    linking-number transformation rule requires.
    """
    if region.kind != "disk":
        raise DiagramError("insert_full_twists needs a disk region")
    edges = d.edges()
    for e, _ in region.strands:
        if e not in edges:
            raise DiagramError("region references stale edge %d" % e)
    if len({e for e, _ in region.strands}) != len(region.strands):
        raise DiagramError("region strands must lie on distinct edges")
    ss = len(region.strands)
    if t == 0 or ss < 2:
        return d, region
    h = 1 if t > 0 else -1

    crossings = list(d.crossings)
    into = _edge_slots(d)
    label = _fresh_labels(d, 2 * abs(t) * ss * (ss - 1) + ss)

    pos = list(range(ss))  # pos[p] = strand index at position p
    gsegs = [[e] for e, _ in region.strands]  # geometric segment chains
    new_crossings = []
    for _rep in range(abs(t) * ss):
        for p in range(ss - 1):
            su, sv = pos[p], pos[p + 1]
            over_s, under_s = (su, sv) if h > 0 else (sv, su)
            seg = {}
            for w in (su, sv):
                before = gsegs[w][-1]
                after = next(label)
                gsegs[w].append(after)
                seg[w] = (before, after)
            du = region.strands[under_s][1]
            do = region.strands[over_s][1]
            u_in, u_out = seg[under_s] if du > 0 else seg[under_s][::-1]
            o_in, o_out = seg[over_s] if do > 0 else seg[over_s][::-1]
            new_crossings.append(make_crossing(u_in, u_out, o_in, o_out, h * du * do))
            pos[p], pos[p + 1] = pos[p + 1], pos[p]

    # splice each chain into its strand's edge
    new_region_strands = []
    for w, (e, dirn) in enumerate(region.strands):
        chain = gsegs[w]
        if dirn > 0:
            # edge flow enters at the geometric top: keep e upstream,
            # rewire the downstream consumer to the chain's last piece
            idx, slot = into[e]
            _rewrite_incoming(crossings, idx, slot, chain[-1])
            disk_edge = e
        else:
            # edge flow enters at the geometric bottom: relabel so the
            # chain's last piece becomes the upstream edge e
            swap = {chain[-1]: e, e: chain[-1]}
            for k, x in enumerate(new_crossings):
                new_crossings[k] = tuple(swap.get(v, v) for v in x[:4]) + (x[4],)
            for k, seg in enumerate(chain):
                chain[k] = swap.get(seg, seg)
            idx, slot = into[e]
            _rewrite_incoming(crossings, idx, slot, chain[0])
            disk_edge = chain[0]
        new_region_strands.append((disk_edge, dirn))

    out = LinkDiagram(crossings + new_crossings, loops=d.loops, name=d.name,
                      comp_names=d.comp_names)
    return out, TwistRegion("disk", new_region_strands, anchor=region.anchor,
                            geometry=region.geometry)


def insert_full_twists(d, region, t):
    """Insert t full twists on the strands through a marked disk."""
    return insert_full_twists_ex(d, region, t)[0]


# -- annulus twist insertion --------------------------------------------

# Geometry payloads use hub coordinates: angles in hundredths of a
# degree, radii in integer units scaled by _SCALE so that the w-th
# strand loop of one pass sits at its vertical's radius minus w.  All
# ordering decisions are exact integer comparisons.
_SCALE = 10 ** 6
_SPOKE_OFF = 25  # spokes are tilted a quarter degree off their passage


def _det_sign(u, v):
    d = u[0] * v[1] - u[1] * v[0]
    if d == 0:
        raise DiagramError("degenerate tangent pair in twist geometry")
    return 1 if d > 0 else -1


def _annulus_obstacles(verts, gate, vert, rk):
    """What one strand loop of `vert` at effective radius rk crosses.

    Records are (angle, host edge, host station, host tangent, host is
    over).  Tangents are written in the local (radial, angular) frame,
    which is right handed, so determinant signs agree with the global
    plane.
    """
    obs = []
    for other in verts:
        if other is vert:
            continue
        if other["radius"] * _SCALE >= rk:
            continue
        off = other.get("tilt", 1) * _SPOKE_OFF
        upper_in = other["down"]
        up_station = (0, -rk) if upper_in else (2, rk)
        lo_station = (2, rk) if upper_in else (0, -rk)
        up_dir = (-1, 0) if upper_in else (1, 0)
        lo_dir = (1, 0) if upper_in else (-1, 0)
        obs.append(((other["angle"] - off) % 36000, other["edge"],
                    up_station, up_dir, True))
        obs.append(((other["angle"] + off) % 36000, other["edge"],
                    lo_station, lo_dir, False))
    obs.append((gate["south_angle"], gate["south_edge"], (0, rk), (1, 0), True))
    obs.append((gate["north_angle"], gate["north_edge"], (0, -rk), (-1, 0), False))
    if rk > gate["dip_radius"] * _SCALE:
        obs.append((gate["dip_south_angle"], gate["dip_edge"],
                    (0, -rk), (-7, 1), True))
        obs.append((gate["dip_north_angle"], gate["dip_edge"],
                    (2, rk), (7, 1), True))
    return obs


def insert_annulus_twists_ex(d, region, t, disk=None):
    """Twist along the marked annulus, returning (diagram, new disk).

    Each of the region's vertical passages is replaced by a helix that
    winds |t| times around the hub at its own radius band before
    exiting along its spoke; passages pointing down the annulus wind
    one way and passages pointing up wind the other, so all pairwise
    linking numbers are preserved.  Every new strand loop threads the
    anchor disk of `disk` (when given), whose updated region is
    returned with the loops inserted at their radial positions.

    The annulus region itself is consumed: its geometry references
    edges that the insertion splits, so it must not be reused.
    """
    if region.kind != "annulus":
        raise DiagramError("insert_annulus_twists needs an annulus region")
    geom = region.geometry
    if not geom:
        raise DiagramError("annulus region carries no geometry payload")
    verts = geom["verticals"]
    gate = geom["gate"]
    edges = d.edges()
    referenced = [v["edge"] for v in verts] + [
        gate["south_edge"], gate["north_edge"], gate["dip_edge"]]
    if disk is not None:
        referenced += [e for e, _ in disk.strands]
    for e in referenced:
        if e not in edges:
            raise DiagramError("region references stale edge %d" % e)
    if t == 0:
        return d, disk
    T = abs(t)

    crossings = list(d.crossings)
    into = _edge_slots(d)
    counter = max(edges) + 1

    def fresh():
        nonlocal counter
        counter += 1
        return counter - 1

    requests = {}  # host edge -> [(station, ref)]
    all_events = []  # per vertical: event payload list
    pierce_info = []  # per vertical: (w, chain index, direction, radius key)

    for j, vert in enumerate(verts):
        ccw = (not vert["down"]) if t > 0 else vert["down"]
        wind_dir = (0, 1) if ccw else (0, -1)
        theta = vert["angle"]

        def key(a):
            return (a - theta) % 36000 if ccw else (theta - a) % 36000

        tilt = vert.get("tilt", 1)
        exit_angle = (theta + tilt * _SPOKE_OFF) % 36000 if vert["down"] \
            else (theta - tilt * _SPOKE_OFF) % 36000
        # When the exit spoke lies ahead of the passage angle (in the
        # winding direction) the last loop travels a bit past a full
        # turn, so the outgoing connector crosses its own start too.
        ahead = key(exit_angle) < 18000
        events = []
        piercing = []
        selfw_index = {}
        for w in range(1, T + 1):
            rk = vert["radius"] * _SCALE - w
            items = []
            for ang, edge_, st, dir2, hover in _annulus_obstacles(
                    verts, gate, vert, rk):
                sgn = _det_sign(dir2, wind_dir) if hover \
                    else _det_sign(wind_dir, dir2)
                items.append((key(ang), ("obs", edge_, st, hover, sgn)))
            if w < T or ahead:
                items.append((key(exit_angle), ("selfw", w)))
            items.sort(key=lambda it: it[0])
            pk = key(0)
            pos = sum(1 for it in items if it[0] < pk)
            piercing.append((w, len(events) + pos, 1 if ccw else -1, rk))
            for _, payload in items:
                if payload[0] == "obs":
                    requests.setdefault(payload[1], []).append(
                        (payload[2], ("x", j, len(events))))
                elif payload[0] == "selfw":
                    selfw_index[payload[1]] = len(events)
                events.append(payload)
        for w in range(T if ahead else T - 1, 0, -1):
            events.append(("selfc", w, selfw_index[w]))
        all_events.append(events)
        pierce_info.append(piercing)
        requests.setdefault(vert["edge"], []).append(((1, 0), ("splice", j)))

    # split the host edges, keeping the original label upstream
    ref_pieces = {}
    entry = {}
    exits = {}
    host_pieces = {}
    for host in sorted(requests):
        reqs = sorted(requests[host], key=lambda r: r[0])
        pieces = [host]
        for st, ref in reqs:
            nxt = fresh()
            if ref[0] == "splice":
                entry[ref[1]] = pieces[-1]
                exits[ref[1]] = nxt
            else:
                ref_pieces[ref] = (pieces[-1], nxt)
            pieces.append(nxt)
        idx, slot = into[host]
        _rewrite_incoming(crossings, idx, slot, pieces[-1])
        host_pieces[host] = pieces

    # materialize the helix chains
    new_xs = []
    seg_of = []
    for j, vert in enumerate(verts):
        events = all_events[j]
        kk = len(events)
        seg = {0: entry[j], kk: exits[j]}
        for i in range(1, kk):
            seg[i] = fresh()
        seg_of.append(seg)
        ccw = (not vert["down"]) if t > 0 else vert["down"]
        wind_dir = (0, 1) if ccw else (0, -1)
        for i, ev in enumerate(events):
            if ev[0] == "obs":
                _, _, _, hover, sgn = ev
                pb, pa = ref_pieces[("x", j, i)]
                ci, co = seg[i], seg[i + 1]
                if hover:
                    new_xs.append(make_crossing(ci, co, pb, pa, sgn))
                else:
                    new_xs.append(make_crossing(pb, pa, ci, co, sgn))
            elif ev[0] == "selfc":
                _, _, p = ev
                wi, wo = seg[p], seg[p + 1]
                ci, co = seg[i], seg[i + 1]
                if vert["down"]:
                    sgn = _det_sign(wind_dir, (1, 0))
                    new_xs.append(make_crossing(ci, co, wi, wo, sgn))
                else:
                    sgn = _det_sign((1, 0), wind_dir)
                    new_xs.append(make_crossing(wi, wo, ci, co, sgn))

    out = LinkDiagram(crossings + new_xs, loops=d.loops, name=d.name,
                      comp_names=d.comp_names)

    disk2 = None
    if disk is not None:
        entries = []
        for (e, dirn), r in zip(disk.strands, disk.geometry["radii"]):
            rk = r * _SCALE if r < _SCALE else r
            pieces = host_pieces.get(e)
            if pieces is None:
                entries.append((rk, e, dirn))
            else:
                reqs = sorted(requests[e], key=lambda q: q[0])
                before = sum(1 for st, _ in reqs if st < (1, 0))
                entries.append((rk, pieces[before], dirn))
        for j in range(len(verts)):
            seg = seg_of[j]
            for w, idx, dirn, rk in pierce_info[j]:
                entries.append((rk, seg[idx], dirn))
        entries.sort()
        disk2 = TwistRegion("disk", [(e, dirn) for _, e, dirn in entries],
                            anchor=disk.anchor,
                            geometry={"radii": [rk for rk, _, _ in entries]})
    return out, disk2


def insert_annulus_twists(d, region, t):
    """Insert t twists along a marked annulus."""
    return insert_annulus_twists_ex(d, region, t)[0]
