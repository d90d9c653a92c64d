"""The twisted-satellite family built from the bundled four-component link.

The asset link L = k u l1 u l2 u l3 lives in assets/L.pd with its twist
regions in assets/family.json.  Filling l1, l2 with -1/m, 1/m and l3
with -1/n turns k into a knot k(m, n); filling k as well, with 0/1,
produces the surgered manifold the family is studied through.  All
constructors here return presentations whose linking tables are backed
by the actual diagram, and the move pipeline asserts its own
consistency at every step, so a bookkeeping error cannot produce a
quietly wrong answer.
"""

from importlib import resources

from .diagram import DiagramError, LinkDiagram, TwistRegion, dt_export
from .surgery import (
    MoveError,
    Slope,
    SurgeryPresentation,
    apply_move_script,
)


class FamilyError(ValueError):
    """Raised when the bundled link data fails validation."""


COMPONENTS = ["k", "l1", "l2", "l3"]

# The pairwise linking numbers of the asset link.  These are forced by
# the construction: l3 rings the gate that k, l1 and l2 each cross once
# in the positive direction, while k, l1 and l2 are pairwise unlinked.
EXPECTED_LINKING = [
    [0, 0, 0, 1],
    [0, 0, 0, 1],
    [0, 0, 0, 1],
    [1, 1, 1, 0],
]

EXPECTED_CROSSINGS = 16

_BASE = None


def _load_raw():
    pkg = resources.files("surgeon")
    pd_text = (pkg / "assets" / "L.pd").read_text()
    import json

    meta = json.loads((pkg / "assets" / "family.json").read_text())
    return pd_text, meta


def validate_base(d, meta):
    """Hard gate on the bundled link; raises FamilyError on any defect."""
    if d.comp_names != COMPONENTS:
        raise FamilyError("asset components %r, expected %r"
                          % (d.comp_names, COMPONENTS))
    if len(d.crossings) != EXPECTED_CROSSINGS:
        raise FamilyError("asset has %d crossings, expected %d"
                          % (len(d.crossings), EXPECTED_CROSSINGS))
    if d.linking_table() != EXPECTED_LINKING:
        raise FamilyError("asset linking table %r does not match the "
                          "expected sheet" % (d.linking_table(),))
    if meta.get("linking") != EXPECTED_LINKING:
        raise FamilyError("metadata linking sheet disagrees")
    for i, name in enumerate(COMPONENTS):
        w = d.writhe(i)
        if w != 0:
            raise FamilyError("component %s has writhe %d, expected 0"
                              % (name, w))
    regions = meta.get("regions") or {}
    if set(regions) != {"A", "l3"}:
        raise FamilyError("asset must carry regions 'A' and 'l3'")
    edges = d.edges()

    disk = TwistRegion.from_json(regions["l3"])
    if disk.kind != "disk" or disk.anchor != "l3":
        raise FamilyError("region 'l3' must be a disk anchored at l3")
    radii = (disk.geometry or {}).get("radii")
    if not radii or len(radii) != len(disk.strands):
        raise FamilyError("disk region needs one radius per strand")
    if sorted(radii) != radii or len(set(radii)) != len(radii):
        raise FamilyError("disk radii must increase strictly")
    comps = []
    for e, dirn in disk.strands:
        if e not in edges:
            raise FamilyError("disk strand edge %d not in diagram" % e)
        if dirn != 1:
            raise FamilyError("disk strands must all run positively")
        comps.append(d.comp_names[d.comp_of(e)])
    if comps != ["l2", "k", "l1"]:
        raise FamilyError("disk strands must be l2, k, l1 from the hub out, "
                          "got %r" % (comps,))

    ann = TwistRegion.from_json(regions["A"])
    if ann.kind != "annulus" or set(ann.boundary or ()) != {"l1", "l2"}:
        raise FamilyError("region 'A' must be an annulus between l1 and l2")
    geom = ann.geometry or {}
    verts = geom.get("verticals") or []
    gate = geom.get("gate") or {}
    if len(verts) != 4:
        raise FamilyError("annulus geometry needs the four k passages")
    seen_r = set()
    seen_a = set()
    for v in verts:
        if v["edge"] not in edges or d.comp_of(v["edge"]) != 0:
            raise FamilyError("annulus passage edge %d is not on k" % v["edge"])
        if v["radius"] in seen_r or v["angle"] in seen_a:
            raise FamilyError("annulus passages must have distinct places")
        if not 0 < v["angle"] < 36000:
            raise FamilyError("annulus passage angle out of range")
        seen_r.add(v["radius"])
        seen_a.add(v["angle"])
    for key, comp in (("south_edge", 3), ("north_edge", 3), ("dip_edge", 0)):
        e = gate.get(key)
        if e not in edges or d.comp_of(e) != comp:
            raise FamilyError("gate %s must lie on component %d" % (key, comp))
    if gate["dip_radius"] in seen_r:
        raise FamilyError("dip radius must avoid the passage radii")
    return disk, ann


def load_base():
    """The bundled link diagram with its regions and annotations."""
    global _BASE
    if _BASE is None:
        pd_text, meta = _load_raw()
        from .diagram import parse_pd

        d = parse_pd(pd_text)
        disk, ann = validate_base(d, meta)
        _BASE = (d, {"A": ann, "l3": disk}, meta.get("annotations") or {})
    return _BASE


def base_presentation():
    """L with every component unfilled."""
    d, regions, notes = load_base()
    return SurgeryPresentation(COMPONENTS, [None] * 4, EXPECTED_LINKING,
                               diagram=d, regions=regions, annotations=notes,
                               label="L")


def _presentation(slopes, with_diagram, label):
    if with_diagram:
        d, regions, notes = load_base()
        return SurgeryPresentation(COMPONENTS, slopes, EXPECTED_LINKING,
                                   diagram=d, regions=regions,
                                   annotations=notes, label=label)
    notes = load_base()[2]
    return SurgeryPresentation(COMPONENTS, slopes, EXPECTED_LINKING,
                               annotations=notes, label=label)


def knot_presentation(m, n, with_diagram=True):
    """L(*, -1/m, 1/m, -1/n): the filling that carves out the knot k(m, n).

    Any integers m, n are accepted; a negative m means the annulus is
    twisted the other way, and -1/0 normalizes to the meridian 1/0.
    """
    m = int(m)
    n = int(n)
    slopes = [None, Slope(-1, m), Slope(1, m), Slope(-1, n)]
    return _presentation(slopes, with_diagram, "k(%d,%d)" % (m, n))


def surgered_presentation(m, n, with_diagram=True):
    """L(0/1, -1/m, 1/m, -1/n): zero surgery on k inside the filling."""
    m = int(m)
    n = int(n)
    slopes = [Slope(0, 1), Slope(-1, m), Slope(1, m), Slope(-1, n)]
    return _presentation(slopes, with_diagram, "S(%d,%d)" % (m, n))


def _knot_moves(m, n):
    return [
        ("annulus", "l1", "l2", m),
        ("delete", "l1"),
        ("delete", "l2"),
        ("rolfsen", "l3", n),
        ("delete", "l3"),
    ]


def knot_trace(m, n, with_diagram=True):
    """Blow down everything but k, one checked move at a time.

    The annulus twists are applied before l1 and l2 are deleted; the l3
    disk twists come last, once the disk holds only k strands.  Each
    step recomputes homology and, when a diagram rides along, pairwise
    linking numbers, so the returned trace is self-certifying.
    """
    pres = knot_presentation(m, n, with_diagram=with_diagram)
    return apply_move_script(pres, _knot_moves(m, n))


def expected_knot_crossings(m, n):
    """Crossing count of the generated k(m, n) diagram.

    Zero for m = 0.  Otherwise each of the |m| annulus passes leaves 16
    self-crossings of k (12 spoke crossings and 4 dip crossings), the
    exit connectors add 4|m| - 2 more, and the l3 disk then carries
    1 + 4|m| strands of k through |n| full twists.
    """
    mm = abs(int(m))
    n = int(n)
    if mm == 0:
        return 0
    s = 1 + 4 * mm
    return 16 * mm + (4 * mm - 2) + abs(n) * s * (s - 1)


def knot_diagram(m, n):
    """A PD diagram of the knot k(m, n) alone."""
    trace = knot_trace(m, n, with_diagram=True)
    d = trace.final.diagram
    if d.component_count() != 1:
        raise FamilyError("pipeline left %d components" % d.component_count())
    want = expected_knot_crossings(m, n)
    if len(d.crossings) != want:
        raise FamilyError("k(%d,%d) diagram has %d crossings, expected %d"
                          % (m, n, len(d.crossings), want))
    return LinkDiagram(d.crossings, loops=d.loops,
                       name="k(%d,%d)" % (m, n), comp_names=["k"])


def export_knot_dt(m, n):
    """DT text of the generated k(m, n) diagram."""
    return dt_export(knot_diagram(m, n))


def induced_surgery_slope(m, n):
    """The slope on k(m, n) that the ambient filling of L induces.

    Computed from the orientation bookkeeping of the blow-down: after
    the l3 twists the two annulus boundaries each link k exactly
    lk'(k, li) times, and the two sheets of the swept annulus carry
    signs eps1, eps2, so the framing picked up by k is
    -(eps1*lk'(k, l1) + eps2*lk'(k, l2)) / 2.  The result is checked
    against the torsion of the surgered manifold before returning.
    """
    pres = surgered_presentation(m, n, with_diagram=False)
    after = pres.rolfsen_twist("l3", n)
    eps = (load_base()[2].get("p_orientation") or {}).get("eps", [-1, -1])
    total = eps[0] * after.lk("k", "l1") + eps[1] * after.lk("k", "l2")
    if total % 2:
        raise FamilyError("orientation bookkeeping gave an odd framing sum")
    alpha = -total // 2
    rank, torsion = pres.first_homology()
    if n == 0:
        ok = rank == 1 and not torsion
    elif abs(n) == 1:
        ok = rank == 0 and not torsion
    else:
        ok = rank == 0 and torsion == (abs(n),)
    if not ok or alpha != n:
        raise FamilyError(
            "induced slope %d/1 inconsistent with homology %r of %s"
            % (alpha, (rank, torsion), pres.describe()))
    return Slope(alpha, 1)


def s3_evidence(m, n):
    """Certify that the unfilled presentation of k(m, n) lives in S^3.

    Runs the blow-down in the other order (l3 first, then the annulus)
    on L(*, -1/m, 1/m, -1/n), requiring the ambient manifold to stay a
    homology sphere at every step and to end as the empty surgery.
    Returns the checked trace.
    """
    pres = knot_presentation(m, n, with_diagram=False)
    moves = [
        ("rolfsen", "l3", n),
        ("delete", "l3"),
        ("annulus", "l1", "l2", m),
        ("delete", "l1"),
        ("delete", "l2"),
    ]
    trace = apply_move_script(pres, moves, check_ambient=True)
    final = trace.final
    if final.comps != ["k"] or final.slopes != [None]:
        raise FamilyError("blow-down did not end at the bare knot")
    if not final.is_homology_sphere():
        raise FamilyError("final ambient manifold is not a homology sphere")
    return trace


def same_surgery_evidence(n, m1, m2):
    """Move-script evidence that k(m1, n) and k(m2, n) share a surgery.

    Zero-framed k caps the annulus, so twisting along it is allowed in
    the surgered picture; m twists undo the -1/m, 1/m fillings exactly.
    Both presentations reach the identical two-component normal form,
    which is returned with the traces.
    """
    reports = []
    for m in (m1, m2):
        pres = surgered_presentation(m, n, with_diagram=False)
        if pres.slope("k") != Slope(0, 1):
            raise MoveError("annulus capping needs k filled with 0/1")
        moves = [
            ("annulus", "l1", "l2", m),
            ("delete", "l1"),
            ("delete", "l2"),
        ]
        reports.append(apply_move_script(pres, moves))
    final1, final2 = reports[0].final, reports[1].final
    normal = SurgeryPresentation(
        ["k", "l3"], [Slope(0, 1), Slope(-1, n)],
        [[0, 1], [1, 0]])
    match = (final1 == final2 == normal
             and final1.first_homology() == final2.first_homology())
    return {
        "n": n,
        "m": (m1, m2),
        "traces": reports,
        "normal_form": normal,
        "match": match,
        "induced_slopes": [str(induced_surgery_slope(m1, n)),
                           str(induced_surgery_slope(m2, n))],
    }
