"""Emit the bundled four-component link asset and its region metadata.

The link is constructed from an explicit event table: each component's
journey is a cyclic sequence of crossings with over/under roles and
geometrically derived signs (right-handed frame, sign = det of the
over then under tangents).  Edges are numbered consecutively along
every component, so the canonical serialization keeps the labels that
the region payloads reference.

Run from the repository root:

    python tools/generate_asset.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from surgeon.diagram import (  # noqa: E402
    LinkDiagram,
    TwistRegion,
    make_crossing,
    parse_pd,
    serialize_pd,
)

# (name, under (in, out), over (in, out), sign)
CROSSINGS = [
    ("X1", (7, 8), (16, 17), -1),
    ("X2", (8, 9), (17, 18), 1),
    ("X3", (18, 19), (9, 10), 1),
    ("X4", (19, 20), (10, 11), -1),
    ("X5", (11, 12), (20, 21), -1),
    ("X6", (12, 1), (21, 22), 1),
    ("X7", (22, 23), (1, 2), 1),
    ("X8", (23, 24), (2, 3), -1),
    ("X9", (14, 15), (5, 6), 1),
    ("X10", (15, 16), (6, 7), -1),
    ("C_sk", (3, 4), (28, 29), 1),
    ("C_nk", (31, 32), (4, 5), 1),
    ("C_s1", (24, 13), (29, 30), 1),
    ("C_n1", (30, 31), (13, 14), 1),
    ("C_s2", (25, 26), (27, 28), 1),
    ("C_n2", (32, 27), (26, 25), 1),
]

COMPONENTS = ["k", "l1", "l2", "l3"]

LINKING = [
    [0, 0, 0, 1],
    [0, 0, 0, 1],
    [0, 0, 0, 1],
    [1, 1, 1, 0],
]

# the disk bounded by l3 spans the gate; strands listed hub outward
DISK = TwistRegion(
    "disk",
    [(26, 1), (4, 1), (13, 1)],
    anchor="l3",
    geometry={"radii": [10, 25, 40]},
)

# the annulus between l1 and l2; k passes through it four times
ANNULUS = TwistRegion(
    "annulus",
    [],
    boundary=("l1", "l2"),
    geometry={
        "verticals": [
            {"edge": 7, "down": True, "tilt": 1, "angle": 7200, "radius": 28},
            {"edge": 11, "down": True, "tilt": 1, "angle": 21600, "radius": 26},
            {"edge": 1, "down": False, "tilt": -1, "angle": 28800, "radius": 24},
            {"edge": 9, "down": False, "tilt": -1, "angle": 14400, "radius": 22},
        ],
        "gate": {
            "south_edge": 28,
            "south_angle": 35800,
            "north_edge": 32,
            "north_angle": 200,
            "dip_edge": 4,
            "dip_radius": 25,
            "dip_south_angle": 35900,
            "dip_north_angle": 100,
        },
    },
)

ANNOTATIONS = {
    "unknotted": ["k", "l1", "l2", "l3"],
    "p_orientation": {"eps": [-1, -1]},
}


def build():
    xs = []
    for _, (ui, uo), (oi, oo), s in CROSSINGS:
        xs.append(make_crossing(ui, uo, oi, oo, s))
    return LinkDiagram(xs, name="L", comp_names=COMPONENTS)


def check(d):
    assert d.comp_names == COMPONENTS, d.comp_names
    assert len(d.crossings) == 16
    assert d.linking_table() == LINKING, d.linking_table()
    for i, name in enumerate(COMPONENTS):
        assert d.writhe(i) == 0, (name, d.writhe(i))
    assert d.total_writhe() == sum(s for *_, s in CROSSINGS)

    cycles = d.components
    assert [len(c) for c in cycles] == [12, 12, 2, 6], cycles
    assert cycles[0] == list(range(1, 13))
    assert cycles[1] == list(range(13, 25))
    assert cycles[2] == [25, 26]
    assert cycles[3] == list(range(27, 33))

    # the canonical labels are the construction labels
    assert d.canonical().components == cycles

    text = serialize_pd(d)
    back = parse_pd(text)
    assert back == d.canonical(), "serialization round trip failed"

    for e, dirn in DISK.strands:
        assert e in d.edges() and dirn == 1
    assert [d.comp_of(e) for e, _ in DISK.strands] == [2, 0, 1]
    geom = ANNULUS.geometry
    for v in geom["verticals"]:
        assert d.comp_of(v["edge"]) == 0, v
    gate = geom["gate"]
    assert d.comp_of(gate["south_edge"]) == 3
    assert d.comp_of(gate["north_edge"]) == 3
    assert d.comp_of(gate["dip_edge"]) == 0
    return text


def main():
    root = os.path.join(os.path.dirname(__file__), "..")
    d = build()
    text = check(d)

    meta = {
        "format": "family/1",
        "linking": LINKING,
        "crossings": 16,
        "regions": {"A": ANNULUS.to_json(), "l3": DISK.to_json()},
        "annotations": ANNOTATIONS,
    }

    pkg_assets = os.path.join(root, "src", "surgeon", "assets")
    repo_assets = os.path.join(root, "assets")
    os.makedirs(pkg_assets, exist_ok=True)
    os.makedirs(repo_assets, exist_ok=True)
    with open(os.path.join(pkg_assets, "L.pd"), "w") as f:
        f.write(text + "\n")
    with open(os.path.join(pkg_assets, "family.json"), "w") as f:
        json.dump(meta, f, indent=1, sort_keys=True)
        f.write("\n")
    with open(os.path.join(repo_assets, "L.pd"), "w") as f:
        f.write(text + "\n")
    print("wrote %d crossings, linking table ok, writhes ok" % len(d.crossings))


if __name__ == "__main__":
    main()
