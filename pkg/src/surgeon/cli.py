"""Command line front end.

Exit codes: 0 on success, 1 when the input is mathematically invalid
(bad diagram, bad slope, failed move), 2 on usage errors.  Every
subcommand that prints structured data accepts --json and emits one
stable, sorted object per run.
"""

import argparse
import json
import sys

from . import __version__, family
from .cache import cache_get, cache_put, key_for
from .diagram import DiagramError, check_dt_text, parse_pd, serialize_pd
from .invariants import alexander_polynomial, determinant
from .surgery import (SurgeryError, SurgeryPresentation, apply_move_script,
                      cable_surgery_reduction, format_homology, format_slope,
                      parse_slope)

FamilyError = family.FamilyError


def _emit_json(obj):
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _read_diagram(path):
    with open(path) as fh:
        return parse_pd(fh.read())


def _parse_range(text):
    """'A..B' with A <= B, either end possibly negative."""
    head, sep, tail = text.partition("..")
    if not sep:
        raise SurgeryError("range %r must look like A..B" % text)
    try:
        a, b = int(head), int(tail)
    except ValueError:
        raise SurgeryError("range %r must use integers" % text)
    if a > b:
        raise SurgeryError("range %r runs backwards" % text)
    return range(a, b + 1)


def _parse_slopes(text, count):
    """Comma list of p/q tokens; '*' leaves a component unfilled."""
    toks = [t.strip() for t in text.split(",")]
    if len(toks) != count:
        raise SurgeryError("expected %d slopes, got %d" % (count, len(toks)))
    return [None if t == "*" else parse_slope(t) for t in toks]


def _parse_move(text):
    parts = text.split(":")
    kind = parts[0]
    if kind == "rolfsen" and len(parts) == 3:
        return ("rolfsen", parts[1], int(parts[2]))
    if kind == "annulus" and len(parts) == 4:
        return ("annulus", parts[1], parts[2], int(parts[3]))
    if kind == "delete" and len(parts) == 2:
        return ("delete", parts[1])
    raise SurgeryError(
        "bad move %r; use rolfsen:c:t, annulus:c1:c2:t or delete:c" % text)


def _presentation_from_args(args):
    d = _read_diagram(args.link)
    names = d.comp_names or ["c%d" % (i + 1) for i in range(d.component_count())]
    if args.slopes is None:
        slopes = [None] * len(names)
    else:
        slopes = _parse_slopes(args.slopes, len(names))
    table = d.linking_table()
    if getattr(args, "tables_only", False):
        d = None
    annotations = None
    marked = getattr(args, "unknotted", None)
    if marked:
        if marked.strip() == "all":
            annotations = {"unknotted": list(names)}
        else:
            picked = [t.strip() for t in marked.split(",")]
            for name in picked:
                if name not in names:
                    raise SurgeryError("no component named %r" % name)
            annotations = {"unknotted": picked}
    return SurgeryPresentation(names, slopes, table, diagram=d,
                               annotations=annotations)


# -- subcommands ------------------------------------------------------------


def _cmd_parse(args):
    d = _read_diagram(args.link)
    if args.json:
        _emit_json(d.to_json())
        return 0
    names = d.comp_names or ["c%d" % (i + 1) for i in range(d.component_count())]
    print("name: %s" % (d.name or "(unnamed)"))
    print("components: %s" % " ".join(names))
    print("crossings: %d" % len(d.crossings))
    print("loops: %d" % d.loops)
    print("writhe: %d" % d.total_writhe())
    return 0


def _cmd_lk(args):
    d = _read_diagram(args.link)
    names = d.comp_names or ["c%d" % (i + 1) for i in range(d.component_count())]
    if args.comps:
        a, _, b = args.comps.partition(",")
        val = d.linking_number(a.strip(), b.strip())
        if args.json:
            _emit_json({"components": [a.strip(), b.strip()], "lk": val})
        else:
            print(val)
        return 0
    table = d.linking_table()
    if args.json:
        _emit_json({"components": names, "table": table})
        return 0
    width = max(len(n) for n in names)
    for name, row in zip(names, table):
        print("%-*s %s" % (width, name, " ".join("%3d" % v for v in row)))
    return 0


def _cmd_h1(args):
    pres = _presentation_from_args(args)
    rank, torsion = pres.first_homology()
    if args.json:
        _emit_json({"homology": format_homology(rank, torsion),
                    "rank": rank, "torsion": list(torsion)})
    else:
        print(format_homology(rank, torsion))
    return 0


def _cmd_twist(args):
    pres = _presentation_from_args(args)
    moves = [_parse_move(m) for m in args.move]
    trace = apply_move_script(pres, moves)
    final = trace.final
    homs = [format_homology(*h) for h in trace.homologies()]
    if args.json:
        _emit_json({"final": final.to_json(),
                    "steps": trace.descriptions(),
                    "homologies": homs})
        return 0
    for desc, h in zip(trace.descriptions(), homs):
        print("%-24s %s" % (desc, h))
    print("final: %s" % final.describe())
    return 0


def _cmd_family(args):
    ms = list(_parse_range(args.m_range))
    if len(ms) < 2:
        raise FamilyError("need at least two m values to compare")
    pairs = []
    all_match = True
    for i, m1 in enumerate(ms):
        for m2 in ms[i + 1:]:
            ev = family.same_surgery_evidence(args.n, m1, m2)
            all_match = all_match and ev["match"]
            pairs.append({
                "n": args.n,
                "m1": m1,
                "m2": m2,
                "h1_match": ev["match"],
                "normal_form": ev["normal_form"].describe(),
                "induced_slopes": ev["induced_slopes"],
                "traces": [{
                    "start": tr.initial.describe(),
                    "steps": tr.descriptions(),
                    "homologies": [format_homology(*h) for h in tr.homologies()],
                } for tr in ev["traces"]],
            })
    report = {
        "format": "family-report/1",
        "n": args.n,
        "m_range": [ms[0], ms[-1]],
        "pairs": pairs,
        "all_match": all_match,
    }
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.json:
        _emit_json(report)
    else:
        print("n = %d: %d surgered pairs share %s, %s"
              % (args.n, len(pairs), pairs[0]["normal_form"],
                 "all match" if all_match else "MISMATCH"))
    return 0 if all_match else 1


def _cmd_slope(args):
    if (args.normalize is None) == (args.m is None):
        raise SurgeryError("give exactly one of --normalize or --m with --n")
    if args.normalize is not None:
        s = parse_slope(args.normalize)
    else:
        if args.n is None:
            raise SurgeryError("--m needs --n")
        s = family.induced_surgery_slope(args.m, args.n)
    if args.json:
        _emit_json({"slope": format_slope(s), "p": s.p, "q": s.q})
    else:
        print(format_slope(s))
    return 0


def _cmd_cable_reduce(args):
    s = parse_slope(args.slope)
    head, _, tail = args.cable.partition(",")
    try:
        a, b = int(head), int(tail)
    except ValueError:
        raise SurgeryError("cable %r must be two integers a,b" % args.cable)
    r = cable_surgery_reduction(s, a, b)
    if args.json:
        _emit_json({"slope": format_slope(r), "p": r.p, "q": r.q})
    else:
        print(format_slope(r))
    return 0


def _alex_text(label, poly):
    return "%s: %s  (determinant %d)\n" % (label, poly, abs(int(poly(-1))))


def _alex_json(label, poly):
    obj = {"source": label,
           "polynomial": str(poly),
           "coeffs": poly.to_json(),
           "determinant": abs(int(poly(-1)))}
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _cmd_alex(args):
    if args.sweep:
        return _alex_sweep(args)
    if (args.link is None) == (args.m is None):
        raise SurgeryError("give exactly one of --link or --m with --n")
    if args.link is not None:
        d = _read_diagram(args.link)
        label = d.name or args.link
    else:
        if args.n is None:
            raise SurgeryError("--m needs --n")
        d = family.knot_diagram(args.m, args.n)
        label = d.name
    mode = "json" if args.json else "text"
    payload = "%s\x00%s" % (mode, serialize_pd(d))
    key = key_for("alex", payload)
    hit = cache_get(key, args.cache)
    if hit is not None:
        sys.stdout.write(hit.decode())
        return 0
    poly = alexander_polynomial(d)
    out = _alex_json(label, poly) if args.json else _alex_text(label, poly)
    cache_put(key, out.encode(), args.cache)
    sys.stdout.write(out)
    return 0


def _alex_sweep(args):
    if args.m_range is None or args.n_range is None:
        raise SurgeryError("--sweep needs --m-range and --n-range")
    lines = ["m,n,determinant,coeffs"]
    for m in _parse_range(args.m_range):
        for n in _parse_range(args.n_range):
            d = family.knot_diagram(m, n)
            p = alexander_polynomial(d)
            lines.append("%d,%d,%d,%s"
                         % (m, n, determinant(d), str(p).replace(" ", "")))
    text = "\n".join(lines) + "\n"
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(text)
        print("wrote %s" % args.csv)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_export(args):
    text = family.export_knot_dt(args.m, args.n)
    check_dt_text(text)
    import os

    os.makedirs(args.out, exist_ok=True)
    path = os.path.join(args.out, "k_%d_%d.dt" % (args.n, args.m))
    with open(path, "w") as fh:
        fh.write(text)
    if args.json:
        _emit_json({"path": path})
    else:
        print(path)
    return 0


def _cmd_verify(args):
    from . import _acceptance

    results = _acceptance.run_all()
    ok_all = True
    for num, label, ok, detail in results:
        ok_all = ok_all and ok
        print("criterion %2d  %-40s %s  %s"
              % (num, label, "PASS" if ok else "FAIL", detail))
    return 0 if ok_all else 1


# -- parser -----------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="surgeon",
        description="Exact surgery presentations for an annulus twist "
                    "family of knots.")
    parser.add_argument("--version", action="version",
                        version="surgeon %s" % __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true",
                       help="print one machine readable object")
        return p

    p = add("parse", _cmd_parse, "read a PD file and summarize it")
    p.add_argument("--link", required=True, metavar="FILE")

    p = add("lk", _cmd_lk, "linking numbers of a diagram")
    p.add_argument("--link", required=True, metavar="FILE")
    p.add_argument("--comps", metavar="A,B",
                   help="two component names; otherwise the full table")

    p = add("h1", _cmd_h1, "first homology of a filled diagram")
    p.add_argument("--link", required=True, metavar="FILE")
    p.add_argument("--slopes", metavar="LIST",
                   help="comma list of p/q per component, * for unfilled")

    p = add("twist", _cmd_twist, "apply a move script to a filled diagram")
    p.add_argument("--link", required=True, metavar="FILE")
    p.add_argument("--slopes", metavar="LIST")
    p.add_argument("--move", action="append", required=True, metavar="MOVE",
                   help="rolfsen:c:t, annulus:c1:c2:t or delete:c; repeatable")
    p.add_argument("--tables-only", action="store_true",
                   help="track slopes and linking numbers without the diagram")
    p.add_argument("--unknotted", metavar="LIST",
                   help="components known to bound disks (names or 'all'); "
                        "rolfsen twists refuse to run without this")

    p = add("family", _cmd_family, "pairwise shared-surgery evidence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-range", required=True, metavar="A..B")
    p.add_argument("--report", metavar="FILE",
                   help="write the full JSON report here")

    p = add("slope", _cmd_slope, "normalize a slope or compute the induced one")
    p.add_argument("--normalize", metavar="P/Q")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)

    p = add("cable-reduce", _cmd_cable_reduce,
            "translate a slope on a cable to the companion")
    p.add_argument("--slope", required=True, metavar="P/Q")
    p.add_argument("--cable", required=True, metavar="A,B")

    p = add("alex", _cmd_alex, "Alexander polynomial of a knot diagram")
    p.add_argument("--link", metavar="FILE")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--cache", metavar="DIR",
                   help="cache directory (else SURGEON_CACHE, else default)")
    p.add_argument("--sweep", action="store_true",
                   help="tabulate the family over --m-range and --n-range")
    p.add_argument("--m-range", metavar="A..B")
    p.add_argument("--n-range", metavar="A..B")
    p.add_argument("--csv", metavar="FILE", help="write the sweep here")

    p = add("export", _cmd_export, "write a DT code file for one family knot")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=".", metavar="DIR")

    add("verify", _cmd_verify, "run the built in acceptance checks")
    return parser


_DASH_VALUE_FLAGS = {"--slope", "--normalize", "--slopes", "--cable",
                     "--m-range", "--n-range", "--comps"}


def _merge_dash_values(argv):
    """Join FLAG VALUE into FLAG=VALUE when VALUE starts with a dash.

    Slopes and ranges routinely begin with a minus sign, which argparse
    would otherwise read as another option.
    """
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _DASH_VALUE_FLAGS and i + 1 < len(argv) \
                and argv[i + 1].startswith("-"):
            out.append("%s=%s" % (tok, argv[i + 1]))
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv=None):
    """Entry point returning an exit code instead of raising SystemExit."""
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_dash_values(list(argv)))
    except SystemExit as exc:
        code = exc.code
        return int(code) if code else 0
    try:
        return args.func(args)
    except (DiagramError, SurgeryError, FamilyError) as exc:
        print("surgeon: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("surgeon: %s" % exc, file=sys.stderr)
        return 1


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
