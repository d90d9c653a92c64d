"""Exact arithmetic for Dehn-surgery presentations of 3-manifolds.

The package covers five layers that build on each other:

- diagram: planar link diagrams in PD notation, linking numbers,
  writhes, DT codes, and the two geometric twist insertions.
- surgery: slopes, surgery presentations, first homology via Smith
  normal form, and the checked Kirby-style moves.
- family: the bundled 4-component link, the twist-parameterized knots
  carved out of it, and the machine-checkable evidence reports.
- invariants: Wirtinger presentations, Fox calculus, and Alexander
  polynomials over exact Laurent arithmetic.
- cli: the `surgeon` command line front end with a content-addressed
  result cache.
"""

from surgeon.diagram import (
    DiagramError,
    LinkDiagram,
    TwistRegion,
    dt_code,
    dt_export,
    check_dt_text,
    insert_annulus_twists,
    insert_full_twists,
    parse_pd,
    remove_component,
    serialize_pd,
)
from surgeon.surgery import (
    MoveError,
    Slope,
    SurgeryError,
    SurgeryPresentation,
    Trace,
    apply_move_script,
    cable_surgery_reduction,
    format_homology,
    format_slope,
    parse_slope,
)
from surgeon.family import (
    FamilyError,
    base_presentation,
    export_knot_dt,
    induced_surgery_slope,
    knot_diagram,
    knot_presentation,
    knot_trace,
    s3_evidence,
    same_surgery_evidence,
    surgered_presentation,
)
from surgeon.invariants import (
    GroupPresentation,
    alexander_polynomial,
    determinant,
    wirtinger,
)
from surgeon.poly import BACKEND, LaurentPoly

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DiagramError",
    "FamilyError",
    "GroupPresentation",
    "LaurentPoly",
    "LinkDiagram",
    "MoveError",
    "Slope",
    "SurgeryError",
    "SurgeryPresentation",
    "Trace",
    "TwistRegion",
    "alexander_polynomial",
    "apply_move_script",
    "base_presentation",
    "cable_surgery_reduction",
    "check_dt_text",
    "determinant",
    "dt_code",
    "dt_export",
    "export_knot_dt",
    "format_homology",
    "format_slope",
    "induced_surgery_slope",
    "insert_annulus_twists",
    "insert_full_twists",
    "knot_diagram",
    "knot_presentation",
    "knot_trace",
    "parse_pd",
    "parse_slope",
    "remove_component",
    "s3_evidence",
    "same_surgery_evidence",
    "serialize_pd",
    "surgered_presentation",
    "wirtinger",
    "__version__",
]
