"""Finite biracks and birack counting invariants of classical and virtual links.

The library builds and verifies finite biracks (solutions of the
set-theoretic Yang-Baxter equation with strong invertibility), parses
link diagrams given as Kauffman-style signed Gauss codes, enumerates
birack labelings by constraint propagation, and computes the integral,
writhe-enhanced, image-enhanced and polynomial-enhanced counting
invariants together with their normalized variants.
"""

from .core import (
    BirackClass,
    CheckResult,
    FiniteBirack,
    ValidationReport,
    all_subbiracks,
    classify,
    cycle_string,
    enumerate_biracks,
    format_matrix,
    from_matrix,
    is_subbirack,
    parse_cycles,
    parse_matrix_text,
    read_matrix_file,
    subbirack_closure,
    to_matrix,
    verify_axioms,
)
from .diagram import (
    Diagram,
    Pass,
    parse_gauss,
    unlink,
    with_framing,
    writhe_vector,
)
from .errors import (
    AxiomViolation,
    BadPairing,
    BirackError,
    ConstructionError,
    KindMismatch,
    LengthMismatch,
    NotASubbirack,
    ParseError,
    SizeTooLarge,
)
from .families import CayleyGroup, constant_action, tau_sigma_rho_birack, tsr_birack
from .homsearch import Labeling, count_labelings, enumerate_labelings, labeling_image
from .invariants import (
    InvariantValue,
    birack_polynomial,
    compute_invariant,
    labelings_by_framing,
    normalize,
    phi_image,
    phi_integral,
    phi_rho,
    phi_writhe,
    subbirack_polynomial,
)
from .poly import MultiPoly, NestedPoly, parse_multipoly, parse_nestedpoly

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "BadPairing",
    "BirackClass",
    "BirackError",
    "CayleyGroup",
    "CheckResult",
    "ConstructionError",
    "Diagram",
    "FiniteBirack",
    "InvariantValue",
    "KindMismatch",
    "Labeling",
    "LengthMismatch",
    "MultiPoly",
    "NestedPoly",
    "NotASubbirack",
    "ParseError",
    "Pass",
    "SizeTooLarge",
    "ValidationReport",
    "all_subbiracks",
    "birack_polynomial",
    "classify",
    "compute_invariant",
    "constant_action",
    "count_labelings",
    "cycle_string",
    "enumerate_biracks",
    "enumerate_labelings",
    "format_matrix",
    "from_matrix",
    "is_subbirack",
    "labeling_image",
    "labelings_by_framing",
    "normalize",
    "parse_cycles",
    "parse_gauss",
    "parse_matrix_text",
    "parse_multipoly",
    "parse_nestedpoly",
    "phi_image",
    "phi_integral",
    "phi_rho",
    "phi_writhe",
    "read_matrix_file",
    "subbirack_closure",
    "subbirack_polynomial",
    "tau_sigma_rho_birack",
    "to_matrix",
    "tsr_birack",
    "unlink",
    "verify_axioms",
    "with_framing",
    "writhe_vector",
]
