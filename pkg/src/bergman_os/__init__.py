"""Exact-arithmetic Bergman fans, Orlik-Solomon algebras, and tropical
(co)homology lattices of matroids.

The package computes, entirely over the integers:

- matroids from circuits, graphs, or integer matrices, with flats, flags,
  and an exact rank oracle (``matroids``, ``fixtures``);
- exterior algebra over Z and canonical (Hermite-form) subgroup arithmetic
  in its graded pieces (``exterior``, ``lattices``, ``intlinalg``);
- the fan of flats of a matroid and its Bergman quotient fan, the tropical
  homology lattices F_k of these and of arbitrary integral fans, balancing,
  and the graded-ideal property of the annihilators (``fans``);
- the Orlik-Solomon ideal, its flat restrictions, and the projective
  variant on the difference sublattice (``orlik_solomon``);
- a verification battery certifying that the annihilator of tropical
  homology is exactly the Orlik-Solomon ideal, degreewise and with perfect
  integral pairings (``verify``), exposed through the ``bergman-os`` CLI
  (``cli``).
"""

from .errors import (
    AmbientMismatch,
    CircuitAxiomViolation,
    DegreeMismatch,
    LoopDetected,
    NotAFlat,
    NotPure,
    SizeLimitExceeded,
)
from .exterior import (
    Multivector,
    boundary,
    embed_mod_first,
    in_difference_subalgebra,
    monomials,
    pairing,
    project_mod_top,
    restrict_mod_first,
    span,
    top_vector,
    wedge,
    wedge_top,
)
from .fans import (
    Cone,
    Fan,
    build_affine_fan,
    build_bergman_fan,
    check_balanced,
    check_ideal_property,
    distinct_wedges_up_to_sign,
    fan_from_json,
    fan_statistics,
    fk_cohomology,
    fk_flag_generators,
    fk_lattice,
    load_fan_file,
)
from .fixtures import get_fixture, fixture_names, matroid_from_json, load_matroid_file
from .lattices import LatticeSubgroup
from .matroids import Flat, FlagOfFlats, Matroid
from .orlik_solomon import (
    OSAlgebraSummary,
    OSIdealDegree,
    os0_ideal_degree,
    os_ideal_degree,
    os_ideal_oracle,
    os_restricted_ideal,
    os_summary,
    report_fragments,
)
from .verify import (
    VerificationReport,
    verify_lemmas,
    verify_matroid,
    verify_theorem_affine,
    verify_theorem_projective,
)
from .version import __version__

__all__ = [
    "AmbientMismatch", "CircuitAxiomViolation", "DegreeMismatch",
    "LoopDetected", "NotAFlat", "NotPure", "SizeLimitExceeded",
    "Multivector", "boundary", "embed_mod_first", "in_difference_subalgebra",
    "monomials", "pairing", "project_mod_top", "restrict_mod_first", "span",
    "top_vector", "wedge", "wedge_top",
    "Cone", "Fan", "build_affine_fan", "build_bergman_fan", "check_balanced",
    "check_ideal_property", "distinct_wedges_up_to_sign", "fan_from_json",
    "fan_statistics", "fk_cohomology", "fk_flag_generators", "fk_lattice",
    "load_fan_file",
    "get_fixture", "fixture_names", "matroid_from_json", "load_matroid_file",
    "LatticeSubgroup",
    "Flat", "FlagOfFlats", "Matroid",
    "OSAlgebraSummary", "OSIdealDegree", "os0_ideal_degree", "os_ideal_degree",
    "os_ideal_oracle", "os_restricted_ideal", "os_summary", "report_fragments",
    "VerificationReport", "verify_lemmas", "verify_matroid",
    "verify_theorem_affine", "verify_theorem_projective",
    "__version__",
]
