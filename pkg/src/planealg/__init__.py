"""Finite affine planes, their translation groups, and the skew-field of
trace-preserving endomorphisms, with machine-checked verification."""

__version__ = "0.1.0"

from .collineations import (
    Dilation,
    Translation,
    classify_dilation,
    classify_translation,
    compose,
    dilations_fixing,
    enumerate_dilations,
    enumerate_translations,
    extend_dilation_fixing,
    extend_translation,
    identity_perm,
    inverse,
    is_collineation,
    trace_line,
)
from .endos import (
    Endo,
    endo_add,
    endo_compose,
    endo_conjugation,
    endo_from_dict,
    endo_inversion,
    endo_negate,
    endo_one,
    endo_to_dict,
    endo_zero,
    homomorphism_witness,
    is_group_endomorphism,
    is_trace_preserving,
    trace_witness,
)
from .errors import (
    ClosureError,
    FieldError,
    PlaneFormatError,
    RecoveryError,
    UncheckedPlaneError,
)
from .fields import FiniteField, gf
from .incidence import AffinePlane, load_plane
from .planes import ag2, point_id, point_xy
from .reports import Check, VerificationReport
from .skewfield import (
    EndoAlgebra,
    brute_force_trace_preserving,
    check_commutativity,
    generate_trace_preserving,
    invert,
    recover_dilation,
    verify_skew_field,
)
from .trgroup import (
    TranslationGroup,
    build_translation_group,
    translation_taking,
    verify_abelian,
    verify_conjugation_direction,
    verify_direction_closure,
    verify_normal_in_dilations,
)

__all__ = [
    "AffinePlane",
    "Check",
    "ClosureError",
    "Dilation",
    "Endo",
    "EndoAlgebra",
    "FieldError",
    "FiniteField",
    "PlaneFormatError",
    "RecoveryError",
    "Translation",
    "TranslationGroup",
    "UncheckedPlaneError",
    "VerificationReport",
    "__version__",
    "ag2",
    "brute_force_trace_preserving",
    "build_translation_group",
    "check_commutativity",
    "classify_dilation",
    "classify_translation",
    "compose",
    "dilations_fixing",
    "endo_add",
    "endo_compose",
    "endo_conjugation",
    "endo_from_dict",
    "endo_inversion",
    "endo_negate",
    "endo_one",
    "endo_to_dict",
    "endo_zero",
    "enumerate_dilations",
    "enumerate_translations",
    "extend_dilation_fixing",
    "extend_translation",
    "generate_trace_preserving",
    "gf",
    "homomorphism_witness",
    "identity_perm",
    "invert",
    "inverse",
    "is_collineation",
    "is_group_endomorphism",
    "is_trace_preserving",
    "load_plane",
    "point_id",
    "point_xy",
    "recover_dilation",
    "trace_line",
    "trace_witness",
    "translation_taking",
    "verify_abelian",
    "verify_conjugation_direction",
    "verify_direction_closure",
    "verify_normal_in_dilations",
    "verify_skew_field",
]
