"""Combinatorial maps on the sphere and projectivity of checkerboard links."""

from .errors import (
    ContradictionError,
    MalformedPairing,
    MalformedRotations,
    MapError,
    NotAntipodallySelfDual,
    NotAWitness,
    NotConnected,
    NotEulerian,
    NotProjective,
    NotSpherical,
    PoleInput,
    TooLarge,
)
from .laurent import Laurent
from .maps import (
    MapIsomorphism,
    MedialMap,
    PlanarMap,
    all_isomorphisms,
    build_map,
    is_isomorphic,
    map_from_dict,
    map_to_dict,
    map_to_dot,
)
from .symmetry import (
    AntipodalWitness,
    antipodal_involutions,
    antipodal_self_dualities,
    automorphisms,
    is_antipodally_self_dual,
    is_antipodally_symmetric,
    is_self_dual,
)
from .links import (
    EdgeSignedMap,
    LabeledMedial,
    LinkDiagram,
    bracket_by_skein,
    checkerboard,
    component_count,
    diagram_to_tait,
    gauss_code,
    is_alternating_signature,
    kauffman_bracket,
    labeled_medial,
    parse_pd_text,
    signed_isomorphic,
    tait_to_diagram,
)
from .projective import (
    ProjectivityReport,
    WitnessClassification,
    antipodal_inversion_residual,
    check_projective,
    classify_witness,
    duality_color_reversal,
    max_residual_over_sample,
    nonalternating_criterion,
)
from .incidence import (
    IncidenceMap,
    SymmetricCycle,
    incidence_graph,
    parity_consistency,
    symmetric_cycles,
)
from .catalog import CatalogEntry, load_catalog, run_regression

__version__ = "0.1.0"

__all__ = [
    "AntipodalWitness",
    "CatalogEntry",
    "ContradictionError",
    "EdgeSignedMap",
    "IncidenceMap",
    "LabeledMedial",
    "Laurent",
    "LinkDiagram",
    "MalformedPairing",
    "MalformedRotations",
    "MapError",
    "MapIsomorphism",
    "MedialMap",
    "NotAntipodallySelfDual",
    "NotAWitness",
    "NotConnected",
    "NotEulerian",
    "NotProjective",
    "NotSpherical",
    "PlanarMap",
    "PoleInput",
    "ProjectivityReport",
    "SymmetricCycle",
    "TooLarge",
    "WitnessClassification",
    "all_isomorphisms",
    "antipodal_inversion_residual",
    "antipodal_involutions",
    "antipodal_self_dualities",
    "automorphisms",
    "bracket_by_skein",
    "build_map",
    "check_projective",
    "checkerboard",
    "classify_witness",
    "component_count",
    "diagram_to_tait",
    "duality_color_reversal",
    "gauss_code",
    "incidence_graph",
    "is_alternating_signature",
    "is_antipodally_self_dual",
    "is_antipodally_symmetric",
    "is_isomorphic",
    "is_self_dual",
    "kauffman_bracket",
    "labeled_medial",
    "load_catalog",
    "map_from_dict",
    "map_to_dict",
    "map_to_dot",
    "max_residual_over_sample",
    "nonalternating_criterion",
    "parity_consistency",
    "parse_pd_text",
    "run_regression",
    "signed_isomorphic",
    "symmetric_cycles",
    "tait_to_diagram",
]
