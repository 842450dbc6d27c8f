"""Tight contact structures from surgeries on chain-twist surface bundles.

The package works with monodromies of the form

    t_{a_1}^m t_{a_2} ... t_{a_2g} t_{a_{2g+1}}^n

for the standard chain of curves on a genus g surface.  It provides symbolic
orbit certificates for pseudo-Anosov behaviour, first homology of the mapping
torus and of surgeries along a section, and compilation of rational contact
surgeries into Legendrian chain diagrams with tightness verdicts.
"""

from .abelian import AbelianGroupInvariant, presentation_cokernel, smith_normal_form
from .certify import (
    WINDOW_LENGTH_MAX,
    BundleHyperbolic,
    ChainCurve,
    DeferredTwist,
    HyperbolicityReport,
    OrbitResult,
    PaBasis,
    PaCertificate,
    family_orbit_word,
    fathi_certificate,
    hyperbolicity_report,
    symbolic_orbit,
)
from .curves import (
    Crossing,
    EmbeddedCurveSystem,
    FaceReport,
    FillingResult,
    InvalidCurveSystemError,
    bigon_scan,
    build_chain_system,
    check_filling,
    trace_faces,
)
from .homology import (
    CBVerdict,
    FramingConvention,
    FRAMING_CONVENTIONS,
    SymplecticBasis,
    casson_bleiler_check,
    chain_class,
    char_poly,
    ensure_rational,
    mapping_torus_h1,
    surgered_h1,
    transvection_matrix,
    word_action,
)
from .surgery import (
    BackgroundDescriptor,
    CFExpansion,
    ChainComponent,
    ContactDiagram,
    LegendrianData,
    SurgerySpec,
    TightnessKind,
    TightnessVerdict,
    background_descriptor,
    binding_realizations,
    chain_linking_h1,
    compile_contact_diagram,
    contact_coefficient,
    diagram_h1,
    negative_cf_expansion,
    surgered_h1_via_chain,
    tightness_verdict,
    tridiagonal_determinant,
    tridiagonal_linking_matrix,
)
from .words import (
    FamilyParams,
    SurfaceSpec,
    TwistLetter,
    TwistWord,
    build_monodromy,
    chain_distance,
    commutation_normal_form,
    compose,
    conjugation_normal_form,
    curve_name,
    free_reduce,
    invert,
    parse_curve_name,
    parse_word,
    twists_commute,
    word_to_text,
    words_equivalent,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupInvariant",
    "BackgroundDescriptor",
    "BundleHyperbolic",
    "CBVerdict",
    "CFExpansion",
    "ChainComponent",
    "ChainCurve",
    "ContactDiagram",
    "Crossing",
    "DeferredTwist",
    "EmbeddedCurveSystem",
    "FRAMING_CONVENTIONS",
    "FaceReport",
    "FamilyParams",
    "FillingResult",
    "FramingConvention",
    "HyperbolicityReport",
    "InvalidCurveSystemError",
    "LegendrianData",
    "OrbitResult",
    "PaBasis",
    "PaCertificate",
    "SurfaceSpec",
    "SurgerySpec",
    "SymplecticBasis",
    "TightnessKind",
    "TightnessVerdict",
    "TwistLetter",
    "TwistWord",
    "WINDOW_LENGTH_MAX",
    "background_descriptor",
    "bigon_scan",
    "binding_realizations",
    "build_chain_system",
    "build_monodromy",
    "casson_bleiler_check",
    "chain_class",
    "chain_distance",
    "chain_linking_h1",
    "char_poly",
    "check_filling",
    "commutation_normal_form",
    "compile_contact_diagram",
    "compose",
    "conjugation_normal_form",
    "contact_coefficient",
    "curve_name",
    "diagram_h1",
    "ensure_rational",
    "family_orbit_word",
    "fathi_certificate",
    "free_reduce",
    "hyperbolicity_report",
    "invert",
    "mapping_torus_h1",
    "negative_cf_expansion",
    "parse_curve_name",
    "parse_word",
    "presentation_cokernel",
    "smith_normal_form",
    "surgered_h1",
    "surgered_h1_via_chain",
    "symbolic_orbit",
    "tightness_verdict",
    "transvection_matrix",
    "tridiagonal_determinant",
    "tridiagonal_linking_matrix",
    "twists_commute",
    "word_action",
    "word_to_text",
    "words_equivalent",
]
