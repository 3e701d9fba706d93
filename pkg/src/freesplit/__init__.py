"""Exact splitting of free summands off finitely presented modules over polynomial rings."""

from .coefficients import GF, QQ, FieldElement, PrimeField, RationalField, field_arith, field_inverse
from .errors import (
    ArityMismatch,
    CertificateError,
    FieldMismatch,
    FreesplitError,
    Inconclusive,
    NoFieldElementLeft,
    NotAField,
    NotAFunctional,
    NotIso,
    NotUnivariate,
    NotWellDefined,
    RingMismatch,
    ZeroPolynomial,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    Submodule,
    buchberger,
    eliminate,
    intersect,
    krull_dim,
    normal_form,
    quotient,
    saturate,
    syzygies,
)
from .modules import (
    HomFunctional,
    HomSubmodule,
    MaximalIdeal,
    ModuleElement,
    Morphism,
    PresentedModule,
    RationalPoint,
    delta_at,
    direct_sum,
    fitting_ideal,
    hom_apply,
    hom_dual,
    ideal_as_module,
    morphism_check,
    morphism_is_iso,
    mu_at,
    snf_decompose,
    trace_ideal,
)
from .polyring import Cmp, FreeVector, MonomialOrder, PolyRing, Polynomial, mono_compare
from .splitter import (
    ObstructionReport,
    SplitCertificate,
    SymPresentation,
    avoid_primes,
    bass_cancel,
    free_basic_certificate,
    huneke_rossi_check,
    minimal_generator_check,
    projective_unimodular_element,
    split_off,
    split_search,
    sym_presentation,
)

__all__ = [
    "GF",
    "QQ",
    "FieldElement",
    "PrimeField",
    "RationalField",
    "field_arith",
    "field_inverse",
    "ArityMismatch",
    "CertificateError",
    "FieldMismatch",
    "FreesplitError",
    "Inconclusive",
    "NoFieldElementLeft",
    "NotAField",
    "NotAFunctional",
    "NotIso",
    "NotUnivariate",
    "NotWellDefined",
    "RingMismatch",
    "ZeroPolynomial",
    "GroebnerBasis",
    "Ideal",
    "Submodule",
    "buchberger",
    "eliminate",
    "intersect",
    "krull_dim",
    "normal_form",
    "quotient",
    "saturate",
    "syzygies",
    "HomFunctional",
    "HomSubmodule",
    "MaximalIdeal",
    "ModuleElement",
    "Morphism",
    "PresentedModule",
    "RationalPoint",
    "delta_at",
    "direct_sum",
    "fitting_ideal",
    "hom_apply",
    "hom_dual",
    "ideal_as_module",
    "morphism_check",
    "morphism_is_iso",
    "mu_at",
    "snf_decompose",
    "trace_ideal",
    "Cmp",
    "FreeVector",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "mono_compare",
    "ObstructionReport",
    "SplitCertificate",
    "SymPresentation",
    "avoid_primes",
    "bass_cancel",
    "free_basic_certificate",
    "huneke_rossi_check",
    "minimal_generator_check",
    "projective_unimodular_element",
    "split_off",
    "split_search",
    "sym_presentation",
]

__version__ = "0.1.0"
