"""weylnil: exact first Weyl algebra arithmetic with a certificate-producing
strict-nilpotency decision procedure and bispectral partner construction."""

from .element import (
    OperatorProfile,
    WeylElement,
    ad_power,
    commutator,
    coordinate,
    derivative,
    generators,
    normalize_product,
    poly_at,
    profile,
)
from .poly import UniPoly
from .filtration import (
    FactoredForm,
    FormDiagnostic,
    FormIssue,
    NewtonData,
    Weight,
    associated_poly,
    choose_weights,
    factor_form,
    format_bivariate,
    weight_value,
)
from .automorphism import (
    AutoWord,
    Fourier,
    FourierInverse,
    Generator,
    ShiftD,
    ShiftX,
    anti_involution,
    apply_generator,
    apply_word,
    ccr_preserved,
    compose,
    invert_generator,
    invert_word,
)
from .descent import (
    AdTestResult,
    BispectralPartner,
    BoundExhausted,
    Certificate,
    CounterexampleCandidate,
    DescentRejection,
    DescentStep,
    EigenObstruction,
    GenerationWitness,
    NilpotentAt,
    NotStrictlyNilpotent,
    Reason,
    StageRecord,
    StrictlyNilpotent,
    TriviallyConstant,
    Verdict,
    ad_nilpotency_test,
    bispectral_partner,
    ccr_check,
    ccr_to_generators,
    centralizer_generator,
    decide,
    descent_step,
    normalize_subleading,
    random_orbit_element,
    verify_certificate,
)
from .errors import (
    ConstantCoefficientsSignal,
    InvariantViolation,
    NotNormalizableError,
    NotStrictlyNilpotentError,
    ParseError,
    SideMismatchError,
    UnsupportedSideError,
    WireFormatError,
)
from .exprs import format_element, parse_expression

__version__ = "0.1.0"

__all__ = [
    "AdTestResult",
    "AutoWord",
    "BispectralPartner",
    "BoundExhausted",
    "Certificate",
    "ConstantCoefficientsSignal",
    "CounterexampleCandidate",
    "DescentRejection",
    "DescentStep",
    "EigenObstruction",
    "FactoredForm",
    "FormDiagnostic",
    "FormIssue",
    "Fourier",
    "FourierInverse",
    "GenerationWitness",
    "Generator",
    "InvariantViolation",
    "NewtonData",
    "NilpotentAt",
    "NotNormalizableError",
    "NotStrictlyNilpotent",
    "NotStrictlyNilpotentError",
    "OperatorProfile",
    "ParseError",
    "Reason",
    "ShiftD",
    "ShiftX",
    "SideMismatchError",
    "StageRecord",
    "StrictlyNilpotent",
    "TriviallyConstant",
    "UniPoly",
    "UnsupportedSideError",
    "Verdict",
    "WeylElement",
    "Weight",
    "WireFormatError",
    "ad_nilpotency_test",
    "ad_power",
    "anti_involution",
    "apply_generator",
    "apply_word",
    "associated_poly",
    "bispectral_partner",
    "ccr_check",
    "ccr_preserved",
    "ccr_to_generators",
    "centralizer_generator",
    "choose_weights",
    "commutator",
    "compose",
    "coordinate",
    "decide",
    "derivative",
    "descent_step",
    "factor_form",
    "format_bivariate",
    "format_element",
    "generators",
    "invert_generator",
    "invert_word",
    "normalize_product",
    "normalize_subleading",
    "parse_expression",
    "poly_at",
    "profile",
    "random_orbit_element",
    "verify_certificate",
    "weight_value",
]
