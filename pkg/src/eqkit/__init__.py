"""eqkit: exact symbolic certification of the Chevalley and equitable
presentations of quantized enveloping algebras over Q(q)."""

from .cartan import (
    GCM,
    SymmetrizedCartan,
    compute_symmetrizer,
    load_cartan,
    parse_cartan_text,
    symmetrized,
    validate_gcm,
)
from .freealg import Gen, NCPoly, TensorPoly, apply_antihom, apply_hom, tensor_mul
from .presentation import (
    PresentationSpec,
    chevalley_presentation,
    defining_relations,
    equitable_presentation,
    presentation,
)
from .qcombo import QIndex, q_binom, q_int, q_sub, serre_rhs_product
from .scalars import (
    RF_ONE,
    RF_Q,
    RF_ZERO,
    LaurentPoly,
    RationalFunction,
    rf_const,
    rf_qpow,
)

__all__ = [
    "GCM",
    "Gen",
    "LaurentPoly",
    "NCPoly",
    "PresentationSpec",
    "QIndex",
    "RF_ONE",
    "RF_Q",
    "RF_ZERO",
    "RationalFunction",
    "SymmetrizedCartan",
    "TensorPoly",
    "apply_antihom",
    "apply_hom",
    "chevalley_presentation",
    "compute_symmetrizer",
    "defining_relations",
    "equitable_presentation",
    "load_cartan",
    "parse_cartan_text",
    "presentation",
    "q_binom",
    "q_int",
    "q_sub",
    "rf_const",
    "rf_qpow",
    "serre_rhs_product",
    "symmetrized",
    "tensor_mul",
    "validate_gcm",
]

__version__ = "0.1.0"
