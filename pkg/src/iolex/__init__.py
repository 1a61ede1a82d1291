"""Exact arithmetic and congruence decisions for the monoid of cofinite
monotone injective partial selfmaps of L_n x_lex Z."""

from .congruence import (
    Classification,
    QuotientImage,
    classify_generated,
    composition_midpoint,
    generators,
    pi_sharp_related,
    quotient_lift,
    rho_min_related,
    sigma_I_related,
    sigma_quotient,
    sigma_related,
)
from .errors import (
    DimensionMismatch,
    EqualInputs,
    HoleMismatch,
    IndexOutOfRange,
    IOLexError,
    LiteralSyntaxError,
    MonotonicityViolation,
    NotACoveringPair,
    NotEligible,
    NotIdempotent,
    WindowInconsistent,
)
from .lattice import enumerate_lattice, interval_report, lattice_ops
from .literal import parse, parse_indices, serialize
from .product import (
    Element,
    d_set,
    embed,
    green,
    p_compose,
    p_identity,
    p_invert,
    project,
    unitize,
)
from .witness import (
    Chain,
    WitnessBundle,
    chi_map,
    lemma1_witness,
    lemma2_witness,
    prop4_idempotent,
    reduction_chain,
    transport_idempotent,
    verify_chain,
)
from .zmap import (
    IDENTITY,
    ZMap,
    agree_cofinitely,
    canonical_order_bijection,
    complements,
    compose,
    evaluate,
    invert,
    normalize,
    partial_identity,
    tail_shifts,
    translation,
)

__version__ = "0.1.0"
