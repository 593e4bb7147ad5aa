"""Cyclic self-orthogonal and self-dual codes of odd length over Z_{p^m}."""

from .codes import (
    CodeCounts,
    CodeType,
    ExponentProfile,
    GeneratorForm,
    ProfileFilter,
    Triviality,
    cardinality,
    classify_triviality,
    classify_type,
    code_counts,
    count_nontrivial,
    count_self_dual,
    count_so,
    count_trivial,
    dual_profile,
    enumerate_profiles,
    euclidean_weight,
    generator_polynomial,
    is_self_dual,
    is_self_orthogonal,
    make_profile,
    nontrivial_exists,
    standard_generators,
)
from .factorization import (
    CosetPartition,
    FactorBasis,
    ModulusKind,
    cyclotomic_cosets,
    factor_mod_p,
    gamma_delta,
    hensel_lift,
)
from .oracle import crosscheck, span_from_generators
from .ring_poly import Poly, RingParams, parse_poly, to_text

__version__ = "0.1.0"
