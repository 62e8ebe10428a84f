from .analyzer import MomentAnalyzer
from .bounds import (
    chain_bound,
    eigenvalue_floor,
    jls_closed_form,
    main_bound,
    rank_bound,
    rank_floor_product,
    th1_bound,
)
from .combinatorics import (
    histogram,
    is_permutation_pair,
    is_remote_stabilization_pair,
    is_stabilization_pair,
    odd_set,
    permutation_class_size,
    stabilizes_by_concatenation,
)
from .loader import (
    default_analyzer,
    det_product_formula,
    enumerate_permutation_classes,
    enumerate_stabilization_classes,
    rho_binary,
    rho_complex,
    rho_diff,
    rho_haar,
)
from .matrices import haar_entry
from .oracle import entry_oracle, entry_oracle_exact
from .spectral import det_from_spectrum, hermitian_spectrum, numeric_rank, trace_distance
from .types import BoundsReport, ClassDescriptor, Histogram, MomentMatrix, OddSet, Spectrum, TupleIndex
from .verifier import MomentVerifier, verify_all

__all__ = [
    "MomentAnalyzer",
    "MomentVerifier",
    "BoundsReport",
    "ClassDescriptor",
    "Histogram",
    "MomentMatrix",
    "OddSet",
    "Spectrum",
    "TupleIndex",
    "chain_bound",
    "default_analyzer",
    "det_from_spectrum",
    "det_product_formula",
    "eigenvalue_floor",
    "entry_oracle",
    "entry_oracle_exact",
    "enumerate_permutation_classes",
    "enumerate_stabilization_classes",
    "haar_entry",
    "hermitian_spectrum",
    "histogram",
    "is_permutation_pair",
    "is_remote_stabilization_pair",
    "is_stabilization_pair",
    "jls_closed_form",
    "main_bound",
    "numeric_rank",
    "odd_set",
    "permutation_class_size",
    "rank_bound",
    "rank_floor_product",
    "rho_binary",
    "rho_complex",
    "rho_diff",
    "rho_haar",
    "stabilizes_by_concatenation",
    "th1_bound",
    "trace_distance",
    "verify_all",
]
