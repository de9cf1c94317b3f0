"""Overpartitions whose largest and smallest parts differ by a bounded amount.

The package computes the refined generating function of that family three
independent ways (closed form, brute-force enumeration, and a chain of
basic hypergeometric identities), implements the two weight-preserving
maps that explain the closed form combinatorially, and counts their
fibers exactly.  All arithmetic is exact, over integer Laurent
polynomials in the overline-marking variable.
"""

from .qseries import (
    DivergentProduct,
    InsufficientOrder,
    NonUnitLeadingCoefficient,
    QMonomial,
    QSeries,
    QSeriesError,
    ZLaurentPoly,
    bounded_gap_overpartition_gf,
    bounded_gap_partition_gf,
    pochhammer,
    pochhammer_infinite,
    qs_add,
    qs_div_one_minus,
    qs_invert,
    qs_mul,
    qs_mul_finite,
)
from .partitions import (
    Bipartition,
    InvalidPartition,
    Overpartition,
    Stats,
    enumerated_bounded_gap_gf,
    gf_from_enumeration,
    is_bounded_gap,
    is_bounded_parts,
    iter_bipartitions,
    iter_bounded_gap,
    iter_bounded_parts,
    iter_overpartitions,
    parse_bipartition,
    parse_overpartition,
    stats,
)
from .maps import (
    FiberCheck,
    NotInDomain,
    PreimageReport,
    SplitSolution,
    fold,
    fold_preimages,
    merge,
    merge_preimages,
    solve_split,
    verify_fiber_identity,
)
from .hyper import (
    ChainReport,
    HypergeometricSpec,
    LineCheck,
    NonTerminatingWithoutConvergence,
    NonUnitDenominator,
    chain_lines,
    check_3phi2_transform,
    check_q_chu_vandermonde,
    compare_lines,
    eval_phi,
    verify_identity_chain,
)

__version__ = "0.1.0"

__all__ = [
    "DivergentProduct",
    "InsufficientOrder",
    "NonUnitLeadingCoefficient",
    "QMonomial",
    "QSeries",
    "QSeriesError",
    "ZLaurentPoly",
    "bounded_gap_overpartition_gf",
    "bounded_gap_partition_gf",
    "pochhammer",
    "pochhammer_infinite",
    "qs_add",
    "qs_div_one_minus",
    "qs_invert",
    "qs_mul",
    "qs_mul_finite",
    "Bipartition",
    "InvalidPartition",
    "Overpartition",
    "Stats",
    "enumerated_bounded_gap_gf",
    "gf_from_enumeration",
    "is_bounded_gap",
    "is_bounded_parts",
    "iter_bipartitions",
    "iter_bounded_gap",
    "iter_bounded_parts",
    "iter_overpartitions",
    "parse_bipartition",
    "parse_overpartition",
    "stats",
    "FiberCheck",
    "NotInDomain",
    "PreimageReport",
    "SplitSolution",
    "fold",
    "fold_preimages",
    "merge",
    "merge_preimages",
    "solve_split",
    "verify_fiber_identity",
    "ChainReport",
    "HypergeometricSpec",
    "LineCheck",
    "NonTerminatingWithoutConvergence",
    "NonUnitDenominator",
    "chain_lines",
    "check_3phi2_transform",
    "check_q_chu_vandermonde",
    "compare_lines",
    "eval_phi",
    "verify_identity_chain",
    "__version__",
]
