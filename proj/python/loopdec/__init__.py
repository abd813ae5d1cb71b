"""Exact truncated-series computations for loop space decompositions.

Everything mathematical lives in the compiled extension; this package just
re-exports its surface under a stable name.
"""

from loopdec._core import (
    AntipodeReport,
    CorpusReport,
    FactorizationReport,
    GaneaReport,
    HMFactor,
    HmReport,
    PbwReport,
    PorterHmReport,
    SpaceDescriptor,
    SplittingTable,
    SubHopfResult,
    TruncatedSeries,
    analyze_lie_family,
    antipode,
    check_corpus,
    first_difference,
    ganea_loop_check,
    geometric_inverse,
    hm_index,
    is_lyndon,
    loop_series,
    lyndon_words,
    mnt_splitting,
    multidegree,
    pbw_series_check,
    porter_hm_consistency,
    porter_series,
    porter_summands,
    power,
    primitive_localization_ok,
    primitives_dim,
    qsymm_factorization_report,
    quasi_shuffle,
    refined_splitting,
    shift,
    unit_inverse,
    verify_hm,
    witt_count,
    witt_count_multi,
    write_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "AntipodeReport",
    "CorpusReport",
    "FactorizationReport",
    "GaneaReport",
    "HMFactor",
    "HmReport",
    "PbwReport",
    "PorterHmReport",
    "SpaceDescriptor",
    "SplittingTable",
    "SubHopfResult",
    "TruncatedSeries",
    "analyze_lie_family",
    "antipode",
    "check_corpus",
    "first_difference",
    "ganea_loop_check",
    "geometric_inverse",
    "hm_index",
    "is_lyndon",
    "loop_series",
    "lyndon_words",
    "mnt_splitting",
    "multidegree",
    "pbw_series_check",
    "porter_hm_consistency",
    "porter_series",
    "porter_summands",
    "power",
    "primitive_localization_ok",
    "primitives_dim",
    "qsymm_factorization_report",
    "quasi_shuffle",
    "refined_splitting",
    "shift",
    "unit_inverse",
    "verify_hm",
    "witt_count",
    "witt_count_multi",
    "write_corpus",
]
