"""Sum co-array codebooks: construction, bounds, exhaustive search, and the
index-modulation link simulation. All heavy lifting lives in the compiled
`_core` extension; this package re-exports its public surface."""

from ._core import (
    ArrayGeometry,
    BoundsReport,
    Codebook,
    DownlinkConfig,
    ParameterTuple,
    SearchResult,
    SensingScene,
    SerResult,
    SweepRow,
    VirtualMeasurement,
    WaveformMatrix,
    Witness,
    __version__,
    admissible,
    binomial,
    bits_per_codeword,
    bounds_report,
    build_nested_pair,
    build_nonredundant_pair,
    build_ula_pair,
    build_waveform,
    canonicalize,
    contains_edges,
    enumerate_constrained,
    enumerate_unconstrained,
    exact_size_nonredundant,
    exact_size_ula,
    figure3_csv,
    figure3_sweep,
    identifiability_rank_check,
    is_contiguous,
    lower_bound_nested,
    make_ula,
    min_selection_size,
    ml_decode,
    monte_carlo_ser,
    numerical_rank,
    optimal_codebook_search,
    orthonormal_basis,
    parse_positions,
    random_angles,
    random_channel,
    reflected,
    scaled,
    selection_matrix,
    sensing_snapshot,
    steering_matrix,
    sum_set,
    upper_bound,
    virtual_sum_coarray,
)

__all__ = [
    "ArrayGeometry",
    "BoundsReport",
    "Codebook",
    "DownlinkConfig",
    "ParameterTuple",
    "SearchResult",
    "SensingScene",
    "SerResult",
    "SweepRow",
    "VirtualMeasurement",
    "WaveformMatrix",
    "Witness",
    "__version__",
    "admissible",
    "binomial",
    "bits_per_codeword",
    "bounds_report",
    "build_nested_pair",
    "build_nonredundant_pair",
    "build_ula_pair",
    "build_waveform",
    "canonicalize",
    "contains_edges",
    "enumerate_constrained",
    "enumerate_unconstrained",
    "exact_size_nonredundant",
    "exact_size_ula",
    "figure3_csv",
    "figure3_sweep",
    "identifiability_rank_check",
    "is_contiguous",
    "lower_bound_nested",
    "make_ula",
    "min_selection_size",
    "ml_decode",
    "monte_carlo_ser",
    "numerical_rank",
    "optimal_codebook_search",
    "orthonormal_basis",
    "parse_positions",
    "random_angles",
    "random_channel",
    "reflected",
    "scaled",
    "selection_matrix",
    "sensing_snapshot",
    "steering_matrix",
    "sum_set",
    "upper_bound",
    "virtual_sum_coarray",
]
