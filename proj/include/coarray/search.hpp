#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coarray/bounds.hpp"
#include "coarray/codebook.hpp"
#include "coarray/geometry.hpp"

namespace coarray {

enum class BoundVerdict { within_bounds, upper_violated, lower_violated };

std::string to_string(BoundVerdict v);

struct SearchOptions {
    /// Largest N_sigma the exhaustive search accepts. Hard limit 63
    /// (sum sets are checked against a 64-bit mask).
    int aperture_cap = 24;
    /// Maximum number of optimum-achieving geometry pairs kept.
    int witness_cap = 16;
    /// Skip the mirror image of each geometry pair. Never changes the
    /// optimum; halves the work for asymmetric pairs.
    bool reflect_dedup = true;
    int threads = 1;
};

struct Witness {
    ArrayGeometry tx;
    ArrayGeometry rx;
    Codebook codebook;
};

struct SearchResult {
    ParameterTuple tuple;
    BigInt optimum = 0;
    /// Lexicographically first optimum-achieving (tx, rx) pairs, at most
    /// witness_cap of them. With reflect_dedup only the lexicographically
    /// smaller member of each mirror pair appears.
    std::vector<Witness> witnesses;
    /// Canonical geometry pairs whose sum set was evaluated.
    std::uint64_t explored = 0;
    BoundVerdict bound_check = BoundVerdict::within_bounds;
    std::string bound_detail;
};

/// Exact maximum constrained-codebook size over every canonical geometry
/// pair with |tx| = N_tx, |rx| = N_rx, max(tx)+max(rx) = N_sigma-1, and
/// contiguous sum co-array of size N_sigma. Deterministic for fixed inputs
/// regardless of thread count. Throws std::domain_error on inadmissible
/// tuples and when N_sigma exceeds the aperture cap.
SearchResult optimal_codebook_search(const ParameterTuple& t, const SearchOptions& opts = {});

struct BoundCheck {
    BoundVerdict verdict = BoundVerdict::within_bounds;
    std::string detail;  // counterexample dump on violation, else empty
};

/// Checks lower_bound_nested(t) <= r.optimum <= upper_bound(t); the lower
/// check is skipped when N_sigma is not divisible by N_rx.
BoundCheck verify_bounds(const ParameterTuple& t, const SearchResult& r);

struct SweepEntry {
    ParameterTuple tuple;
    std::optional<BoundsReport> bounds;
    std::optional<SearchResult> result;
    std::string error;  // empty on success
};

/// Runs bounds_report + optimal_codebook_search per tuple, order preserved.
/// Per-tuple failures are recorded in `error` and do not abort the batch.
std::vector<SweepEntry> sweep(const std::vector<ParameterTuple>& tuples,
                              const SearchOptions& opts = {});

}  // namespace coarray
