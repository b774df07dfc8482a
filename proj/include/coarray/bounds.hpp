#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "coarray/codebook.hpp"
#include "coarray/geometry.hpp"

namespace coarray {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, k); 0 when k < 0 or k > n. Throws std::invalid_argument on
/// negative n.
BigInt binomial(int n, int k);

/// Largest possible constrained codebook size: C(N_tx-2, Q-2). Every
/// constrained codeword must keep both tx edge sensors, which leaves Q-2
/// free picks among the N_tx-2 interior sensors.
/// Q = 1 with N_tx > 1 returns 0 (both edges cannot fit in one slot);
/// Q = 1 with N_tx = 1 returns 1. Other violations of admissibility throw
/// std::domain_error("inadmissible parameter tuple").
BigInt upper_bound(const ParameterTuple& t);

/// Codebook size achieved by the layered construction below:
/// C(N_tx-L, Q-L) with L = N_sigma/N_rx. Requires an admissible tuple with
/// N_sigma divisible by N_rx; throws std::domain_error otherwise.
BigInt lower_bound_nested(const ParameterTuple& t);

/// Exact optimum C(N_tx-2, Q-2) for the ULA pair, valid when
/// N_sigma = N_tx+N_rx-1, N_tx <= N_rx+1, and 2 <= Q <= N_tx.
/// Throws std::domain_error when those conditions fail.
BigInt exact_size_ula(const ParameterTuple& t);

/// Exact optimum for a maximal (nonredundant) sum co-array,
/// N_sigma = N_tx*N_rx: always 1, and only Q = N_tx is feasible.
/// Throws std::domain_error on Q != N_tx or N_sigma != N_tx*N_rx.
BigInt exact_size_nonredundant(const ParameterTuple& t);

/// Bound sandwich for one tuple. lower is absent when N_sigma is not
/// divisible by N_rx (no proven lower bound there); exact is absent unless
/// the tuple sits at a corner with a known exact optimum. For inadmissible
/// tuples upper is 0 and both optionals are absent.
struct BoundsReport {
    ParameterTuple tuple;
    bool admissible = false;
    int min_selection = 0;
    BigInt upper = 0;
    std::optional<BigInt> lower;
    std::optional<BigInt> exact;
    std::string note;
};

BoundsReport bounds_report(const ParameterTuple& t);

struct ArrayPair {
    ArrayGeometry tx;
    ArrayGeometry rx;
};

/// tx = {0..N_tx-1}, rx = {0..N_rx-1}; sum co-array {0..N_tx+N_rx-2}.
ArrayPair build_ula_pair(int n_tx, int n_rx);

/// tx = N_rx*{0..N_tx-1}, rx = {0..N_rx-1}; every pairwise sum distinct,
/// sum co-array {0..N_tx*N_rx-1}.
ArrayPair build_nonredundant_pair(int n_tx, int n_rx);

/// Layered achievability geometry. core = N_rx*{0..L-1} tiles the sum
/// co-array with L shifted copies of rx; fill adds N_tx-L more sensors
/// strictly inside the covered span, so any Q-subset containing core keeps
/// the full sum co-array.
struct NestedConstruction {
    ArrayGeometry tx;
    ArrayGeometry rx;
    ArrayGeometry core;
};

/// Deterministic variant: fill sensors are the lexicographically smallest
/// choice. Requires N_sigma divisible by N_rx, L = N_sigma/N_rx <= N_tx,
/// and N_sigma >= N_tx+N_rx-1; throws std::domain_error otherwise.
NestedConstruction build_nested_pair(int n_tx, int n_rx, int n_sigma);

/// Seeded variant: fill sensors drawn uniformly among valid choices.
NestedConstruction build_nested_pair(int n_tx, int n_rx, int n_sigma, std::uint64_t fill_seed);

}  // namespace coarray
