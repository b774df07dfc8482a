#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coarray/geometry.hpp"

namespace coarray {

/// Problem instance (Q, N_tx, N_rx, N_sigma): select Q of N_tx transmit
/// sensors so that the sum set with an N_rx-sensor receive array covers a
/// contiguous sum co-array of N_sigma elements.
struct ParameterTuple {
    int q = 0;
    int n_tx = 0;
    int n_rx = 0;
    int n_sigma = 0;

    friend bool operator==(const ParameterTuple&, const ParameterTuple&) = default;
};

enum class CodebookKind { unconstrained, sum_set_constrained };

/// An ordered set of equal-cardinality Tx subarrays. Codewords keep the
/// physical tx coordinates (they are not re-canonicalized) and are sorted
/// lexicographically; their index in the list is the codeword index.
struct Codebook {
    ArrayGeometry tx;
    std::optional<ArrayGeometry> rx;  // absent for unconstrained books
    int q = 0;
    CodebookKind kind = CodebookKind::unconstrained;
    std::vector<ArrayGeometry> codewords;

    std::size_t size() const noexcept { return codewords.size(); }
};

/// L = ceil(N_sigma / N_rx): the fewest Tx sensors whose sum set with an
/// N_rx-sensor array can reach N_sigma elements.
int min_selection_size(int n_sigma, int n_rx);

/// A tuple is admissible when N_tx+N_rx-1 <= N_sigma <= Q*N_rx and
/// L <= Q <= N_tx. Throws std::invalid_argument on nonpositive fields.
bool admissible(const ParameterTuple& t);

/// All C(|tx|, Q) subsets in lexicographic order.
Codebook enumerate_unconstrained(int q, const ArrayGeometry& tx);

/// Exactly the Q-subsets S of tx whose sum set with rx equals
/// sum_set(tx, rx). May be empty. Lexicographic order.
Codebook enumerate_constrained(int q, const ArrayGeometry& tx, const ArrayGeometry& rx);

/// floor(log2 |codebook|); throws std::invalid_argument("empty codebook").
int bits_per_codeword(const Codebook& c);

std::string to_string(CodebookKind kind);

}  // namespace coarray
