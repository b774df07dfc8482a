#include "coarray/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "coarray/rng.hpp"

namespace coarray {

BigInt binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial requires nonnegative n");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt upper_bound(const ParameterTuple& t) {
    const bool adm = admissible(t);
    if (t.q == 1 && t.n_tx > 1) return 0;
    if (!adm) throw std::domain_error("inadmissible parameter tuple");
    if (t.q == 1) return 1;  // N_tx = 1, codebook is {tx}
    return binomial(t.n_tx - 2, t.q - 2);
}

BigInt lower_bound_nested(const ParameterTuple& t) {
    if (!admissible(t)) throw std::domain_error("inadmissible parameter tuple");
    if (t.n_sigma % t.n_rx != 0)
        throw std::domain_error(
            "lower bound requires integer L: N_sigma must be divisible by N_rx");
    const int l = t.n_sigma / t.n_rx;
    return binomial(t.n_tx - l, t.q - l);
}

BigInt exact_size_ula(const ParameterTuple& t) {
    if (t.n_sigma != t.n_tx + t.n_rx - 1 || t.n_tx > t.n_rx + 1 || t.q < 2 || t.q > t.n_tx)
        throw std::domain_error(
            "ULA exact size requires N_sigma = N_tx+N_rx-1, N_tx <= N_rx+1, and Q in [2, N_tx]");
    return binomial(t.n_tx - 2, t.q - 2);
}

BigInt exact_size_nonredundant(const ParameterTuple& t) {
    if (static_cast<long long>(t.n_tx) * t.n_rx != t.n_sigma)
        throw std::domain_error("nonredundant exact size requires N_sigma = N_tx*N_rx");
    if (t.q != t.n_tx)
        throw std::domain_error("nonredundant arrays admit only full selection");
    return 1;
}

BoundsReport bounds_report(const ParameterTuple& t) {
    BoundsReport r;
    r.tuple = t;
    r.min_selection = min_selection_size(t.n_sigma, t.n_rx);
    r.admissible = admissible(t);
    if (!r.admissible) {
        r.note = (t.q == 1 && t.n_tx > 1)
                     ? "Q = 1 cannot retain both edge sensors when N_tx > 1"
                     : "inadmissible tuple: bounds do not apply";
        return r;
    }
    r.upper = upper_bound(t);
    if (t.n_sigma % t.n_rx == 0) r.lower = lower_bound_nested(t);
    if (t.q == 1) {
        r.exact = 1;
        r.note = "single-sensor transmit array: the only codebook is {tx}";
    } else if (t.n_sigma == t.n_tx + t.n_rx - 1 && t.n_tx <= t.n_rx + 1) {
        r.exact = exact_size_ula(t);
        r.note = "minimal sum co-array: the ULA pair attains the upper bound";
    } else if (static_cast<long long>(t.n_tx) * t.n_rx == t.n_sigma) {
        r.exact = exact_size_nonredundant(t);
        r.note = "maximal sum co-array: only the full selection survives";
    }
    return r;
}

ArrayPair build_ula_pair(int n_tx, int n_rx) {
    return {make_ula(n_tx), make_ula(n_rx)};
}

ArrayPair build_nonredundant_pair(int n_tx, int n_rx) {
    return {scaled(make_ula(n_tx), n_rx), make_ula(n_rx)};
}

namespace {

NestedConstruction build_nested(int n_tx, int n_rx, int n_sigma,
                                std::optional<std::uint64_t> fill_seed) {
    if (n_tx < 1 || n_rx < 1 || n_sigma < 1)
        throw std::invalid_argument("arguments must be positive");
    if (n_sigma % n_rx != 0)
        throw std::domain_error(
            "nested construction requires integer L: N_sigma must be divisible by N_rx");
    const int l = n_sigma / n_rx;
    if (l > n_tx)
        throw std::domain_error("nested construction requires L = N_sigma/N_rx <= N_tx");
    if (n_sigma < n_tx + n_rx - 1)
        throw std::domain_error("nested construction requires N_sigma >= N_tx+N_rx-1");

    ArrayGeometry rx = make_ula(n_rx);
    ArrayGeometry core = scaled(make_ula(l), n_rx);

    // Fill sensors live in {0..(L-1)*N_rx} minus the core; the span bound
    // keeps every fill sensor's rx-shifted block inside the sum co-array.
    const int span = n_rx * (l - 1);
    std::vector<int> complement;
    complement.reserve(static_cast<std::size_t>(span + 1 - l));
    for (int v = 0; v <= span; ++v)
        if (v % n_rx != 0) complement.push_back(v);
    const int want = n_tx - l;
    if (std::cmp_less(complement.size(), want))
        throw std::logic_error("nested construction: fill candidates exhausted");

    std::vector<int> positions(core.begin(), core.end());
    if (fill_seed) {
        CounterRng rng(*fill_seed, 0);
        for (int i = 0; i < want; ++i) {
            const auto j = i + static_cast<int>(rng.uniform_below(complement.size() - static_cast<std::size_t>(i)));
            std::swap(complement[static_cast<std::size_t>(i)], complement[static_cast<std::size_t>(j)]);
            positions.push_back(complement[static_cast<std::size_t>(i)]);
        }
    } else {
        positions.insert(positions.end(), complement.begin(), complement.begin() + want);
    }
    std::sort(positions.begin(), positions.end());

    NestedConstruction out{ArrayGeometry(std::move(positions)), std::move(rx), std::move(core)};
    const ArrayGeometry sum = sum_set(out.tx, out.rx);
    if (sum.size_i() != n_sigma || !is_contiguous(sum))
        throw std::logic_error("nested construction failed to cover the sum co-array");
    return out;
}

}  // namespace

NestedConstruction build_nested_pair(int n_tx, int n_rx, int n_sigma) {
    return build_nested(n_tx, n_rx, n_sigma, std::nullopt);
}

NestedConstruction build_nested_pair(int n_tx, int n_rx, int n_sigma, std::uint64_t fill_seed) {
    return build_nested(n_tx, n_rx, n_sigma, fill_seed);
}

}  // namespace coarray
