#include "coarray/codebook.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "coarray/combinations.hpp"

namespace coarray {

namespace {

void check_positive(const ParameterTuple& t) {
    if (t.q < 1 || t.n_tx < 1 || t.n_rx < 1 || t.n_sigma < 1)
        throw std::invalid_argument("tuple fields must be positive");
}

}  // namespace

int min_selection_size(int n_sigma, int n_rx) {
    if (n_sigma < 1 || n_rx < 1)
        throw std::invalid_argument("arguments must be positive");
    return (n_sigma + n_rx - 1) / n_rx;
}

bool admissible(const ParameterTuple& t) {
    check_positive(t);
    const int L = min_selection_size(t.n_sigma, t.n_rx);
    if (t.n_sigma < t.n_tx + t.n_rx - 1) return false;
    if (static_cast<long long>(t.q) * t.n_rx < t.n_sigma) return false;
    return L <= t.q && t.q <= t.n_tx;
}

Codebook enumerate_unconstrained(int q, const ArrayGeometry& tx) {
    if (q < 1) throw std::invalid_argument("Q must be positive");
    if (q > tx.size_i()) throw std::invalid_argument("Q exceeds array size");

    Codebook book{tx, std::nullopt, q, CodebookKind::unconstrained, {}};
    const auto& pos = tx.positions();
    for_each_combination(tx.size_i(), q, [&](std::span<const int> idx) {
        std::vector<int> word;
        word.reserve(static_cast<std::size_t>(q));
        for (int i : idx) word.push_back(pos[static_cast<std::size_t>(i)]);
        book.codewords.emplace_back(std::move(word));
    });
    return book;
}

Codebook enumerate_constrained(int q, const ArrayGeometry& tx, const ArrayGeometry& rx) {
    if (q < 1) throw std::invalid_argument("Q must be positive");
    const int n = tx.size_i();
    if (q > n) throw std::invalid_argument("Q exceeds array size");

    Codebook book{tx, rx, q, CodebookKind::sum_set_constrained, {}};

    // The full selection always reproduces the tx sum set.
    if (q == n) {
        book.codewords.push_back(tx);
        return book;
    }

    // A strict subset must still contain both edge sensors of tx, otherwise
    // the extreme sums min(tx)+min(rx) and max(tx)+max(rx) go missing. With
    // q < 2 (and n > 1) no subset can.
    if (q < 2) return book;

    const ArrayGeometry target = sum_set(tx, rx);
    if (q < min_selection_size(target.size_i(), rx.size_i())) return book;

    const auto& pos = tx.positions();
    const int interior = n - 2;
    const int pick = q - 2;
    const int span = tx.aperture() + rx.aperture();

    const auto emit = [&](std::span<const int> idx) {
        std::vector<int> word;
        word.reserve(static_cast<std::size_t>(q));
        word.push_back(pos.front());
        for (int i : idx) word.push_back(pos[static_cast<std::size_t>(i) + 1]);
        word.push_back(pos.back());
        book.codewords.emplace_back(std::move(word));
    };

    if (span < 64) {
        std::uint64_t rx_mask = 0;
        for (int r : rx) rx_mask |= std::uint64_t{1} << (r - rx.min());
        std::vector<std::uint64_t> shifted(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            shifted[static_cast<std::size_t>(i)] = rx_mask << (pos[static_cast<std::size_t>(i)] - tx.min());
        std::uint64_t want = 0;
        for (int s : target) want |= std::uint64_t{1} << (s - target.min());
        const std::uint64_t edges = shifted.front() | shifted.back();

        for_each_combination(interior, pick, [&](std::span<const int> idx) {
            std::uint64_t acc = edges;
            for (int i : idx) acc |= shifted[static_cast<std::size_t>(i) + 1];
            if (acc == want) emit(idx);
        });
        return book;
    }

    // Wide-aperture path: the same OR-of-shifted-masks on word vectors.
    const std::size_t words = static_cast<std::size_t>(span) / 64 + 1;
    std::vector<std::uint64_t> rx_mask(words, 0);
    for (int r : rx) {
        const int off = r - rx.min();
        rx_mask[off >> 6] |= std::uint64_t{1} << (off & 63);
    }
    const auto shift_or = [&](std::vector<std::uint64_t>& acc, int shift) {
        const int wshift = shift >> 6, bshift = shift & 63;
        for (std::size_t w = words; w-- > static_cast<std::size_t>(wshift);) {
            std::uint64_t v = rx_mask[w - static_cast<std::size_t>(wshift)] << bshift;
            if (bshift && w > static_cast<std::size_t>(wshift))
                v |= rx_mask[w - static_cast<std::size_t>(wshift) - 1] >> (64 - bshift);
            acc[w] |= v;
        }
    };
    std::vector<std::uint64_t> want(words, 0);
    for (int s : target) {
        const int off = s - target.min();
        want[off >> 6] |= std::uint64_t{1} << (off & 63);
    }
    std::vector<std::uint64_t> edges(words, 0);
    shift_or(edges, 0);
    shift_or(edges, tx.aperture());

    std::vector<std::uint64_t> acc(words);
    for_each_combination(interior, pick, [&](std::span<const int> idx) {
        acc = edges;
        for (int i : idx) shift_or(acc, pos[static_cast<std::size_t>(i) + 1] - tx.min());
        if (acc == want) emit(idx);
    });
    return book;
}

int bits_per_codeword(const Codebook& c) {
    if (c.codewords.empty()) throw std::invalid_argument("empty codebook");
    return std::bit_width(c.codewords.size()) - 1;
}

std::string to_string(CodebookKind kind) {
    return kind == CodebookKind::unconstrained ? "unconstrained" : "constrained";
}

}  // namespace coarray
