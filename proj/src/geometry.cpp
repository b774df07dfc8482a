#include "coarray/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace coarray {

namespace {

void check_positions(const std::vector<int>& pos) {
    if (pos.empty()) throw std::invalid_argument("empty geometry");
    if (pos.front() < 0) throw std::invalid_argument("negative position");
    for (std::size_t i = 1; i < pos.size(); ++i) {
        if (pos[i] <= pos[i - 1])
            throw std::invalid_argument("positions must be strictly increasing");
    }
    if (pos.back() - pos.front() > ArrayGeometry::kMaxAperture)
        throw std::invalid_argument("aperture exceeds supported maximum");
}

}  // namespace

ArrayGeometry::ArrayGeometry(std::vector<int> positions) : pos_(std::move(positions)) {
    check_positions(pos_);
}

bool ArrayGeometry::contains(int p) const noexcept {
    return std::binary_search(pos_.begin(), pos_.end(), p);
}

bool ArrayGeometry::is_subset_of(const ArrayGeometry& other) const noexcept {
    return std::includes(other.pos_.begin(), other.pos_.end(), pos_.begin(), pos_.end());
}

std::string ArrayGeometry::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < pos_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(pos_[i]);
    }
    return out;
}

ArrayGeometry canonicalize(std::vector<int> raw) {
    if (raw.empty()) throw std::invalid_argument("empty geometry");
    for (int p : raw)
        if (p < 0) throw std::invalid_argument("negative position");
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    const int base = raw.front();
    for (int& p : raw) p -= base;
    return ArrayGeometry(std::move(raw));
}

std::vector<int> parse_positions(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    while (i < text.size()) {
        skip_ws();
        int value = 0;
        const char* first = text.data() + i;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first)
            throw std::invalid_argument("invalid geometry text: expected integer");
        i = static_cast<std::size_t>(ptr - text.data());
        out.push_back(value);
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != ',') throw std::invalid_argument("invalid geometry text: expected ','");
        ++i;
        if (i == text.size()) throw std::invalid_argument("invalid geometry text: trailing ','");
    }
    if (out.empty()) throw std::invalid_argument("empty geometry");
    return out;
}

ArrayGeometry sum_set(const ArrayGeometry& a, const ArrayGeometry& b) {
    const int base = a.min() + b.min();
    const int span = a.aperture() + b.aperture();  // offsets fall in [0, span]

    std::vector<int> out;
    if (span < 128) {
        // Fixed-width fast path: mirror b as a 128-bit mask and OR shifted copies.
        unsigned __int128 bmask = 0;
        for (int p : b) bmask |= static_cast<unsigned __int128>(1) << (p - b.min());
        unsigned __int128 acc = 0;
        for (int p : a) acc |= bmask << (p - a.min());
        for (int off = 0; off <= span; ++off)
            if ((acc >> off) & 1) out.push_back(base + off);
    } else {
        const std::size_t words = static_cast<std::size_t>(span) / 64 + 1;
        std::vector<std::uint64_t> bmask(words, 0), acc(words, 0);
        for (int p : b) {
            const int off = p - b.min();
            bmask[off >> 6] |= std::uint64_t{1} << (off & 63);
        }
        for (int p : a) {
            const int shift = p - a.min();
            const int wshift = shift >> 6, bshift = shift & 63;
            for (std::size_t w = words; w-- > 0;) {
                if (w < static_cast<std::size_t>(wshift)) break;
                std::uint64_t v = bmask[w - wshift] << bshift;
                if (bshift && w > static_cast<std::size_t>(wshift))
                    v |= bmask[w - wshift - 1] >> (64 - bshift);
                acc[w] |= v;
            }
        }
        for (int off = 0; off <= span; ++off)
            if ((acc[off >> 6] >> (off & 63)) & 1) out.push_back(base + off);
    }
    return ArrayGeometry(std::move(out));
}

bool is_contiguous(const ArrayGeometry& a) {
    if (!a.is_canonical()) throw std::invalid_argument("geometry not canonical");
    return a.max() == a.size_i() - 1;
}

bool contains_edges(const ArrayGeometry& s, const ArrayGeometry& d) {
    if (!s.is_subset_of(d)) throw std::invalid_argument("not a subset");
    return s.contains(d.min()) && s.contains(d.max());
}

ArrayGeometry make_ula(int n) {
    if (n < 1) throw std::invalid_argument("ULA size must be positive");
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i;
    return ArrayGeometry(std::move(pos));
}

ArrayGeometry scaled(const ArrayGeometry& a, int factor) {
    if (factor < 1) throw std::invalid_argument("scale factor must be positive");
    std::vector<int> pos;
    pos.reserve(a.size());
    for (int p : a) pos.push_back(p * factor);
    return ArrayGeometry(std::move(pos));
}

ArrayGeometry reflected(const ArrayGeometry& a) {
    const int lo = a.min(), hi = a.max();
    std::vector<int> pos;
    pos.reserve(a.size());
    for (auto it = a.positions().rbegin(); it != a.positions().rend(); ++it)
        pos.push_back(lo + hi - *it);
    return ArrayGeometry(std::move(pos));
}

}  // namespace coarray
