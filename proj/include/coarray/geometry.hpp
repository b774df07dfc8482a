#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coarray {

/// Linear array geometry: a nonempty set of sensor positions on the integer
/// half-wavelength grid, stored sorted strictly ascending. Canonical form has
/// min position 0. Instances are immutable values; all operations on them are
/// pure and thread-safe.
class ArrayGeometry {
public:
    /// Maximum supported aperture (max - min). Larger geometries are rejected.
    static constexpr int kMaxAperture = 65535;

    /// Wraps an already sorted, strictly increasing, nonnegative sequence.
    /// Throws std::invalid_argument if the sequence violates any of that.
    explicit ArrayGeometry(std::vector<int> positions);

    const std::vector<int>& positions() const noexcept { return pos_; }
    std::size_t size() const noexcept { return pos_.size(); }
    int size_i() const noexcept { return static_cast<int>(pos_.size()); }
    int min() const noexcept { return pos_.front(); }
    int max() const noexcept { return pos_.back(); }
    int aperture() const noexcept { return pos_.back() - pos_.front(); }
    bool is_canonical() const noexcept { return pos_.front() == 0; }

    bool contains(int p) const noexcept;
    bool is_subset_of(const ArrayGeometry& other) const noexcept;

    int operator[](std::size_t i) const noexcept { return pos_[i]; }
    auto begin() const noexcept { return pos_.begin(); }
    auto end() const noexcept { return pos_.end(); }

    /// Comma-separated text form, e.g. "0,1,4,6,8".
    std::string to_csv() const;

    friend bool operator==(const ArrayGeometry&, const ArrayGeometry&) = default;
    friend std::strong_ordering operator<=>(const ArrayGeometry& a,
                                            const ArrayGeometry& b) noexcept {
        return a.pos_ <=> b.pos_;
    }

private:
    std::vector<int> pos_;
};

/// Sorts, deduplicates and translates so the minimum position is 0.
/// Throws std::invalid_argument("empty geometry") on empty input and on
/// negative positions.
ArrayGeometry canonicalize(std::vector<int> raw);

/// Parses the comma-separated geometry text format ("0,1,4,6,8").
/// Whitespace around numbers is ignored. The result is NOT canonicalized.
std::vector<int> parse_positions(std::string_view text);

/// Sum set {x + y : x in a, y in b}, sorted ascending. The result is not
/// re-translated: its minimum is min(a) + min(b).
ArrayGeometry sum_set(const ArrayGeometry& a, const ArrayGeometry& b);

/// True iff a = {0, 1, ..., |a|-1}. Requires canonical input (min = 0);
/// throws std::invalid_argument("geometry not canonical") otherwise.
bool is_contiguous(const ArrayGeometry& a);

/// True iff s contains both edge sensors of d (min and max). Requires
/// s to be a subset of d; throws std::invalid_argument("not a subset").
bool contains_edges(const ArrayGeometry& s, const ArrayGeometry& d);

/// ULA of n sensors: {0, 1, ..., n-1}.
ArrayGeometry make_ula(int n);

/// Positions scaled by a positive integer factor, e.g. scaled(U_L, N_rx).
ArrayGeometry scaled(const ArrayGeometry& a, int factor);

/// Mirror image within the geometry's own span: p -> min + max - p.
/// Maps canonical geometries to canonical geometries of equal aperture.
ArrayGeometry reflected(const ArrayGeometry& a);

}  // namespace coarray
