#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coarray/bounds.hpp"

namespace coarray {

enum class SweepMode { fixed_q, fixed_n_sigma };

/// Accepts "fixed-q" / "fixed-nsigma"; throws std::invalid_argument otherwise.
SweepMode sweep_mode_from_string(const std::string& s);
std::string to_string(SweepMode m);

/// One point of the bound-curve sweep. lower is the proven achievable value
/// (needs N_sigma divisible by N_rx); lower_plotted evaluates the same
/// formula with the ceiling L at every point and is reported separately
/// because it is an extrapolation, not a proven bound.
struct Figure3Row {
    int n_sigma = 0;
    int q = 0;
    BigInt upper;
    std::optional<BigInt> lower;
    BigInt lower_plotted;
    std::optional<BigInt> exact;
};

/// fixed_q: sweeps N_sigma over [N_tx+N_rx-1, Q*N_rx] at Q = fixed_value.
/// fixed_n_sigma: sweeps Q over [ceil(N_sigma/N_rx), N_tx] at
/// N_sigma = fixed_value. Every emitted row is an admissible tuple.
/// Throws std::domain_error("empty sweep range ...") when none exists.
std::vector<Figure3Row> figure3_sweep(int n_tx, int n_rx, SweepMode mode, int fixed_value);

/// CSV with header N_sigma,Q,upper,lower,lower_applicable,lower_plotted,exact
/// and "\n" line endings; lower/exact cells are empty when absent.
std::string figure3_csv(const std::vector<Figure3Row>& rows);

}  // namespace coarray
