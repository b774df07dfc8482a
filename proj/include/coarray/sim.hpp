#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "coarray/codebook.hpp"
#include "coarray/geometry.hpp"

namespace coarray::sim {

/// Spatio-temporal transmit block: T samples by N_tx sensors, zero columns
/// at unselected sensors.
struct WaveformMatrix {
    Eigen::MatrixXcd samples;
    ArrayGeometry codeword;
    int basis_rank = 0;  // numerical rank of the generating basis
};

/// Point targets: K angles (radians) with complex gains, plus the per-entry
/// variance of the additive receiver noise. Angles must be pairwise
/// distinct and gains nonzero.
struct SensingScene {
    std::vector<double> angles;
    std::vector<std::complex<double>> gains;
    double noise_power = 0.0;
};

/// Downlink side: M receive antennas, known M x N_tx channel, SNR in dB
/// (+infinity means noiseless), Monte Carlo trial count and seed.
struct DownlinkConfig {
    int ue_antennas = 1;
    Eigen::MatrixXcd channel;
    double snr_db = 0.0;
    int trials = 1;
    std::uint64_t seed = 0;
    int threads = 1;
};

/// Counts singular values above rel_tol times the largest one.
int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol = 1e-8);

/// Binary |s| x |tx| row selector: row i has its single 1 at the column of
/// tx holding s[i]. Throws std::invalid_argument("not a subset") when some
/// s position is missing from tx.
Eigen::MatrixXd selection_matrix(const ArrayGeometry& s, const ArrayGeometry& tx);

/// T x Q matrix with orthonormal columns. Without a seed: first Q columns
/// of the unitary T-point DFT. With a seed: QR of a seeded complex Gaussian
/// matrix. Throws std::domain_error("basis rank infeasible") when T < Q.
Eigen::MatrixXcd orthonormal_basis(int t, int q,
                                   std::optional<std::uint64_t> seed = std::nullopt);

/// samples = basis * selection_matrix(s, tx). Throws on |s| != basis
/// columns and on s not a subset of tx.
WaveformMatrix build_waveform(const Eigen::MatrixXcd& basis, const ArrayGeometry& s,
                              const ArrayGeometry& tx);

/// |d| x K manifold: entry (n, k) = exp(i*pi*d[n]*sin(angle_k)).
Eigen::MatrixXcd steering_matrix(const ArrayGeometry& d, const std::vector<double>& angles);

/// Backscatter block Y (N_rx x T):
/// A_rx(theta) diag(gains) A_tx(theta)^T samples^T plus circular complex
/// Gaussian noise of the scene's per-entry variance, deterministic in seed.
Eigen::MatrixXcd sensing_snapshot(const ArrayGeometry& tx, const ArrayGeometry& rx,
                                  const WaveformMatrix& w, const SensingScene& scene,
                                  std::uint64_t seed);

struct VirtualMeasurement {
    ArrayGeometry support;  // sum_set(codeword, rx)
    Eigen::VectorXcd values;
};

/// Matched-filters a noiseless snapshot back to the virtual sum co-array:
/// values[m] = sum_k gains[k] * exp(i*pi*support[m]*sin(angle_k)).
/// Entries of the recovered N_rx x Q block that land on the same sum are
/// averaged. Throws std::domain_error("waveform not matched") when the
/// embedded basis is rank-deficient.
VirtualMeasurement virtual_sum_coarray(const Eigen::MatrixXcd& y, const WaveformMatrix& w,
                                       const ArrayGeometry& rx, const ArrayGeometry& tx);

/// Draws k angles with pairwise sine separation >= 0.05 and tests whether
/// the |sum_set(s, rx)| x k sum-co-array manifold has full column rank.
/// Throws std::domain_error("exceeds identifiability bound") when
/// k > floor(|sum_set(s, rx)| / 2).
bool identifiability_rank_check(const ArrayGeometry& s, const ArrayGeometry& rx, int k,
                                std::uint64_t seed);

/// k angles whose sines are pairwise at least min_sin_separation apart,
/// deterministic in seed.
std::vector<double> random_angles(int k, std::uint64_t seed, double min_sin_separation = 0.05);

/// Entries i.i.d. circular complex normal with unit variance.
Eigen::MatrixXcd random_channel(int m, int n_tx, std::uint64_t seed);

/// Index of the codeword minimizing ||z - channel * (basis J)^T||_F;
/// ties go to the smallest index. Throws on empty codebook or dimension
/// mismatch.
int ml_decode(const Eigen::MatrixXcd& z, const DownlinkConfig& cfg,
              const Eigen::MatrixXcd& basis, const Codebook& codebook);

struct SerResult {
    double ser = 0.0;
    int trials = 0;
    int errors = 0;
};

/// Symbol error rate of the index-modulation link: per trial a uniformly
/// random codeword is sent through the known channel with noise set from
/// snr_db via noise_power = ||channel * samples^T||_F^2 / (M*T*snr);
/// the per-trial RNG stream is (seed, trial), so the result is independent
/// of execution order and thread count.
SerResult monte_carlo_ser(const DownlinkConfig& cfg, const Codebook& codebook,
                          const Eigen::MatrixXcd& basis);

}  // namespace coarray::sim
