#include "coarray/sim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

#include "coarray/rng.hpp"

namespace coarray::sim {

namespace {

// Stream tags keep same-seed draws of unrelated quantities decorrelated.
constexpr std::uint64_t kStreamSensingNoise = 0;
constexpr std::uint64_t kStreamAngles = 1;
constexpr std::uint64_t kStreamChannel = 2;
constexpr std::uint64_t kStreamBasis = 3;

Eigen::MatrixXcd complex_gaussian(int rows, int cols, CounterRng& rng) {
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
    return m;
}

std::vector<Eigen::MatrixXcd> nominal_blocks(const Eigen::MatrixXcd& channel,
                                             const Eigen::MatrixXcd& basis,
                                             const Codebook& book) {
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(book.codewords.size());
    for (const auto& cw : book.codewords) {
        const Eigen::MatrixXcd j =
            selection_matrix(cw, book.tx).cast<std::complex<double>>();
        out.push_back(channel * (basis * j).transpose());
    }
    return out;
}

int decode_index(const Eigen::MatrixXcd& z, const std::vector<Eigen::MatrixXcd>& nominals) {
    int best = 0;
    double best_metric = (z - nominals.front()).squaredNorm();
    for (std::size_t c = 1; c < nominals.size(); ++c) {
        const double metric = (z - nominals[c]).squaredNorm();
        if (metric < best_metric) {
            best_metric = metric;
            best = static_cast<int>(c);
        }
    }
    return best;
}

}  // namespace

int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    const double cutoff = rel_tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > cutoff && sv(i) > 0.0;
    return rank;
}

Eigen::MatrixXd selection_matrix(const ArrayGeometry& s, const ArrayGeometry& tx) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(s.size_i(), tx.size_i());
    const auto& cols = tx.positions();
    for (int i = 0; i < s.size_i(); ++i) {
        const auto it = std::lower_bound(cols.begin(), cols.end(), s[static_cast<std::size_t>(i)]);
        if (it == cols.end() || *it != s[static_cast<std::size_t>(i)])
            throw std::invalid_argument("not a subset");
        j(i, static_cast<Eigen::Index>(it - cols.begin())) = 1.0;
    }
    return j;
}

Eigen::MatrixXcd orthonormal_basis(int t, int q, std::optional<std::uint64_t> seed) {
    if (t < 1 || q < 1) throw std::invalid_argument("dimensions must be positive");
    if (t < q) throw std::domain_error("basis rank infeasible");
    if (!seed) {
        Eigen::MatrixXcd u(t, q);
        const double scale = 1.0 / std::sqrt(static_cast<double>(t));
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < q; ++b)
                u(a, b) = std::polar(scale, -2.0 * std::numbers::pi * a * b / t);
        return u;
    }
    CounterRng rng(*seed, kStreamBasis);
    const Eigen::MatrixXcd g = complex_gaussian(t, q, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(t, q);
}

WaveformMatrix build_waveform(const Eigen::MatrixXcd& basis, const ArrayGeometry& s,
                              const ArrayGeometry& tx) {
    if (basis.cols() != s.size_i())
        throw std::invalid_argument("dimension mismatch: basis columns must match |s|");
    const Eigen::MatrixXcd j = selection_matrix(s, tx).cast<std::complex<double>>();
    return {basis * j, s, numerical_rank(basis)};
}

Eigen::MatrixXcd steering_matrix(const ArrayGeometry& d, const std::vector<double>& angles) {
    Eigen::MatrixXcd a(d.size_i(), static_cast<Eigen::Index>(angles.size()));
    for (int n = 0; n < d.size_i(); ++n)
        for (std::size_t k = 0; k < angles.size(); ++k)
            a(n, static_cast<Eigen::Index>(k)) =
                std::polar(1.0, std::numbers::pi * d[static_cast<std::size_t>(n)] *
                                    std::sin(angles[k]));
    return a;
}

Eigen::MatrixXcd sensing_snapshot(const ArrayGeometry& tx, const ArrayGeometry& rx,
                                  const WaveformMatrix& w, const SensingScene& scene,
                                  std::uint64_t seed) {
    if (w.samples.cols() != tx.size_i())
        throw std::invalid_argument("waveform and tx array disagree");
    if (scene.angles.empty() || scene.angles.size() != scene.gains.size())
        throw std::invalid_argument("scene angles and gains must be nonempty and equal-length");
    if (scene.noise_power < 0.0)
        throw std::invalid_argument("noise power must be nonnegative");

    const Eigen::MatrixXcd a_rx = steering_matrix(rx, scene.angles);
    const Eigen::MatrixXcd a_tx = steering_matrix(tx, scene.angles);
    const Eigen::VectorXcd gains =
        Eigen::Map<const Eigen::VectorXcd>(scene.gains.data(),
                                           static_cast<Eigen::Index>(scene.gains.size()));
    Eigen::MatrixXcd y =
        a_rx * gains.asDiagonal() * a_tx.transpose() * w.samples.transpose();
    if (scene.noise_power > 0.0) {
        CounterRng rng(seed, kStreamSensingNoise);
        const double sigma = std::sqrt(scene.noise_power);
        for (Eigen::Index i = 0; i < y.rows(); ++i)
            for (Eigen::Index j = 0; j < y.cols(); ++j) y(i, j) += sigma * rng.complex_normal();
    }
    return y;
}

VirtualMeasurement virtual_sum_coarray(const Eigen::MatrixXcd& y, const WaveformMatrix& w,
                                       const ArrayGeometry& rx, const ArrayGeometry& tx) {
    const int q = w.codeword.size_i();
    if (y.rows() != rx.size_i() || y.cols() != w.samples.rows())
        throw std::invalid_argument("snapshot dimensions disagree with rx/waveform");
    const Eigen::MatrixXcd j = selection_matrix(w.codeword, tx).cast<std::complex<double>>();
    const Eigen::MatrixXcd u = w.samples * j.transpose();  // T x Q, the embedded basis
    if (numerical_rank(u) < q) throw std::domain_error("waveform not matched");

    const Eigen::MatrixXcd gram = u.adjoint() * u;
    const Eigen::MatrixXcd x = y * (u * gram.inverse()).conjugate();  // N_rx x Q

    VirtualMeasurement out{sum_set(w.codeword, rx), {}};
    const auto& sums = out.support.positions();
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(out.support.size_i());
    Eigen::VectorXd cnt = Eigen::VectorXd::Zero(out.support.size_i());
    for (int jj = 0; jj < rx.size_i(); ++jj) {
        for (int i = 0; i < q; ++i) {
            const int s = rx[static_cast<std::size_t>(jj)] + w.codeword[static_cast<std::size_t>(i)];
            const auto it = std::lower_bound(sums.begin(), sums.end(), s);
            const auto idx = static_cast<Eigen::Index>(it - sums.begin());
            acc(idx) += x(jj, i);
            cnt(idx) += 1.0;
        }
    }
    out.values = acc.array() / cnt.array();
    return out;
}

std::vector<double> random_angles(int k, std::uint64_t seed, double min_sin_separation) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if ((k - 1) * min_sin_separation >= 2.0)
        throw std::invalid_argument("separation infeasible for this many angles");
    CounterRng rng(seed, kStreamAngles);
    std::vector<double> sines;
    sines.reserve(static_cast<std::size_t>(k));
    for (int attempts = 0; static_cast<int>(sines.size()) < k; ++attempts) {
        if (attempts >= 10000) throw std::logic_error("failed to draw separated angles");
        const double u = 2.0 * rng.uniform01() - 1.0;
        const bool ok = std::all_of(sines.begin(), sines.end(), [&](double v) {
            return std::abs(v - u) >= min_sin_separation;
        });
        if (ok) sines.push_back(u);
    }
    std::vector<double> angles(sines.size());
    std::transform(sines.begin(), sines.end(), angles.begin(),
                   [](double v) { return std::asin(v); });
    return angles;
}

bool identifiability_rank_check(const ArrayGeometry& s, const ArrayGeometry& rx, int k,
                                std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const ArrayGeometry sums = sum_set(s, rx);
    if (k > sums.size_i() / 2) throw std::domain_error("exceeds identifiability bound");
    const std::vector<double> angles = random_angles(k, seed);
    return numerical_rank(steering_matrix(sums, angles)) == k;
}

Eigen::MatrixXcd random_channel(int m, int n_tx, std::uint64_t seed) {
    if (m < 1 || n_tx < 1) throw std::invalid_argument("dimensions must be positive");
    CounterRng rng(seed, kStreamChannel);
    return complex_gaussian(m, n_tx, rng);
}

int ml_decode(const Eigen::MatrixXcd& z, const DownlinkConfig& cfg,
              const Eigen::MatrixXcd& basis, const Codebook& codebook) {
    if (codebook.codewords.empty()) throw std::invalid_argument("empty codebook");
    if (cfg.channel.cols() != codebook.tx.size_i() || z.rows() != cfg.channel.rows() ||
        z.cols() != basis.rows())
        throw std::invalid_argument("dimension mismatch");
    return decode_index(z, nominal_blocks(cfg.channel, basis, codebook));
}

SerResult monte_carlo_ser(const DownlinkConfig& cfg, const Codebook& codebook,
                          const Eigen::MatrixXcd& basis) {
    if (codebook.codewords.empty()) throw std::invalid_argument("empty codebook");
    if (cfg.trials < 1) throw std::invalid_argument("trials must be positive");
    if (cfg.channel.rows() != cfg.ue_antennas || cfg.channel.cols() != codebook.tx.size_i())
        throw std::invalid_argument("channel dimensions disagree with config");

    const auto nominals = nominal_blocks(cfg.channel, basis, codebook);
    const auto m = static_cast<double>(cfg.channel.rows());
    const auto t = static_cast<double>(basis.rows());
    const bool noiseless = std::isinf(cfg.snr_db) && cfg.snr_db > 0.0;
    const double snr = noiseless ? 0.0 : std::pow(10.0, cfg.snr_db / 10.0);

    std::vector<double> sigma(nominals.size(), 0.0);
    if (!noiseless) {
        for (std::size_t c = 0; c < nominals.size(); ++c)
            sigma[c] = std::sqrt(nominals[c].squaredNorm() / (m * t * snr));
    }

    const auto run_range = [&](int first, int stride) {
        int errors = 0;
        Eigen::MatrixXcd z(cfg.channel.rows(), basis.rows());
        for (int trial = first; trial < cfg.trials; trial += stride) {
            CounterRng rng(cfg.seed, static_cast<std::uint64_t>(trial));
            const auto sent = static_cast<std::size_t>(rng.uniform_below(nominals.size()));
            z = nominals[sent];
            if (sigma[sent] > 0.0) {
                for (Eigen::Index i = 0; i < z.rows(); ++i)
                    for (Eigen::Index jj = 0; jj < z.cols(); ++jj)
                        z(i, jj) += sigma[sent] * rng.complex_normal();
            }
            errors += decode_index(z, nominals) != static_cast<int>(sent);
        }
        return errors;
    };

    int errors = 0;
    const int workers = std::max(1, std::min(cfg.threads, cfg.trials));
    if (workers == 1) {
        errors = run_range(0, 1);
    } else {
        std::vector<std::future<int>> jobs;
        jobs.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            jobs.push_back(std::async(std::launch::async, run_range, w, workers));
        for (auto& j : jobs) errors += j.get();
    }
    return {static_cast<double>(errors) / cfg.trials, cfg.trials, errors};
}

}  // namespace coarray::sim
