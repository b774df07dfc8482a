// Acceptance gate: one self-contained check per release criterion, each
// printed as a [PASS]/[FAIL] line with its runtime and budget. Exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "coarray/bounds.hpp"
#include "coarray/codebook.hpp"
#include "coarray/combinations.hpp"
#include "coarray/figure3.hpp"
#include "coarray/search.hpp"
#include "coarray/sim.hpp"

using coarray::ArrayGeometry;
using coarray::BigInt;
using coarray::ParameterTuple;
namespace sim = coarray::sim;

namespace {

struct Failure {
    std::ostringstream os;
    bool any = false;
    template <typename T>
    Failure& operator<<(const T& v) {
        os << v;
        any = true;
        return *this;
    }
};

// 1. The ULA transmit/receive pair admits exactly C(N_tx-2, Q-2) codewords.
bool ula_exactness(Failure& fail) {
    for (int n_tx = 2; n_tx <= 6; ++n_tx)
        for (int n_rx = std::max(1, n_tx - 1); n_rx <= 6; ++n_rx) {
            auto pair = coarray::build_ula_pair(n_tx, n_rx);
            for (int q = 2; q <= n_tx; ++q) {
                auto book = coarray::enumerate_constrained(q, pair.tx, pair.rx);
                BigInt want = coarray::binomial(n_tx - 2, q - 2);
                if (BigInt(book.size()) != want)
                    fail << "ULA N_tx=" << n_tx << " N_rx=" << n_rx << " Q=" << q
                         << ": got " << book.size() << " want " << want << "\n";
            }
        }
    return !fail.any;
}

// 2. Maximal-sum pairs keep only the full selection.
bool nonredundant_rigidity(Failure& fail) {
    for (int n_tx = 1; n_tx <= 24; ++n_tx)
        for (int n_rx = 1; n_rx * n_tx <= 24; ++n_rx) {
            auto pair = coarray::build_nonredundant_pair(n_tx, n_rx);
            auto full = coarray::enumerate_constrained(n_tx, pair.tx, pair.rx);
            if (full.size() != 1)
                fail << "nonredundant " << n_tx << "x" << n_rx << " at Q=" << n_tx
                     << ": got " << full.size() << " want 1\n";
            for (int q = 1; q < n_tx; ++q) {
                auto book = coarray::enumerate_constrained(q, pair.tx, pair.rx);
                if (!book.codewords.empty())
                    fail << "nonredundant " << n_tx << "x" << n_rx << " at Q=" << q
                         << ": got " << book.size() << " want 0\n";
            }
        }
    return !fail.any;
}

// 3. Over every canonical geometry pair with contiguous sum co-array
//    (N_sigma <= 14, sizes <= 6): the codebook never exceeds
//    C(N_tx-2, Q-2) and every codeword keeps both tx edge sensors.
bool universal_upper_bound(Failure& fail) {
    struct Cand {
        std::uint64_t mask;
        std::vector<int> pos;
    };
    // Candidates by aperture: canonical, max = aperture, size <= 6.
    std::vector<std::vector<Cand>> by_aperture(14);
    by_aperture[0].push_back({1ull, {0}});
    for (int a = 1; a <= 13; ++a)
        for (int k = 0; k <= std::min(4, a - 1); ++k)
            coarray::for_each_combination(a - 1, k, [&](std::span<const int> idx) {
                Cand c;
                c.pos.push_back(0);
                for (int i : idx) c.pos.push_back(i + 1);
                c.pos.push_back(a);
                c.mask = 0;
                for (int p : c.pos) c.mask |= 1ull << p;
                by_aperture[static_cast<std::size_t>(a)].push_back(std::move(c));
            });

    long long pairs_checked = 0;
    for (int span = 0; span <= 13; ++span) {
        const std::uint64_t full = (span == 63) ? ~0ull : ((1ull << (span + 1)) - 1ull);
        for (int a_tx = 0; a_tx <= span; ++a_tx)
            for (const auto& tc : by_aperture[static_cast<std::size_t>(a_tx)])
                for (const auto& rc : by_aperture[static_cast<std::size_t>(span - a_tx)]) {
                    std::uint64_t sum = 0;
                    for (int p : tc.pos) sum |= rc.mask << p;
                    if (sum != full) continue;
                    ++pairs_checked;
                    ArrayGeometry tx(tc.pos), rx(rc.pos);
                    const int n_tx = tx.size_i();
                    for (int q = 1; q <= n_tx; ++q) {
                        auto book = coarray::enumerate_constrained(q, tx, rx);
                        BigInt cap = (q >= 2) ? coarray::binomial(n_tx - 2, q - 2)
                                              : BigInt(n_tx == 1 ? 1 : 0);
                        if (BigInt(book.size()) > cap)
                            fail << "pair tx=" << tx.to_csv() << " rx=" << rx.to_csv()
                                 << " Q=" << q << ": " << book.size() << " > " << cap
                                 << "\n";
                        for (const auto& cw : book.codewords)
                            if (!coarray::contains_edges(cw, tx))
                                fail << "edge-free codeword " << cw.to_csv()
                                     << " in tx=" << tx.to_csv() << "\n";
                    }
                }
    }
    if (pairs_checked < 1000) fail << "only " << pairs_checked << " pairs checked\n";
    return !fail.any;
}

// 4. The layered construction achieves at least C(N_tx-L, Q-L) codewords.
bool nested_achievability(Failure& fail) {
    for (int n_tx = 1; n_tx <= 7; ++n_tx)
        for (int n_rx = 1; n_rx <= 5; ++n_rx)
            for (int ell = 1; ell <= n_tx; ++ell) {
                const int n_sigma = ell * n_rx;
                if (n_sigma > 20 || n_sigma < n_tx + n_rx - 1) continue;
                auto built = coarray::build_nested_pair(n_tx, n_rx, n_sigma);
                for (int q = ell; q <= n_tx; ++q) {
                    auto book = coarray::enumerate_constrained(q, built.tx, built.rx);
                    BigInt want = coarray::binomial(n_tx - ell, q - ell);
                    if (BigInt(book.size()) < want)
                        fail << "nested N_tx=" << n_tx << " N_rx=" << n_rx
                             << " N_sigma=" << n_sigma << " Q=" << q << ": "
                             << book.size() << " < " << want << "\n";
                }
            }
    return !fail.any;
}

// 5. The exhaustive optimum sits between the bounds for every admissible
//    tuple (N_sigma <= 12, sizes <= 5) and meets the upper bound at the
//    minimal-sum (ULA, N_tx <= N_rx+1) and maximal-sum corners.
bool search_bound_sandwich(Failure& fail) {
    int searched = 0;
    for (int n_tx = 1; n_tx <= 5; ++n_tx)
        for (int n_rx = 1; n_rx <= 5; ++n_rx)
            for (int n_sigma = n_tx + n_rx - 1; n_sigma <= 12; ++n_sigma)
                for (int q = 1; q <= n_tx; ++q) {
                    ParameterTuple t{q, n_tx, n_rx, n_sigma};
                    if (!coarray::admissible(t)) continue;
                    auto r = coarray::optimal_codebook_search(t);
                    ++searched;
                    if (r.bound_check != coarray::BoundVerdict::within_bounds)
                        fail << "bounds violated: " << r.bound_detail << "\n";
                    if (n_sigma == n_tx + n_rx - 1 && n_tx <= n_rx + 1 &&
                        r.optimum != coarray::upper_bound(t))
                        fail << "minimal-sum corner not tight: Q=" << q
                             << " N_tx=" << n_tx << " N_rx=" << n_rx << ": optimum "
                             << r.optimum << " != upper " << coarray::upper_bound(t)
                             << "\n";
                    if (n_sigma == n_tx * n_rx && r.optimum != coarray::upper_bound(t))
                        fail << "maximal-sum corner not tight: Q=" << q
                             << " N_tx=" << n_tx << " N_rx=" << n_rx << "\n";
                }
    if (searched < 100) fail << "only " << searched << " tuples searched\n";
    return !fail.any;
}

// 6. The 20x20, Q=12 bound-curve sweep has the pinned endpoints and its CSV
//    is byte-identical across repeated runs.
bool figure_sweep_endpoints(Failure& fail) {
    auto rows = coarray::figure3_sweep(20, 20, coarray::SweepMode::fixed_q, 12);
    for (const auto& r : rows)
        if (r.upper != 43758)
            fail << "upper at N_sigma=" << r.n_sigma << " is " << r.upper << "\n";
    bool saw_end = false;
    for (const auto& r : rows)
        if (r.n_sigma == 240) {
            saw_end = true;
            if (!r.lower || *r.lower != 1)
                fail << "lower at N_sigma=240 is not 1\n";
        }
    if (!saw_end) fail << "sweep misses N_sigma=240\n";
    auto csv1 = coarray::figure3_csv(rows);
    auto csv2 = coarray::figure3_csv(
        coarray::figure3_sweep(20, 20, coarray::SweepMode::fixed_q, 12));
    if (csv1 != csv2) fail << "CSV not byte-identical across runs\n";
    if (csv1.empty() || csv1.back() != '\n') fail << "CSV must end with a newline\n";
    return !fail.any;
}

// 7. Virtual sum-co-array recovery matches the analytic response to 1e-10,
//    and the manifold rank check passes at K = floor(N_sigma/2) for 100
//    seeded draws.
bool virtual_coarray_recovery(Failure& fail) {
    auto pair = coarray::build_ula_pair(5, 5);
    auto book = coarray::enumerate_constrained(3, pair.tx, pair.rx);
    auto basis = sim::orthonormal_basis(8, 3);
    const std::complex<double> j(0.0, 1.0);

    for (const auto& cw : book.codewords) {
        auto w = sim::build_waveform(basis, cw, pair.tx);
        for (int k = 1; k <= 4; ++k)
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                sim::SensingScene scene;
                scene.angles = sim::random_angles(k, seed * 101 + k);
                auto g = sim::random_channel(1, k, seed * 77 + k);
                scene.gains.assign(g.data(), g.data() + k);
                auto y = sim::sensing_snapshot(pair.tx, pair.rx, w, scene, 0);
                auto v = sim::virtual_sum_coarray(y, w, pair.rx, pair.tx);
                auto support = coarray::sum_set(cw, pair.rx);
                if (!(v.support == support)) {
                    fail << "support mismatch for codeword " << cw.to_csv() << "\n";
                    continue;
                }
                for (int m = 0; m < v.values.size(); ++m) {
                    std::complex<double> ref = 0.0;
                    for (int kk = 0; kk < k; ++kk)
                        ref += scene.gains[static_cast<std::size_t>(kk)] *
                               std::exp(j * std::numbers::pi * double(support[m]) *
                                        std::sin(scene.angles[static_cast<std::size_t>(kk)]));
                    if (std::abs(v.values[m] - ref) >= 1e-10)
                        fail << "virtual value off by "
                             << std::abs(v.values[m] - ref) << " at sum "
                             << support[m] << "\n";
                }
            }
        const int k_max = coarray::sum_set(cw, pair.rx).size_i() / 2;
        for (std::uint64_t seed = 0; seed < 100; ++seed)
            if (!sim::identifiability_rank_check(cw, pair.rx, k_max, seed))
                fail << "rank check failed at seed " << seed << " for "
                     << cw.to_csv() << "\n";
    }
    return !fail.any;
}

// 8. Index-modulation link: error-free decoding without noise; SER < 1e-3
//    at 30 dB on the 6x6 Q=4 design; SER within [0.45, 0.55] at -30 dB on a
//    two-codeword codebook.
bool downlink_behavior(Failure& fail) {
    constexpr double kInf = std::numeric_limits<double>::infinity();

    struct Setup {
        std::string name;
        coarray::Codebook book;
        ArrayGeometry tx;
    };
    std::vector<Setup> setups;
    {
        auto ula44 = coarray::build_ula_pair(4, 4);
        setups.push_back({"ula-4x4-q3",
                          coarray::enumerate_constrained(3, ula44.tx, ula44.rx), ula44.tx});
        auto ula66 = coarray::build_ula_pair(6, 6);
        setups.push_back({"ula-6x6-q4",
                          coarray::enumerate_constrained(4, ula66.tx, ula66.rx), ula66.tx});
        auto nested = coarray::build_nested_pair(5, 4, 12);
        setups.push_back({"nested-5x4-q4",
                          coarray::enumerate_constrained(4, nested.tx, nested.rx), nested.tx});
        auto nr = coarray::build_nonredundant_pair(3, 4);
        setups.push_back({"nonredundant-3x4-q3",
                          coarray::enumerate_constrained(3, nr.tx, nr.rx), nr.tx});
    }

    for (const auto& s : setups) {
        auto basis = sim::orthonormal_basis(16, s.book.q);
        sim::DownlinkConfig cfg;
        cfg.ue_antennas = 4;
        cfg.channel = sim::random_channel(4, s.tx.size_i(), 11);
        cfg.snr_db = kInf;
        cfg.trials = 1000;
        cfg.seed = 2;
        auto r = sim::monte_carlo_ser(cfg, s.book, basis);
        if (r.errors != 0)
            fail << s.name << ": " << r.errors << " errors without noise\n";
    }

    {
        auto ula66 = coarray::build_ula_pair(6, 6);
        auto book = coarray::enumerate_constrained(4, ula66.tx, ula66.rx);
        sim::DownlinkConfig cfg;
        cfg.ue_antennas = 4;
        cfg.channel = sim::random_channel(4, 6, 5);
        cfg.snr_db = 30.0;
        cfg.trials = 10000;
        cfg.seed = 4;
        auto r = sim::monte_carlo_ser(cfg, book, sim::orthonormal_basis(16, 4));
        if (r.ser >= 1e-3)
            fail << "30 dB SER " << r.ser << " >= 1e-3\n";
    }

    {
        auto ula44 = coarray::build_ula_pair(4, 4);
        auto book = coarray::enumerate_constrained(3, ula44.tx, ula44.rx);
        if (book.size() != 2) {
            fail << "expected a two-codeword codebook\n";
        } else {
            sim::DownlinkConfig cfg;
            cfg.ue_antennas = 1;
            cfg.channel = sim::random_channel(1, 4, 9);
            cfg.snr_db = -30.0;
            cfg.trials = 10000;
            cfg.seed = 6;
            auto r = sim::monte_carlo_ser(cfg, book, sim::orthonormal_basis(4, 3));
            if (r.ser < 0.45 || r.ser > 0.55)
                fail << "-30 dB SER " << r.ser << " outside [0.45, 0.55]\n";
        }
    }
    return !fail.any;
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        double budget_s;
        std::function<bool(Failure&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"ULA pairs: codebook size equals C(N_tx-2, Q-2)", 10.0, ula_exactness},
        {"maximal-sum pairs: full selection only", 5.0, nonredundant_rigidity},
        {"upper bound and edge retention over all small contiguous pairs", 60.0,
         universal_upper_bound},
        {"layered construction achieves C(N_tx-L, Q-L)", 60.0, nested_achievability},
        {"exhaustive optimum within bounds; tight at both corners", 300.0,
         search_bound_sandwich},
        {"20x20 bound sweep endpoints and byte-stable CSV", 1.0, figure_sweep_endpoints},
        {"virtual sum co-array recovery and rank checks", 30.0, virtual_coarray_recovery},
        {"downlink index modulation across SNR regimes", 120.0, downlink_behavior},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        Failure fail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(fail);
        } catch (const std::exception& e) {
            fail << "exception: " << e.what() << "\n";
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.budget_s) {
            ok = false;
            fail << "took " << elapsed << "s, budget " << c.budget_s << "s\n";
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << c.name << " ("
                  << elapsed << "s)\n";
        if (!ok) {
            std::cout << fail.os.str();
            ++failures;
        }
    }
    if (failures != 0) std::cout << failures << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}
