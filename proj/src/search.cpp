#include "coarray/search.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "coarray/combinations.hpp"

namespace coarray {

namespace {

using Pair = std::pair<std::vector<int>, std::vector<int>>;

// Canonical geometries with pinned aperture: {0} for size 1, otherwise
// {0, interior..., aperture} with the interior chosen from {1..aperture-1}.
// Emitted in lexicographic position order.
std::vector<std::vector<int>> candidates(int size, int aperture) {
    std::vector<std::vector<int>> out;
    if (size == 1) {
        if (aperture == 0) out.push_back({0});
        return out;
    }
    if (aperture < size - 1) return out;
    for_each_combination(aperture - 1, size - 2, [&](std::span<const int> idx) {
        std::vector<int> g;
        g.reserve(static_cast<std::size_t>(size));
        g.push_back(0);
        for (int i : idx) g.push_back(i + 1);
        g.push_back(aperture);
        out.push_back(std::move(g));
    });
    return out;
}

std::vector<int> reflect(const std::vector<int>& g) {
    std::vector<int> r(g.size());
    const int a = g.back();
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = a - g[g.size() - 1 - i];
    return r;
}

std::uint64_t mask_of(const std::vector<int>& g) {
    std::uint64_t m = 0;
    for (int p : g) m |= std::uint64_t{1} << p;
    return m;
}

struct SplitOutcome {
    std::uint64_t best = 0;
    std::vector<Pair> pairs;  // up to witness_cap, in (tx, rx) lex order
    std::uint64_t explored = 0;
};

// Number of Q-subsets of tx (edges pinned) whose shifted-rx union is `want`.
// The full pair sum set is already known to equal `want`.
std::uint64_t count_covering_subsets(const std::vector<int>& tx, std::uint64_t rx_mask,
                                     std::uint64_t want, int q) {
    const int n = static_cast<int>(tx.size());
    if (q == n) return 1;
    std::vector<std::uint64_t> shifted(tx.size());
    for (std::size_t i = 0; i < tx.size(); ++i) shifted[i] = rx_mask << tx[i];
    const std::uint64_t edges = shifted.front() | shifted.back();
    std::uint64_t cnt = 0;
    for_each_combination(n - 2, q - 2, [&](std::span<const int> idx) {
        std::uint64_t acc = edges;
        for (int i : idx) acc |= shifted[static_cast<std::size_t>(i) + 1];
        cnt += acc == want;
    });
    return cnt;
}

SplitOutcome run_split(const ParameterTuple& t, const SearchOptions& opts, int a_tx) {
    SplitOutcome out;
    const int span = t.n_sigma - 1;
    const std::uint64_t want =
        t.n_sigma == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t.n_sigma) - 1;
    const auto txs = candidates(t.n_tx, a_tx);
    if (txs.empty()) return out;
    const auto rxs = candidates(t.n_rx, span - a_tx);
    for (const auto& tx : txs) {
        const auto rtx = reflect(tx);
        for (const auto& rx : rxs) {
            if (opts.reflect_dedup) {
                // Keep only the lex-smaller member of each mirror pair.
                if (rtx < tx || (rtx == tx && reflect(rx) < rx)) continue;
            }
            ++out.explored;
            const std::uint64_t rx_mask = mask_of(rx);
            std::uint64_t sum = 0;
            for (int p : tx) sum |= rx_mask << p;
            if (sum != want) continue;
            const std::uint64_t cnt = count_covering_subsets(tx, rx_mask, want, t.q);
            if (cnt == 0) continue;
            if (cnt > out.best) {
                out.best = cnt;
                out.pairs.clear();
            }
            if (cnt == out.best && std::cmp_less(out.pairs.size(), opts.witness_cap))
                out.pairs.emplace_back(tx, rx);
        }
    }
    return out;
}

}  // namespace

std::string to_string(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::within_bounds: return "within-bounds";
        case BoundVerdict::upper_violated: return "upper-violated";
        case BoundVerdict::lower_violated: return "lower-violated";
    }
    return "within-bounds";
}

SearchResult optimal_codebook_search(const ParameterTuple& t, const SearchOptions& opts) {
    if (!admissible(t)) throw std::domain_error("inadmissible parameter tuple");
    const int cap = std::min(opts.aperture_cap, 63);
    if (t.n_sigma > cap)
        throw std::domain_error("search space too large: N_sigma exceeds the aperture cap");

    const int span = t.n_sigma - 1;
    std::vector<SplitOutcome> splits(static_cast<std::size_t>(span) + 1);
    const int workers = std::max(1, std::min(opts.threads, span + 1));
    if (workers == 1) {
        for (int a = 0; a <= span; ++a) splits[static_cast<std::size_t>(a)] = run_split(t, opts, a);
    } else {
        std::vector<std::future<void>> jobs;
        jobs.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (int a = w; a <= span; a += workers)
                    splits[static_cast<std::size_t>(a)] = run_split(t, opts, a);
            }));
        }
        for (auto& j : jobs) j.get();
    }

    SearchResult r;
    r.tuple = t;
    std::uint64_t best = 0;
    for (const auto& s : splits) {
        best = std::max(best, s.best);
        r.explored += s.explored;
    }
    r.optimum = best;

    // Per split the kept pairs are the lex-smallest achievers, so the global
    // lex-smallest witness_cap achievers all survive into this merge.
    std::vector<Pair> achievers;
    for (const auto& s : splits)
        if (s.best == best && best > 0)
            achievers.insert(achievers.end(), s.pairs.begin(), s.pairs.end());
    std::sort(achievers.begin(), achievers.end());
    if (std::cmp_greater(achievers.size(), opts.witness_cap))
        achievers.resize(static_cast<std::size_t>(opts.witness_cap));

    for (auto& [tx_pos, rx_pos] : achievers) {
        ArrayGeometry tx(std::move(tx_pos));
        ArrayGeometry rx(std::move(rx_pos));
        Codebook book = enumerate_constrained(t.q, tx, rx);
        if (BigInt(book.size()) != r.optimum)
            throw std::logic_error("witness count mismatch between search and enumeration");
        r.witnesses.push_back({std::move(tx), std::move(rx), std::move(book)});
    }

    const BoundCheck check = verify_bounds(t, r);
    r.bound_check = check.verdict;
    r.bound_detail = check.detail;
    return r;
}

BoundCheck verify_bounds(const ParameterTuple& t, const SearchResult& r) {
    const auto dump = [&](const BigInt& bound, const char* which) {
        std::ostringstream os;
        os << "tuple Q=" << t.q << " N_tx=" << t.n_tx << " N_rx=" << t.n_rx
           << " N_sigma=" << t.n_sigma << ": optimum " << r.optimum << " violates " << which
           << " bound " << bound;
        if (!r.witnesses.empty()) {
            os << "; witness tx={" << r.witnesses.front().tx.to_csv() << "} rx={"
               << r.witnesses.front().rx.to_csv() << "}";
        }
        return os.str();
    };
    const BigInt upper = upper_bound(t);
    if (r.optimum > upper) return {BoundVerdict::upper_violated, dump(upper, "upper")};
    if (t.n_sigma % t.n_rx == 0) {
        const BigInt lower = lower_bound_nested(t);
        if (r.optimum < lower) return {BoundVerdict::lower_violated, dump(lower, "lower")};
    }
    return {BoundVerdict::within_bounds, {}};
}

std::vector<SweepEntry> sweep(const std::vector<ParameterTuple>& tuples,
                              const SearchOptions& opts) {
    std::vector<SweepEntry> out;
    out.reserve(tuples.size());
    for (const auto& t : tuples) {
        SweepEntry e;
        e.tuple = t;
        try {
            e.bounds = bounds_report(t);
            e.result = optimal_codebook_search(t, opts);
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace coarray
