#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coarray/bounds.hpp"
#include "coarray/codebook.hpp"
#include "coarray/figure3.hpp"
#include "coarray/geometry.hpp"
#include "coarray/json_io.hpp"
#include "coarray/search.hpp"
#include "coarray/sim.hpp"

namespace {

using nlohmann::json;

int default_threads() {
    if (const char* env = std::getenv("COARRAY_CODEBOOK_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (...) {
        }
    }
    return 1;
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

coarray::ArrayGeometry parse_geometry(const std::string& text) {
    return coarray::ArrayGeometry(coarray::parse_positions(text));
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw std::invalid_argument("format " + format + " is not available for this command");
}

std::string csv_of_codebook(const coarray::Codebook& book) {
    std::ostringstream os;
    for (const auto& cw : book.codewords) os << cw.to_csv() << '\n';
    return os.str();
}

double parse_snr(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "+inf"))
        return std::numeric_limits<double>::infinity();
    throw std::invalid_argument("snr_db entries must be numbers or \"inf\"");
}

std::string snr_text(double snr) {
    if (std::isinf(snr)) return "inf";
    std::ostringstream os;
    os << snr;
    return os.str();
}

struct SimulateArgs {
    std::string descriptor_path;
    std::string out;
    std::string format = "csv";
    int threads = default_threads();
    std::int64_t seed_override = -1;
};

void run_simulate(const SimulateArgs& args) {
    require_format(args.format, {"csv", "json"});
    std::ifstream f(args.descriptor_path);
    if (!f) throw std::runtime_error("cannot open descriptor: " + args.descriptor_path);
    const json d = json::parse(f);

    const coarray::ArrayGeometry tx = coarray::geometry_from_json(d.at("tx"));
    std::optional<coarray::ArrayGeometry> rx;
    if (d.contains("rx")) rx = coarray::geometry_from_json(d.at("rx"));
    const int q = d.at("Q").get<int>();
    std::string kind = d.value("kind", rx ? "constrained" : "unconstrained");

    coarray::Codebook book = [&] {
        if (kind == "constrained") {
            if (!rx) throw std::invalid_argument("constrained simulation requires rx");
            return coarray::enumerate_constrained(q, tx, *rx);
        }
        if (kind == "unconstrained") return coarray::enumerate_unconstrained(q, tx);
        throw std::invalid_argument("unknown codebook kind: " + kind);
    }();
    if (book.codewords.empty())
        throw std::domain_error("codebook is empty for this geometry and Q");

    const int t = d.value("basis_length", 16);
    const int m = d.value("ue_antennas", 4);
    const int trials = d.value("trials", 1000);
    std::uint64_t seed = d.value("seed", 0ULL);
    if (args.seed_override >= 0) seed = static_cast<std::uint64_t>(args.seed_override);
    std::optional<std::uint64_t> basis_seed;
    if (d.contains("basis_seed")) basis_seed = d.at("basis_seed").get<std::uint64_t>();
    const std::uint64_t channel_seed = d.value("channel_seed", seed);

    std::vector<double> snrs;
    if (d.contains("snr_db") && d.at("snr_db").is_array()) {
        for (const auto& v : d.at("snr_db")) snrs.push_back(parse_snr(v));
    } else if (d.contains("snr_db")) {
        snrs.push_back(parse_snr(d.at("snr_db")));
    } else {
        throw std::invalid_argument("descriptor is missing snr_db");
    }

    const Eigen::MatrixXcd basis = coarray::sim::orthonormal_basis(t, q, basis_seed);
    const Eigen::MatrixXcd channel = coarray::sim::random_channel(m, tx.size_i(), channel_seed);

    std::ostringstream csv;
    csv << "snr_db,ser,trials\n";
    auto rows = json::array();
    for (double snr : snrs) {
        coarray::sim::DownlinkConfig cfg{m, channel, snr, trials, seed, args.threads};
        const auto res = coarray::sim::monte_carlo_ser(cfg, book, basis);
        csv << snr_text(snr) << ',' << res.ser << ',' << res.trials << '\n';
        rows.push_back({{"snr_db", snr_text(snr)},
                        {"ser", res.ser},
                        {"errors", res.errors},
                        {"trials", res.trials}});
    }
    if (args.format == "csv")
        emit(csv.str(), args.out);
    else
        emit(dump({{"codebook_size", book.codewords.size()}, {"rows", rows}}), args.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum co-array index-modulation codebooks: construction, bounds, exhaustive "
                 "search and link simulation"};
    app.require_subcommand(1);

    std::string tx_text, rx_text, out, mode;
    std::string fmt_sumset, fmt_enum, fmt_bounds, fmt_construct, fmt_search, fmt_figure3;
    int q = 0, ntx = 0, nrx = 0, nsigma = 0;
    coarray::SearchOptions search_opts;
    std::int64_t fill_seed = -1;
    SimulateArgs sim_args;

    auto* sumset = app.add_subcommand("sumset", "Sum set of two geometries");
    sumset->add_option("--tx", tx_text, "tx positions, e.g. 0,1,4,6,8")->required();
    sumset->add_option("--rx", rx_text, "rx positions")->required();
    sumset->add_option("--out", out, "write output to this file");
    sumset->add_option("--format", fmt_sumset, "json|csv")->default_val("json");
    sumset->callback([&] {
        require_format(fmt_sumset, {"json", "csv"});
        const auto tx = parse_geometry(tx_text);
        const auto rx = parse_geometry(rx_text);
        const auto sum = coarray::sum_set(tx, rx);
        const bool contiguous = coarray::is_contiguous(coarray::canonicalize(sum.positions()));
        if (fmt_sumset == "csv") {
            emit(sum.to_csv() + "\n", out);
        } else {
            emit(dump({{"tx", coarray::to_json(tx)},
                       {"rx", coarray::to_json(rx)},
                       {"sum", coarray::to_json(sum)},
                       {"size", sum.size()},
                       {"contiguous", contiguous}}),
                 out);
        }
    });

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate a codebook");
    enumerate->add_option("--tx", tx_text, "tx positions")->required();
    enumerate->add_option("--rx", rx_text, "rx positions (enables the sum-set constraint)");
    enumerate->add_option("--q", q, "codeword size")->required();
    enumerate->add_option("--out", out, "write output to this file");
    enumerate->add_option("--format", fmt_enum, "json|csv")->default_val("json");
    enumerate->callback([&] {
        require_format(fmt_enum, {"json", "csv"});
        const auto tx = parse_geometry(tx_text);
        const coarray::Codebook book =
            rx_text.empty() ? coarray::enumerate_unconstrained(q, tx)
                            : coarray::enumerate_constrained(q, tx, parse_geometry(rx_text));
        emit(fmt_enum == "csv" ? csv_of_codebook(book) : dump(coarray::to_json(book)), out);
    });

    auto* bounds = app.add_subcommand("bounds", "Bound sandwich for one parameter tuple");
    bounds->add_option("--tx", ntx, "N_tx (sensor count)")->required();
    bounds->add_option("--rx", nrx, "N_rx (sensor count)")->required();
    bounds->add_option("--q", q, "Q")->required();
    bounds->add_option("--nsigma", nsigma, "N_sigma")->required();
    bounds->add_option("--out", out, "write output to this file");
    bounds->add_option("--format", fmt_bounds, "json")->default_val("json");
    bounds->callback([&] {
        require_format(fmt_bounds, {"json"});
        emit(dump(coarray::to_json(coarray::bounds_report({q, ntx, nrx, nsigma}))), out);
    });

    auto* construct = app.add_subcommand("construct", "Reference geometry pairs");
    construct->add_option("--mode", mode, "ula|nonredundant|nested")->required();
    construct->add_option("--tx", ntx, "N_tx (sensor count)")->required();
    construct->add_option("--rx", nrx, "N_rx (sensor count)")->required();
    construct->add_option("--nsigma", nsigma, "N_sigma (nested mode only)");
    construct->add_option("--fill-seed", fill_seed,
                          "seeded random fill sensors for nested mode (default: lexicographic)");
    construct->add_option("--out", out, "write output to this file");
    construct->add_option("--format", fmt_construct, "json")->default_val("json");
    construct->callback([&] {
        require_format(fmt_construct, {"json"});
        json j;
        j["mode"] = mode;
        if (mode == "ula" || mode == "nonredundant") {
            const coarray::ArrayPair pair = mode == "ula"
                                                ? coarray::build_ula_pair(ntx, nrx)
                                                : coarray::build_nonredundant_pair(ntx, nrx);
            const auto sum = coarray::sum_set(pair.tx, pair.rx);
            j["tx"] = coarray::to_json(pair.tx);
            j["rx"] = coarray::to_json(pair.rx);
            j["sum"] = coarray::to_json(sum);
            j["N_sigma"] = sum.size();
        } else if (mode == "nested") {
            if (nsigma == 0) throw std::invalid_argument("nested mode requires --nsigma");
            const coarray::NestedConstruction nc =
                fill_seed >= 0
                    ? coarray::build_nested_pair(ntx, nrx, nsigma,
                                                 static_cast<std::uint64_t>(fill_seed))
                    : coarray::build_nested_pair(ntx, nrx, nsigma);
            const auto sum = coarray::sum_set(nc.tx, nc.rx);
            j["tx"] = coarray::to_json(nc.tx);
            j["rx"] = coarray::to_json(nc.rx);
            j["core"] = coarray::to_json(nc.core);
            j["sum"] = coarray::to_json(sum);
            j["N_sigma"] = sum.size();
        } else {
            throw std::invalid_argument("unknown mode: expected ula, nonredundant or nested");
        }
        emit(dump(j), out);
    });

    auto* search = app.add_subcommand("search", "Exhaustive optimum over geometry pairs");
    search->add_option("--tx", ntx, "N_tx (sensor count)")->required();
    search->add_option("--rx", nrx, "N_rx (sensor count)")->required();
    search->add_option("--nsigma", nsigma, "N_sigma")->required();
    auto* q_opt = search->add_option("--q", q, "Q; omit to sweep all feasible Q");
    search->add_option("--cap", search_opts.aperture_cap, "largest N_sigma accepted")
        ->default_val(24);
    search->add_option("--witnesses", search_opts.witness_cap, "witness pairs kept")
        ->default_val(16);
    search->add_flag_function(
        "--no-reflect-dedup",
        [&](std::int64_t) { search_opts.reflect_dedup = false; },
        "also evaluate mirror-image pairs");
    search->add_option("--threads", search_opts.threads, "worker threads")
        ->default_val(default_threads());
    search->add_option("--out", out, "write output to this file");
    search->add_option("--format", fmt_search, "json")->default_val("json");
    search->callback([&] {
        require_format(fmt_search, {"json"});
        if (!q_opt->empty()) {
            emit(dump(coarray::to_json(
                     coarray::optimal_codebook_search({q, ntx, nrx, nsigma}, search_opts))),
                 out);
            return;
        }
        const int lo = coarray::min_selection_size(nsigma, nrx);
        auto results = json::array();
        coarray::BigInt best = -1;
        int argmax_q = lo;
        for (int qq = lo; qq <= ntx; ++qq) {
            const auto r = coarray::optimal_codebook_search({qq, ntx, nrx, nsigma}, search_opts);
            if (r.optimum > best) {
                best = r.optimum;
                argmax_q = qq;
            }
            results.push_back(coarray::to_json(r));
        }
        emit(dump({{"N_tx", ntx},
                   {"N_rx", nrx},
                   {"N_sigma", nsigma},
                   {"results", results},
                   {"empirical_argmax_q", argmax_q}}),
             out);
    });

    auto* figure3 = app.add_subcommand("figure3", "Bound curves over a parameter sweep");
    figure3->add_option("--tx", ntx, "N_tx (sensor count)")->required();
    figure3->add_option("--rx", nrx, "N_rx (sensor count)")->required();
    figure3->add_option("--mode", mode, "fixed-q|fixed-nsigma")->required();
    auto* f3_q = figure3->add_option("--q", q, "fixed Q (fixed-q mode)");
    auto* f3_ns = figure3->add_option("--nsigma", nsigma, "fixed N_sigma (fixed-nsigma mode)");
    figure3->add_option("--out", out, "write output to this file");
    figure3->add_option("--format", fmt_figure3, "csv|json")->default_val("csv");
    figure3->callback([&] {
        require_format(fmt_figure3, {"csv", "json"});
        const coarray::SweepMode m = coarray::sweep_mode_from_string(mode);
        int fixed = 0;
        if (m == coarray::SweepMode::fixed_q) {
            if (f3_q->empty()) throw std::invalid_argument("fixed-q mode requires --q");
            fixed = q;
        } else {
            if (f3_ns->empty()) throw std::invalid_argument("fixed-nsigma mode requires --nsigma");
            fixed = nsigma;
        }
        const auto rows = coarray::figure3_sweep(ntx, nrx, m, fixed);
        if (fmt_figure3 == "csv") {
            emit(coarray::figure3_csv(rows), out);
        } else {
            auto jr = json::array();
            for (const auto& r : rows) jr.push_back(coarray::to_json(r));
            emit(dump({{"N_tx", ntx}, {"N_rx", nrx}, {"mode", mode}, {"rows", jr}}), out);
        }
    });

    auto* simulate = app.add_subcommand("simulate", "Index-modulation link Monte Carlo");
    simulate->add_option("--descriptor", sim_args.descriptor_path, "run descriptor JSON file")
        ->required();
    simulate->add_option("--out", sim_args.out, "write output to this file");
    simulate->add_option("--format", sim_args.format, "csv|json")->default_val("csv");
    simulate->add_option("--threads", sim_args.threads, "worker threads")
        ->default_val(default_threads());
    simulate->add_option("--seed", sim_args.seed_override, "override the descriptor seed");
    simulate->callback([&] { run_simulate(sim_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
