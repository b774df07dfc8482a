#include <pybind11/eigen.h>
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "coarray/bounds.hpp"
#include "coarray/codebook.hpp"
#include "coarray/figure3.hpp"
#include "coarray/geometry.hpp"
#include "coarray/search.hpp"
#include "coarray/sim.hpp"

namespace py = pybind11;
namespace sim = coarray::sim;
using coarray::ArrayGeometry;
using coarray::BigInt;
using coarray::BoundsReport;
using coarray::Codebook;
using coarray::Figure3Row;
using coarray::ParameterTuple;
using coarray::SearchOptions;
using coarray::SearchResult;
using coarray::Witness;

namespace {

py::int_ big_to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object big_opt_to_py(const std::optional<BigInt>& v) {
    if (!v) return py::none();
    return big_to_py(*v);
}

std::string geometry_repr(const ArrayGeometry& g) {
    return "ArrayGeometry([" + g.to_csv() + "])";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sum co-array codebook construction, bounds, search, and link simulation";
    m.attr("__version__") = "0.1.0";

    py::class_<ArrayGeometry>(m, "ArrayGeometry")
        .def(py::init<std::vector<int>>(), py::arg("positions"))
        .def_property_readonly("positions",
                               [](const ArrayGeometry& g) { return g.positions(); })
        .def_property_readonly("aperture", &ArrayGeometry::aperture)
        .def_property_readonly("is_canonical", &ArrayGeometry::is_canonical)
        .def("min", &ArrayGeometry::min)
        .def("max", &ArrayGeometry::max)
        .def("contains", &ArrayGeometry::contains, py::arg("position"))
        .def("is_subset_of", &ArrayGeometry::is_subset_of, py::arg("other"))
        .def("__len__", &ArrayGeometry::size)
        .def("__getitem__",
             [](const ArrayGeometry& g, int i) {
                 if (i < 0) i += g.size_i();
                 if (i < 0 || i >= g.size_i()) throw py::index_error();
                 return g[i];
             })
        .def("__iter__",
             [](const ArrayGeometry& g) { return py::make_iterator(g.begin(), g.end()); },
             py::keep_alive<0, 1>())
        .def("__eq__", [](const ArrayGeometry& a, const ArrayGeometry& b) { return a == b; })
        .def("__lt__", [](const ArrayGeometry& a, const ArrayGeometry& b) { return a < b; })
        .def("__hash__",
             [](const ArrayGeometry& g) {
                 std::size_t h = 1469598103934665603ull;
                 for (int p : g) h = (h ^ static_cast<std::size_t>(p)) * 1099511628211ull;
                 return h;
             })
        .def("__repr__", &geometry_repr);

    m.def("canonicalize", &coarray::canonicalize, py::arg("positions"),
          "Sorted, deduplicated geometry translated to start at zero");
    m.def("parse_positions",
          [](const std::string& s) { return coarray::parse_positions(s); },
          py::arg("text"));
    m.def("sum_set", &coarray::sum_set, py::arg("a"), py::arg("b"),
          "All pairwise position sums of two geometries");
    m.def("is_contiguous", &coarray::is_contiguous, py::arg("geometry"));
    m.def("contains_edges", &coarray::contains_edges, py::arg("selection"),
          py::arg("parent"));
    m.def("make_ula", &coarray::make_ula, py::arg("n"));
    m.def("scaled", &coarray::scaled, py::arg("geometry"), py::arg("factor"));
    m.def("reflected", &coarray::reflected, py::arg("geometry"));

    py::class_<ParameterTuple>(m, "ParameterTuple")
        .def(py::init([](int q, int n_tx, int n_rx, int n_sigma) {
                 return ParameterTuple{q, n_tx, n_rx, n_sigma};
             }),
             py::arg("q"), py::arg("n_tx"), py::arg("n_rx"), py::arg("n_sigma"))
        .def_readwrite("q", &ParameterTuple::q)
        .def_readwrite("n_tx", &ParameterTuple::n_tx)
        .def_readwrite("n_rx", &ParameterTuple::n_rx)
        .def_readwrite("n_sigma", &ParameterTuple::n_sigma)
        .def("__eq__",
             [](const ParameterTuple& a, const ParameterTuple& b) { return a == b; })
        .def("__repr__", [](const ParameterTuple& t) {
            std::ostringstream os;
            os << "ParameterTuple(q=" << t.q << ", n_tx=" << t.n_tx
               << ", n_rx=" << t.n_rx << ", n_sigma=" << t.n_sigma << ")";
            return os.str();
        });

    py::class_<Codebook>(m, "Codebook")
        .def_readonly("tx", &Codebook::tx)
        .def_readonly("rx", &Codebook::rx)
        .def_readonly("q", &Codebook::q)
        .def_property_readonly("kind",
                               [](const Codebook& c) { return coarray::to_string(c.kind); })
        .def_readonly("codewords", &Codebook::codewords)
        .def("__len__", &Codebook::size);

    m.def("min_selection_size", &coarray::min_selection_size, py::arg("n_sigma"),
          py::arg("n_rx"));
    m.def("admissible", &coarray::admissible, py::arg("tuple"));
    m.def("enumerate_unconstrained", &coarray::enumerate_unconstrained, py::arg("q"),
          py::arg("tx"));
    m.def("enumerate_constrained", &coarray::enumerate_constrained, py::arg("q"),
          py::arg("tx"), py::arg("rx"), "Q-subsets of tx preserving sum_set(tx, rx)");
    m.def("bits_per_codeword", &coarray::bits_per_codeword, py::arg("codebook"));

    m.def("binomial",
          [](int n, int k) { return big_to_py(coarray::binomial(n, k)); }, py::arg("n"),
          py::arg("k"));
    m.def("upper_bound",
          [](const ParameterTuple& t) { return big_to_py(coarray::upper_bound(t)); },
          py::arg("tuple"));
    m.def("lower_bound_nested",
          [](const ParameterTuple& t) { return big_to_py(coarray::lower_bound_nested(t)); },
          py::arg("tuple"));
    m.def("exact_size_ula",
          [](const ParameterTuple& t) { return big_to_py(coarray::exact_size_ula(t)); },
          py::arg("tuple"));
    m.def("exact_size_nonredundant",
          [](const ParameterTuple& t) {
              return big_to_py(coarray::exact_size_nonredundant(t));
          },
          py::arg("tuple"));

    py::class_<BoundsReport>(m, "BoundsReport")
        .def_readonly("tuple", &BoundsReport::tuple)
        .def_readonly("admissible", &BoundsReport::admissible)
        .def_readonly("min_selection", &BoundsReport::min_selection)
        .def_property_readonly("upper",
                               [](const BoundsReport& r) { return big_to_py(r.upper); })
        .def_property_readonly("lower",
                               [](const BoundsReport& r) { return big_opt_to_py(r.lower); })
        .def_property_readonly("exact",
                               [](const BoundsReport& r) { return big_opt_to_py(r.exact); })
        .def_readonly("note", &BoundsReport::note);
    m.def("bounds_report", &coarray::bounds_report, py::arg("tuple"));

    m.def("build_ula_pair",
          [](int n_tx, int n_rx) {
              auto p = coarray::build_ula_pair(n_tx, n_rx);
              return py::make_tuple(p.tx, p.rx);
          },
          py::arg("n_tx"), py::arg("n_rx"));
    m.def("build_nonredundant_pair",
          [](int n_tx, int n_rx) {
              auto p = coarray::build_nonredundant_pair(n_tx, n_rx);
              return py::make_tuple(p.tx, p.rx);
          },
          py::arg("n_tx"), py::arg("n_rx"));
    m.def("build_nested_pair",
          [](int n_tx, int n_rx, int n_sigma, std::optional<std::uint64_t> fill_seed) {
              auto p = fill_seed
                           ? coarray::build_nested_pair(n_tx, n_rx, n_sigma, *fill_seed)
                           : coarray::build_nested_pair(n_tx, n_rx, n_sigma);
              return py::make_tuple(p.tx, p.rx, p.core);
          },
          py::arg("n_tx"), py::arg("n_rx"), py::arg("n_sigma"),
          py::arg("fill_seed") = py::none(),
          "(tx, rx, core): layered pair whose codebook meets the achievable bound");

    py::class_<Witness>(m, "Witness")
        .def_readonly("tx", &Witness::tx)
        .def_readonly("rx", &Witness::rx)
        .def_readonly("codebook", &Witness::codebook);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("tuple", &SearchResult::tuple)
        .def_property_readonly("optimum",
                               [](const SearchResult& r) { return big_to_py(r.optimum); })
        .def_readonly("witnesses", &SearchResult::witnesses)
        .def_readonly("explored", &SearchResult::explored)
        .def_property_readonly(
            "bound_check",
            [](const SearchResult& r) { return coarray::to_string(r.bound_check); })
        .def_readonly("bound_detail", &SearchResult::bound_detail);

    m.def("optimal_codebook_search",
          [](const ParameterTuple& t, int aperture_cap, int witness_cap,
             bool reflect_dedup, int threads) {
              SearchOptions opts;
              opts.aperture_cap = aperture_cap;
              opts.witness_cap = witness_cap;
              opts.reflect_dedup = reflect_dedup;
              opts.threads = threads;
              py::gil_scoped_release release;
              return coarray::optimal_codebook_search(t, opts);
          },
          py::arg("tuple"), py::arg("aperture_cap") = 24, py::arg("witness_cap") = 16,
          py::arg("reflect_dedup") = true, py::arg("threads") = 1,
          "Exact maximum codebook size over all canonical geometry pairs");

    py::class_<Figure3Row>(m, "SweepRow")
        .def_readonly("n_sigma", &Figure3Row::n_sigma)
        .def_readonly("q", &Figure3Row::q)
        .def_property_readonly("upper",
                               [](const Figure3Row& r) { return big_to_py(r.upper); })
        .def_property_readonly("lower",
                               [](const Figure3Row& r) { return big_opt_to_py(r.lower); })
        .def_property_readonly(
            "lower_plotted", [](const Figure3Row& r) { return big_to_py(r.lower_plotted); })
        .def_property_readonly("exact",
                               [](const Figure3Row& r) { return big_opt_to_py(r.exact); });

    m.def("figure3_sweep",
          [](int n_tx, int n_rx, const std::string& mode, int fixed_value) {
              return coarray::figure3_sweep(n_tx, n_rx,
                                            coarray::sweep_mode_from_string(mode),
                                            fixed_value);
          },
          py::arg("n_tx"), py::arg("n_rx"), py::arg("mode"), py::arg("fixed_value"),
          "Bound curves vs N_sigma (mode 'fixed-q') or vs Q (mode 'fixed-nsigma')");
    m.def("figure3_csv", &coarray::figure3_csv, py::arg("rows"));

    py::class_<sim::WaveformMatrix>(m, "WaveformMatrix")
        .def_readonly("samples", &sim::WaveformMatrix::samples)
        .def_readonly("codeword", &sim::WaveformMatrix::codeword)
        .def_readonly("basis_rank", &sim::WaveformMatrix::basis_rank);

    py::class_<sim::SensingScene>(m, "SensingScene")
        .def(py::init([](std::vector<double> angles,
                         std::vector<std::complex<double>> gains, double noise_power) {
                 sim::SensingScene s;
                 s.angles = std::move(angles);
                 s.gains = std::move(gains);
                 s.noise_power = noise_power;
                 return s;
             }),
             py::arg("angles"), py::arg("gains"), py::arg("noise_power") = 0.0)
        .def_readwrite("angles", &sim::SensingScene::angles)
        .def_readwrite("gains", &sim::SensingScene::gains)
        .def_readwrite("noise_power", &sim::SensingScene::noise_power);

    py::class_<sim::DownlinkConfig>(m, "DownlinkConfig")
        .def(py::init([](int ue_antennas, Eigen::MatrixXcd channel, double snr_db,
                         int trials, std::uint64_t seed, int threads) {
                 sim::DownlinkConfig c;
                 c.ue_antennas = ue_antennas;
                 c.channel = std::move(channel);
                 c.snr_db = snr_db;
                 c.trials = trials;
                 c.seed = seed;
                 c.threads = threads;
                 return c;
             }),
             py::arg("ue_antennas"), py::arg("channel"), py::arg("snr_db"),
             py::arg("trials"), py::arg("seed") = 0, py::arg("threads") = 1)
        .def_readwrite("ue_antennas", &sim::DownlinkConfig::ue_antennas)
        .def_readwrite("channel", &sim::DownlinkConfig::channel)
        .def_readwrite("snr_db", &sim::DownlinkConfig::snr_db)
        .def_readwrite("trials", &sim::DownlinkConfig::trials)
        .def_readwrite("seed", &sim::DownlinkConfig::seed)
        .def_readwrite("threads", &sim::DownlinkConfig::threads);

    py::class_<sim::VirtualMeasurement>(m, "VirtualMeasurement")
        .def_readonly("support", &sim::VirtualMeasurement::support)
        .def_readonly("values", &sim::VirtualMeasurement::values);

    py::class_<sim::SerResult>(m, "SerResult")
        .def_readonly("ser", &sim::SerResult::ser)
        .def_readonly("trials", &sim::SerResult::trials)
        .def_readonly("errors", &sim::SerResult::errors);

    m.def("numerical_rank", &sim::numerical_rank, py::arg("matrix"),
          py::arg("rel_tol") = 1e-8);
    m.def("selection_matrix", &sim::selection_matrix, py::arg("selection"), py::arg("tx"));
    m.def("orthonormal_basis",
          [](int t, int q, std::optional<std::uint64_t> seed) {
              return sim::orthonormal_basis(t, q, seed);
          },
          py::arg("t"), py::arg("q"), py::arg("seed") = py::none());
    m.def("build_waveform", &sim::build_waveform, py::arg("basis"), py::arg("selection"),
          py::arg("tx"));
    m.def("steering_matrix", &sim::steering_matrix, py::arg("geometry"), py::arg("angles"));
    m.def("sensing_snapshot", &sim::sensing_snapshot, py::arg("tx"), py::arg("rx"),
          py::arg("waveform"), py::arg("scene"), py::arg("seed"));
    m.def("virtual_sum_coarray", &sim::virtual_sum_coarray, py::arg("snapshot"),
          py::arg("waveform"), py::arg("rx"), py::arg("tx"),
          "Matched-filter recovery of the sum co-array response");
    m.def("identifiability_rank_check", &sim::identifiability_rank_check,
          py::arg("selection"), py::arg("rx"), py::arg("k"), py::arg("seed"));
    m.def("random_angles", &sim::random_angles, py::arg("k"), py::arg("seed"),
          py::arg("min_sin_separation") = 0.05);
    m.def("random_channel", &sim::random_channel, py::arg("m"), py::arg("n_tx"),
          py::arg("seed"));
    m.def("ml_decode", &sim::ml_decode, py::arg("received"), py::arg("config"),
          py::arg("basis"), py::arg("codebook"));
    m.def("monte_carlo_ser",
          [](const sim::DownlinkConfig& cfg, const Codebook& book,
             const Eigen::MatrixXcd& basis) {
              py::gil_scoped_release release;
              return sim::monte_carlo_ser(cfg, book, basis);
          },
          py::arg("config"), py::arg("codebook"), py::arg("basis"),
          "Symbol error rate of the codeword-index link, deterministic in seed");
}
