#include "coarray/figure3.hpp"

#include <sstream>
#include <stdexcept>

namespace coarray {

namespace {

Figure3Row make_row(const ParameterTuple& t) {
    const BoundsReport rep = bounds_report(t);
    const int ceil_l = rep.min_selection;
    Figure3Row row;
    row.n_sigma = t.n_sigma;
    row.q = t.q;
    row.upper = rep.upper;
    row.lower = rep.lower;
    row.lower_plotted = binomial(t.n_tx - ceil_l, t.q - ceil_l);
    row.exact = rep.exact;
    return row;
}

}  // namespace

SweepMode sweep_mode_from_string(const std::string& s) {
    if (s == "fixed-q") return SweepMode::fixed_q;
    if (s == "fixed-nsigma") return SweepMode::fixed_n_sigma;
    throw std::invalid_argument("unknown sweep mode: expected fixed-q or fixed-nsigma");
}

std::string to_string(SweepMode m) {
    return m == SweepMode::fixed_q ? "fixed-q" : "fixed-nsigma";
}

std::vector<Figure3Row> figure3_sweep(int n_tx, int n_rx, SweepMode mode, int fixed_value) {
    if (n_tx < 1 || n_rx < 1 || fixed_value < 1)
        throw std::invalid_argument("arguments must be positive");
    std::vector<Figure3Row> rows;
    if (mode == SweepMode::fixed_q) {
        const int q = fixed_value;
        const int lo = n_tx + n_rx - 1;
        const long long hi = static_cast<long long>(q) * n_rx;
        if (q > n_tx || lo > hi)
            throw std::domain_error("empty sweep range: no admissible N_sigma for this Q");
        for (int n_sigma = lo; n_sigma <= hi; ++n_sigma)
            rows.push_back(make_row({q, n_tx, n_rx, n_sigma}));
    } else {
        const int n_sigma = fixed_value;
        const int lo = min_selection_size(n_sigma, n_rx);
        if (n_sigma < n_tx + n_rx - 1 || lo > n_tx)
            throw std::domain_error("empty sweep range: no admissible Q for this N_sigma");
        for (int q = lo; q <= n_tx; ++q) rows.push_back(make_row({q, n_tx, n_rx, n_sigma}));
    }
    return rows;
}

std::string figure3_csv(const std::vector<Figure3Row>& rows) {
    std::ostringstream os;
    os << "N_sigma,Q,upper,lower,lower_applicable,lower_plotted,exact\n";
    for (const auto& r : rows) {
        os << r.n_sigma << ',' << r.q << ',' << r.upper.str() << ',';
        if (r.lower) os << r.lower->str();
        os << ',' << (r.lower ? "true" : "false") << ',' << r.lower_plotted.str() << ',';
        if (r.exact) os << r.exact->str();
        os << '\n';
    }
    return os.str();
}

}  // namespace coarray
