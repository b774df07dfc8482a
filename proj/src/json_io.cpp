#include "coarray/json_io.hpp"

#include <stdexcept>

namespace coarray {

namespace {

nlohmann::json big_or_null(const std::optional<BigInt>& v) {
    if (!v) return nullptr;
    return v->str();
}

}  // namespace

nlohmann::json to_json(const ArrayGeometry& g) {
    return nlohmann::json(g.positions());
}

ArrayGeometry geometry_from_json(const nlohmann::json& j) {
    return ArrayGeometry(j.get<std::vector<int>>());
}

nlohmann::json to_json(const ParameterTuple& t) {
    return {{"Q", t.q}, {"N_tx", t.n_tx}, {"N_rx", t.n_rx}, {"N_sigma", t.n_sigma}};
}

ParameterTuple tuple_from_json(const nlohmann::json& j) {
    return {j.at("Q").get<int>(), j.at("N_tx").get<int>(), j.at("N_rx").get<int>(),
            j.at("N_sigma").get<int>()};
}

nlohmann::json to_json(const Codebook& c) {
    nlohmann::json j;
    j["tx"] = to_json(c.tx);
    if (c.rx) j["rx"] = to_json(*c.rx);
    j["Q"] = c.q;
    j["kind"] = to_string(c.kind);
    auto words = nlohmann::json::array();
    for (const auto& cw : c.codewords) words.push_back(to_json(cw));
    j["codewords"] = std::move(words);
    return j;
}

Codebook codebook_from_json(const nlohmann::json& j) {
    Codebook c{geometry_from_json(j.at("tx")), std::nullopt, j.at("Q").get<int>(),
               CodebookKind::unconstrained, {}};
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "constrained")
        c.kind = CodebookKind::sum_set_constrained;
    else if (kind != "unconstrained")
        throw std::invalid_argument("unknown codebook kind: " + kind);
    if (j.contains("rx") && !j.at("rx").is_null()) c.rx = geometry_from_json(j.at("rx"));
    if (c.kind == CodebookKind::sum_set_constrained && !c.rx)
        throw std::invalid_argument("constrained codebook requires rx");
    for (const auto& cw : j.at("codewords")) c.codewords.push_back(geometry_from_json(cw));
    return c;
}

nlohmann::json to_json(const BoundsReport& r) {
    return {{"tuple", to_json(r.tuple)},
            {"admissible", r.admissible},
            {"L", r.min_selection},
            {"upper", r.upper.str()},
            {"lower", big_or_null(r.lower)},
            {"exact", big_or_null(r.exact)},
            {"note", r.note}};
}

nlohmann::json to_json(const SearchResult& r) {
    auto witnesses = nlohmann::json::array();
    for (const auto& w : r.witnesses) {
        witnesses.push_back({{"tx", to_json(w.tx)},
                             {"rx", to_json(w.rx)},
                             {"codebook", to_json(w.codebook)}});
    }
    return {{"tuple", to_json(r.tuple)},
            {"optimum", r.optimum.str()},
            {"explored", r.explored},
            {"bound_check", to_string(r.bound_check)},
            {"bound_detail", r.bound_detail},
            {"witnesses", std::move(witnesses)}};
}

nlohmann::json to_json(const SweepEntry& e) {
    nlohmann::json j{{"tuple", to_json(e.tuple)}};
    if (!e.error.empty()) {
        j["error"] = e.error;
        return j;
    }
    if (e.bounds) j["bounds"] = to_json(*e.bounds);
    if (e.result) j["search"] = to_json(*e.result);
    return j;
}

nlohmann::json to_json(const Figure3Row& r) {
    return {{"N_sigma", r.n_sigma},
            {"Q", r.q},
            {"upper", r.upper.str()},
            {"lower", big_or_null(r.lower)},
            {"lower_applicable", r.lower.has_value()},
            {"lower_plotted", r.lower_plotted.str()},
            {"exact", big_or_null(r.exact)}};
}

}  // namespace coarray
