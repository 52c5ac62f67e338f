#include "cswigner/output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace cswigner::output {

using wigner::GridSpec;
using wigner::Kind;
using wigner::Method;
using wigner::WignerSpec;

OutputDoc make_output_doc(const WignerSpec& spec, const wigner::GridResult& result) {
    OutputDoc doc;
    doc.spec = spec;
    doc.grid = result.grid;
    doc.values.reserve(result.cells.size());
    for (const auto& cell : result.cells) doc.values.push_back(cell.value);
    doc.max_imag_residue = result.max_imag_residue;
    doc.max_quad_error = result.max_quad_error;
    if (std::floor(spec.alpha) != spec.alpha)
        doc.note = "non-integer alpha: even-extension convention |q|^alpha";
    return doc;
}

void write_csv(std::ostream& os, const OutputDoc& doc) {
    const auto& g = doc.grid;
    const double dq = (g.q_max - g.q_min) / (g.n_q - 1);
    const double dp = (g.p_max - g.p_min) / (g.n_p - 1);
    os << "q,p,w\n";
    char buf[96];
    for (int ip = 0; ip < g.n_p; ++ip) {
        const double p = g.p_min + ip * dp;
        for (int iq = 0; iq < g.n_q; ++iq) {
            const double q = g.q_min + iq * dq;
            const double w = doc.values[static_cast<size_t>(ip) * g.n_q + iq];
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", q, p, w);
            os << buf;
        }
    }
}

namespace {

Method method_from_name(const std::string& s) {
    for (Method m : {Method::operator_calculus, Method::series, Method::quadrature,
                     Method::closed_g0, Method::asymptotic})
        if (s == wigner::method_name(m)) return m;
    throw std::invalid_argument("unknown method: " + s);
}

Kind kind_from_name(const std::string& s) {
    for (Kind k : {Kind::center_of_mass, Kind::relative, Kind::total})
        if (s == wigner::kind_name(k)) return k;
    throw std::invalid_argument("unknown kind: " + s);
}

} // namespace

nlohmann::json to_json(const OutputDoc& doc) {
    nlohmann::json j;
    j["params"] = {{"kind", wigner::kind_name(doc.spec.kind)},
                   {"l", doc.spec.ell},
                   {"n", doc.spec.n},
                   {"alpha", doc.spec.alpha},
                   {"omega_bar", doc.spec.omega_bar}};
    j["grid"] = {{"q_min", doc.grid.q_min}, {"q_max", doc.grid.q_max},
                 {"p_min", doc.grid.p_min}, {"p_max", doc.grid.p_max},
                 {"n_q", doc.grid.n_q},     {"n_p", doc.grid.n_p}};
    j["method"] = wigner::method_name(doc.spec.method);
    auto rows = nlohmann::json::array();
    for (int ip = 0; ip < doc.grid.n_p; ++ip) {
        auto row = nlohmann::json::array();
        for (int iq = 0; iq < doc.grid.n_q; ++iq)
            row.push_back(doc.values[static_cast<size_t>(ip) * doc.grid.n_q + iq]);
        rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    j["diagnostics"] = {{"max_imag_residue", doc.max_imag_residue},
                        {"max_quad_error", doc.max_quad_error}};
    if (!doc.note.empty()) j["diagnostics"]["note"] = doc.note;
    j["version"] = doc.version;
    return j;
}

OutputDoc from_json(const nlohmann::json& j) {
    OutputDoc doc;
    const auto& pp = j.at("params");
    doc.spec.kind = kind_from_name(pp.at("kind").get<std::string>());
    doc.spec.ell = pp.at("l").get<int>();
    doc.spec.n = pp.at("n").get<int>();
    doc.spec.alpha = pp.at("alpha").get<double>();
    doc.spec.omega_bar = pp.at("omega_bar").get<double>();
    doc.spec.method = method_from_name(j.at("method").get<std::string>());
    const auto& gg = j.at("grid");
    doc.grid.q_min = gg.at("q_min").get<double>();
    doc.grid.q_max = gg.at("q_max").get<double>();
    doc.grid.p_min = gg.at("p_min").get<double>();
    doc.grid.p_max = gg.at("p_max").get<double>();
    doc.grid.n_q = gg.at("n_q").get<int>();
    doc.grid.n_p = gg.at("n_p").get<int>();
    for (const auto& row : j.at("values"))
        for (const auto& v : row) doc.values.push_back(v.get<double>());
    if (doc.values.size() != static_cast<size_t>(doc.grid.n_q) * doc.grid.n_p)
        throw std::invalid_argument("values matrix shape does not match grid");
    const auto& dd = j.at("diagnostics");
    doc.max_imag_residue = dd.at("max_imag_residue").get<double>();
    doc.max_quad_error = dd.at("max_quad_error").get<double>();
    if (dd.contains("note")) doc.note = dd.at("note").get<std::string>();
    doc.version = j.at("version").get<std::string>();
    return doc;
}

std::optional<WignerSpec> preset_spec(const std::string& name) {
    WignerSpec spec;
    spec.kind = Kind::relative;
    spec.n = 0;
    spec.method = Method::operator_calculus;
    if (name == "fig1a") { spec.alpha = 2; spec.omega_bar = 1; return spec; }
    if (name == "fig1b") { spec.alpha = 2; spec.omega_bar = 3; return spec; }
    if (name == "fig2a") { spec.alpha = 3; spec.omega_bar = 1; return spec; }
    if (name == "fig2b") { spec.alpha = 3; spec.omega_bar = 3; return spec; }
    return std::nullopt;
}

wigner::GridSpec preset_grid() {
    return {-4.0, 4.0, -4.0, 4.0, 121, 121};
}

} // namespace cswigner::output
