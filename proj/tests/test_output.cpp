#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cswigner/output.hpp"
#include "cswigner/wigner.hpp"

using namespace cswigner;

namespace {

output::OutputDoc small_doc() {
    wigner::WignerSpec spec{wigner::Kind::relative, 0, 1, 2.0, 3.0,
                            wigner::Method::operator_calculus};
    const auto res = wigner::grid_eval(spec, {-1.5, 1.5, -2.0, 2.0, 7, 5}, 1);
    return output::make_output_doc(spec, res);
}

} // namespace

TEST_CASE("csv schema") {
    const auto doc = small_doc();
    std::ostringstream os;
    output::write_csv(os, doc);
    const std::string text = os.str();

    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    CHECK(line == "q,p,w");

    // one row per point, row-major over p then q
    std::vector<std::string> rows;
    while (std::getline(is, line))
        if (!line.empty()) rows.push_back(line);
    CHECK(rows.size() == 7u * 5u);

    // first row is (q_min, p_min), second advances q
    double q, p, w;
    CHECK(std::sscanf(rows[0].c_str(), "%lf,%lf,%lf", &q, &p, &w) == 3);
    CHECK(q == -1.5);
    CHECK(p == -2.0);
    CHECK(w == doc.values[0]);
    CHECK(std::sscanf(rows[1].c_str(), "%lf,%lf,%lf", &q, &p, &w) == 3);
    CHECK(q == -1.0);
    CHECK(p == -2.0);

    // full double precision: parsed values reproduce the matrix bit-exactly
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf", &q, &p, &w) == 3);
        CHECK(w == doc.values[i]);
    }
}

TEST_CASE("json round trip is bit-exact") {
    const auto doc = small_doc();
    const std::string dumped = output::to_json(doc).dump();
    const auto back = output::from_json(nlohmann::json::parse(dumped));

    REQUIRE(back.values.size() == doc.values.size());
    for (size_t i = 0; i < doc.values.size(); ++i) CHECK(back.values[i] == doc.values[i]);
    CHECK(back.spec.n == doc.spec.n);
    CHECK(back.spec.alpha == doc.spec.alpha);
    CHECK(back.spec.omega_bar == doc.spec.omega_bar);
    CHECK(back.grid.n_q == doc.grid.n_q);
    CHECK(back.grid.n_p == doc.grid.n_p);
    CHECK(back.max_imag_residue == doc.max_imag_residue);
    CHECK(back.version == doc.version);
}

TEST_CASE("json document fields") {
    const auto j = output::to_json(small_doc());
    for (const char* key : {"params", "grid", "method", "values", "diagnostics", "version"})
        CHECK(j.contains(key));
    CHECK(j["params"]["kind"] == "rel");
    CHECK(j["method"] == "operator");
    CHECK(j["values"].size() == 5u);      // n_p rows
    CHECK(j["values"][0].size() == 7u);   // n_q columns
}

TEST_CASE("figure presets") {
    struct Expect { const char* name; double alpha, w; };
    const Expect table[] = {{"fig1a", 2, 1}, {"fig1b", 2, 3}, {"fig2a", 3, 1}, {"fig2b", 3, 3}};
    for (const auto& e : table) {
        const auto spec = output::preset_spec(e.name);
        REQUIRE(spec.has_value());
        CHECK(spec->n == 0);
        CHECK(spec->alpha == e.alpha);
        CHECK(spec->omega_bar == e.w);
        CHECK(spec->kind == wigner::Kind::relative);
    }
    CHECK(!output::preset_spec("fig9z").has_value());

    const auto grid = output::preset_grid();
    CHECK(grid.n_q == 121);
    CHECK(grid.n_p == 121);
    CHECK(grid.q_min == -4.0);
    CHECK(grid.q_max == 4.0);
}
