#pragma once

// File interchange for grid evaluations: the `q,p,w` CSV schema and the
// JSON output document, plus the named figure presets.

#include <iosfwd>
#include <optional>
#include <string>

#include "cswigner/wigner.hpp"

#include <json.hpp>

namespace cswigner::output {

inline constexpr const char* kVersion = "0.1.0";

struct OutputDoc {
    wigner::WignerSpec spec;
    wigner::GridSpec grid;
    std::vector<double> values; // n_p x n_q, row-major over p then q
    double max_imag_residue = 0;
    double max_quad_error = 0;
    std::string note;           // e.g. convention flag for non-integer alpha
    std::string version = kVersion;
};

OutputDoc make_output_doc(const wigner::WignerSpec& spec, const wigner::GridResult& result);

// CSV schema: header `q,p,w`, one row per point, row-major over p then q,
// '.' decimal separator, '\n' line endings, full double precision.
void write_csv(std::ostream& os, const OutputDoc& doc);

// JSON round-trips the values matrix bit-exactly.
nlohmann::json to_json(const OutputDoc& doc);
OutputDoc from_json(const nlohmann::json& j);

// Figure presets: 121x121 over [-4,4]^2, operator path.
//   fig1a (n=0, alpha=2, w=1)   fig1b (n=0, alpha=2, w=3)
//   fig2a (n=0, alpha=3, w=1)   fig2b (n=0, alpha=3, w=3)
std::optional<wigner::WignerSpec> preset_spec(const std::string& name);
wigner::GridSpec preset_grid();

} // namespace cswigner::output
