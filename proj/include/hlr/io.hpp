#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "hlr/algebra.hpp"
#include "hlr/rational.hpp"
#include "hlr/report.hpp"

namespace hlr {

inline constexpr const char* kFormatVersion = "1";

/// Parses an algebra document. Throws ParseError with a 1-based line and
/// column (pointing at the offending token when it can be located), or
/// AlgebraError when the tables are inconsistent.
HLRAlgebra parse_algebra(std::string_view text);
HLRAlgebra load_algebra(const std::string& path);

/// Canonical text: sorted keys, sorted sparse entries, lowest-term rationals,
/// trailing newline.
std::string serialize_algebra(const HLRAlgebra& h);

/// "1,0;0,2" or a JSON array of rows. Entries are integers or "p/q".
Matrix parse_matrix(std::string_view text);
/// Basis rows of a subspace of an n-dimensional space, same syntax as matrices.
Subspace parse_subspace(std::string_view text, std::size_t n);

std::string sha256_hex(std::string_view data);
std::string read_file(const std::string& path);

std::string format_witness(const Witness& w);
/// Validation and morphism checks as claims; warnings become info with holds = false.
Report to_report(const ValidationReport& v);
Report to_report(const MorphismReport& m);

struct RunReport {
  std::string command;
  std::string input_digest;
  nlohmann::json sections = nlohmann::json::object();
  Report report;
};

std::string render_text(const RunReport& r);
std::string render_json(const RunReport& r);

/// Compact JSON with sorted keys: scalar-only arrays on one line, two-space indent.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace hlr
