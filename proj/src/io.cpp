#include "hlr/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hlr {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

struct Position {
  std::size_t line = 0, column = 0;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Positions of string tokens: the n-th occurrence of a string in document
// order is matched with the n-th quoted occurrence in the raw text.
class Locator {
 public:
  Locator(std::string_view text, const ojson& root) : text_(text) { visit(root); }

  Position of_value(const ojson* node) const {
    const auto it = values_.find(node);
    if (it == values_.end()) return {};
    return find(it->second.first, it->second.second);
  }
  Position of_key(const std::string& key) const { return find(key, 0); }

 private:
  void visit(const ojson& node) {
    if (node.is_object()) {
      for (auto it = node.begin(); it != node.end(); ++it) {
        ++seen_[it.key()];
        visit(it.value());
      }
    } else if (node.is_array()) {
      for (const auto& e : node) visit(e);
    } else if (node.is_string()) {
      const auto& s = node.get_ref<const std::string&>();
      values_[&node] = {s, seen_[s]++};
    }
  }

  Position find(const std::string& token, std::size_t ordinal) const {
    const std::string quoted = "\"" + token + "\"";
    std::size_t at = text_.find(quoted);
    for (std::size_t n = 0; n < ordinal && at != std::string_view::npos; ++n) at = text_.find(quoted, at + 1);
    if (at == std::string_view::npos) return {};
    return position_of(text_, at);
  }

  std::string_view text_;
  std::map<std::string, std::size_t> seen_;
  std::map<const ojson*, std::pair<std::string, std::size_t>> values_;
};

class Reader {
 public:
  Reader(std::string_view text, const ojson& root) : loc_(text, root) {}

  [[noreturn]] void fail_at(const std::string& key, const std::string& msg) const {
    const Position p = loc_.of_key(key);
    throw ParseError(msg, p.line, p.column);
  }

  Scalar scalar(const ojson& v, const std::string& key) const {
    if (v.is_number_integer()) return Scalar(v.dump());
    if (!v.is_string()) fail_at(key, key + ": expected an integer or a \"p/q\" string, got " + v.dump());
    try {
      return parse_rational(v.get_ref<const std::string&>());
    } catch (const ParseError& e) {
      const Position p = loc_.of_value(&v);
      throw ParseError(key + ": " + e.what(), p.line, p.column);
    }
  }

  std::size_t natural(const ojson& v, const std::string& key) const {
    if (!v.is_number_unsigned()) fail_at(key, key + ": expected a natural number, got " + v.dump());
    return v.get<std::size_t>();
  }

  Matrix matrix(const ojson& v, const std::string& key, std::size_t rows, std::size_t cols) const {
    if (!v.is_array() || v.size() != rows)
      fail_at(key, key + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!v[r].is_array() || v[r].size() != cols)
        fail_at(key, key + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(v[r][c], key);
    }
    return m;
  }

  void sparse(const ojson& v, const std::string& key, StructureTensor& t) const {
    if (!v.is_array()) fail_at(key, key + ": expected a list of [i, j, k, value] entries");
    std::set<std::array<std::size_t, 3>> seen;
    for (const auto& e : v) {
      if (!e.is_array() || e.size() != 4) fail_at(key, key + ": entry " + e.dump() + " is not [i, j, k, value]");
      std::array<std::size_t, 3> idx{};
      for (int a = 0; a < 3; ++a) {
        idx[a] = natural(e[a], key);
        if (idx[a] >= t.extent(a))
          fail_at(key, key + ": index " + std::to_string(idx[a]) + " out of range in entry " + e.dump());
      }
      if (!seen.insert(idx).second) fail_at(key, key + ": duplicate entry for " + e.dump());
      t(idx[0], idx[1], idx[2]) = scalar(e[3], key);
    }
  }

 private:
  Locator loc_;
};

json scalar_json(const Scalar& s) { return to_string(s); }

json sparse_json(const StructureTensor& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.extent(0); ++i)
    for (std::size_t j = 0; j < t.extent(1); ++j)
      for (std::size_t k = 0; k < t.extent(2); ++k)
        if (t(i, j, k) != 0) out.push_back(json::array({i, j, k, scalar_json(t(i, j, k))}));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

bool scalar_only(const json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void dump_into(const json& j, int indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t n = 0;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out += pad + json(it.key()).dump() + ": ";
      dump_into(it.value(), indent + 2, out);
      out += ++n < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array() && !j.empty() && !scalar_only(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      dump_into(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

const std::set<std::string> kKnownFields{"format_version", "dimL", "dimA", "labels", "bracket", "mul",
                                         "action", "anchor", "psi", "phi", "flags", "declared_H"};

ClaimStatus status_of(Severity s) {
  switch (s) {
    case Severity::Pass: return ClaimStatus::Pass;
    case Severity::Fail: return ClaimStatus::Fail;
    default: return ClaimStatus::Info;
  }
}

Report checks_to_report(const std::vector<AxiomCheck>& checks) {
  Report r;
  for (const auto& c : checks) {
    Claim claim{c.id, c.description, status_of(c.status), c.witness ? format_witness(*c.witness) : "", std::nullopt};
    if (c.status == Severity::Info) claim.holds = !c.witness;
    if (c.status == Severity::Warning) {
      claim.holds = false;
      claim.detail = "warning" + (claim.detail.empty() ? "" : ": " + claim.detail);
    }
    r.add(std::move(claim));
  }
  return r;
}

void text_section(const std::string& key, const json& v, std::string& out) {
  if (v.is_array()) {
    out += key + ":" + (v.empty() ? " (none)" : "") + "\n";
    for (const auto& e : v) out += "  - " + (e.is_string() ? e.get<std::string>() : e.dump()) + "\n";
  } else if (v.is_object()) {
    out += key + ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) {
      out += "  " + it.key() + ": ";
      out += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
      out += "\n";
    }
  } else {
    out += key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
}

}  // namespace

HLRAlgebra parse_algebra(std::string_view text) {
  ojson root;
  try {
    root = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    const Position p = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("malformed JSON: ") + e.what(), p.line, p.column);
  }
  if (!root.is_object()) throw ParseError("top level must be an object", 1, 1);
  Reader rd(text, root);
  for (auto it = root.begin(); it != root.end(); ++it)
    if (!kKnownFields.count(it.key())) rd.fail_at(it.key(), "unknown field \"" + it.key() + "\"");
  for (const char* required : {"format_version", "dimL", "dimA"})
    if (!root.contains(required)) throw ParseError(std::string("missing field \"") + required + "\"", 1, 1);
  if (!root["format_version"].is_string() || root["format_version"].get<std::string>() != kFormatVersion)
    rd.fail_at("format_version", std::string("format_version must be \"") + kFormatVersion + "\"");

  const std::size_t n = rd.natural(root["dimL"], "dimL");
  const std::size_t m = rd.natural(root["dimA"], "dimA");
  HLRAlgebra h = make_empty_algebra(n, m);

  if (root.contains("labels")) {
    const auto& labels = root["labels"];
    if (!labels.is_object()) rd.fail_at("labels", "labels must be an object with keys L and A");
    auto read = [&](const char* key, std::size_t dim, std::vector<std::string>& dst) {
      if (!labels.contains(key)) return;
      const auto& list = labels[key];
      if (!list.is_array() || list.size() != dim)
        rd.fail_at("labels", std::string("labels.") + key + " must list " + std::to_string(dim) + " names");
      dst.clear();
      for (const auto& s : list) {
        if (!s.is_string()) rd.fail_at("labels", "labels must be strings");
        dst.push_back(s.get<std::string>());
      }
    };
    read("L", n, h.labels_l);
    read("A", m, h.labels_a);
  }
  if (root.contains("bracket")) rd.sparse(root["bracket"], "bracket", h.l.bracket);
  if (root.contains("mul")) rd.sparse(root["mul"], "mul", h.a.mul);
  if (root.contains("action")) rd.sparse(root["action"], "action", h.action);
  if (root.contains("anchor")) rd.sparse(root["anchor"], "anchor", h.anchor);
  if (root.contains("psi")) h.l.psi = rd.matrix(root["psi"], "psi", n, n);
  if (root.contains("phi")) h.a.phi = rd.matrix(root["phi"], "phi", m, m);
  if (root.contains("flags")) {
    const auto& f = root["flags"];
    if (!f.is_object()) rd.fail_at("flags", "flags must be an object");
    for (auto it = f.begin(); it != f.end(); ++it) {
      if (!it.value().is_boolean()) rd.fail_at(it.key(), "flag \"" + it.key() + "\" must be a boolean");
      if (it.key() == "regular") h.flags.regular = it.value().get<bool>();
      else if (it.key() == "unital") h.flags.unital = it.value().get<bool>();
      else rd.fail_at(it.key(), "unknown flag \"" + it.key() + "\"");
    }
  }
  if (root.contains("declared_H")) {
    const auto& rows = root["declared_H"];
    if (!rows.is_array()) rd.fail_at("declared_H", "declared_H must be a list of rows");
    const Matrix b = rd.matrix(rows, "declared_H", rows.size(), n);
    h.declared_h = Subspace::span(b.row_list(), n);
  }
  check_shapes(h);
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HLRAlgebra load_algebra(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_algebra(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what(),
                     e.line(), e.column());
  }
}

std::string serialize_algebra(const HLRAlgebra& h) {
  json j;
  j["format_version"] = kFormatVersion;
  j["dimL"] = h.dim_l();
  j["dimA"] = h.dim_a();
  j["labels"] = {{"L", h.labels_l}, {"A", h.labels_a}};
  j["bracket"] = sparse_json(h.l.bracket);
  j["mul"] = sparse_json(h.a.mul);
  j["action"] = sparse_json(h.action);
  j["anchor"] = sparse_json(h.anchor);
  j["psi"] = matrix_json(h.l.psi);
  j["phi"] = matrix_json(h.a.phi);
  j["flags"] = {{"regular", h.flags.regular}, {"unital", h.flags.unital}};
  if (h.declared_h) {
    json rows = json::array();
    for (const auto& v : h.declared_h->basis()) {
      json row = json::array();
      for (const auto& x : v) row.push_back(scalar_json(x));
      rows.push_back(row);
    }
    j["declared_H"] = rows;
  }
  return canonical_dump(j);
}

std::string canonical_dump(const json& j) {
  std::string out;
  dump_into(j, 0, out);
  return out + "\n";
}

Matrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Scalar>> rows;
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed matrix: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("matrix must be a list of rows");
    for (const auto& r : j) {
      if (!r.is_array()) throw ParseError("matrix rows must be lists");
      rows.emplace_back();
      for (const auto& e : r) {
        if (e.is_number_integer()) rows.back().emplace_back(e.dump());
        else if (e.is_string()) rows.back().push_back(parse_rational(e.get<std::string>()));
        else throw ParseError("matrix entry " + e.dump() + " is not rational");
      }
    }
  } else {
    std::string t(text);
    std::stringstream rs(t);
    std::string row;
    while (std::getline(rs, row, ';')) {
      rows.emplace_back();
      std::stringstream cs(row);
      std::string cell;
      while (std::getline(cs, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t");
        const auto e = cell.find_last_not_of(" \t");
        rows.back().push_back(parse_rational(b == std::string::npos ? "" : cell.substr(b, e - b + 1)));
      }
    }
  }
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError("matrix rows have different lengths");
  return Matrix::from_rows(rows, cols);
}

Subspace parse_subspace(std::string_view text, std::size_t n) {
  const std::string_view trimmed = text.substr(0, text.find_last_not_of(" \t\n") + 1);
  if (trimmed.empty() || trimmed == "0" || trimmed == "[]") return Subspace::zero(n);
  const Matrix m = parse_matrix(text);
  if (m.cols() != n)
    throw ParseError("subspace rows must have " + std::to_string(n) + " entries, got " + std::to_string(m.cols()));
  return Subspace::span(m.row_list(), n);
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string format_witness(const Witness& w) {
  std::string idx = "(";
  for (std::size_t i = 0; i < w.indices.size(); ++i) idx += (i ? "," : "") + std::to_string(w.indices[i]);
  return "at " + idx + "): lhs = " + format_vector(w.lhs) + ", rhs = " + format_vector(w.rhs);
}

Report to_report(const ValidationReport& v) { return checks_to_report(v.checks); }
Report to_report(const MorphismReport& m) { return checks_to_report(m.checks); }

std::string render_text(const RunReport& r) {
  std::string out = "command: " + r.command + "\n";
  if (!r.input_digest.empty()) out += "input sha256: " + r.input_digest + "\n";
  for (auto it = r.sections.begin(); it != r.sections.end(); ++it) text_section(it.key(), it.value(), out);
  if (!r.report.claims.empty()) out += "claims:\n";
  for (const auto& c : r.report.claims) {
    out += "  [" + std::string(to_string(c.status)) + "] " + c.id;
    if (c.status == ClaimStatus::Info && c.holds) out += *c.holds ? " (holds)" : " (does not hold)";
    if (!c.statement.empty()) out += ": " + c.statement;
    out += "\n";
    if (!c.detail.empty()) out += "      " + c.detail + "\n";
  }
  out += std::string("result: ") + (r.report.ok() ? "ok" : "failed") + "\n";
  return out;
}

std::string render_json(const RunReport& r) {
  json j;
  j["command"] = r.command;
  j["input_sha256"] = r.input_digest;
  j["sections"] = r.sections;
  json claims = json::array();
  for (const auto& c : r.report.claims) {
    json cj = {{"id", c.id}, {"statement", c.statement}, {"status", to_string(c.status)}, {"detail", c.detail}};
    cj["holds"] = c.holds ? json(*c.holds) : json(nullptr);
    claims.push_back(cj);
  }
  j["claims"] = claims;
  j["ok"] = r.report.ok();
  return canonical_dump(j);
}

}  // namespace hlr
