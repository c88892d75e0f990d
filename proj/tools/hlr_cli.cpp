// hlr: command-line front end over the structure-constant model.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hlr/decomposition.hpp"
#include "hlr/io.hpp"
#include "hlr/structure.hpp"

using namespace hlr;
using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file, file2, cartan, psi, phi, g, f, format = "text", output;
  bool strict = false;
};

struct Loaded {
  HLRAlgebra h;
  std::string digest;
};

Loaded load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return {parse_algebra(text), sha256_hex(text)};
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
  } catch (const AlgebraError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Matrix matrix_arg(const std::string& text, const std::string& flag, std::size_t n) {
  Matrix m;
  try {
    m = text.empty() ? Matrix::identity(n) : parse_matrix(text);
  } catch (const ParseError& e) {
    throw InputError(flag + ": " + e.what());
  }
  if (m.rows() != n || m.cols() != n)
    throw InputError(flag + ": expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  return m;
}

Subspace cartan_of(const HLRAlgebra& h, const Options& o) {
  if (!o.cartan.empty()) {
    try {
      return parse_subspace(o.cartan, h.dim_l());
    } catch (const ParseError& e) {
      throw InputError(std::string("--cartan: ") + e.what());
    }
  }
  if (!h.declared_h) throw InputError("no Cartan subalgebra: pass --cartan or declare declared_H in the file");
  return *h.declared_h;
}

std::string describe(const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? ", " : "") + format_vector(s.basis()[i]);
  return out + "}";
}

std::string describe_class(const std::vector<Functional>& cls) {
  std::string out = "[";
  for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? ", " : "") + format_functional(cls[i]);
  return out + "]";
}

json graded_json(const std::vector<GradedSpace>& gs) {
  json out = json::array();
  for (const auto& g : gs) out.push_back(format_functional(g.value) + ": " + describe(g.space));
  return out;
}

json classes_json(const ConnectionPartition& p) {
  json out = json::array();
  for (const auto& c : p.classes) out.push_back(describe_class(c));
  return out;
}

int emit(const RunReport& r, const Options& o) {
  const std::string text = o.format == "json" ? render_json(r) : render_text(r);
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw InputError("cannot write " + o.output);
    out << text;
  }
  return r.report.ok() ? 0 : 1;
}

int emit_algebra(const HLRAlgebra& h, const Options& o) {
  const std::string text = serialize_algebra(h);
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw InputError("cannot write " + o.output);
    out << text;
  }
  return 0;
}

std::string split_diagnostic(const SplitAnalysis& s) {
  std::string d = s.rd.diagnostic;
  if (!s.wd.diagnostic.empty()) d += (d.empty() ? "" : "; ") + s.wd.diagnostic;
  return "H is not a splitting Cartan subalgebra: " + d;
}

// A refusal (no split, morphism violation) reported as a one-claim failure.
int refuse(const std::string& command, const std::string& digest, const std::string& id, const std::string& why,
           const Options& o) {
  RunReport r{command, digest};
  r.report.add(pass_or_fail(id, "", false, why));
  return emit(r, o);
}

int cmd_validate(const Options& o) {
  const auto in = load(o.file);
  RunReport r{"validate", in.digest};
  r.sections["dimL"] = in.h.dim_l();
  r.sections["dimA"] = in.h.dim_a();
  r.sections["strictness"] = o.strict ? "strict" : "relaxed";
  r.report = to_report(validate_hlr(in.h, o.strict ? Strictness::Strict : Strictness::Relaxed));
  return emit(r, o);
}

int cmd_decompose(const Options& o) {
  const auto in = load(o.file);
  const Subspace cartan = cartan_of(in.h, o);
  SplitAnalysis s;
  try {
    s = SplitAnalysis::build(in.h, cartan);
  } catch (const RootError& e) {
    return refuse("decompose", in.digest, "split", e.what(), o);
  }
  if (!s.split()) return refuse("decompose", in.digest, "split", split_diagnostic(s), o);
  RunReport r{"decompose", in.digest};
  r.sections["cartan"] = describe(s.rd.cartan);
  r.sections["roots"] = graded_json(s.rd.roots);
  r.sections["weights"] = graded_json(s.wd.weights);
  r.sections["A_0"] = describe(s.wd.a0);
  r.sections["root_classes"] = classes_json(s.root_classes);
  r.sections["weight_classes"] = classes_json(s.weight_classes);
  json ri = json::array(), wi = json::array();
  for (const auto& I : root_ideals(s)) ri.push_back(describe_class(I.cls) + ": " + describe(I.total));
  for (const auto& I : weight_ideals(s)) wi.push_back(describe_class(I.cls) + ": " + describe(I.total));
  r.sections["root_class_ideals"] = ri;
  r.sections["weight_class_ideals"] = wi;
  if (s.rd.roots.empty()) r.sections["note"] = "no roots; L = U = H";
  r.report = verify_lemma_closures(s.h, s.rd, s.wd);
  r.report.append(decomposition_report(s));
  return emit(r, o);
}

int cmd_analyze(const Options& o) {
  const auto in = load(o.file);
  const Subspace cartan = cartan_of(in.h, o);
  SplitAnalysis s;
  try {
    s = SplitAnalysis::build(in.h, cartan);
  } catch (const RootError& e) {
    return refuse("analyze", in.digest, "split", e.what(), o);
  }
  if (!s.split()) return refuse("analyze", in.digest, "split", split_diagnostic(s), o);
  const StructureProfile p = structure_profile(s);
  RunReport r{"analyze", in.digest};
  json gj = json::array(), gn = json::array();
  for (const auto& g : p.js.gamma_j) gj.push_back(format_functional(g));
  for (const auto& g : p.js.gamma_not_j) gn.push_back(format_functional(g));
  r.sections["J"] = describe(p.js.j.ideal.space);
  r.sections["gamma_J"] = gj;
  r.sections["gamma_notJ"] = gn;
  r.sections["Z_Lie"] = describe(p.z_lie);
  json prof;
  prof["maximal_length"] = p.maximal_length;
  prof["root_multiplicative"] = p.root_multiplicative;
  for (std::size_t i = 0; i < 6; ++i) prof["tight." + std::to_string(i + 1)] = p.tight_clauses[i];
  prof["tight"] = p.tight;
  prof["symmetric_lambda"] = p.symmetric_lambda;
  prof["symmetric_gamma_J"] = p.symmetric_gamma_j;
  prof["symmetric_gamma_notJ"] = p.symmetric_gamma_not_j;
  prof["notJ_connected"] = p.not_j_connected;
  prof["weights_connected"] = p.weights_connected;
  r.sections["profile"] = prof;
  r.report = structure_report(s);
  return emit(r, o);
}

int cmd_connect(const Options& o) {
  const auto in = load(o.file);
  const Subspace cartan = cartan_of(in.h, o);
  SplitAnalysis s;
  try {
    s = SplitAnalysis::build(in.h, cartan);
  } catch (const RootError& e) {
    return refuse("connect", in.digest, "split", e.what(), o);
  }
  if (!s.split()) return refuse("connect", in.digest, "split", split_diagnostic(s), o);
  RunReport r{"connect", in.digest};
  r.sections["root_classes"] = classes_json(s.root_classes);
  r.sections["weight_classes"] = classes_json(s.weight_classes);
  r.report = verify_equivalences(s);
  return emit(r, o);
}

int cmd_j(const Options& o) {
  const auto in = load(o.file);
  const JIdeal j = compute_j(in.h);
  RunReport r{"j", in.digest};
  r.sections["J"] = describe(j.ideal.space);
  r.sections["dim_J"] = j.ideal.space.dim();
  r.sections["closure_rules"] = j.ideal.rules_fired;
  r.sections["closure_iterations"] = j.ideal.iterations;
  r.report.add(pass_or_fail("J.annihilates-left", "[J, L] = 0", j.annihilates_left,
                            j.violation ? format_witness(*j.violation) : ""));
  r.report.add(property("J.annihilates-right", "[L, J] = 0", j.annihilates_right));
  return emit(r, o);
}

int cmd_twist(const Options& o) {
  const auto in = load(o.file);
  const Matrix psi = matrix_arg(o.psi, "--psi", in.h.dim_l());
  const Matrix phi = matrix_arg(o.phi, "--phi", in.h.dim_a());
  HLRAlgebra out;
  try {
    out = twist_by_endomorphism(in.h, phi, psi);
  } catch (const AlgebraError& e) {
    std::cerr << "twist refused: " << e.what() << "\n";
    return 1;
  }
  return emit_algebra(out, o);
}

int cmd_fiber(const Options& o) {
  const auto a = load(o.file), b = load(o.file2);
  HLRAlgebra out;
  try {
    out = fiber_product(a.h, b.h);
  } catch (const AlgebraError& e) {
    std::cerr << "fiber product refused: " << e.what() << "\n";
    return 1;
  }
  return emit_algebra(out, o);
}

int cmd_morphism(const Options& o) {
  const auto a = load(o.file), b = load(o.file2);
  auto identity_or = [](const std::string& text, std::size_t from, std::size_t to, const char* flag) {
    if (!text.empty()) return parse_matrix(text);
    if (from != to) throw InputError(std::string(flag) + " is required when the dimensions differ");
    return Matrix::identity(from);
  };
  Matrix g, f;
  try {
    g = identity_or(o.g, a.h.dim_a(), b.h.dim_a(), "--g");
    f = identity_or(o.f, a.h.dim_l(), b.h.dim_l(), "--f");
  } catch (const ParseError& e) {
    throw InputError(std::string("--g/--f: ") + e.what());
  }
  if (g.rows() != b.h.dim_a() || g.cols() != a.h.dim_a())
    throw InputError("--g: expected " + std::to_string(b.h.dim_a()) + "x" + std::to_string(a.h.dim_a()));
  if (f.rows() != b.h.dim_l() || f.cols() != a.h.dim_l())
    throw InputError("--f: expected " + std::to_string(b.h.dim_l()) + "x" + std::to_string(a.h.dim_l()));
  RunReport r{"morphism", a.digest + "+" + b.digest};
  r.report = to_report(check_morphism({g, f}, a.h, b.h));
  return emit(r, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Hom-Leibniz-Rinehart algebras given by structure constants"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
    c->add_option("-o,--output", o.output, "write to this file instead of stdout");
  };
  auto with_cartan = [&](CLI::App* c) {
    c->add_option("--cartan", o.cartan, "basis rows of H, e.g. \"1,0,0\" (default: declared_H)");
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;

  auto* validate = app.add_subcommand("validate", "check every axiom");
  validate->add_option("file", o.file)->required();
  validate->add_flag("--strict", o.strict, "representation axioms are failures, not warnings");
  common(validate);
  commands.emplace_back(validate, cmd_validate);

  for (auto [name, desc, fn] : {std::tuple{"decompose", "root and weight decompositions with their theorems",
                                           &cmd_decompose},
                                std::tuple{"analyze", "J-split, tightness and the structure theorems", &cmd_analyze},
                                std::tuple{"connect", "connection classes of roots and weights", &cmd_connect}}) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("file", o.file)->required();
    with_cartan(c);
    common(c);
    commands.emplace_back(c, fn);
  }

  auto* j = app.add_subcommand("j", "the ideal generated by symmetric brackets");
  j->add_option("file", o.file)->required();
  common(j);
  commands.emplace_back(j, cmd_j);

  auto* twist = app.add_subcommand("twist", "twist by an endomorphism pair, writes an algebra file");
  twist->add_option("file", o.file)->required();
  twist->add_option("--psi", o.psi, "endomorphism of L (default identity)");
  twist->add_option("--phi", o.phi, "endomorphism of A (default identity)");
  twist->add_option("-o,--output", o.output);
  commands.emplace_back(twist, cmd_twist);

  auto* fiber = app.add_subcommand("fiber", "fibre product over the derivations of A, writes an algebra file");
  fiber->add_option("file", o.file)->required();
  fiber->add_option("file2", o.file2)->required();
  fiber->add_option("-o,--output", o.output);
  commands.emplace_back(fiber, cmd_fiber);

  auto* morphism = app.add_subcommand("morphism", "check a morphism pair (g, f)");
  morphism->add_option("file", o.file)->required();
  morphism->add_option("file2", o.file2)->required();
  morphism->add_option("--g", o.g, "A -> A' matrix (default: identity)");
  morphism->add_option("--f", o.f, "L -> L' matrix (default: identity)");
  common(morphism);
  commands.emplace_back(morphism, cmd_morphism);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    for (const auto& [c, fn] : commands)
      if (c->parsed()) return fn(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
