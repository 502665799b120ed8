// Command-line surface. Exit codes: 0 success, 1 failed check, 2 usage
// error, 3 degree/resolution cap exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "qpforge/verify.hpp"

using namespace qpforge;

namespace {

int env_degree_cap() {
  const char* v = std::getenv("QPFORGE_DEGREE_CAP");
  if (!v || !*v) return -1;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw InvalidParameter("QPFORGE_DEGREE_CAP is not an integer");
  }
}

Quiver build_family(const std::string& family, int s) {
  if (family == "a" || family == "A") return build_A(s);
  if (family == "d" || family == "D") return build_D(s);
  throw InvalidParameter("family must be a or d");
}

Potential potential_of(const Quiver& q) {
  return q.family == Family::A ? potential_A(q) : potential_D(q);
}

// "0..2" or a single level
std::pair<int, int> parse_levels(const std::string& spec) {
  auto dots = spec.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(spec);
      return {v, v};
    }
    return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidParameter("bad level range: " + spec);
  }
}

struct Options {
  std::string family = "d";
  int s = 2;
  std::string format = "json";
  std::string cut_spec;
  int cut_index = -1;
  std::string levels = "";
  bool module_window = false;
  bool with_fcy = false;
  uint64_t seed = 0x5eed5eedULL;
  int attempts = 24;
  std::string checks;
  std::vector<std::string> check_names;
  int from = 2, to = 8;
};

int cmd_build(const Options& o) {
  Quiver q = build_family(o.family, o.s);
  Potential w = potential_of(q);
  if (o.format == "dot") {
    std::cout << quiver_dot(q);
  } else if (o.format == "json") {
    Json j = quiver_json(q);
    j["potential"] = potential_json(w);
    std::cout << j.dump(2) << "\n";
  } else {
    throw InvalidParameter("format must be json or dot");
  }
  return 0;
}

int cmd_dim(const Options& o) {
  Quiver q = build_family(o.family, o.s);
  JacobianAlgebra J = compute_algebra(q, potential_of(q), env_degree_cap());
  Json j;
  j["s"] = o.s;
  j["family"] = family_name(q.family);
  j["total_dimension"] = J.total_dimension;
  j["top_degree"] = J.top_degree;
  Json pv;
  std::vector<size_t> dims = vertex_dims(J);
  for (uint32_t x = 0; x < q.vertices.size(); ++x) pv[q.vertices[x].name()] = dims[x];
  j["vertex_dimensions"] = std::move(pv);
  Json pd = Json::array();
  for (const auto& lvl : J.levels) pd.push_back(lvl.basis.size());
  j["degree_dimensions"] = std::move(pd);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_basis(const Options& o) {
  Quiver q = build_family(o.family, o.s);
  JacobianAlgebra J = compute_algebra(q, potential_of(q), env_degree_cap());
  std::cout << algebra_json(J).dump(2) << "\n";
  return 0;
}

int cmd_cuts(const Options& o) {
  Quiver q = build_family(o.family, o.s);
  Potential w = potential_of(q);
  std::vector<Cut> cuts = enumerate_cuts(q, w);
  Json j;
  j["s"] = o.s;
  j["family"] = family_name(q.family);
  j["count"] = cuts.size();
  Json list = Json::array();
  for (const Cut& c : cuts) {
    Json ids = Json::array();
    for (uint32_t id : c.arrows) ids.push_back(q.arrow_identity(id));
    list.push_back(std::move(ids));
  }
  j["cuts"] = std::move(list);
  std::set<uint32_t> covered;
  for (const Cut& c : cuts) covered.insert(c.arrows.begin(), c.arrows.end());
  j["enough"] = !cuts.empty() && covered.size() == q.arrows.size();
  if (o.with_fcy && !cuts.empty()) {
    JacobianAlgebra J = compute_algebra(q, w, env_degree_cap());
    Json reports = Json::array();
    for (const Cut& c : cuts) reports.push_back(homogeneity_json(q, homogeneity_report(J, c)));
    j["fcy_reports"] = std::move(reports);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_nakayama(const Options& o) {
  Quiver q = build_family(o.family, o.s);
  JacobianAlgebra J = compute_algebra(q, potential_of(q), env_degree_cap());
  std::vector<uint32_t> perm = nakayama_permutation(J);
  Json j;
  j["s"] = o.s;
  j["family"] = family_name(q.family);
  Json p;
  bool ident = true;
  for (uint32_t x = 0; x < perm.size(); ++x) {
    p[q.vertices[x].name()] = q.vertices[perm[x]].name();
    ident = ident && perm[x] == x;
  }
  j["permutation"] = std::move(p);
  j["identity"] = ident;
  int order = 1;
  std::vector<uint32_t> it = perm;
  while (true) {
    bool done = true;
    for (uint32_t x = 0; x < it.size(); ++x) done = done && it[x] == x;
    if (done) break;
    ++order;
    for (uint32_t x = 0; x < it.size(); ++x) it[x] = perm[it[x]];
  }
  j["order"] = order;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.attempts = o.attempts;
  vo.degree_cap = env_degree_cap();
  if (!o.checks.empty()) {
    std::istringstream is(o.checks);
    std::string tok;
    while (std::getline(is, tok, ','))
      if (!tok.empty()) vo.only.insert(tok);
  }
  for (const std::string& name : o.check_names) vo.only.insert(name);
  VerificationReport rep = run_verify(o.s, vo);
  if (o.format == "json") {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks)
      std::cout << "[" << c.status << "] " << c.name << ": " << c.witness << "  -- " << c.anchor
                << "\n";
    std::cout << (rep.ok() ? "all checks passed" : "CHECKS FAILED") << " (s = " << rep.s << ")\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_ar_quiver(const Options& o) {
  Quiver q = build_D(o.s);
  Potential w = potential_D(q);
  Cut cut;
  if (o.cut_index >= 0) {
    std::vector<Cut> cuts = enumerate_cuts(q, w);
    if (static_cast<size_t>(o.cut_index) >= cuts.size())
      throw BadCutSpec("cut index " + std::to_string(o.cut_index) + " out of range (" +
                       std::to_string(cuts.size()) + " cuts)");
    cut = cuts[o.cut_index];
  } else if (!o.cut_spec.empty()) {
    cut = parse_cut_spec(q, o.cut_spec);
  } else {
    throw BadCutSpec("need --cut or --cut-index");
  }
  ARQuiver ar;
  if (o.module_window || o.levels.empty()) {
    ar = ar_quiver_module(q, w, cut);
  } else {
    auto [lo, hi] = parse_levels(o.levels);
    ar = ar_quiver(q, w, cut, lo, hi);
  }
  if (o.format == "dot")
    std::cout << ar_quiver_dot(q, ar);
  else
    std::cout << ar_quiver_json(q, ar).dump(2) << "\n";
  return 0;
}

int cmd_report(const Options& o) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.attempts = o.attempts;
  vo.degree_cap = env_degree_cap();
  Json out = Json::array();
  bool all_ok = true;
  for (int s = o.from; s <= o.to; ++s) {
    VerificationReport rep = run_verify(s, vo);
    all_ok = all_ok && rep.ok();
    if (o.format == "json") {
      out.push_back(rep.to_json());
    } else {
      std::cout << "s = " << s << ": " << (rep.ok() ? "ok" : "FAILED");
      for (const auto& c : rep.checks)
        if (c.status == "fail") std::cout << "  [" << c.name << ": " << c.witness << "]";
      std::cout << "\n";
    }
  }
  if (o.format == "json") std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quiver-with-potential engine for the type A and D families"};
  app.require_subcommand(1);
  Options o;

  auto add_family_s = [&](CLI::App* sub, bool with_family = true) {
    if (with_family) sub->add_option("--family", o.family, "a or d");
    sub->add_option("--s", o.s, "family parameter, at least 2")->required();
  };

  CLI::App* build = app.add_subcommand("build", "emit the quiver and potential");
  add_family_s(build);
  build->add_option("--format", o.format, "json or dot");

  CLI::App* dim = app.add_subcommand("dim", "dimensions of the Jacobian algebra");
  add_family_s(dim);

  CLI::App* basis = app.add_subcommand("basis", "basis paths and dimension matrix");
  add_family_s(basis);

  CLI::App* cuts = app.add_subcommand("cuts", "enumerate all cuts");
  add_family_s(cuts);
  cuts->add_flag("--fcy", o.with_fcy, "attach the socle-degree report per cut");

  CLI::App* nak = app.add_subcommand("nakayama", "socle permutation of the algebra");
  add_family_s(nak);

  CLI::App* verify = app.add_subcommand("verify", "run the verification bundle for one s");
  add_family_s(verify, false);
  verify->add_option("--checks", o.checks, "comma-separated subset of checks");
  verify->add_option("--seed", o.seed, "seed for the trace-form search");
  verify->add_option("--attempts", o.attempts, "trace-form search attempts");
  verify->add_option("--format", o.format, "text or json");

  CLI::App* ar = app.add_subcommand("ar-quiver", "levelled translation quiver of a cut");
  add_family_s(ar, false);
  ar->add_option("--cut", o.cut_spec, "comma-separated arrow identities");
  ar->add_option("--cut-index", o.cut_index, "index into the cut enumeration");
  ar->add_option("--levels", o.levels, "level window, e.g. 0..2");
  ar->add_flag("--module", o.module_window, "use the window 0..t");
  ar->add_option("--format", o.format, "json or dot");

  CLI::App* report = app.add_subcommand("report", "verification bundles over a range of s");
  report->add_option("--from", o.from, "first s");
  report->add_option("--to", o.to, "last s");
  report->add_option("--seed", o.seed, "seed for the trace-form search");
  report->add_option("--attempts", o.attempts, "trace-form search attempts");
  report->add_option("--format", o.format, "text or json");

  // verify/report default to text output
  if (argc > 1 && (std::string(argv[1]) == "verify" || std::string(argv[1]) == "report"))
    o.format = "text";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) return cmd_build(o);
    if (dim->parsed()) return cmd_dim(o);
    if (basis->parsed()) return cmd_basis(o);
    if (cuts->parsed()) return cmd_cuts(o);
    if (nak->parsed()) return cmd_nakayama(o);
    if (verify->parsed()) return cmd_verify(o);
    if (ar->parsed()) return cmd_ar_quiver(o);
    if (report->parsed()) return cmd_report(o);
  } catch (const DimensionCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadCutSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const WrongFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
