// Command-line front end over the csx C interface.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "csx/csx.h"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string target;
  int max_dim = 6;
  std::string format = "json";
  std::string out;
  std::string g;
  int n = 2;
  std::string group = "C";
  std::string input;
  std::string decoration;
  std::string cochain;
  std::string base = "boundary:3";
  std::string overflow = "bigint";
  std::string matrices;
  std::uint64_t seed = 0;
  bool emit_set = false;
  std::string suite;
};

// Exit codes: 0 ok, 1 check failure, 2 input error, 3 resource cap.
int exit_code(csx_status s) {
  switch (s) {
    case CSX_OK: return 0;
    case CSX_CHECK_FAILED: return 1;
    case CSX_RESOURCE_CAP:
    case CSX_OVERFLOW: return 3;
    default: return 2;
  }
}

struct Failure {
  csx_status status;
  std::string message;
};

void ok_or_throw(csx_status s) {
  if (s != CSX_OK) throw Failure{s, csx_last_error()};
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { csx_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using SetHandle = std::unique_ptr<csx_sset, decltype(&csx_sset_free)>;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{CSX_INVALID_INPUT, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

csx_overflow overflow_of(const Options& o) { return o.overflow == "checked" ? CSX_OVERFLOW_CHECKED : CSX_OVERFLOW_BIGINT; }

std::string target_name(const Options& o) {
  const auto& t = o.target;
  if (t == "delta" || t == "simplex" || t == "boundary") return t + ":" + std::to_string(o.n);
  if (t == "twisted") return "twisted:" + o.group + ":" + std::to_string(o.n);
  if (t == "E") {
    if (o.g.empty()) throw Failure{CSX_INVALID_INPUT, "target E needs --g"};
    return "E:" + o.g;
  }
  return t;
}

SetHandle load_set(const std::string& target, const std::string& input, int max_dim) {
  csx_sset* raw = nullptr;
  if (!input.empty())
    ok_or_throw(csx_sset_from_json(read_file(input).c_str(), &raw));
  else
    ok_or_throw(csx_sset_build(target.c_str(), max_dim, &raw));
  return SetHandle(raw, &csx_sset_free);
}

SetHandle load_target(const Options& o) {
  return load_set(o.input.empty() ? target_name(o) : "", o.input, o.max_dim);
}

void check_max_dim(const Options& o) {
  const int cap = csx_max_dim_cap();
  if (o.max_dim < 0) throw Failure{CSX_INVALID_INPUT, "--max-dim must be nonnegative"};
  if (o.max_dim > cap)
    throw Failure{CSX_RESOURCE_CAP, "--max-dim " + std::to_string(o.max_dim) + " exceeds the cap " + std::to_string(cap)};
}

std::string group_text(const Json& g) {
  std::string s;
  const auto betti = g["betti"].get<std::size_t>();
  if (betti == 1) s = "Z";
  if (betti > 1) s = "Z^" + std::to_string(betti);
  for (const auto& t : g["torsion"]) {
    if (!s.empty()) s += " + ";
    s += "Z/" + (t.is_string() ? t.get<std::string>() : std::to_string(t.get<long long>()));
  }
  return s.empty() ? "0" : s;
}

void homology_text(std::ostream& os, const Json& report) {
  const auto& groups = report["H"];
  for (std::size_t k = 0; k < groups.size(); ++k) {
    os << "H" << k << " = " << group_text(groups[k]);
    if (k + 1 == groups.size() && report["unreliable_top"].get<bool>()) os << "  (unreliable: top dimension)";
    os << "\n";
  }
}

// ---------------------------------------------------------------------------

int run_enumerate(const Options& o, Json& out, std::ostream& text) {
  check_max_dim(o);
  auto x = load_target(o);
  Json dims = Json::array();
  text << "dim  total  nondegenerate\n";
  for (int d = 0; d <= csx_sset_max_dim(x.get()); ++d) {
    std::size_t total = 0, nondeg = 0;
    ok_or_throw(csx_sset_count(x.get(), d, &total, &nondeg));
    dims.push_back(Json{{"dim", d}, {"total", total}, {"nondegenerate", nondeg}});
    text << d << "  " << total << "  " << nondeg << "\n";
  }
  out["target"] = o.input.empty() ? target_name(o) : o.input;
  out["max_dim"] = csx_sset_max_dim(x.get());
  out["simplicial"] = csx_sset_is_simplicial(x.get()) != 0;
  out["dims"] = dims;
  if (o.emit_set) {
    OwnedString s;
    ok_or_throw(csx_sset_to_json(x.get(), &s.p));
    out["set"] = Json::parse(s.str());
    text << "(full set table only in JSON output)\n";
  }
  return 0;
}

int run_check(const Options& o, Json& out, std::ostream& text) {
  check_max_dim(o);
  OwnedString report;
  std::string target = o.target;
  if (!target.empty()) target = target_name(o);
  const csx_status s = csx_check(o.suite.c_str(), target.empty() ? nullptr : target.c_str(), o.max_dim, &report.p);
  if (s != CSX_OK && s != CSX_CHECK_FAILED) throw Failure{s, csx_last_error()};
  out = Json::parse(report.str());
  out["seed"] = o.seed;
  for (const auto& c : out["checks"]) {
    text << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << " (" << c["cases"].get<std::size_t>()
         << " cases)";
    if (!c["passed"].get<bool>()) text << ": " << c["counterexample"].get<std::string>();
    text << "\n";
  }
  return exit_code(s);
}

int bundle_report(const Options& o, Json& out, std::ostream& text) {
  check_max_dim(o);
  OwnedString report;
  csx_status s;
  if (!o.decoration.empty()) {
    s = csx_bundle_from_decoration(read_file(o.decoration).c_str(), o.max_dim, overflow_of(o), &report.p);
  } else {
    const bool is_file = std::filesystem::is_regular_file(o.base);
    auto base = load_set(is_file ? "" : o.base, is_file ? o.base : "", o.max_dim);
    s = csx_bundle_from_cochain(base.get(), o.cochain.c_str(), o.max_dim, overflow_of(o), &report.p);
  }
  if (s != CSX_OK && s != CSX_CHECK_FAILED) throw Failure{s, csx_last_error()};
  out = Json::parse(report.str());

  text << "chern cochain:";
  for (const auto& v : out["chern_cochain"]) text << " " << v.get<int>();
  text << "  (sum " << out["chern_sum"].get<int>() << ")\n";
  text << "bundle check: " << (out["bundle_ok"].get<bool>() ? "ok" : out["bundle_error"].get<std::string>()) << "\n";
  text << "total counts:";
  for (const auto& v : out["total_counts"]) text << " " << v.get<std::size_t>();
  text << "\n";
  homology_text(text, out["homology"]);
  if (!o.emit_set) out.erase("total");
  return exit_code(s);
}

int run_homology(const Options& o, Json& out, std::ostream& text) {
  if (o.target == "bundle") {
    Json full;
    const int code = bundle_report(o, full, text);
    out = full;
    return code;
  }
  check_max_dim(o);
  auto x = load_target(o);
  OwnedString report;
  ok_or_throw(csx_homology(x.get(), overflow_of(o), &report.p));
  out = Json::parse(report.str());
  homology_text(text, out);
  if (!o.matrices.empty()) {
    std::filesystem::create_directories(o.matrices);
    for (int d = 0; d <= csx_sset_max_dim(x.get()); ++d) {
      OwnedString m;
      ok_or_throw(csx_boundary_matrix(x.get(), d, &m.p));
      std::ofstream f(std::filesystem::path(o.matrices) / ("boundary_" + std::to_string(d) + ".txt"));
      f << m.str();
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossed simplicial groups, circular permutations and circle bundles"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--max-dim", o.max_dim, "Truncation dimension (cap 9, lowered by CSX_MAX_DIM)")->capture_default_str();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    sub->add_option("--overflow", o.overflow, "Integer policy for Smith forms")
        ->check(CLI::IsMember({"bigint", "checked"}))
        ->capture_default_str();
    sub->add_option("--seed", o.seed, "Seed recorded with sampled runs")->capture_default_str();
    sub->add_option("--g", o.g, "Permutation word for target E, e.g. \"2,0,1\"");
    sub->add_option("--n", o.n, "Simplex dimension for delta, simplex, boundary and twisted targets")->capture_default_str();
    sub->add_option("--group", o.group, "Group for the twisted target")->check(CLI::IsMember({"S", "C"}))->capture_default_str();
    sub->add_option("--input", o.input, "Simplicial set JSON file to use instead of a named target");
  };
  const auto bundle_opts = [&](CLI::App* sub) {
    sub->add_option("--decoration", o.decoration, "Decoration JSON file");
    sub->add_option("--cochain", o.cochain, "0/1 values on base 2-simplices: \"id:value,...\"");
    sub->add_option("--base", o.base, "Base: vertex | simplex:N | boundary:N | delta:N | JSON file")->capture_default_str();
    sub->add_flag("--emit-total", o.emit_set, "Include the total space table in the JSON output");
  };

  auto* enumerate = app.add_subcommand("enumerate", "Per-dimension simplex counts");
  enumerate->add_option("target", o.target, "S | C | SC | twisted | E | delta | simplex | boundary")->required();
  enumerate->add_flag("--emit-set", o.emit_set, "Include the full set table in the JSON output");
  common(enumerate);

  auto* check = app.add_subcommand("check", "Run check suites");
  check->add_option("suite", o.suite, "identities | crossed | lemma | upsilon | all")
      ->required()
      ->check(CLI::IsMember({"identities", "crossed", "lemma", "upsilon", "all"}));
  check->add_option("--target", o.target, "Target for the identity audit");
  common(check);

  auto* homology = app.add_subcommand("homology", "Integer homology report");
  homology->add_option("target", o.target, "S | C | SC | delta | twisted | E | simplex | boundary | bundle")->required();
  homology->add_option("--matrices", o.matrices, "Directory for boundary matrix dumps");
  common(homology);
  bundle_opts(homology);

  auto* bundle = app.add_subcommand("bundle", "Circle bundle total space, Chern cochain and homology");
  common(bundle);
  bundle_opts(bundle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (o.base == "vertex") o.base = "simplex:0";

  Json out;
  std::ostringstream text;
  int code = 0;
  try {
    if (enumerate->parsed()) code = run_enumerate(o, out, text);
    if (check->parsed()) code = run_check(o, out, text);
    if (homology->parsed()) code = run_homology(o, out, text);
    if (bundle->parsed()) code = bundle_report(o, out, text);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return exit_code(f.status);
  }

  const std::string rendered = o.format == "json" ? out.dump(2) + "\n" : text.str();
  if (o.out.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << rendered;
  }
  return code;
}
