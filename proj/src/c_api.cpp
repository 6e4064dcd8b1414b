#include "csx/csx.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "csx/bundles.hpp"
#include "csx/checks.hpp"
#include "csx/error.hpp"
#include "csx/homology.hpp"
#include "csx/serialize.hpp"

struct csx_sset {
  csx::SimplicialSetPtr set;
};

namespace {

thread_local std::string last_error;

constexpr int kHardCap = 9;

csx_status status_of(csx::ErrorKind kind) {
  switch (kind) {
    case csx::ErrorKind::InvalidArgument: return CSX_INVALID_INPUT;
    case csx::ErrorKind::NotSimplicial: return CSX_NOT_SIMPLICIAL;
    case csx::ErrorKind::Overflow: return CSX_OVERFLOW;
    case csx::ErrorKind::ResourceCap: return CSX_RESOURCE_CAP;
  }
  return CSX_INTERNAL;
}

template <class Body>
csx_status guarded(Body body) {
  last_error.clear();
  try {
    return body();
  } catch (const csx::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("JSON: ") + e.what();
    return CSX_INVALID_INPUT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CSX_RESOURCE_CAP;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CSX_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) csx::fail(csx::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

void check_cap(int max_dim) {
  csx::require(max_dim >= 0, "max_dim must be nonnegative");
  const int cap = csx_max_dim_cap();
  if (max_dim > cap)
    csx::fail(csx::ErrorKind::ResourceCap,
              "max_dim " + std::to_string(max_dim) + " exceeds the cap " + std::to_string(cap));
}

csx::OverflowPolicy policy_of(csx_overflow p) {
  return p == CSX_OVERFLOW_CHECKED ? csx::OverflowPolicy::Checked : csx::OverflowPolicy::BigInt;
}

csx::TwoCochain parse_cochain(const std::string& text, std::size_t triangles) {
  csx::TwoCochain c{std::vector<int>(triangles, 0)};
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    const auto colon = item.find(':');
    csx::require(colon != std::string::npos, "cochain entries are id:value, got '" + item + "'");
    std::size_t id = 0;
    int value = 0;
    try {
      id = std::stoul(item.substr(0, colon));
      value = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      csx::fail(csx::ErrorKind::InvalidArgument, "bad cochain entry '" + item + "'");
    }
    csx::require(id < triangles, "cochain id " + std::to_string(id) + " is not a 2-simplex of the base");
    csx::require(value == 0 || value == 1, "cochain values must be 0 or 1");
    c.values[id] = value;
    pos = end + 1;
  }
  return c;
}

csx::Json bundle_report(const csx::Decoration& d, int max_dim, csx::OverflowPolicy policy) {
  const auto b = csx::total_space(d, max_dim);
  const auto bad = csx::verify_bundle(d, b);
  csx::Json counts = csx::Json::array();
  for (int n = 0; n <= b.total->max_dim(); ++n) counts.push_back(b.total->count(n));
  csx::Json out;
  out["chern_cochain"] = csx::chern_cochain(d).values;
  out["chern_sum"] = csx::chern_cochain(d).sum();
  out["bundle_ok"] = !bad.has_value();
  if (bad) out["bundle_error"] = *bad;
  out["total_counts"] = counts;
  out["homology"] = csx::to_json(csx::homology(*b.total, policy));
  out["total"] = csx::to_json(*b.total);
  return out;
}

}  // namespace

extern "C" {

const char* csx_last_error(void) { return last_error.c_str(); }

void csx_string_free(char* s) { std::free(s); }

int csx_max_dim_cap(void) {
  int cap = kHardCap;
  if (const char* env = std::getenv("CSX_MAX_DIM")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v < cap) cap = static_cast<int>(v);
  }
  return cap;
}

csx_status csx_sset_build(const char* target, int max_dim, csx_sset** out) {
  return guarded([&] {
    need(target, "target");
    need(out, "out");
    check_cap(max_dim);
    *out = new csx_sset{csx::build_target(target, max_dim)};
    return CSX_OK;
  });
}

csx_status csx_sset_from_json(const char* json, csx_sset** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    auto set = csx::simplicial_set_from_json(csx::Json::parse(json));
    check_cap(set->max_dim());
    *out = new csx_sset{std::move(set)};
    return CSX_OK;
  });
}

void csx_sset_free(csx_sset* x) { delete x; }

int csx_sset_max_dim(const csx_sset* x) { return x ? x->set->max_dim() : -1; }

int csx_sset_is_simplicial(const csx_sset* x) { return x && x->set->has_degeneracies() ? 1 : 0; }

csx_status csx_sset_count(const csx_sset* x, int dim, size_t* total, size_t* nondegenerate) {
  return guarded([&] {
    need(x, "set");
    csx::require(dim >= 0 && dim <= x->set->max_dim(), "dimension out of range");
    if (total) *total = x->set->count(dim);
    if (nondegenerate) *nondegenerate = csx::nondegenerate_list(*x->set, dim).size();
    return CSX_OK;
  });
}

csx_status csx_sset_to_json(const csx_sset* x, char** json) {
  return guarded([&] {
    need(x, "set");
    need(json, "json");
    *json = dup(csx::to_json(*x->set).dump());
    return CSX_OK;
  });
}

csx_status csx_sset_audit(const csx_sset* x, char** message) {
  return guarded([&] {
    need(x, "set");
    if (message) *message = nullptr;
    if (!x->set->has_degeneracies()) {
      x->set->validate_shape();
      return CSX_OK;
    }
    if (auto bad = csx::audit_identities(*x->set)) {
      if (message) *message = dup(*bad);
      return CSX_CHECK_FAILED;
    }
    return CSX_OK;
  });
}

csx_status csx_homology(const csx_sset* x, csx_overflow policy, char** report_json) {
  return guarded([&] {
    need(x, "set");
    need(report_json, "report_json");
    *report_json = dup(csx::to_json(csx::homology(*x->set, policy_of(policy))).dump());
    return CSX_OK;
  });
}

csx_status csx_boundary_matrix(const csx_sset* x, int dim, char** triplets) {
  return guarded([&] {
    need(x, "set");
    need(triplets, "triplets");
    csx::require(dim >= 0 && dim <= x->set->max_dim(), "dimension out of range");
    const auto cc = csx::normalized_complex(*x->set);
    *triplets = dup(cc.boundary[static_cast<std::size_t>(dim)].to_triplet_text());
    return CSX_OK;
  });
}

csx_status csx_check(const char* suite, const char* target, int max_dim, char** report_json) {
  return guarded([&] {
    need(suite, "suite");
    need(report_json, "report_json");
    check_cap(max_dim);
    const auto results = csx::run_checks(suite, target ? target : "", max_dim);
    bool all = true;
    csx::Json checks = csx::Json::array();
    for (const auto& r : results) {
      all = all && r.passed;
      checks.push_back(csx::Json{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"counterexample", r.counterexample}});
    }
    *report_json = dup(csx::Json{{"passed", all}, {"checks", checks}}.dump());
    return all ? CSX_OK : CSX_CHECK_FAILED;
  });
}

csx_status csx_bundle_from_decoration(const char* decoration_json, int max_dim, csx_overflow policy, char** report_json) {
  return guarded([&] {
    need(decoration_json, "decoration_json");
    need(report_json, "report_json");
    check_cap(max_dim);
    const auto d = csx::decoration_from_json(csx::Json::parse(decoration_json));
    const auto report = bundle_report(d, max_dim, policy_of(policy));
    *report_json = dup(report.dump());
    return report["bundle_ok"].get<bool>() ? CSX_OK : CSX_CHECK_FAILED;
  });
}

csx_status csx_bundle_from_cochain(const csx_sset* base, const char* cochain, int max_dim, csx_overflow policy,
                                   char** report_json) {
  return guarded([&] {
    need(base, "base");
    need(report_json, "report_json");
    check_cap(max_dim);
    const std::size_t triangles = base->set->max_dim() >= 2 ? base->set->count(2) : 0;
    const auto c = parse_cochain(cochain ? cochain : "", triangles);
    const auto d = csx::decorate_from_cochain(base->set, c);
    const auto report = bundle_report(d, max_dim, policy_of(policy));
    *report_json = dup(report.dump());
    return report["bundle_ok"].get<bool>() ? CSX_OK : CSX_CHECK_FAILED;
  });
}

csx_status csx_extend_decoration(const char* partial_json, char** out_json) {
  return guarded([&] {
    need(partial_json, "partial_json");
    need(out_json, "out_json");
    const auto partial = csx::partial_decoration_from_json(csx::Json::parse(partial_json));
    const auto result = csx::extend_decoration(partial);
    if (const auto* o = std::get_if<csx::Obstruction>(&result)) {
      *out_json = dup(csx::to_json(*o, *partial.base).dump());
      return CSX_CHECK_FAILED;
    }
    *out_json = dup(csx::to_json(std::get<csx::Decoration>(result)).dump());
    return CSX_OK;
  });
}

}  // extern "C"
