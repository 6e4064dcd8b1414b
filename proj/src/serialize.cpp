#include "csx/serialize.hpp"

#include "csx/error.hpp"

namespace csx {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("bad JSON field '") + key + "': " + e.what());
  }
}

std::vector<std::vector<CircularPermutation>> read_assignment(const Json& j, const SimplicialSet& base,
                                                              std::vector<std::vector<std::optional<CircularPermutation>>>* partial) {
  require(j.is_array(), "assignment must be an array of {dim, values}");
  std::vector<std::vector<CircularPermutation>> full(static_cast<std::size_t>(base.max_dim() + 1));
  if (partial) partial->assign(static_cast<std::size_t>(base.max_dim() + 1), {});
  for (int n = 0; n <= base.max_dim(); ++n)
    if (partial) (*partial)[static_cast<std::size_t>(n)].assign(base.count(n), std::nullopt);
  std::vector<bool> seen(full.size(), false);
  for (const auto& entry : j) {
    const int n = field<int>(entry, "dim");
    require(n >= 0 && n <= base.max_dim() && !seen[static_cast<std::size_t>(n)], "bad or repeated assignment dim");
    seen[static_cast<std::size_t>(n)] = true;
    const auto& values = entry.at("values");
    require(values.is_array() && values.size() == base.count(n), "assignment for dim " + std::to_string(n) + " has the wrong length");
    for (std::size_t id = 0; id < values.size(); ++id) {
      if (values[id].is_null()) {
        require(partial != nullptr, "null decoration entry at dim " + std::to_string(n));
        continue;
      }
      require(values[id].is_string(), "decoration entries must be strings");
      auto c = CircularPermutation::parse(values[id].get<std::string>());
      if (partial)
        (*partial)[static_cast<std::size_t>(n)][id] = c;
      else
        full[static_cast<std::size_t>(n)].push_back(std::move(c));
    }
  }
  if (!partial)
    for (int n = 0; n <= base.max_dim(); ++n)
      require(seen[static_cast<std::size_t>(n)] || base.count(n) == 0, "assignment missing dim " + std::to_string(n));
  return full;
}

}  // namespace

Json to_json(const SimplicialSet& x) {
  Json out;
  out["max_dim"] = x.max_dim();
  if (!x.has_degeneracies()) out["simplicial"] = false;
  Json dims = Json::array();
  for (int n = 0; n <= x.max_dim(); ++n) {
    const auto& lv = x.level(n);
    Json faces = Json::array();
    Json degens = Json::array();
    const std::size_t stride = static_cast<std::size_t>(n + 1);
    for (std::size_t id = 0; id < lv.payloads.size(); ++id) {
      if (n > 0) faces.push_back(std::vector<int>(lv.faces.begin() + static_cast<std::ptrdiff_t>(id * stride),
                                                  lv.faces.begin() + static_cast<std::ptrdiff_t>((id + 1) * stride)));
      if (!lv.degeneracies.empty())
        degens.push_back(std::vector<int>(lv.degeneracies.begin() + static_cast<std::ptrdiff_t>(id * stride),
                                          lv.degeneracies.begin() + static_cast<std::ptrdiff_t>((id + 1) * stride)));
    }
    dims.push_back(Json{{"payloads", lv.payloads}, {"faces", faces}, {"degeneracies", degens}});
  }
  out["dims"] = dims;
  return out;
}

namespace {

template <class Body>
auto translating(Body body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("malformed JSON input: ") + e.what());
  }
}

SimplicialSetPtr read_set(const Json& j) {
  const int max_dim = field<int>(j, "max_dim");
  require(max_dim >= 0, "max_dim must be nonnegative");
  const bool simplicial = j.contains("simplicial") ? field<bool>(j, "simplicial") : true;
  const auto& dims = j.at("dims");
  require(dims.is_array() && dims.size() == static_cast<std::size_t>(max_dim + 1), "'dims' must have max_dim+1 entries");

  auto out = std::make_shared<SimplicialSet>(max_dim, simplicial);
  for (int n = 0; n <= max_dim; ++n) {
    const auto& d = dims[static_cast<std::size_t>(n)];
    auto& lv = out->level(n);
    lv.payloads = field<std::vector<std::string>>(d, "payloads");
    const auto read_table = [&](const char* key, std::vector<std::int32_t>& table) {
      if (!d.contains(key)) return;
      for (const auto& row : d.at(key)) {
        const auto r = row.get<std::vector<std::int32_t>>();
        require(r.size() == static_cast<std::size_t>(n + 1), std::string(key) + " rows need dim+1 entries");
        table.insert(table.end(), r.begin(), r.end());
      }
    };
    if (n > 0) read_table("faces", lv.faces);
    if (simplicial && n < max_dim) read_table("degeneracies", lv.degeneracies);
  }
  out->validate_shape();
  if (simplicial)
    if (auto bad = audit_identities(*out)) fail(ErrorKind::NotSimplicial, "imported set fails the identity audit: " + *bad);
  return out;
}

}  // namespace

SimplicialSetPtr simplicial_set_from_json(const Json& j) {
  return translating([&] { return read_set(j); });
}

Json to_json(const HomologyReport& r) {
  Json groups = Json::array();
  for (const auto& g : r.groups) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion) {
      if (t <= BigInt(std::numeric_limits<std::int64_t>::max()))
        torsion.push_back(static_cast<std::int64_t>(t));
      else
        torsion.push_back(t.str());
    }
    groups.push_back(Json{{"betti", g.betti}, {"torsion", torsion}});
  }
  return Json{{"H", groups}, {"unreliable_top", r.unreliable_top}};
}

Json to_json(const Decoration& d) {
  Json assignment = Json::array();
  for (std::size_t n = 0; n < d.assignment.size(); ++n) {
    Json values = Json::array();
    for (const auto& c : d.assignment[n]) values.push_back(c.to_string());
    assignment.push_back(Json{{"dim", n}, {"values", values}});
  }
  return Json{{"base", to_json(*d.base)}, {"assignment", assignment}};
}

Decoration decoration_from_json(const Json& j) {
  return translating([&] {
    require(j.is_object() && j.contains("base") && j.contains("assignment"), "decoration needs 'base' and 'assignment'");
    Decoration d{simplicial_set_from_json(j.at("base")), {}};
    d.assignment = read_assignment(j.at("assignment"), *d.base, nullptr);
    return d;
  });
}

PartialDecoration partial_decoration_from_json(const Json& j) {
  return translating([&] {
    require(j.is_object() && j.contains("base") && j.contains("assignment"), "decoration needs 'base' and 'assignment'");
    PartialDecoration p{simplicial_set_from_json(j.at("base")), {}};
    read_assignment(j.at("assignment"), *p.base, &p.assignment);
    return p;
  });
}

Json to_json(const Obstruction& o, const SimplicialSet& base) {
  return Json{{"obstruction", {{"dim", o.dim}, {"id", o.id}, {"payload", base.payload(o.dim, o.id)}}}};
}

}  // namespace csx
