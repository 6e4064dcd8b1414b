#pragma once

// JSON forms of simplicial sets, homology reports and decorations.

#include <json.hpp>

#include "csx/bundles.hpp"
#include "csx/homology.hpp"

namespace csx {

using Json = nlohmann::ordered_json;

/// {"max_dim": n, "dims": [{"payloads": [...], "faces": [[...]], "degeneracies": [[...]]}]}
/// plus "simplicial": false for semi-simplicial sets.
Json to_json(const SimplicialSet& x);
/// Validates table shapes and, for simplicial sets, the simplicial identities.
SimplicialSetPtr simplicial_set_from_json(const Json& j);

/// {"H": [{"betti": b, "torsion": [...]}, ...], "unreliable_top": true}
Json to_json(const HomologyReport& r);

/// {"base": <set>, "assignment": [{"dim": n, "values": ["circ:0,2,1", ...]}, ...]}
Json to_json(const Decoration& d);
Decoration decoration_from_json(const Json& j);

/// Like a decoration, with null entries for undecorated simplices.
PartialDecoration partial_decoration_from_json(const Json& j);

Json to_json(const Obstruction& o, const SimplicialSet& base);

}  // namespace csx
