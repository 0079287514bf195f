#pragma once

#include "rosekit/abelian.hpp"
#include "rosekit/chain.hpp"
#include "rosekit/covers.hpp"
#include "rosekit/grouppres.hpp"
#include "rosekit/modrep.hpp"
#include "rosekit/roselab.hpp"

#include <json.hpp>

#include <string>

namespace rosekit::jsonio {

using json = nlohmann::ordered_json;

// chain complexes: {"coeff": "Z" | {"p": N}, "dims": [..],
// "boundaries": [flat row-major entries as decimal strings, one list per map]}
json to_json(const chain::ChainComplex& c);
chain::ChainComplex complex_from_json(const json& j);

// presentations: {"generators": N, "relators": ["a b A B", ..]}
json to_json(const grouppres::FinitePresentation& p);
grouppres::FinitePresentation presentation_from_json(const json& j);

// epimorphisms: {"target": [d_1, ..], "images": [[..], ..]}
json to_json(const grouppres::Epimorphism& phi);
grouppres::Epimorphism epimorphism_from_json(const json& j);

/// Inline epimorphism syntax: "Z2: a->1, b->0" or "Z2^2: a->(1,0), b->(0,1)";
/// target factors separated by 'x', powers with '^'.
grouppres::Epimorphism parse_epimorphism_text(const std::string& text, int generator_count);

json to_json(const chain::HomologyProfile& h);
json to_json(const abelian::FgAbelianGroup& a);
json to_json(const abelian::GapReport& r);
json to_json(const modrep::ModuleDecomposition& d);
json to_json(const roselab::RoseVerdict& v);
json to_json(const roselab::Theorem1Report& r);
json to_json(const roselab::CarlssonReport& r);
json to_json(const roselab::ScreeningReport& r, int generator_count);
json to_json(const std::vector<covers::SeriesStage>& stages);

json load_json_file(const std::string& path);

}  // namespace rosekit::jsonio
