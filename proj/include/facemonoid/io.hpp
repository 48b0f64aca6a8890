#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "facemonoid/actions.hpp"

// JSON wire formats (indices 1-based everywhere):
//   GCM file      {"matrix": [[...], ...]}
//   subset        sorted integer array
//   word          integer array of generators, e.g. [1,2,1]
//   Face          {"theta": [...], "rep": [...]}
//   FacetLabel    {"rep": [...], "jtype": [...]}
//   element       {"left": [...], "theta": [...], "right": [...]}
//   coset         {"rep": [...], "jtype": [...]}
//   profile       array of exact rationals as "p/q" strings
// Every emitted value is accepted back by the corresponding reader.

namespace fm {

using Json = nlohmann::json;

GcmPtr gcm_from_json(const Json& j);
GcmPtr load_gcm_file(const std::string& path);
Json gcm_to_json(const Gcm& g);

IndexSet subset_from_json(const Json& j, int rank);
Json subset_to_json(IndexSet s);

WeylWord word_from_json(GcmPtr g, const Json& j);
Json word_to_json(const WeylWord& w);

Face face_from_json(GcmPtr g, const Json& j);
Json face_to_json(const Face& f);

FacetLabel facet_from_json(GcmPtr g, const Json& j);
Json facet_to_json(const FacetLabel& f);

FaceMonoidElement element_from_json(GcmPtr g, const Json& j);
Json element_to_json(const FaceMonoidElement& x);

ComplexElement complex_from_json(GcmPtr g, const Json& j);
Json complex_to_json(const ComplexElement& c);

Json loo_facet_to_json(const LooFacetLabel& f);

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

ConeProfile profile_from_json(GcmPtr g, const Json& j);
Json profile_to_json(const ConeProfile& p);

}  // namespace fm
