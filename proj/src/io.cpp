#include "facemonoid/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace fm {

namespace {

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) fail("ParseError", std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) fail("ParseError", std::string(what) + " entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

GcmPtr gcm_from_json(const Json& j) {
  if (!j.contains("matrix")) fail("ParseError", "GCM file needs a \"matrix\" key");
  const Json& m = j.at("matrix");
  if (!m.is_array() || m.empty()) fail("NotSquare", "matrix must be a nonempty array of rows");
  const int n = static_cast<int>(m.size());
  Gcm::Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = m.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail("NotSquare", "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(n));
    for (int k = 0; k < n; ++k) a(i, k) = row.at(k).get<std::int64_t>();
  }
  return Gcm::validate(a);
}

GcmPtr load_gcm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("FileError", "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("ParseError", path + ": " + e.what());
  }
  return gcm_from_json(j);
}

Json gcm_to_json(const Gcm& g) {
  Json rows = Json::array();
  for (int i = 0; i < g.rank(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < g.rank(); ++k) row.push_back(g.entry(i, k));
    rows.push_back(row);
  }
  return Json{{"matrix", rows}};
}

IndexSet subset_from_json(const Json& j, int rank) {
  IndexSet s;
  for (int i : int_array(j, "subset")) {
    if (i < 1 || i > rank)
      fail("BadIndex", "index " + std::to_string(i) + " out of range 1.." + std::to_string(rank));
    s.insert(i - 1);
  }
  return s;
}

Json subset_to_json(IndexSet s) {
  Json out = Json::array();
  for (int i : s.elements()) out.push_back(i + 1);
  return out;
}

WeylWord word_from_json(GcmPtr g, const Json& j) {
  std::vector<int> letters;
  for (int i : int_array(j, "word")) {
    if (i < 1 || i > g->rank())
      fail("BadGenerator", "generator " + std::to_string(i) + " out of range 1.." +
                               std::to_string(g->rank()));
    letters.push_back(i - 1);
  }
  return normalize(std::move(g), letters);
}

Json word_to_json(const WeylWord& w) {
  Json out = Json::array();
  for (int i : w.letters) out.push_back(i + 1);
  return out;
}

Face face_from_json(GcmPtr g, const Json& j) {
  if (!j.contains("theta") || !j.contains("rep")) fail("ParseError", "face needs theta and rep");
  IndexSet theta = subset_from_json(j.at("theta"), g->rank());
  return make_face(word_from_json(g, j.at("rep")), theta);
}

Json face_to_json(const Face& f) {
  return Json{{"theta", subset_to_json(f.theta)}, {"rep", word_to_json(f.rep)}};
}

FacetLabel facet_from_json(GcmPtr g, const Json& j) {
  if (!j.contains("rep") || !j.contains("jtype")) fail("ParseError", "facet needs rep and jtype");
  IndexSet jt = subset_from_json(j.at("jtype"), g->rank());
  return make_facet(word_from_json(g, j.at("rep")), jt);
}

Json facet_to_json(const FacetLabel& f) {
  return Json{{"rep", word_to_json(f.rep)}, {"jtype", subset_to_json(f.jtype)}};
}

FaceMonoidElement element_from_json(GcmPtr g, const Json& j) {
  if (!j.contains("left") || !j.contains("theta") || !j.contains("right"))
    fail("ParseError", "element needs left, theta, right");
  IndexSet theta = subset_from_json(j.at("theta"), g->rank());
  WeylWord w1 = word_from_json(g, j.at("left"));
  WeylWord w2 = word_from_json(g, j.at("right"));
  return make_element(w1, make_face(identity(g), theta), w2);
}

Json element_to_json(const FaceMonoidElement& x) {
  return Json{{"left", word_to_json(x.left)},
              {"theta", subset_to_json(x.theta)},
              {"right", word_to_json(x.right)}};
}

ComplexElement complex_from_json(GcmPtr g, const Json& j) {
  if (!j.contains("rep") || !j.contains("jtype")) fail("ParseError", "coset needs rep and jtype");
  IndexSet jt = subset_from_json(j.at("jtype"), g->rank());
  return make_complex(word_from_json(g, j.at("rep")), jt);
}

Json complex_to_json(const ComplexElement& c) {
  return Json{{"rep", word_to_json(c.rep)}, {"jtype", subset_to_json(c.jtype)}};
}

Json loo_facet_to_json(const LooFacetLabel& f) {
  return Json{{"base_theta", subset_to_json(f.base_theta)},
              {"rep", word_to_json(f.rep)},
              {"jtype", subset_to_json(f.jtype)}};
}

Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    fail("ParseError", "bad rational: " + s);
  }
}

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

ConeProfile profile_from_json(GcmPtr g, const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != g->rank())
    fail("ParseError", "profile must be an array of " + std::to_string(g->rank()) + " rationals");
  ConeProfile p;
  p.v = PairingVec::Zero(g->rank());
  for (int i = 0; i < g->rank(); ++i) {
    const auto& e = j.at(i);
    if (e.is_number_integer())
      p.v(i) = Rational(e.get<std::int64_t>());
    else if (e.is_string())
      p.v(i) = rational_from_string(e.get<std::string>());
    else
      fail("ParseError", "profile entries must be integers or \"p/q\" strings");
  }
  p.apex = p.is_zero();
  return p;
}

Json profile_to_json(const ConeProfile& p) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < p.v.size(); ++i)
    out.push_back(p.apex ? std::string("0") : rational_to_string(p.v(i)));
  return out;
}

}  // namespace fm
