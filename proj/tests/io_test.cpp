#include <doctest.h>

#include <nlohmann/json.hpp>

#include "facemonoid/io.hpp"
#include "facemonoid/rng.hpp"
#include "facemonoid/verify.hpp"

using namespace fm;
namespace mats = fm::verify::mats;

namespace {

WeylWord rand_word(GcmPtr g, Rng& rng, int max_len) {
  std::vector<int> letters;
  for (int k = rng.range(0, max_len); k > 0; --k) letters.push_back(rng.below(g->rank()));
  return normalize(g, letters);
}

}  // namespace

TEST_CASE("gcm json") {
  Json j = Json::parse(R"({"matrix": [[2,-2],[-2,2]]})");
  GcmPtr g = gcm_from_json(j);
  CHECK(g->rank() == 2);
  CHECK(gcm_from_json(gcm_to_json(*g))->matrix() == g->matrix());

  CHECK_THROWS_WITH_AS(gcm_from_json(Json::parse(R"({"matrix": [[2,-1],[0,2]]})")),
                       doctest::Contains("AsymmetricZero"), Error);
  CHECK_THROWS_WITH_AS(gcm_from_json(Json::parse(R"({"matrix": [[2,-1]]})")),
                       doctest::Contains("NotSquare"), Error);
}

TEST_CASE("1-based words and subsets") {
  GcmPtr g = mats::hyp();
  WeylWord w = word_from_json(g, Json::parse("[2,1,2]"));
  CHECK(w.letters == std::vector<int>{1, 0, 1});
  CHECK(word_to_json(w) == Json::parse("[2,1,2]"));

  CHECK(subset_to_json(subset_from_json(Json::parse("[1,3]"), 3)) == Json::parse("[1,3]"));
  CHECK_THROWS_WITH_AS(subset_from_json(Json::parse("[4]"), 3), doctest::Contains("BadIndex"),
                       Error);
  CHECK_THROWS_WITH_AS(word_from_json(g, Json::parse("[0]")), doctest::Contains("BadGenerator"),
                       Error);
}

TEST_CASE("round trips for every emitted value") {
  for (const auto& [name, g] : mats::all()) {
    Rng rng(101);
    std::vector<IndexSet> special = g->special_subsets();
    for (int t = 0; t < 40; ++t) {
      WeylWord w = rand_word(g, rng, 5);
      CHECK(word_from_json(g, word_to_json(w)) == w);

      Face f = make_face(rand_word(g, rng, 4), special[rng.below((int)special.size())]);
      CHECK(face_from_json(g, face_to_json(f)) == f);

      FacetLabel fac =
          make_facet(rand_word(g, rng, 4), IndexSet(static_cast<std::uint32_t>(rng.next() & g->all().bits())));
      CHECK(facet_from_json(g, facet_to_json(fac)) == fac);

      FaceMonoidElement x = make_element(rand_word(g, rng, 4), f, rand_word(g, rng, 4));
      CHECK(element_from_json(g, element_to_json(x)) == x);

      ComplexElement c = make_complex(rand_word(g, rng, 4),
                                      IndexSet(static_cast<std::uint32_t>(rng.next() & g->all().bits())));
      CHECK(complex_from_json(g, complex_to_json(c)) == c);
    }

    for (const ConeProfile& p : sample_points(g, 103, 25, SampleRegion::anywhere())) {
      ConeProfile q = profile_from_json(g, profile_to_json(p));
      CHECK(q == p);
    }
  }
}

TEST_CASE("rational strings") {
  CHECK(rational_to_string(Rational(3, 2)) == "3/2");
  CHECK(rational_to_string(Rational(-4, 2)) == "-2");
  CHECK(rational_from_string("7/3") == Rational(7, 3));
  CHECK(rational_from_string("-5") == Rational(-5));
  CHECK_THROWS_WITH_AS(rational_from_string("x"), doctest::Contains("ParseError"), Error);
}
