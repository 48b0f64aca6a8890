#include <doctest.h>

#include "facemonoid/monoid.hpp"
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

FaceMonoidElement rand_elem(GcmPtr g, Rng& rng, const std::vector<IndexSet>& special, int len) {
  Face f = make_face(rand_word(g, rng, len), special[rng.below((int)special.size())]);
  return make_element(rand_word(g, rng, len), f, rand_word(g, rng, len));
}

FaceMonoidElement e_of(GcmPtr g, IndexSet theta) {
  return idempotent_of(make_face(identity(g), theta));
}

}  // namespace

TEST_CASE("make_element canonicalizes into normal form I") {
  GcmPtr aff = mats::aff();
  CHECK(make_element(identity(aff), top_face(aff), identity(aff)) == unit_element(aff));

  // s1 in Z_W(R(I)) is absorbed
  FaceMonoidElement x =
      make_element(normalize(aff, {0}), make_face(identity(aff), IndexSet{0, 1}), identity(aff));
  CHECK(x == e_of(aff, IndexSet{0, 1}));

  GcmPtr dec = mats::dec();
  FaceMonoidElement y =
      make_element(identity(dec), make_face(identity(dec), IndexSet{0, 1}), normalize(dec, {2}));
  CHECK(y.left.letters == std::vector<int>{2});
  CHECK(y.theta == IndexSet{0, 1});
  CHECK(y.right.is_identity());
}

TEST_CASE("mul: unit laws and idempotent fusion") {
  GcmPtr aff = mats::aff();
  FaceMonoidElement one = unit_element(aff);
  FaceMonoidElement eI = e_of(aff, IndexSet{0, 1});
  CHECK(mul(one, eI) == eI);
  CHECK(mul(eI, one) == eI);
  CHECK(mul(eI, from_word(normalize(aff, {0}))) == eI);

  GcmPtr hyp = mats::hyp();
  FaceMonoidElement e12 = e_of(hyp, IndexSet{0, 1});
  FaceMonoidElement conj =
      make_element(identity(hyp), make_face(normalize(hyp, {2}), IndexSet{0, 1}), identity(hyp));
  CHECK(mul(e12, conj) == e_of(hyp, IndexSet{0, 1, 2}));
}

TEST_CASE("inverse: formula and spec case") {
  GcmPtr hyp = mats::hyp();
  CHECK(inverse(unit_element(hyp)) == unit_element(hyp));
  FaceMonoidElement e12 = e_of(hyp, IndexSet{0, 1});
  CHECK(inverse(e12) == e12);

  FaceMonoidElement x =
      make_element(normalize(hyp, {2}), make_face(identity(hyp), IndexSet{0, 1}), identity(hyp));
  FaceMonoidElement want = make_element(
      identity(hyp), make_face(identity(hyp), IndexSet{0, 1}), inverse(normalize(hyp, {2})));
  CHECK(inverse(x) == want);
}

TEST_CASE("normal forms I and II") {
  GcmPtr dec = mats::dec();
  NormalForm u = normal_form(unit_element(dec), NormalFormVariant::I);
  CHECK(u.w1.is_identity());
  CHECK(u.theta.empty());
  CHECK(u.w2.is_identity());

  FaceMonoidElement x =
      make_element(identity(dec), make_face(identity(dec), IndexSet{0, 1}), normalize(dec, {2}));
  REQUIRE(x.left.letters == std::vector<int>{2});
  NormalForm nf2 = normal_form(x, NormalFormVariant::II);
  CHECK(nf2.w1.is_identity());
  CHECK(nf2.theta == IndexSet{0, 1});
  CHECK(nf2.w2.letters == std::vector<int>{2});

  for (IndexSet theta : {IndexSet{0, 1}}) {
    NormalForm e1 = normal_form(e_of(dec, theta), NormalFormVariant::I);
    NormalForm e2 = normal_form(e_of(dec, theta), NormalFormVariant::II);
    CHECK((e1.w1.is_identity() && e1.w2.is_identity()));
    CHECK((e2.w1.is_identity() && e2.w2.is_identity()));
  }

  // normal form II satisfies its membership constraints on random elements
  for (const auto& [name, g] : mats::all()) {
    Rng rng(43);
    std::vector<IndexSet> special = g->special_subsets();
    for (int t = 0; t < 80; ++t) {
      FaceMonoidElement x2 = rand_elem(g, rng, special, 5);
      NormalForm nf = normal_form(x2, NormalFormVariant::II);
      IndexSet stab = nf.theta | g->orthogonal(nf.theta);
      CHECK((right_descents(nf.w1) & stab).empty());
      CHECK((left_descents(nf.w2) & nf.theta).empty());
      // same element: rebuild through make_element
      CHECK(make_element(nf.w1, make_face(identity(g), nf.theta), nf.w2) == x2);
    }
  }
}

TEST_CASE("idempotents") {
  GcmPtr hyp = mats::hyp();
  CHECK(is_idempotent(unit_element(hyp)));

  Face f = make_face(normalize(hyp, {2}), IndexSet{0, 1});
  FaceMonoidElement e = idempotent_of(f);
  CHECK(e.left.letters == std::vector<int>{2});
  CHECK(is_idempotent(e));

  FaceMonoidElement x =
      make_element(identity(hyp), make_face(identity(hyp), IndexSet{0, 1}), normalize(hyp, {2}));
  CHECK_FALSE(is_idempotent(x));
}

TEST_CASE("in_parabolic: spec cases") {
  GcmPtr hyp = mats::hyp();
  for (std::uint32_t jm = 0; jm <= 7; ++jm) CHECK(in_parabolic(unit_element(hyp), IndexSet(jm)));

  FaceMonoidElement e12 = e_of(hyp, IndexSet{0, 1});
  CHECK(in_parabolic(e12, IndexSet{0, 1}));
  CHECK_FALSE(in_parabolic(e12, IndexSet{0, 2}));

  FaceMonoidElement x =
      make_element(normalize(hyp, {2}), make_face(identity(hyp), IndexSet{0, 1}), identity(hyp));
  CHECK_FALSE(in_parabolic(x, IndexSet{0, 1}));
}

TEST_CASE("parabolic submonoid laws on enumerated elements") {
  GcmPtr hyp = mats::hyp();
  std::vector<FaceMonoidElement> elems = enumerate_monoid(hyp, 3);
  std::vector<IndexSet> subsets;
  for (std::uint32_t m = 0; m <= 7; ++m) subsets.push_back(IndexSet(m));

  for (IndexSet j : subsets) {
    // closed under multiplication
    std::vector<FaceMonoidElement> members;
    for (const auto& x : elems)
      if (in_parabolic(x, j)) members.push_back(x);
    for (size_t a = 0; a < members.size(); a += 3)
      for (size_t b = 0; b < members.size(); b += 3)
        CHECK(in_parabolic(mul(members[a], members[b]), j));

    for (IndexSet k : subsets) {
      // W^_J n W^_K = W^_{J n K}
      for (const auto& x : elems)
        CHECK((in_parabolic(x, j) && in_parabolic(x, k)) == in_parabolic(x, j & k));
      // W^_J <= W^_K iff J <= K
      bool contained = true;
      for (const auto& x : elems)
        if (in_parabolic(x, j) && !in_parabolic(x, k)) contained = false;
      CHECK(contained == j.subset_of(k));
    }
  }
}

TEST_CASE("unit regularity: x = w e = e' w") {
  for (const auto& [name, g] : mats::all()) {
    for (const FaceMonoidElement& x : enumerate_monoid(g, 3)) {
      GroupFacePair p = pair_form(x);
      CHECK(mul(from_word(p.group), idempotent_of(p.face)) == x);
      Face left_face = translate(p.group, p.face);
      CHECK(mul(idempotent_of(left_face), from_word(p.group)) == x);
    }
  }
}

TEST_CASE("orbit type and unit group") {
  GcmPtr hyp = mats::hyp();
  CHECK(orbit_type(unit_element(hyp)).empty());
  CHECK(orbit_type(e_of(hyp, IndexSet{0, 1})) == IndexSet{0, 1});
  FaceMonoidElement x =
      make_element(normalize(hyp, {2}), make_face(identity(hyp), IndexSet{0, 1}), identity(hyp));
  CHECK(orbit_type(x) == IndexSet{0, 1});

  // unit group multiplication = W multiplication
  Rng rng(47);
  for (int t = 0; t < 50; ++t) {
    WeylWord a = rand_word(hyp, rng, 5), b = rand_word(hyp, rng, 5);
    CHECK(mul(from_word(a), from_word(b)) == from_word(mul(a, b)));
  }
}

TEST_CASE("enumerate: counts from the spec") {
  CHECK(enumerate_monoid(mats::fin(), 6).size() == 6);
  CHECK(enumerate_monoid(mats::fin(), 3).size() == 6);

  std::vector<FaceMonoidElement> aff0 = enumerate_monoid(mats::aff(), 0);
  CHECK(aff0.size() == 2);  // e[X] = 1 and e[R(I)]

  CHECK(enumerate_monoid(mats::aff(), 1).size() == 4);

  // no duplicates, all in canonical form
  std::vector<FaceMonoidElement> hyp2 = enumerate_monoid(mats::hyp(), 2);
  for (size_t i = 1; i < hyp2.size(); ++i) CHECK(!(hyp2[i - 1] == hyp2[i]));
  for (const auto& x : hyp2) {
    NormalForm nf = normal_form(x, NormalFormVariant::I);
    CHECK(make_element(nf.w1, make_face(identity(x.gcm()), nf.theta), nf.w2) == x);
  }
}
