#include <doctest.h>

#include "facemonoid/rng.hpp"
#include "facemonoid/verify.hpp"
#include "oracles.hpp"

using namespace fm;
namespace mats = fm::verify::mats;

namespace {

WeylWord rand_word(GcmPtr g, Rng& rng, int max_len) {
  std::vector<int> letters;
  for (int k = rng.range(0, max_len); k > 0; --k) letters.push_back(rng.below(g->rank()));
  return normalize(g, letters);
}

}  // namespace

TEST_CASE("normalize: involutions, braid moves, infinite dihedral") {
  GcmPtr fin = mats::fin();
  CHECK(normalize(fin, {0, 0}).letters.empty());
  CHECK(normalize(fin, {1, 0, 1}).letters == std::vector<int>{0, 1, 0});  // s2s1s2 = s1s2s1

  GcmPtr aff = mats::aff();
  CHECK(normalize(aff, {0, 1, 0, 1}).letters == std::vector<int>{0, 1, 0, 1});

  CHECK_THROWS_WITH_AS(normalize(fin, {2}), doctest::Contains("BadGenerator"), Error);
}

TEST_CASE("mul, length, descents") {
  GcmPtr aff = mats::aff();
  WeylWord u = normalize(aff, {0});
  CHECK(mul(u, u).is_identity());

  WeylWord w = mul(normalize(aff, {0, 1}), normalize(aff, {0}));
  CHECK(w.letters == std::vector<int>{0, 1, 0});
  CHECK(right_descents(w) == IndexSet{0});
  CHECK(left_descents(identity(aff)).empty());

  GcmPtr fin = mats::fin();
  CHECK_THROWS_WITH_AS(mul(normalize(fin, {0}), normalize(aff, {0})),
                       doctest::Contains("MixedAmbient"), Error);
}

TEST_CASE("act_on_root") {
  GcmPtr aff = mats::aff();
  RootVec a1 = simple_root(*aff, 0);
  CHECK(act_on_root(normalize(aff, {0}), a1) == -a1);

  RootVec r = act_on_root(normalize(aff, {0}), simple_root(*aff, 1));
  CHECK(r(0) == 2);  // alpha_2 + 2 alpha_1
  CHECK(r(1) == 1);

  GcmPtr hyp = mats::hyp();
  RootVec h = act_on_root(normalize(hyp, {2}), simple_root(*hyp, 0));
  CHECK(h == RootVec(simple_root(*hyp, 0) + simple_root(*hyp, 2)));
}

TEST_CASE("support") {
  GcmPtr fin = mats::fin();
  CHECK(support(identity(fin)).empty());
  CHECK(support(normalize(fin, {0, 1, 0})) == IndexSet{0, 1});
  GcmPtr hyp = mats::hyp();
  CHECK(support(normalize(hyp, {2, 0})) == IndexSet{0, 2});
}

TEST_CASE("bruhat order: examples and oracle agreement") {
  GcmPtr aff = mats::aff();
  WeylWord e = identity(aff);
  WeylWord s1 = normalize(aff, {0});
  WeylWord s12 = normalize(aff, {0, 1});
  CHECK(bruhat_leq(e, s12));
  CHECK(bruhat_leq(s1, s12));
  CHECK_FALSE(bruhat_leq(normalize(aff, {1}), s1));
  CHECK(bruhat_leq(s12, s12));

  for (const auto& [name, g] : mats::all()) {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
      WeylWord u = rand_word(g, rng, 4);
      WeylWord w = rand_word(g, rng, 5);
      CHECK(bruhat_leq(u, w) == oracle::bruhat_leq(u, w));
      if (bruhat_leq(u, w)) CHECK(support(u).subset_of(support(w)));  // red is order preserving
    }
  }
}

TEST_CASE("coset decomposition") {
  GcmPtr fin = mats::fin();
  CosetPair p = coset_decompose(normalize(fin, {0, 1}), IndexSet{1}, Side::Right);
  CHECK(p.min.letters == std::vector<int>{0});
  CHECK(p.par.letters == std::vector<int>{1});

  WeylWord w = normalize(fin, {1, 0, 1});
  CosetPair q = coset_decompose(w, IndexSet{0, 1}, Side::Right);
  CHECK(q.min.is_identity());
  CHECK(q.par == w);

  CosetPair r = coset_decompose(w, IndexSet{}, Side::Right);
  CHECK(r.min == w);
  CHECK(r.par.is_identity());

  for (const auto& [name, g] : mats::all()) {
    Rng rng(13);
    for (int t = 0; t < 80; ++t) {
      WeylWord v = rand_word(g, rng, 6);
      IndexSet j(static_cast<std::uint32_t>(rng.next() & g->all().bits()));
      for (Side side : {Side::Left, Side::Right}) {
        CosetPair c = coset_decompose(v, j, side);
        CHECK(in_standard_parabolic(c.par, j));
        WeylWord back = side == Side::Right ? mul(c.min, c.par) : mul(c.par, c.min);
        CHECK(back == v);
        CHECK(length(c.min) + length(c.par) == length(v));
        if (side == Side::Right)
          CHECK((right_descents(c.min) & j).empty());
        else
          CHECK((left_descents(c.min) & j).empty());
        // decomposing the minimal part again is stable
        CHECK(coset_decompose(c.min, j, side).par.is_identity());
      }
    }
  }
}

TEST_CASE("double coset decomposition: examples and bfs oracle") {
  GcmPtr hyp = mats::hyp();
  IndexSet k12{0, 1};
  DoubleCosetTriple d = double_coset_decompose(normalize(hyp, {2}), k12, k12);
  CHECK(d.a.is_identity());
  CHECK(d.x.letters == std::vector<int>{2});
  CHECK(d.b.is_identity());

  WeylWord w = normalize(hyp, {0});
  DoubleCosetTriple dw = double_coset_decompose(w, k12, k12);
  CHECK(dw.a == w);
  CHECK(dw.x.is_identity());
  CHECK(dw.b.is_identity());

  DoubleCosetTriple d2 = double_coset_decompose(normalize(hyp, {0, 2}), k12, k12);
  CHECK(d2.a.letters == std::vector<int>{0});
  CHECK(d2.x.letters == std::vector<int>{2});
  CHECK(d2.b.is_identity());

  for (const auto& [name, g] : mats::all()) {
    Rng rng(17);
    for (int t = 0; t < 60; ++t) {
      WeylWord v = rand_word(g, rng, 5);
      IndexSet k(static_cast<std::uint32_t>(rng.next() & g->all().bits()));
      IndexSet j(static_cast<std::uint32_t>(rng.next() & g->all().bits()));
      DoubleCosetTriple t3 = double_coset_decompose(v, k, j);
      CHECK(in_standard_parabolic(t3.a, k));
      CHECK(in_standard_parabolic(t3.b, j));
      CHECK((left_descents(t3.x) & k).empty());
      CHECK((right_descents(t3.x) & j).empty());
      CHECK(mul(mul(t3.a, t3.x), t3.b) == v);
      CHECK(length(t3.a) + length(t3.x) + length(t3.b) == length(v));
      CHECK(t3.x == oracle::min_double_coset(v, k, j));
    }
  }
}

TEST_CASE("five factor decomposition: spec cases") {
  GcmPtr hyp = mats::hyp();
  IndexSet k12{0, 1};

  FiveFactorParts f = five_factor_decompose(normalize(hyp, {2}), k12, IndexSet{});
  CHECK(f.a.is_identity());
  CHECK(f.x.is_identity());
  CHECK(f.c1.letters == std::vector<int>{2});
  CHECK(f.c2.is_identity());

  FiveFactorParts f2 = five_factor_decompose(normalize(hyp, {2, 0}), k12, IndexSet{2});
  CHECK(f2.a.is_identity());
  CHECK(f2.x.is_identity());
  CHECK(f2.c1 == normalize(hyp, {2, 0}));
  CHECK(f2.c2.is_identity());

  FiveFactorParts f3 = five_factor_decompose(identity(hyp), k12, IndexSet{0, 1});
  CHECK(f3.a.is_identity());
  CHECK(f3.x.is_identity());
  CHECK(f3.c1.is_identity());
  CHECK(f3.c2.is_identity());
}

TEST_CASE("five factor decomposition: membership properties") {
  for (const auto& [name, g] : mats::all()) {
    Rng rng(19);
    for (int t = 0; t < 120; ++t) {
      WeylWord v = rand_word(g, rng, 6);
      IndexSet k(static_cast<std::uint32_t>(rng.next() & g->all().bits()));
      IndexSet j(static_cast<std::uint32_t>(rng.next() & g->all().bits()));
      IndexSet jinf = g->decompose(j).nonfinite;
      IndexSet j0 = j - jinf;
      IndexSet big = jinf | g->orthogonal(jinf);

      FiveFactorParts f = five_factor_decompose(v, k, j);
      CHECK(in_standard_parabolic(f.a, k));
      CHECK((left_descents(f.x) & k).empty());
      CHECK((right_descents(f.x) & big).empty());
      CHECK(in_standard_parabolic(f.c1, g->orthogonal(jinf)));
      CHECK((right_descents(f.c1) & j0).empty());
      CHECK(in_standard_parabolic(f.c2, j));
      WeylWord xc1 = mul(f.x, f.c1);
      CHECK((left_descents(xc1) & k).empty());
      CHECK((right_descents(xc1) & j).empty());
      CHECK((left_descents(mul(xc1, f.c2)) & k).empty());
      CHECK(mul(mul(f.a, f.x), mul(f.c1, f.c2)) == v);
      CHECK(length(f.a) + length(f.x) + length(f.c1) + length(f.c2) == length(v));
    }
  }
}

TEST_CASE("random word algebra: associativity, inverses, exchange") {
  for (const auto& [name, g] : mats::all()) {
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
      WeylWord a = rand_word(g, rng, 5);
      WeylWord b = rand_word(g, rng, 5);
      WeylWord c = rand_word(g, rng, 5);
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      CHECK(mul(a, inverse(a)).is_identity());
      CHECK(normalize(g, a.letters) == a);  // idempotent normalization

      // l(w s_i) = l(w) +- 1, with -1 exactly on right descents
      int i = rng.below(g->rank());
      WeylWord wi = mul_gen(a, i);
      CHECK(length(wi) == length(a) + (is_right_descent(a, i) ? -1 : 1));

      // real-root sign dichotomy
      RootVec r = act_on_root(a, simple_root(*g, rng.below(g->rank())));
      bool pos = true, neg = true;
      for (int q = 0; q < g->rank(); ++q) {
        if (r(q) > 0) neg = false;
        if (r(q) < 0) pos = false;
      }
      CHECK((pos || neg));
      CHECK(pos != neg);
    }
  }
}
