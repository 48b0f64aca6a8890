#include "facemonoid/verify.hpp"

#include <algorithm>
#include <set>

#include "facemonoid/actions.hpp"
#include "facemonoid/rng.hpp"

namespace fm::verify {

namespace mats {

namespace {
GcmPtr build(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const int n = static_cast<int>(rows.size());
  Gcm::Matrix a(n, n);
  int i = 0;
  for (auto& row : rows) {
    int j = 0;
    for (auto v : row) a(i, j++) = v;
    ++i;
  }
  return Gcm::validate(a);
}
}  // namespace

GcmPtr fin() {
  static GcmPtr g = build({{2, -1}, {-1, 2}});
  return g;
}
GcmPtr aff() {
  static GcmPtr g = build({{2, -2}, {-2, 2}});
  return g;
}
GcmPtr ind2() {
  static GcmPtr g = build({{2, -5}, {-1, 2}});
  return g;
}
GcmPtr hyp() {
  static GcmPtr g = build({{2, -2, -1}, {-2, 2, 0}, {-1, 0, 2}});
  return g;
}
GcmPtr dec() {
  static GcmPtr g = build({{2, -2, 0}, {-2, 2, 0}, {0, 0, 2}});
  return g;
}
std::vector<Named> all() {
  return {{"M_fin", fin()}, {"M_aff", aff()}, {"M_ind2", ind2()}, {"M_hyp", hyp()}, {"M_dec", dec()}};
}

}  // namespace mats

namespace {

struct Case {
  SuiteReport* rep;
  std::string where;

  void check(bool ok, const std::string& what) {
    ++rep->cases;
    if (!ok) rep->failures.push_back(where + ": " + what);
  }
};

WeylWord random_word(GcmPtr g, Rng& rng, int max_len) {
  std::vector<int> letters;
  for (int k = rng.range(0, max_len); k > 0; --k) letters.push_back(rng.below(g->rank()));
  return normalize(g, letters);
}

Face random_face(GcmPtr g, Rng& rng, const std::vector<IndexSet>& special, int max_len) {
  return make_face(random_word(g, rng, max_len), special[rng.below(static_cast<int>(special.size()))]);
}

FaceMonoidElement random_element(GcmPtr g, Rng& rng, const std::vector<IndexSet>& special,
                                 int max_len) {
  return make_element(random_word(g, rng, max_len), random_face(g, rng, special, max_len),
                      random_word(g, rng, max_len));
}

std::vector<Face> small_faces(GcmPtr g, int rep_len) {
  std::vector<Face> out;
  for (IndexSet theta : g->special_subsets())
    for (const WeylWord& w : enumerate_weyl(g, rep_len)) {
      Face f = make_face(w, theta);
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

}  // namespace

// 1. special_subsets on the five desk matrices, derived independently by the
// exhaustive subset classification built into Gcm.
SuiteReport suite_special_subsets(const Params&) {
  SuiteReport rep{"special", 0, {}};
  auto expect = [&rep](const char* name, GcmPtr g, std::vector<IndexSet> want) {
    Case c{&rep, name};
    std::vector<IndexSet> got = g->special_subsets();
    c.check(got == want, "special subsets mismatch");
  };
  expect("M_fin", mats::fin(), {IndexSet{}});
  expect("M_aff", mats::aff(), {IndexSet{}, IndexSet{0, 1}});
  expect("M_ind2", mats::ind2(), {IndexSet{}, IndexSet{0, 1}});
  expect("M_hyp", mats::hyp(), {IndexSet{}, IndexSet{0, 1}, IndexSet{0, 1, 2}});
  expect("M_dec", mats::dec(), {IndexSet{}, IndexSet{0, 1}});
  return rep;
}

// 2. monoid axioms on random triples
SuiteReport suite_monoid_axioms(const Params& p) {
  SuiteReport rep{"monoid-axioms", 0, {}};
  for (const auto& [name, g] : mats::all()) {
    Rng rng(p.seed ^ 0xa1);
    std::vector<IndexSet> special = g->special_subsets();
    FaceMonoidElement one = unit_element(g);
    for (int t = 0; t < p.samples; ++t) {
      Case c{&rep, std::string(name) + " triple " + std::to_string(t)};
      FaceMonoidElement x = random_element(g, rng, special, 6);
      FaceMonoidElement y = random_element(g, rng, special, 6);
      FaceMonoidElement z = random_element(g, rng, special, 6);
      c.check(mul(mul(x, y), z) == mul(x, mul(y, z)), "associativity");
      c.check(mul(one, x) == x && mul(x, one) == x, "unit laws");
      FaceMonoidElement xi = inverse(x);
      c.check(mul(mul(x, xi), x) == x, "x x^inv x = x");
      c.check(mul(mul(xi, x), xi) == xi, "x^inv x x^inv = x^inv");
      c.check(inverse(xi) == x, "(x^inv)^inv = x");
      Face f1 = random_face(g, rng, special, 5);
      Face f2 = random_face(g, rng, special, 5);
      FaceMonoidElement e1 = idempotent_of(f1), e2 = idempotent_of(f2);
      FaceMonoidElement ef = mul(e1, e2);
      c.check(ef == mul(e2, e1) && ef == idempotent_of(face_meet(f1, f2)),
              "idempotents commute into the meet idempotent");
    }
  }
  return rep;
}

// 3. classical collapse: on finite type the monoid is the group
SuiteReport suite_classical_collapse(const Params& p) {
  SuiteReport rep{"classical-collapse", 0, {}};
  Case c{&rep, "M_fin"};
  GcmPtr g = mats::fin();
  std::vector<FaceMonoidElement> elems = enumerate_monoid(g, p.max_len);
  c.check(elems.size() == 6, "W^(A_2) has exactly 6 elements, got " + std::to_string(elems.size()));
  bool all_units = std::all_of(elems.begin(), elems.end(),
                               [](const FaceMonoidElement& x) { return x.is_unit(); });
  c.check(all_units, "all elements are units");
  for (const FaceMonoidElement& x : elems)
    for (const FaceMonoidElement& y : elems) {
      ++rep.cases;
      FaceMonoidElement m = mul(x, y);
      WeylWord w = mul(mul(x.left, x.right), mul(y.left, y.right));
      if (!(m == from_word(w)))
        rep.failures.push_back("M_fin: monoid product disagrees with group product");
    }
  return rep;
}

// 4. lattice laws on random faces
SuiteReport suite_lattice(const Params& p) {
  SuiteReport rep{"lattice", 0, {}};
  const int pairs = 500;
  for (const auto& [name, g] : mats::all()) {
    Rng rng(p.seed ^ 0xa4);
    std::vector<IndexSet> special = g->special_subsets();
    for (int t = 0; t < pairs; ++t) {
      Case c{&rep, std::string(name) + " case " + std::to_string(t)};
      Face f = random_face(g, rng, special, 5);
      Face h = random_face(g, rng, special, 5);
      Face k = random_face(g, rng, special, 5);
      c.check(face_meet(f, f) == f && face_join(f, f) == f, "idempotence");
      c.check(face_meet(f, h) == face_meet(h, f), "meet commutes");
      c.check(face_join(f, h) == face_join(h, f), "join commutes");
      c.check(face_meet(face_meet(f, h), k) == face_meet(f, face_meet(h, k)), "meet associates");
      c.check(face_join(face_join(f, h), k) == face_join(f, face_join(h, k)), "join associates");
      c.check(face_meet(f, face_join(f, h)) == f && face_join(f, face_meet(f, h)) == f,
              "absorption");
      bool le = face_contains(f, h);
      c.check(le == (face_meet(f, h) == h), "containment iff meet");
      c.check(le == (face_join(f, h) == f), "containment iff join");
    }
  }
  return rep;
}

// 5. geometric oracle agreement for the meet
SuiteReport suite_oracle_meet(const Params& p) {
  SuiteReport rep{"oracle-meet", 0, {}};
  const int pairs = 200, samples = 50;
  std::vector<mats::Named> geo = {{"M_aff", mats::aff()}, {"M_hyp", mats::hyp()}, {"M_dec", mats::dec()}};
  for (const auto& [name, g] : geo) {
    Rng rng(p.seed ^ 0xa5);
    std::vector<IndexSet> special = g->special_subsets();
    for (int t = 0; t < pairs; ++t) {
      Case c{&rep, std::string(name) + " pair " + std::to_string(t)};
      Face f1 = random_face(g, rng, special, 5);
      Face f2 = random_face(g, rng, special, 5);
      MeetCheckResult r = oracle_meet_check(f1, f2, samples, rng.next(), p.budget);
      c.check(r.violations == 0, "sampled containment violated");
      c.check(r.unknowns == 0, "oracle returned Unknown");
    }
  }
  return rep;
}

// 6. action laws, stabilizers, AB12 and ACneu for all three actions
SuiteReport suite_actions(const Params& p) {
  SuiteReport rep{"actions", 0, {}};
  const ActionKind kinds[] = {ActionKind::Bad, ActionKind::Good1, ActionKind::Good2};
  for (const auto& [name, g] : mats::all()) {
    std::vector<IndexSet> special = g->special_subsets();
    for (ActionKind kind : kinds) {
      std::string where = std::string(name) + " " + action_kind_name(kind);
      Rng rng(p.seed ^ 0xa6);
      for (int t = 0; t < p.samples; ++t) {
        Case c{&rep, where + " case " + std::to_string(t)};
        FaceMonoidElement x = random_element(g, rng, special, 4);
        FaceMonoidElement y = random_element(g, rng, special, 4);
        ComplexElement cx = make_complex(random_word(g, rng, 5),
                                         IndexSet(static_cast<std::uint32_t>(rng.next() & g->all().bits())));
        c.check(act(kind, x, act(kind, y, cx)) == act(kind, mul(x, y), cx), "action law");
        c.check(act(kind, unit_element(g), cx) == cx, "unit acts trivially");
      }
      const std::uint32_t top = g->all().bits();
      for (std::uint32_t jm = 0;; ++jm) {
        Case c{&rep, where + " J=" + IndexSet(jm).str()};
        CheckReport sc = stabilizer_check(g, kind, IndexSet(jm), p.max_len);
        c.check(sc.ok(), sc.counterexamples.empty() ? "" : sc.counterexamples.front());
        if (jm == top) break;
      }
      Case c{&rep, where};
      c.check(ab12_criterion_check(g, kind, p.max_len), "AB12 standard-parabolic criterion");
      c.check(acneu_check(g, kind, p.max_len), "ACneu equivalences");
    }
  }
  return rep;
}

// 7. order preservation: good actions clean, bad action provably not
SuiteReport suite_order(const Params& p) {
  SuiteReport rep{"order", 0, {}};
  for (const auto& [name, g] : mats::all())
    for (ActionKind kind : {ActionKind::Good1, ActionKind::Good2}) {
      Case c{&rep, std::string(name) + " " + action_kind_name(kind)};
      CheckReport r = order_preservation_check(g, kind, p.samples, p.seed ^ 0xa7);
      c.check(r.ok(), r.counterexamples.empty() ? "order violated" : r.counterexamples.front());
    }

  {
    GcmPtr g = mats::hyp();
    Case c{&rep, "M_hyp bad"};
    CheckReport r = order_preservation_check(g, ActionKind::Bad, p.samples, p.seed ^ 0xa7);
    c.check(!r.ok(), "bad action unexpectedly preserved order on every sampled pair");

    // the exact counterexample: W_{1,2} <= W_{} but images W_{1,2} and W_I flip
    FaceMonoidElement x = idempotent_of(make_face(identity(g), IndexSet{0, 1}));
    ComplexElement lo = make_complex(identity(g), IndexSet{0, 1});
    ComplexElement hi = make_complex(identity(g), IndexSet{});
    c.check(complex_leq(lo, hi), "W_{1,2} <= W_{} in the complex order");
    ComplexElement img_hi = act(ActionKind::Bad, x, hi);
    ComplexElement img_lo = act(ActionKind::Bad, x, lo);
    c.check(img_hi == make_complex(identity(g), g->all()), "e[R({1,2})] sends W_{} to W_I");
    c.check(img_lo == lo, "e[R({1,2})] fixes W_{1,2}");
    c.check(!complex_leq(img_lo, img_hi), "image pair is no longer comparable");
  }
  return rep;
}

// 8. the two good actions differ exactly as predicted
SuiteReport suite_good1_vs_good2(const Params&) {
  SuiteReport rep{"good1-vs-good2", 0, {}};
  GcmPtr g = mats::hyp();
  Case c{&rep, "M_hyp"};
  FaceMonoidElement x = idempotent_of(make_face(identity(g), IndexSet{0, 1}));
  ComplexElement cx = make_complex(normalize(g, {2}), IndexSet{});
  c.check(act(ActionKind::Good1, x, cx) == make_complex(identity(g), IndexSet{0, 1, 2}),
          "good1 sends s3 W_{} to W_{1,2,3}");
  c.check(act(ActionKind::Good2, x, cx) == make_complex(identity(g), IndexSet{0, 1}),
          "good2 sends s3 W_{} to W_{1,2}");
  return rep;
}

// 9. the double-coset fusion identity behind the product formula
SuiteReport suite_fm1c(const Params& p) {
  SuiteReport rep{"fm1c", 0, {}};
  const int cases = 500;
  for (const auto& [name, g] : mats::all()) {
    Rng rng(p.seed ^ 0xa9);
    std::vector<IndexSet> special = g->special_subsets();
    for (int t = 0; t < cases; ++t) {
      Case c{&rep, std::string(name) + " case " + std::to_string(t)};
      IndexSet t1 = special[rng.below(static_cast<int>(special.size()))];
      IndexSet t2 = special[rng.below(static_cast<int>(special.size()))];
      WeylWord sigma =
          double_coset_decompose(random_word(g, rng, p.max_len), t1 | g->orthogonal(t1),
                                 t2 | g->orthogonal(t2))
              .x;
      FaceMonoidElement e1 = idempotent_of(make_face(identity(g), t1));
      FaceMonoidElement e2 = idempotent_of(make_face(identity(g), t2));
      FaceMonoidElement fused =
          idempotent_of(make_face(identity(g), t1 | t2 | support(sigma)));
      c.check(mul(e1, mul(from_word(sigma), e2)) == mul(fused, from_word(sigma)),
              "e[R(T1)] sigma e[R(T2)] = e[R(T1 u T2 u red sigma)] sigma");
    }
  }
  return rep;
}

// 10. stabilizer types against sampled geometry
SuiteReport suite_stabilizer_geometry(const Params& p) {
  SuiteReport rep{"stabilizer-geometry", 0, {}};
  const int points = 100;
  std::vector<mats::Named> geo = {{"M_aff", mats::aff()}, {"M_dec", mats::dec()}, {"M_hyp", mats::hyp()}};
  for (const auto& [name, g] : geo) {
    Rng rng(p.seed ^ 0xaa);
    for (const Face& f : small_faces(g, 2)) {
      StabilizerTypes st = stabilizer_types(f);
      std::vector<ConeProfile> pts =
          sample_points(g, rng.next(), points, SampleRegion::in_face(f));
      std::string where = std::string(name) + " face (" + f.theta.str() + ")";

      for (const WeylWord& u : enumerate_weyl(g, 4)) {
        if (!in_standard_parabolic(u, st.pointwise)) continue;
        WeylWord s = mul(mul(st.w, u), inverse(st.w));
        Case c{&rep, where};
        bool all_fixed = true;
        for (const ConeProfile& q : pts)
          if (!(act_on_profile(s, q) == q)) all_fixed = false;
        c.check(all_fixed, "pointwise stabilizer element moved a sampled profile");
      }
      for (const WeylWord& u : enumerate_weyl(g, 4)) {
        if (!in_standard_parabolic(u, st.setwise)) continue;
        WeylWord s = mul(mul(st.w, u), inverse(st.w));
        Case c{&rep, where};
        c.check(translate(s, f) == f, "setwise stabilizer element moved the face");
      }
    }
  }
  return rep;
}

std::vector<std::string> suite_names() {
  return {"special", "monoid-axioms", "classical-collapse", "lattice",       "oracle-meet",
          "actions", "order",         "good1-vs-good2",     "fm1c",          "stabilizer-geometry"};
}

SuiteReport run_suite(const std::string& name, const Params& p) {
  if (name == "special") return suite_special_subsets(p);
  if (name == "monoid-axioms") return suite_monoid_axioms(p);
  if (name == "classical-collapse") return suite_classical_collapse(p);
  if (name == "lattice") return suite_lattice(p);
  if (name == "oracle-meet") return suite_oracle_meet(p);
  if (name == "actions") return suite_actions(p);
  if (name == "order") return suite_order(p);
  if (name == "good1-vs-good2") return suite_good1_vs_good2(p);
  if (name == "fm1c") return suite_fm1c(p);
  if (name == "stabilizer-geometry") return suite_stabilizer_geometry(p);
  fail("UnknownSuite", "no suite named " + name);
}

std::vector<SuiteReport> run_all(const Params& p) {
  std::vector<SuiteReport> out;
  for (const std::string& n : suite_names()) out.push_back(run_suite(n, p));
  return out;
}

}  // namespace fm::verify
