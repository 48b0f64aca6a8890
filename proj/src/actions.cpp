#include "facemonoid/actions.hpp"

#include <algorithm>

#include "facemonoid/rng.hpp"

namespace fm {

namespace {

std::string word_str(const WeylWord& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i)
    s += (i ? "." : "") + std::string("s") + std::to_string(w.letters[i] + 1);
  return s;
}

std::string describe(const ComplexElement& c) { return word_str(c.rep) + " W_" + c.jtype.str(); }

std::string describe(const FaceMonoidElement& x) {
  return word_str(x.left) + " e" + x.theta.str() + " " + word_str(x.right);
}

// a1 from the commuting split W_{theta u theta^perp} = W_{theta^perp} x W_theta.
WeylWord perp_part(const WeylWord& a, IndexSet theta) {
  return coset_decompose(a, theta, Side::Right).min;
}

}  // namespace

ComplexElement make_complex(const WeylWord& w, IndexSet jtype) {
  return ComplexElement{coset_decompose(w, jtype, Side::Right).min, jtype};
}

bool complex_leq(const ComplexElement& c1, const ComplexElement& c2) {
  require_same_ambient(*c1.gcm(), *c2.gcm());
  if (!c2.jtype.subset_of(c1.jtype)) return false;
  return in_standard_parabolic(mul(inverse(c1.rep), c2.rep), c1.jtype);
}

bool complex_less_for_sort(const ComplexElement& a, const ComplexElement& b) {
  if (a.jtype.bits() != b.jtype.bits()) return a.jtype.bits() < b.jtype.bits();
  return word_less(a.rep, b.rep);
}

const char* action_kind_name(ActionKind k) {
  switch (k) {
    case ActionKind::Bad: return "bad";
    case ActionKind::Good1: return "good1";
    case ActionKind::Good2: return "good2";
  }
  return "?";
}

ComplexElement act(ActionKind kind, const FaceMonoidElement& x, const ComplexElement& c) {
  require_same_ambient(*x.gcm(), *c.gcm());
  GcmPtr g = x.gcm();
  NormalForm nf = normal_form(x, NormalFormVariant::I);
  const IndexSet theta = nf.theta;
  const IndexSet perp = g->orthogonal(theta);
  const IndexSet stab = theta | perp;
  const IndexSet j = c.jtype;
  WeylWord w = mul(nf.w2, c.rep);  // s2 tau

  switch (kind) {
    case ActionKind::Bad: {
      if (theta.subset_of(j) && double_coset_decompose(w, perp, j).x.is_identity())
        return make_complex(mul(nf.w1, w), j);
      return make_complex(identity(g), g->all());
    }
    case ActionKind::Good1: {
      DoubleCosetTriple d = double_coset_decompose(w, stab, j);
      WeylWord a1 = perp_part(d.a, theta);
      return make_complex(mul(nf.w1, a1), theta | j | support(d.x));
    }
    case ActionKind::Good2: {
      FiveFactorParts ff = five_factor_decompose(w, stab, j);
      WeylWord a1 = perp_part(ff.a, theta);
      IndexSet jinf = g->decompose(j).nonfinite;
      IndexSet xi = theta | jinf | support(ff.x);
      IndexSet extra = transported_subset(g->orthogonal(xi), ff.c1, j - jinf);
      return make_complex(mul(nf.w1, a1), xi | extra);
    }
  }
  fail("BadKind", "unknown action kind");
}

ConeProfile act_on_point(const FaceMonoidElement& x, const ConeProfile& p, int budget) {
  GroupFacePair pf = pair_form(x);
  auto member = face_membership(p, pf.face, budget);
  if (!member) fail("NotInCone", "point could not be certified inside the Tits cone");
  if (!*member) return ConeProfile::make_apex(x.gcm()->rank());
  return act_on_profile(pf.group, p);
}

LooFacetLabel looijenga_project(IndexSet theta, const WeylWord& tau, IndexSet j) {
  GcmPtr g = tau.gcm;
  if (!g->is_special(theta)) fail("NotSpecial", "base type " + theta.str() + " is not special");
  if (!g->decompose(j).nonfinite.empty())
    fail("NotFiniteTypeJ", "facet type " + j.str() + " has non-finite components");
  IndexSet perp = g->orthogonal(theta);
  DoubleCosetTriple d = double_coset_decompose(tau, perp, j);  // tau = a y c
  IndexSet jt = transported_subset(perp, d.x, j);              // theta^perp n yJ
  return LooFacetLabel{theta, coset_decompose(d.a, jt, Side::Right).min, jt};
}

CheckReport stabilizer_check(GcmPtr g, ActionKind kind, IndexSet j, int max_len) {
  CheckReport rep;
  ComplexElement base = make_complex(identity(g), j);
  for (const FaceMonoidElement& x : enumerate_monoid(g, max_len)) {
    ++rep.cases;
    bool fixes = act(kind, x, base) == base;
    bool member = in_parabolic(x, j);
    if (fixes && !member)
      rep.counterexamples.push_back(describe(x) + " fixes W_" + j.str() + " but is not in W^_J");
    if (member && !fixes)
      rep.counterexamples.push_back(describe(x) + " lies in W^_J but moves W_" + j.str());
  }
  return rep;
}

CheckReport order_preservation_check(GcmPtr g, ActionKind kind, int samples, std::uint64_t seed) {
  CheckReport rep;
  Rng rng(seed);
  const int n = g->rank();
  std::vector<IndexSet> special = g->special_subsets();

  auto random_word = [&](int max_len) {
    std::vector<int> letters;
    for (int k = rng.range(0, max_len); k > 0; --k) letters.push_back(rng.below(n));
    return normalize(g, letters);
  };

  for (int s = 0; s < samples; ++s) {
    ++rep.cases;
    // comparable pair z W_J <= z W_K with K <= J
    IndexSet jset(static_cast<std::uint32_t>(rng.next() & g->all().bits()));
    IndexSet kset(static_cast<std::uint32_t>(rng.next() & jset.bits()));
    WeylWord z = random_word(6);
    ComplexElement c1 = make_complex(z, jset);
    ComplexElement c2 = make_complex(z, kset);

    IndexSet theta = special[rng.below(static_cast<int>(special.size()))];
    FaceMonoidElement x =
        make_element(random_word(4), make_face(random_word(4), theta), random_word(4));

    if (!complex_leq(act(kind, x, c1), act(kind, x, c2)))
      rep.counterexamples.push_back("case " + std::to_string(s) + ": " + describe(x) +
                                    " breaks order on " + describe(c1) + " <= " + describe(c2));
  }
  return rep;
}

bool ab12_criterion_check(GcmPtr g, ActionKind kind, int max_len) {
  std::vector<WeylWord> words = enumerate_weyl(g, max_len);
  const std::uint32_t top = g->all().bits();
  for (IndexSet theta : g->special_subsets()) {
    IndexSet stab = theta | g->orthogonal(theta);
    FaceMonoidElement e = idempotent_of(make_face(identity(g), theta));
    for (std::uint32_t jm = 0;; ++jm) {
      IndexSet j(jm);
      for (const WeylWord& sigma : words) {
        if (!(left_descents(sigma) & stab).empty()) continue;
        if (!(right_descents(sigma) & j).empty()) continue;
        if (!act(kind, e, make_complex(sigma, j)).rep.is_identity()) return false;
      }
      if (jm == top) break;
    }
  }
  return true;
}

bool acneu_check(GcmPtr g, ActionKind kind, int max_len) {
  const std::uint32_t top = g->all().bits();
  // (ii): e[R(J^inf)] fixes W_J for every J
  for (std::uint32_t jm = 0;; ++jm) {
    IndexSet j(jm);
    FaceMonoidElement e = idempotent_of(make_face(identity(g), g->decompose(j).nonfinite));
    ComplexElement base = make_complex(identity(g), j);
    if (!(act(kind, e, base) == base)) return false;
    if (jm == top) break;
  }
  // (ii) => (iii), bounded: members of W^_J fix W_J
  std::vector<FaceMonoidElement> elems = enumerate_monoid(g, max_len);
  for (std::uint32_t jm = 0;; ++jm) {
    IndexSet j(jm);
    ComplexElement base = make_complex(identity(g), j);
    for (const FaceMonoidElement& x : elems)
      if (in_parabolic(x, j) && !(act(kind, x, base) == base)) return false;
    if (jm == top) break;
  }
  return true;
}

}  // namespace fm
