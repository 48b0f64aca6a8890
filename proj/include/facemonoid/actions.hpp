#pragma once

#include "facemonoid/cone.hpp"
#include "facemonoid/monoid.hpp"

namespace fm {

// Coset sigma W_J of the Coxeter complex, rep minimal in W^{jtype}.
// Order: c1 <= c2 iff c1 contains c2 as a coset.
struct ComplexElement {
  WeylWord rep;
  IndexSet jtype;

  bool operator==(const ComplexElement& o) const { return jtype == o.jtype && rep == o.rep; }
  const GcmPtr& gcm() const { return rep.gcm; }
};

ComplexElement make_complex(const WeylWord& w, IndexSet jtype);
bool complex_leq(const ComplexElement& c1, const ComplexElement& c2);
bool complex_less_for_sort(const ComplexElement& a, const ComplexElement& b);

enum class ActionKind { Bad, Good1, Good2 };
const char* action_kind_name(ActionKind k);

// The three extensions of the W-action on the complex to the face monoid.
// With x = s1 e[R(T)] s2 in normal form I and c = tau W_J:
//   Bad:   s1 s2 tau W_J if T <= J and s2 tau in W_{T^perp} W_J, else W_I.
//   Good1: decompose s2 tau = a1 a2 y c' (a1 in W_{T^perp}, a2 in W_T,
//          y in ^{T u T^perp}W^J, c' in W_J); result s1 a1 W_{T u J u red(y)}.
//   Good2: five-factor s2 tau = a1 a2 x' c1 c2 against (T u T^perp, J);
//          Xi = T u J^inf u red(x'); result s1 a1 W_{Xi u (Xi^perp n c1 J^0)}.
ComplexElement act(ActionKind kind, const FaceMonoidElement& x, const ComplexElement& c);

// (sigma e[R]) lambda = sigma lambda if lambda in R, else 0.  Throws
// NotInCone when p cannot be certified inside X within the budget.
ConeProfile act_on_point(const FaceMonoidElement& x, const ConeProfile& p, int budget = 10000);

// Facet of the Looijenga cone projection p_{R(theta)}: decompose
// tau = a y c against (theta^perp, j) and label (theta, a, theta^perp n yJ).
struct LooFacetLabel {
  IndexSet base_theta;
  WeylWord rep;     // minimal in W_{theta^perp}^{jtype}
  IndexSet jtype;   // subset of theta^perp with jtype = jtype^0

  bool operator==(const LooFacetLabel& o) const {
    return base_theta == o.base_theta && jtype == o.jtype && rep == o.rep;
  }
};
LooFacetLabel looijenga_project(IndexSet theta, const WeylWord& tau, IndexSet j);

struct CheckReport {
  int cases = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

// Both directions of Stab(W_j) = W^_j over the elements enumerable at
// max_len: members fix ((), j), fixers are members.
CheckReport stabilizer_check(GcmPtr g, ActionKind kind, IndexSet j, int max_len);

// Random comparable pairs (z W_J <= z W_K with K <= J) against random
// elements; reports order violations.
CheckReport order_preservation_check(GcmPtr g, ActionKind kind, int samples, std::uint64_t seed);

// e[R(T)] acting on sigma W_J lands on a standard parabolic for every
// special T, J <= I, sigma in ^{T u T^perp}W^J with l(sigma) <= max_len.
bool ab12_criterion_check(GcmPtr g, ActionKind kind, int max_len);

// e[R(J^inf)] fixes W_J for all J, and the bounded restatement of the
// equivalence with Stab(W_J) >= W^_J.
bool acneu_check(GcmPtr g, ActionKind kind, int max_len);

}  // namespace fm
