#pragma once

#include "facemonoid/face.hpp"

namespace fm {

// Element of the face monoid W^ = (W x| Fa(X)) / ~ in normal form I:
// left * e[R(theta)] * right with theta special, left in W^theta and
// right in ^{theta u theta^perp}W.  Unit-group elements carry theta = {} and
// are stored with left = 1 and the W-element in `right`.  Equality is field
// equality.
struct FaceMonoidElement {
  WeylWord left;
  IndexSet theta;
  WeylWord right;

  bool operator==(const FaceMonoidElement& o) const {
    return theta == o.theta && left == o.left && right == o.right;
  }
  const GcmPtr& gcm() const { return left.gcm; }
  bool is_unit() const { return theta.empty(); }
};

FaceMonoidElement unit_element(GcmPtr g);
FaceMonoidElement from_word(const WeylWord& w);

// Canonical form of w1 * e[f] * w2.
FaceMonoidElement make_element(const WeylWord& w1, const Face& f, const WeylWord& w2);

// Every element factors uniquely (up to the pointwise stabilizer) as
// g * e[F]; this is the working coordinate system for mul/inverse/actions.
struct GroupFacePair {
  WeylWord group;
  Face face;
};
GroupFacePair pair_form(const FaceMonoidElement& x);
FaceMonoidElement from_pair(const WeylWord& g, const Face& f);

// (sigma, R)(tau, S) = (sigma tau, tau^{-1} R n S).
FaceMonoidElement mul(const FaceMonoidElement& x, const FaceMonoidElement& y);

// Inverse-monoid inverse: (sigma e[R])^inv = e[R] sigma^{-1}.
FaceMonoidElement inverse(const FaceMonoidElement& x);

enum class NormalFormVariant { I, II };

struct NormalForm {
  WeylWord w1;
  IndexSet theta;
  WeylWord w2;
};

// Variant I: w1 in W^theta, w2 in ^{theta u theta^perp}W.
// Variant II: w1 in W^{theta u theta^perp}, w2 in ^theta W.
NormalForm normal_form(const FaceMonoidElement& x, NormalFormVariant variant);

bool is_idempotent(const FaceMonoidElement& x);
FaceMonoidElement idempotent_of(const Face& f);  // e[f]

// x in W^_j = W_j E_j: group part in W_j and face part >= R(j^inf).
bool in_parabolic(const FaceMonoidElement& x, IndexSet j);

IndexSet orbit_type(const FaceMonoidElement& x);  // theta

// All elements with l(left) + l(right) <= max_len in normal form I,
// sorted canonically; exhausts W^ when W is finite.
std::vector<FaceMonoidElement> enumerate_monoid(GcmPtr g, int max_len);

bool element_less(const FaceMonoidElement& a, const FaceMonoidElement& b);

}  // namespace fm
