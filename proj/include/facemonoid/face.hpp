#pragma once

#include "facemonoid/word.hpp"

namespace fm {

// Face of the Tits cone, parametrized as rep * R(theta) with theta special
// and rep the minimal coset representative in W^{theta u theta^perp}.  Two
// faces are equal iff both fields agree; the whole cone X is (~{}, 1).
struct Face {
  IndexSet theta;
  WeylWord rep;

  bool operator==(const Face& o) const { return theta == o.theta && rep == o.rep; }
  const GcmPtr& gcm() const { return rep.gcm; }
};

// Closed facet w * Fbar_J, rep minimal in W^{jtype}.
struct FacetLabel {
  WeylWord rep;
  IndexSet jtype;

  bool operator==(const FacetLabel& o) const { return jtype == o.jtype && rep == o.rep; }
};

Face top_face(GcmPtr g);  // X itself

// Canonicalizes w * R(theta); throws NotSpecial.
Face make_face(const WeylWord& w, IndexSet theta);

FacetLabel make_facet(const WeylWord& w, IndexSet jtype);

Face translate(const WeylWord& w, const Face& f);

// f2 subseteq f1:  theta2 >= theta1 and rep1^{-1} rep2 in W_{theta1^perp} W_{theta2}.
bool face_contains(const Face& f1, const Face& f2);

// Lattice meet (= set intersection) and join.  The general case reduces to
// the special-position formulas
//   R(T1) n  tau R(T2) = R(T1 u T2 u red(tau)),   tau in ^{T1^perp}W^{T2^perp},
//   R(T1) v  tau R(T2) = R((T1 n tau T2)^inf),    tau in ^{T1}W^{T2},
// always translating f1 into special position.
Face face_meet(const Face& f1, const Face& f2);
Face face_join(const Face& f1, const Face& f2);

// f n closure(fac):  R(T) n sigma Fbar_J = Fbar_{T u J u red(sigma)} for
// sigma in ^{T u T^perp}W^J, extended to arbitrary position via stabilizers.
FacetLabel face_meet_facet(const Face& f, const FacetLabel& fac);

// Conjugation data for the stabilizers of f = w R(theta):
// pointwise Z_W(f) = w W_theta w^{-1}, setwise N_W(f) = w W_{theta u theta^perp} w^{-1}.
struct StabilizerTypes {
  WeylWord w;
  IndexSet pointwise;  // theta
  IndexSet setwise;    // theta u theta^perp
};
StabilizerTypes stabilizer_types(const Face& f);

// Reinterprets a face of the Tits cone of the sub-GCM A_j inside Fa(X).
// Throws NotInSubgroup if the word leaves W_j, NotSpecial if theta is not
// special (specialness of theta <= j agrees between A_j and A).
Face sublattice_embed(GcmPtr g, IndexSet j, const WeylWord& w, IndexSet theta);

// f lies in the image of the embedding for j, i.e. f >= R(j^inf).
bool image_test(const Face& f, IndexSet j);

// Deterministic ordering for reports/enumeration: (theta, rep).
bool face_less(const Face& a, const Face& b);

}  // namespace fm
