#include "facemonoid/face.hpp"

#include <cassert>

namespace fm {

namespace {

IndexSet stab_type(const Gcm& g, IndexSet theta) { return theta | g.orthogonal(theta); }

void require_special(const Gcm& g, IndexSet theta) {
  if (!g.is_special(theta))
    fail("NotSpecial", "subset " + theta.str() + " is not special (theta^inf = " +
                           g.decompose(theta).nonfinite.str() + ")");
}

}  // namespace

Face top_face(GcmPtr g) { return Face{IndexSet{}, identity(std::move(g))}; }

Face make_face(const WeylWord& w, IndexSet theta) {
  require_special(*w.gcm, theta);
  return Face{theta, coset_decompose(w, stab_type(*w.gcm, theta), Side::Right).min};
}

FacetLabel make_facet(const WeylWord& w, IndexSet jtype) {
  return FacetLabel{coset_decompose(w, jtype, Side::Right).min, jtype};
}

Face translate(const WeylWord& w, const Face& f) { return make_face(mul(w, f.rep), f.theta); }

bool face_contains(const Face& f1, const Face& f2) {
  require_same_ambient(*f1.gcm(), *f2.gcm());
  if (!f1.theta.subset_of(f2.theta)) return false;
  // rep1^{-1} rep2 in W_{theta1^perp} W_{theta2}: minimal double coset
  // representative must be trivial.
  WeylWord rel = mul(inverse(f1.rep), f2.rep);
  return double_coset_decompose(rel, f1.gcm()->orthogonal(f1.theta), f2.theta).x.is_identity();
}

Face face_meet(const Face& f1, const Face& f2) {
  require_same_ambient(*f1.gcm(), *f2.gcm());
  const Gcm& g = *f1.gcm();
  // f1 n f2 = u (R(T1) n t R(T2)) with t = u^{-1} v reduced against the
  // setwise stabilizers to reach special position.
  WeylWord t = mul(inverse(f1.rep), f2.rep);
  DoubleCosetTriple d = double_coset_decompose(t, stab_type(g, f1.theta), stab_type(g, f2.theta));
  IndexSet fused = f1.theta | f2.theta | support(d.x);
  assert(g.is_special(fused));
  return make_face(mul(f1.rep, d.a), fused);
}

Face face_join(const Face& f1, const Face& f2) {
  require_same_ambient(*f1.gcm(), *f2.gcm());
  const Gcm& g = *f1.gcm();
  WeylWord t = mul(inverse(f1.rep), f2.rep);
  DoubleCosetTriple d = double_coset_decompose(t, f1.theta, f2.theta);
  IndexSet common = transported_subset(f1.theta, d.x, f2.theta);  // T1 n tau T2
  return make_face(mul(f1.rep, d.a), g.decompose(common).nonfinite);
}

FacetLabel face_meet_facet(const Face& f, const FacetLabel& fac) {
  require_same_ambient(*f.gcm(), *fac.rep.gcm);
  const Gcm& g = *f.gcm();
  WeylWord t = mul(inverse(f.rep), fac.rep);
  DoubleCosetTriple d = double_coset_decompose(t, stab_type(g, f.theta), fac.jtype);
  IndexSet jt = f.theta | fac.jtype | support(d.x);
  return make_facet(mul(f.rep, d.a), jt);
}

StabilizerTypes stabilizer_types(const Face& f) {
  return StabilizerTypes{f.rep, f.theta, stab_type(*f.gcm(), f.theta)};
}

Face sublattice_embed(GcmPtr g, IndexSet j, const WeylWord& w, IndexSet theta) {
  require_same_ambient(*g, *w.gcm);
  if (!support(w).subset_of(j))
    fail("NotInSubgroup", "word uses generators outside " + j.str());
  if (!theta.subset_of(j)) fail("NotInSubgroup", "theta " + theta.str() + " not inside " + j.str());
  return make_face(w, theta);
}

bool image_test(const Face& f, IndexSet j) {
  GcmPtr g = f.gcm();
  return face_contains(f, make_face(identity(g), g->decompose(j).nonfinite));
}

bool face_less(const Face& a, const Face& b) {
  if (a.theta.bits() != b.theta.bits()) return a.theta.bits() < b.theta.bits();
  return word_less(a.rep, b.rep);
}

}  // namespace fm
