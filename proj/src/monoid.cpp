#include "facemonoid/monoid.hpp"

#include <algorithm>

namespace fm {

namespace {

// Normal form I of the pair g * e[F]:  with F = u R(T) (u minimal) the
// element is (g u) e[R(T)] u^{-1}; then W_{T u T^perp} moves across e and
// W_T is absorbed on both sides.
FaceMonoidElement canonicalize(const WeylWord& g_word, const Face& f) {
  const Gcm& g = *f.gcm();
  IndexSet theta = f.theta;
  IndexSet stab = theta | g.orthogonal(theta);

  WeylWord s2 = inverse(f.rep);
  CosetPair lp = coset_decompose(s2, stab, Side::Left);  // s2 = p * s, p in W_stab
  WeylWord s1 = mul(mul(g_word, f.rep), lp.par);
  CosetPair rp = coset_decompose(s1, theta, Side::Right);  // absorb W_theta

  if (theta.empty()) return FaceMonoidElement{identity(f.gcm()), theta, rp.min};
  return FaceMonoidElement{rp.min, theta, lp.min};
}

}  // namespace

FaceMonoidElement unit_element(GcmPtr g) {
  return FaceMonoidElement{identity(g), IndexSet{}, identity(g)};
}

FaceMonoidElement from_word(const WeylWord& w) {
  return FaceMonoidElement{identity(w.gcm), IndexSet{}, w};
}

FaceMonoidElement make_element(const WeylWord& w1, const Face& f, const WeylWord& w2) {
  require_same_ambient(*w1.gcm, *f.gcm());
  require_same_ambient(*w1.gcm, *w2.gcm);
  // w1 e[f] w2 = (w1 w2) e[w2^{-1} f]
  return canonicalize(mul(w1, w2), translate(inverse(w2), f));
}

GroupFacePair pair_form(const FaceMonoidElement& x) {
  NormalForm nf = normal_form(x, NormalFormVariant::I);
  return GroupFacePair{mul(nf.w1, nf.w2), translate(inverse(nf.w2), make_face(identity(x.gcm()), nf.theta))};
}

FaceMonoidElement from_pair(const WeylWord& g, const Face& f) { return canonicalize(g, f); }

FaceMonoidElement mul(const FaceMonoidElement& x, const FaceMonoidElement& y) {
  require_same_ambient(*x.gcm(), *y.gcm());
  NormalForm a = normal_form(x, NormalFormVariant::I);
  NormalForm b = normal_form(y, NormalFormVariant::I);
  GcmPtr g = x.gcm();

  // (s1 e[R(T1)] s2)(t1 e[R(T2)] t2) = (s1 s2 t1 t2) e[t2^{-1}(w^{-1}R(T1) n R(T2))]
  // with w = s2 t1.
  WeylWord w = mul(a.w2, b.w1);
  Face left_face = make_face(inverse(w), a.theta);
  Face meet = face_meet(left_face, make_face(identity(g), b.theta));
  Face moved = translate(inverse(b.w2), meet);
  WeylWord grp = mul(mul(a.w1, w), b.w2);
  return canonicalize(grp, moved);
}

FaceMonoidElement inverse(const FaceMonoidElement& x) {
  NormalForm nf = normal_form(x, NormalFormVariant::I);
  // (g e[R~])^inv = e[R~] g^{-1} = g^{-1} e[g R~], and g R~ = s1 R(T).
  WeylWord grp = mul(nf.w1, nf.w2);
  return canonicalize(inverse(grp), make_face(nf.w1, nf.theta));
}

NormalForm normal_form(const FaceMonoidElement& x, NormalFormVariant variant) {
  GcmPtr g = x.gcm();
  NormalForm nf1{x.left, x.theta, x.right};
  if (x.theta.empty()) nf1 = NormalForm{x.right, x.theta, identity(g)};
  if (variant == NormalFormVariant::I) return nf1;

  // Variant II: shift the W_{theta^perp} factor of w1 across e[R(theta)].
  IndexSet stab = x.theta | g->orthogonal(x.theta);
  CosetPair rp = coset_decompose(nf1.w1, stab, Side::Right);  // w1 = q' * p'
  CosetPair split = coset_decompose(rp.par, x.theta, Side::Right);  // p' = n * z, n in W_{theta^perp}
  WeylWord s2 = mul(split.min, nf1.w2);
  CosetPair lp = coset_decompose(s2, x.theta, Side::Left);  // drop the W_theta prefix
  return NormalForm{rp.min, x.theta, lp.min};
}

bool is_idempotent(const FaceMonoidElement& x) { return mul(x, x) == x; }

FaceMonoidElement idempotent_of(const Face& f) { return canonicalize(identity(f.gcm()), f); }

bool in_parabolic(const FaceMonoidElement& x, IndexSet j) {
  GroupFacePair p = pair_form(x);
  if (!in_standard_parabolic(p.group, j)) return false;
  GcmPtr g = x.gcm();
  return face_contains(p.face, make_face(identity(g), g->decompose(j).nonfinite));
}

IndexSet orbit_type(const FaceMonoidElement& x) { return x.theta; }

std::vector<FaceMonoidElement> enumerate_monoid(GcmPtr g, int max_len) {
  std::vector<FaceMonoidElement> out;
  std::vector<WeylWord> words = enumerate_weyl(g, max_len);
  for (IndexSet theta : g->special_subsets()) {
    IndexSet stab = theta | g->orthogonal(theta);
    for (const WeylWord& s1 : words) {
      if (!(right_descents(s1) & theta).empty()) continue;  // s1 in W^theta
      for (const WeylWord& s2 : words) {
        if (length(s1) + length(s2) > max_len) continue;
        if (!(left_descents(s2) & stab).empty()) continue;  // s2 in ^{stab}W
        if (theta.empty())
          out.push_back(FaceMonoidElement{identity(g), theta, s1});  // s2 = 1 forced
        else
          out.push_back(FaceMonoidElement{s1, theta, s2});
      }
    }
  }
  std::sort(out.begin(), out.end(), element_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool element_less(const FaceMonoidElement& a, const FaceMonoidElement& b) {
  if (a.theta.bits() != b.theta.bits()) return a.theta.bits() < b.theta.bits();
  if (!(a.left == b.left)) return word_less(a.left, b.left);
  return word_less(a.right, b.right);
}

}  // namespace fm
