#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <optional>

#include "facemonoid/face.hpp"

namespace fm {

using Rational = boost::multiprecision::cpp_rational;
using PairingVec = DenseVec<Rational>;

// Geometric side of the library.  A point lambda of h*_R enters only through
// its pairing profile (lambda(h_1), ..., lambda(h_n)).
//
// Lemma (profile sufficiency).  Every predicate implemented here is a
// function of the profile alone: profiles transform equivariantly under W
// (reflect_pairing), the chamber condition lambda in Cbar reads v >= 0, and
// face membership in w R(theta) reads "w^{-1} v vanishes on theta" because
// R(theta) = {lambda in X : lambda(h_i) = 0 for i in theta}.  For a
// degenerate A distinct points share a profile; all answers are then
// statements about the common profile.
//
// Apex stands for the zero profile; it is absorbing under the monoid action
// and belongs to every face.
struct ConeProfile {
  bool apex = false;
  PairingVec v;  // ignored when apex

  static ConeProfile make_apex(int n) {
    ConeProfile p;
    p.apex = true;
    p.v = PairingVec::Zero(n);
    return p;
  }
  bool is_zero() const {
    if (apex) return true;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i) != 0) return false;
    return true;
  }
  bool operator==(const ConeProfile& o) const {
    return (is_zero() && o.is_zero()) || (!apex && !o.apex && v == o.v);
  }
};

ConeProfile act_on_profile(const WeylWord& w, const ConeProfile& p);

struct DominantResult {
  WeylWord w;        // ShortLex-least with w * p dominant
  ConeProfile dom;   // = w * p, all coordinates >= 0
};

// Numbers game toward the dominant chamber; returns nothing (Unknown) when
// the budget runs out, which happens exactly when p lies outside X (up to
// budget truncation).
std::optional<DominantResult> to_dominant(GcmPtr g, const ConeProfile& p, int budget);

// Open facet containing p: (canonical rep, J = zero set of the dominant
// profile), rep reduced mod the stabilizer W_J.
std::optional<FacetLabel> facet_of(GcmPtr g, const ConeProfile& p, int budget);

// p in f, resp. p in ri(f); nullopt when p cannot be certified inside X.
std::optional<bool> face_membership(const ConeProfile& p, const Face& f, int budget);
std::optional<bool> ri_membership(const ConeProfile& p, const Face& f, int budget);

struct SampleRegion {
  enum Kind { Chamber, InFace, Anywhere } kind = Anywhere;
  std::optional<Face> face;

  static SampleRegion chamber() { return {Chamber, std::nullopt}; }
  static SampleRegion in_face(Face f) { return {InFace, std::move(f)}; }
  static SampleRegion anywhere() { return {Anywhere, std::nullopt}; }
};

// Deterministic per seed; every sample is certified-in-X by construction
// (w * dominant), and InFace samples satisfy face_membership.
std::vector<ConeProfile> sample_points(GcmPtr g, std::uint64_t seed, int count,
                                       const SampleRegion& region);

struct MeetCheckResult {
  bool ok = true;
  int violations = 0;
  int unknowns = 0;
};

// Samples the computed meet (must lie in both faces), samples both faces
// (common points must lie in the meet), and checks that the translated meet
// samples span the full n - |theta| dimensional profile space of the meet.
MeetCheckResult oracle_meet_check(const Face& f1, const Face& f2, int samples,
                                  std::uint64_t seed, int budget);

}  // namespace fm
