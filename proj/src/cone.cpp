#include "facemonoid/cone.hpp"

#include "facemonoid/rng.hpp"

namespace fm {

namespace {

IndexSet zero_set(const PairingVec& v) {
  IndexSet s;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) == 0) s.insert(static_cast<int>(i));
  return s;
}

// rank over Q of the rows, by fraction-free elimination
int profile_rank(std::vector<PairingVec> rows) {
  if (rows.empty()) return 0;
  const Eigen::Index n = rows[0].size();
  int rank = 0;
  Eigen::Index col = 0;
  for (; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r](col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r](col) == 0) continue;
      Rational factor = rows[r](col) / rows[rank](col);
      for (Eigen::Index c = col; c < n; ++c) rows[r](c) -= factor * rows[rank](c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

ConeProfile act_on_profile(const WeylWord& w, const ConeProfile& p) {
  if (p.apex) return p;
  ConeProfile out = p;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    reflect_pairing(*w.gcm, *it, out.v);
  return out;
}

std::optional<DominantResult> to_dominant(GcmPtr g, const ConeProfile& p, int budget) {
  ConeProfile cur = p;
  if (p.apex) cur.v = PairingVec::Zero(g->rank());
  cur.apex = false;

  std::vector<int> applied;
  for (int step = 0;; ++step) {
    int neg = -1;
    for (int i = 0; i < g->rank(); ++i)
      if (cur.v(i) < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    if (step >= budget) return std::nullopt;
    reflect_pairing(*g, neg, cur.v);
    applied.push_back(neg);
  }
  // w1 = product of applied reflections, latest leftmost; the ShortLex-least
  // w with w p = dom is the ^{J'}W-minimalization against J' = zeros(dom).
  std::vector<int> rev(applied.rbegin(), applied.rend());
  WeylWord w1 = normalize(g, rev);
  WeylWord w = coset_decompose(w1, zero_set(cur.v), Side::Left).min;
  cur.apex = cur.is_zero();
  return DominantResult{w, cur};
}

std::optional<FacetLabel> facet_of(GcmPtr g, const ConeProfile& p, int budget) {
  auto d = to_dominant(g, p, budget);
  if (!d) return std::nullopt;
  IndexSet j = zero_set(d->dom.v);
  return make_facet(inverse(d->w), j);
}

std::optional<bool> face_membership(const ConeProfile& p, const Face& f, int budget) {
  GcmPtr g = f.gcm();
  if (p.is_zero()) return true;  // the apex lies on every face
  ConeProfile q = act_on_profile(inverse(f.rep), p);
  if (!to_dominant(g, q, budget)) return std::nullopt;  // p not certified in X
  for (int i : f.theta.elements())
    if (q.v(i) != 0) return false;
  return true;
}

std::optional<bool> ri_membership(const ConeProfile& p, const Face& f, int budget) {
  GcmPtr g = f.gcm();
  ConeProfile q = act_on_profile(inverse(f.rep), p);
  auto lab = facet_of(g, q, budget);
  if (!lab) return std::nullopt;
  IndexSet perp = g->orthogonal(f.theta);
  if (!f.theta.subset_of(lab->jtype)) return false;
  IndexSet j = lab->jtype - f.theta;
  if (!j.subset_of(perp)) return false;
  if (!g->decompose(j).nonfinite.empty()) return false;  // need J = J^0
  return support(lab->rep).subset_of(perp);
}

std::vector<ConeProfile> sample_points(GcmPtr g, std::uint64_t seed, int count,
                                       const SampleRegion& region) {
  Rng rng(seed);
  const int n = g->rank();
  std::vector<ConeProfile> out;
  out.reserve(count);

  auto positive = [&rng]() { return Rational(rng.range(1, 6), rng.range(1, 3)); };

  for (int s = 0; s < count; ++s) {
    ConeProfile p;
    p.v = PairingVec::Zero(n);
    switch (region.kind) {
      case SampleRegion::Chamber:
        for (int i = 0; i < n; ++i) p.v(i) = positive();
        break;
      case SampleRegion::InFace: {
        const Face& f = *region.face;
        for (int i = 0; i < n; ++i)
          if (!f.theta.contains(i) && !rng.chance(1, 4)) p.v(i) = positive();
        // spread within the face: rep * (word over theta^perp) * dominant
        std::vector<int> perp = g->orthogonal(f.theta).elements();
        if (!perp.empty())
          for (int k = rng.range(0, 3); k > 0; --k)
            reflect_pairing(*g, perp[rng.below(static_cast<int>(perp.size()))], p.v);
        p = act_on_profile(f.rep, p);
        break;
      }
      case SampleRegion::Anywhere: {
        for (int i = 0; i < n; ++i)
          if (!rng.chance(1, 3)) p.v(i) = positive();
        for (int k = rng.range(0, 4); k > 0; --k) reflect_pairing(*g, rng.below(n), p.v);
        break;
      }
    }
    p.apex = p.is_zero();
    out.push_back(std::move(p));
  }
  return out;
}

MeetCheckResult oracle_meet_check(const Face& f1, const Face& f2, int samples, std::uint64_t seed,
                                  int budget) {
  GcmPtr g = f1.gcm();
  Face m = face_meet(f1, f2);
  MeetCheckResult res;

  auto note = [&res](std::optional<bool> v, bool expected) {
    if (!v)
      ++res.unknowns;
    else if (*v != expected)
      ++res.violations;
  };

  std::vector<ConeProfile> meet_pts = sample_points(g, seed, samples, SampleRegion::in_face(m));
  std::vector<PairingVec> translated;
  WeylWord minv = inverse(m.rep);
  for (const ConeProfile& p : meet_pts) {
    note(face_membership(p, f1, budget), true);
    note(face_membership(p, f2, budget), true);
    translated.push_back(act_on_profile(minv, p).v);
  }

  // meet samples must span the full profile space of the meet type
  if (samples > 0 && profile_rank(translated) != g->rank() - m.theta.size()) ++res.violations;

  for (int side = 0; side < 2; ++side) {
    const Face& f = side == 0 ? f1 : f2;
    const Face& other = side == 0 ? f2 : f1;
    std::vector<ConeProfile> pts =
        sample_points(g, seed + 1 + side, samples, SampleRegion::in_face(f));
    for (const ConeProfile& p : pts) {
      auto in_other = face_membership(p, other, budget);
      if (!in_other) {
        ++res.unknowns;
        continue;
      }
      if (!*in_other) continue;
      note(face_membership(p, m, budget), true);  // common points lie in the meet
    }
  }

  res.ok = res.violations == 0 && res.unknowns == 0;
  return res;
}

}  // namespace fm
