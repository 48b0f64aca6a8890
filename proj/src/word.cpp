#include "facemonoid/word.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace fm {

namespace {

using Letters = std::vector<int>;

bool is_simple(const RootVec& r, int i) {
  for (Eigen::Index j = 0; j < r.size(); ++j)
    if (r(j) != (j == i ? 1 : 0)) return false;
  return true;
}

// image of alpha_i under the word (rightmost letter acts first)
RootVec raw_act(const Gcm& g, const Letters& w, int i) {
  RootVec r = RootVec::Zero(g.rank());
  r(i) = 1;
  for (auto it = w.rbegin(); it != w.rend(); ++it) reflect_root(g, *it, r);
  return r;
}

bool raw_negative(const RootVec& r) {
  for (Eigen::Index j = 0; j < r.size(); ++j) {
    if (r(j) < 0) return true;
    if (r(j) > 0) return false;
  }
  return false;
}

// i is a right descent of the reduced word w iff w alpha_i < 0.
bool raw_right_descent(const Gcm& g, const Letters& w, int i) {
  return raw_negative(raw_act(g, w, i));
}

// Multiply the reduced word w by sigma_i on the right, keeping it reduced:
// by the exchange property, w alpha_i < 0 locates a unique deletable letter
// (the position where the tracked root crosses alpha_{w[k]}).
void raw_append(const Gcm& g, Letters& w, int i) {
  RootVec beta = RootVec::Zero(g.rank());
  beta(i) = 1;
  for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k) {
    if (is_simple(beta, w[k])) {
      w.erase(w.begin() + k);
      return;
    }
    reflect_root(g, w[k], beta);
  }
  w.push_back(i);
}

// ShortLex canonical word: repeatedly emit the smallest left descent.  Works
// on v = w^{-1} (reversed word), where left descents of w are right descents
// of v.
Letters raw_canonicalize(const Gcm& g, const Letters& reduced) {
  Letters v(reduced.rbegin(), reduced.rend());
  Letters out;
  out.reserve(reduced.size());
  while (!v.empty()) {
    int pick = -1;
    for (int i = 0; i < g.rank(); ++i)
      if (raw_right_descent(g, v, i)) {
        pick = i;
        break;
      }
    assert(pick >= 0);
    out.push_back(pick);
    raw_append(g, v, pick);
  }
  return out;
}

Letters raw_mul(const Gcm& g, const Letters& u, const Letters& v) {
  Letters w = u;
  for (int i : v) raw_append(g, w, i);
  return raw_canonicalize(g, w);
}

WeylWord wrap(GcmPtr g, Letters letters) { return WeylWord{std::move(g), std::move(letters)}; }

}  // namespace

RootVec simple_root(const Gcm& g, int i) {
  RootVec r = RootVec::Zero(g.rank());
  r(i) = 1;
  return r;
}

WeylWord identity(GcmPtr g) { return wrap(std::move(g), {}); }

WeylWord normalize(GcmPtr g, const std::vector<int>& letters) {
  for (int i : letters)
    if (i < 0 || i >= g->rank())
      fail("BadGenerator", "generator " + std::to_string(i + 1) + " out of range 1.." +
                               std::to_string(g->rank()));
  Letters w;
  for (int i : letters) raw_append(*g, w, i);
  return wrap(std::move(g), raw_canonicalize(*g, w));
}

WeylWord mul(const WeylWord& u, const WeylWord& v) {
  require_same_ambient(*u.gcm, *v.gcm);
  return wrap(u.gcm, raw_mul(*u.gcm, u.letters, v.letters));
}

WeylWord mul_gen(const WeylWord& w, int i) {
  Letters l = w.letters;
  raw_append(*w.gcm, l, i);
  return wrap(w.gcm, raw_canonicalize(*w.gcm, l));
}

WeylWord inverse(const WeylWord& w) {
  Letters rev(w.letters.rbegin(), w.letters.rend());
  return wrap(w.gcm, raw_canonicalize(*w.gcm, rev));
}

int length(const WeylWord& w) { return static_cast<int>(w.letters.size()); }

IndexSet support(const WeylWord& w) {
  IndexSet s;
  for (int i : w.letters) s.insert(i);
  return s;
}

bool is_right_descent(const WeylWord& w, int i) { return raw_right_descent(*w.gcm, w.letters, i); }

bool is_left_descent(const WeylWord& w, int i) {
  Letters rev(w.letters.rbegin(), w.letters.rend());
  return raw_right_descent(*w.gcm, rev, i);
}

IndexSet right_descents(const WeylWord& w) {
  IndexSet s;
  for (int i = 0; i < w.gcm->rank(); ++i)
    if (is_right_descent(w, i)) s.insert(i);
  return s;
}

IndexSet left_descents(const WeylWord& w) {
  IndexSet s;
  Letters rev(w.letters.rbegin(), w.letters.rend());
  for (int i = 0; i < w.gcm->rank(); ++i)
    if (raw_right_descent(*w.gcm, rev, i)) s.insert(i);
  return s;
}

RootVec act_on_root(const WeylWord& w, const RootVec& r) {
  RootVec out = r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) reflect_root(*w.gcm, *it, out);
  return out;
}

bool in_standard_parabolic(const WeylWord& w, IndexSet j) { return support(w).subset_of(j); }

bool bruhat_leq(const WeylWord& u, const WeylWord& w) {
  require_same_ambient(*u.gcm, *w.gcm);
  // descent recursion along the fixed reduced word of w, right to left
  Letters v = u.letters;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    if (raw_right_descent(*u.gcm, v, *it)) raw_append(*u.gcm, v, *it);
  return v.empty();
}

CosetPair coset_decompose(const WeylWord& w, IndexSet j, Side side) {
  const Gcm& g = *w.gcm;
  if (side == Side::Right) {
    Letters min = w.letters;
    Letters par;
    for (;;) {
      int pick = -1;
      for (int i : j.elements())
        if (raw_right_descent(g, min, i)) {
          pick = i;
          break;
        }
      if (pick < 0) break;
      raw_append(g, min, pick);
      par.insert(par.begin(), pick);
    }
    return {wrap(w.gcm, raw_canonicalize(g, min)), wrap(w.gcm, raw_canonicalize(g, par))};
  }
  // left: decompose w^{-1} on the right and invert the parts
  CosetPair r = coset_decompose(inverse(w), j, Side::Right);
  return {inverse(r.min), inverse(r.par)};
}

DoubleCosetTriple double_coset_decompose(const WeylWord& w, IndexSet k, IndexSet j) {
  // Greedy descent to the unique element of W_k w W_j without left descents
  // in k or right descents in j; that element is the minimal one, and every
  // strip keeps lengths additive.
  const Gcm& g = *w.gcm;
  Letters x = w.letters;
  Letters a, b;
  for (;;) {
    int pick = -1;
    Letters xrev(x.rbegin(), x.rend());
    for (int i : k.elements())
      if (raw_right_descent(g, xrev, i)) {
        pick = i;
        break;
      }
    if (pick >= 0) {
      // strip the left descent: x = sigma_pick * x'
      raw_append(g, xrev, pick);
      x.assign(xrev.rbegin(), xrev.rend());
      a.push_back(pick);
      continue;
    }
    for (int i : j.elements())
      if (raw_right_descent(g, x, i)) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    raw_append(g, x, pick);
    b.insert(b.begin(), pick);
  }
  return {wrap(w.gcm, raw_canonicalize(g, a)), wrap(w.gcm, raw_canonicalize(g, x)),
          wrap(w.gcm, raw_canonicalize(g, b))};
}

IndexSet transported_subset(IndexSet k, const WeylWord& w, IndexSet j) {
  IndexSet out;
  WeylWord winv = inverse(w);
  for (int i : k.elements()) {
    RootVec r = act_on_root(winv, simple_root(*w.gcm, i));
    for (int jj : j.elements())
      if (is_simple(r, jj)) {
        out.insert(i);
        break;
      }
  }
  return out;
}

FiveFactorParts five_factor_decompose(const WeylWord& w, IndexSet k, IndexSet j) {
  const Gcm& g = *w.gcm;
  const IndexSet jinf = g.decompose(j).nonfinite;
  const IndexSet j0 = j - jinf;
  const IndexSet big = jinf | g.orthogonal(jinf);  // J^inf u (J^inf)^perp

  DoubleCosetTriple d = double_coset_decompose(w, k, big);

  // Renormalize to Carter's unique triple: push the W_M part of b across x,
  // where M = {l in big : x alpha_l is a simple root of K}.
  IndexSet m;
  std::vector<int> conj(g.rank(), -1);
  for (int l : big.elements()) {
    RootVec r = act_on_root(d.x, simple_root(g, l));
    for (int kk : k.elements())
      if (is_simple(r, kk)) {
        m.insert(l);
        conj[l] = kk;
        break;
      }
  }
  CosetPair bm = coset_decompose(d.b, m, Side::Left);  // b = m_part * c
  std::vector<int> conj_letters;
  conj_letters.reserve(bm.par.letters.size());
  for (int l : bm.par.letters) conj_letters.push_back(conj[l]);
  WeylWord a = mul(d.a, normalize(w.gcm, conj_letters));  // a0 * (x m x^{-1})
  WeylWord c = bm.min;                                    // in ^{big n x^{-1}K}(W_big)

  // Split c = c_perp * c_0 across the commuting product W_big = W_{(Jinf)^perp} x W_{Jinf},
  // then peel the J^0-minimal part of c_perp.
  CosetPair cs = coset_decompose(c, jinf, Side::Right);
  WeylWord c_perp = cs.min;
  WeylWord c_zero = cs.par;
  CosetPair c1s = coset_decompose(c_perp, j0, Side::Right);
  WeylWord c1 = c1s.min;
  WeylWord c2 = mul(c1s.par, c_zero);

  return {a, d.x, c1, c2};
}

std::vector<WeylWord> enumerate_weyl(GcmPtr g, int max_len) {
  std::set<Letters> cur{{}};
  std::vector<WeylWord> all{identity(g)};
  for (int len = 1; len <= max_len; ++len) {
    std::set<Letters> next;
    for (const Letters& w : cur)
      for (int i = 0; i < g->rank(); ++i) {
        if (raw_right_descent(*g, w, i)) continue;
        Letters nw = w;
        nw.push_back(i);
        next.insert(raw_canonicalize(*g, nw));
      }
    for (const Letters& w : next) all.push_back(wrap(g, w));
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return all;
}

bool word_less(const WeylWord& a, const WeylWord& b) {
  if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
  return a.letters < b.letters;
}

}  // namespace fm
