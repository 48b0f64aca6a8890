#pragma once

#include <Eigen/Dense>
#include <vector>

#include "facemonoid/gcm.hpp"
#include "facemonoid/index_set.hpp"

namespace fm {

// Column vector in the simple-root basis, and the rational pairing vector
// used by the cone oracle.  Both transform under the same engine below.
template <class Scalar>
using DenseVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RootVec = DenseVec<std::int64_t>;

// sigma_i on the root side:  alpha_j -> alpha_j - a_ij alpha_i, i.e. only
// the i-th coordinate moves:  r_i -= <row_i(A), r>.
template <class Scalar>
void reflect_root(const Gcm& g, int i, DenseVec<Scalar>& r) {
  Scalar dot{0};
  for (int j = 0; j < g.rank(); ++j) dot += Scalar(g.entry(i, j)) * r(j);
  r(i) -= dot;
}

// sigma_i on the pairing side:  v_j -> v_j - a_ji v_i (dual convention,
// column i of A).
template <class Scalar>
void reflect_pairing(const Gcm& g, int i, DenseVec<Scalar>& v) {
  Scalar vi = v(i);
  if (vi == Scalar{0}) return;
  for (int j = 0; j < g.rank(); ++j) v(j) -= Scalar(g.entry(j, i)) * vi;
}

RootVec simple_root(const Gcm& g, int i);

// Element of the Weyl group W(A), stored as its canonical ShortLex-least
// reduced word (0-based letters).  Equality of elements is equality of
// letter sequences over the same ambient GCM.
struct WeylWord {
  GcmPtr gcm;
  std::vector<int> letters;

  bool operator==(const WeylWord& o) const {
    return letters == o.letters && same_ambient(*gcm, *o.gcm);
  }
  bool is_identity() const { return letters.empty(); }
};

enum class Side { Left, Right };

WeylWord identity(GcmPtr g);

// Canonical word of the product of the given generators; throws BadGenerator
// for an out-of-range letter.  Reducedness is maintained by the exchange
// property via root positivity, O(l^2 n) overall.
WeylWord normalize(GcmPtr g, const std::vector<int>& letters);

WeylWord mul(const WeylWord& u, const WeylWord& v);
WeylWord inverse(const WeylWord& w);
WeylWord mul_gen(const WeylWord& w, int i);  // w * sigma_i

int length(const WeylWord& w);
IndexSet support(const WeylWord& w);  // red(w)
IndexSet left_descents(const WeylWord& w);
IndexSet right_descents(const WeylWord& w);
bool is_right_descent(const WeylWord& w, int i);
bool is_left_descent(const WeylWord& w, int i);

RootVec act_on_root(const WeylWord& w, const RootVec& r);

// w in W_j, decided by red(w) <= j.
bool in_standard_parabolic(const WeylWord& w, IndexSet j);

// Bruhat order via the subword property (descent recursion along the
// canonical word of w).
bool bruhat_leq(const WeylWord& u, const WeylWord& w);

struct CosetPair {
  WeylWord min;  // in W^j (Right) resp. ^jW (Left)
  WeylWord par;  // in W_j
};

// Right: w = min * par,  Left: w = par * min; lengths are additive.
CosetPair coset_decompose(const WeylWord& w, IndexSet j, Side side);

struct DoubleCosetTriple {
  WeylWord a;  // in W_k
  WeylWord x;  // the minimal element of W_k w W_j, in ^kW^j
  WeylWord b;  // in W_j
};

// w = a * x * b with l(w) = l(a) + l(x) + l(b).
DoubleCosetTriple double_coset_decompose(const WeylWord& w, IndexSet k, IndexSet j);

struct FiveFactorParts {
  WeylWord a;   // in W_k
  WeylWord x;   // in ^kW^{J^inf u (J^inf)^perp}
  WeylWord c1;  // in (W_{(J^inf)^perp})^{J^0}
  WeylWord c2;  // in W_j
};

// Unique w = a * x * c1 * c2 with the memberships above and additionally
// x c1 in ^kW^j and x c1 c2 in ^kW.
FiveFactorParts five_factor_decompose(const WeylWord& w, IndexSet k, IndexSet j);

// {i in K : w^{-1} alpha_i = alpha_j for some j in J}, i.e. K n wJ under the
// identification of indices with simple roots.
IndexSet transported_subset(IndexSet k, const WeylWord& w, IndexSet j);

// All group elements of length <= max_len, sorted by (length, lex).
std::vector<WeylWord> enumerate_weyl(GcmPtr g, int max_len);

// Total order used for deterministic reports: (length, lex).
bool word_less(const WeylWord& a, const WeylWord& b);

}  // namespace fm
