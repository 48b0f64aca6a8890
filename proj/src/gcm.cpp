#include "facemonoid/gcm.hpp"

#include <algorithm>
#include <string>

namespace fm {

namespace {

std::string entry_str(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Fraction-free Bareiss elimination; exact for integer matrices.
Gcm::Int bareiss_det(const Gcm::Matrix& a, const std::vector<int>& idx) {
  const int n = static_cast<int>(idx.size());
  if (n == 0) return 1;
  std::vector<std::vector<Gcm::Int>> m(n, std::vector<Gcm::Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a(idx[i], idx[j]);

  Gcm::Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

const char* type_class_name(TypeClass t) {
  switch (t) {
    case TypeClass::Finite: return "Finite";
    case TypeClass::Affine: return "Affine";
    case TypeClass::Indefinite: return "Indefinite";
  }
  return "?";
}

std::shared_ptr<const Gcm> Gcm::validate(const Matrix& a) {
  if (a.rows() != a.cols())
    fail("NotSquare", std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
  const int n = static_cast<int>(a.rows());
  if (n > IndexSet::kMaxRank) fail("BadIndex", "rank exceeds " + std::to_string(IndexSet::kMaxRank));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && a(i, j) != 2)
        fail("BadDiagonal", "a" + entry_str(i, j) + " = " + std::to_string(a(i, j)) + ", expected 2");
      if (i != j && a(i, j) > 0)
        fail("PositiveOffDiagonal", "a" + entry_str(i, j) + " = " + std::to_string(a(i, j)));
      if (i != j && (a(i, j) == 0) != (a(j, i) == 0))
        fail("AsymmetricZero", "a" + entry_str(i, j) + " and a" + entry_str(j, i));
    }
  return std::shared_ptr<const Gcm>(new Gcm(a));
}

std::vector<IndexSet> Gcm::components(IndexSet s) const {
  std::vector<IndexSet> out;
  IndexSet seen;
  for (int i : s.elements()) {
    if (seen.contains(i)) continue;
    IndexSet comp{i};
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : s.elements())
        if (!comp.contains(v) && a_(u, v) != 0) {
          comp.insert(v);
          stack.push_back(v);
        }
    }
    seen = seen | comp;
    out.push_back(comp);
  }
  return out;
}

Gcm::Int Gcm::principal_minor(IndexSet s) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = minor_cache_.find(s.bits());
  if (it != minor_cache_.end()) return it->second;
  Int d = bareiss_det(a_, s.elements());
  minor_cache_.emplace(s.bits(), d);
  return d;
}

TypeClass Gcm::classify(IndexSet s) const {
  if (s.empty()) fail("EmptySubset", "classify needs a nonempty subset");
  if (!connected(s)) fail("Decomposable", "subset " + s.str() + " is not connected");

  bool proper_positive = true;
  // iterate proper nonempty submasks of s
  for (std::uint32_t sub = (s.bits() - 1) & s.bits(); sub; sub = (sub - 1) & s.bits()) {
    if (principal_minor(IndexSet(sub)) <= 0) {
      proper_positive = false;
      break;
    }
  }
  Int det = principal_minor(s);
  if (proper_positive && det > 0) return TypeClass::Finite;
  if (proper_positive && det == 0) return TypeClass::Affine;
  return TypeClass::Indefinite;
}

Gcm::Split Gcm::decompose(IndexSet s) const {
  Split out;
  for (const IndexSet& comp : components(s)) {
    if (classify(comp) == TypeClass::Finite)
      out.finite = out.finite | comp;
    else
      out.nonfinite = out.nonfinite | comp;
  }
  return out;
}

IndexSet Gcm::orthogonal(IndexSet j) const {
  IndexSet out;
  for (int i = 0; i < rank(); ++i) {
    bool orth = true;
    for (int k : j.elements())
      if (a_(i, k) != 0) {
        orth = false;
        break;
      }
    if (orth) out.insert(i);
  }
  return out;
}

std::vector<IndexSet> Gcm::special_subsets() const {
  std::vector<IndexSet> out;
  const std::uint32_t top = all().bits();
  for (std::uint32_t m = 0;; ++m) {
    if (is_special(IndexSet(m))) out.push_back(IndexSet(m));
    if (m == top) break;
  }
  std::sort(out.begin(), out.end(), [](IndexSet a, IndexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return out;
}

void require_same_ambient(const Gcm& a, const Gcm& b) {
  if (!same_ambient(a, b)) fail("MixedAmbient", "operands live over different Cartan matrices");
}

}  // namespace fm
