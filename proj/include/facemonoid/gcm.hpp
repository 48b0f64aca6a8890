#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "facemonoid/index_set.hpp"

namespace fm {

enum class TypeClass { Finite, Affine, Indefinite };

const char* type_class_name(TypeClass t);

// Validated generalized Cartan matrix: a_ii = 2, a_ij <= 0 for i != j, and
// a_ij = 0 iff a_ji = 0.  Immutable after construction; shared between all
// values living over it.
class Gcm {
 public:
  using Matrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  using Int = boost::multiprecision::cpp_int;

  // Checks the three GCM axioms.  Throws NotSquare / BadDiagonal /
  // PositiveOffDiagonal / AsymmetricZero naming the first violating entry
  // (row-major scan, 1-based).
  static std::shared_ptr<const Gcm> validate(const Matrix& a);

  int rank() const { return static_cast<int>(a_.rows()); }
  const Matrix& matrix() const { return a_; }
  std::int64_t entry(int i, int j) const { return a_(i, j); }
  IndexSet all() const { return IndexSet::full(rank()); }

  // Connected components of the subdiagram on s (edges where a_ij != 0).
  std::vector<IndexSet> components(IndexSet s) const;
  bool connected(IndexSet s) const { return components(s).size() == 1; }

  // Kac trichotomy for an indecomposable principal submatrix, decided by
  // exact integer principal minors: Finite iff all principal minors of A_s
  // are positive; Affine iff det A_s = 0 and all proper principal minors are
  // positive; Indefinite otherwise.
  TypeClass classify(IndexSet s) const;

  // Partition of s into the union of its finite-type components (s^0) and
  // the union of its non-finite-type components (s^infty).
  struct Split {
    IndexSet finite;     // s^0
    IndexSet nonfinite;  // s^infty
  };
  Split decompose(IndexSet s) const;

  // J^perp = {i in I : a_ij = 0 for all j in J}.
  IndexSet orthogonal(IndexSet j) const;

  bool is_special(IndexSet s) const { return decompose(s).nonfinite == s; }

  // All special subsets, sorted by (cardinality, elements).  Contains {}.
  std::vector<IndexSet> special_subsets() const;

  // Exact determinant of the principal submatrix on s (cached per subset).
  Int principal_minor(IndexSet s) const;

 private:
  explicit Gcm(Matrix a) : a_(std::move(a)) {}

  Matrix a_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint32_t, Int> minor_cache_;
};

using GcmPtr = std::shared_ptr<const Gcm>;

inline bool same_ambient(const Gcm& a, const Gcm& b) {
  return &a == &b || a.matrix() == b.matrix();
}

void require_same_ambient(const Gcm& a, const Gcm& b);

}  // namespace fm
