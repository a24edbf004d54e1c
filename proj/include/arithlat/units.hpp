#pragma once

// Norm-one units of the standard order Z<1,i,j,k> and unipotency tests for
// the Godement compactness criterion.

#include <arithlat/quatalg.hpp>

#include <vector>

namespace arithlat {

// The standard order Z<1,i,j,k>. Rational parameters are rescaled by squares
// of their denominators (i -> q i), which gives an isomorphic algebra with
// integral a, b.
class QuaternionOrder {
public:
  explicit QuaternionOrder(const QuaternionAlgebra& algebra);

  const QuaternionAlgebra& algebra() const noexcept { return algebra_; }

private:
  QuaternionAlgebra algebra_;
};

struct UnitSet {
  QuaternionOrder order;
  long height = 0;  // max |coefficient| over elements (bound used for enumeration)
  std::vector<QuaternionElem> elements;  // lexicographic order, deduplicated
};

// All (x0..x3) in Z^4 with |xi| <= H and reduced norm 1, plus +-1 always.
UnitSet enumerate_norm_one(const QuaternionOrder& order, long height);

// Closure of units and their conjugates under products of at most
// word_length factors.
UnitSet sample_group(const UnitSet& units, int word_length);

template <class T>
bool is_unipotent(const Matrix<T>& m) {
  if (!m.is_square()) fail(ErrorCode::NonSquare, "unipotency of a non-square matrix");
  const Matrix<T> nil = m - Matrix<T>::identity(m.rows());
  Matrix<T> power = nil;
  for (std::size_t k = 1; k < m.rows(); ++k) power = power * nil;
  for (const auto& e : power.entries())
    if (!is_zero(e)) return false;
  return true;
}

template <class T>
bool is_identity(const Matrix<T>& m) {
  return m.is_square() && m == Matrix<T>::identity(m.rows());
}

struct GodementReport {
  std::size_t checked = 0;
  std::vector<std::size_t> unipotent_indices;  // into the checked list
  std::vector<std::string> unipotent_labels;
  bool nontrivial_unipotent = false;  // some unipotent element other than the identity
};

// Unipotent images psi(u). Algebras with no quadratic splitting (both
// parameters squares) are checked through the left-regular representation,
// where u is unipotent exactly when psi(u) is.
GodementReport godement_report(const UnitSet& units);

// Same test on explicit matrices (e.g. SL_2(Z) generators).
GodementReport godement_report(const std::vector<RatMatrix>& matrices,
                               const std::vector<std::string>& labels);

}  // namespace arithlat
