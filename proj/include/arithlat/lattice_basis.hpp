#pragma once

// Full-rank Z-lattices in Q^n stored as (1/denominator) * rowspan(basis) with
// basis in row Hermite normal form. Canonical form makes equality structural.

#include <arithlat/exactmath.hpp>

namespace arithlat {

class LatticeBasis {
public:
  // Z^n
  static LatticeBasis standard(std::size_t n);
  // Lattice generated by the rows of a rational matrix (rank must be full).
  static LatticeBasis from_rows(const RatMatrix& rows);

  std::size_t rank() const noexcept { return basis_.cols(); }
  const IntMatrix& hnf() const noexcept { return basis_; }
  const Integer& denominator() const noexcept { return denominator_; }

  // Basis vectors (rows) as rational vectors.
  RatMatrix rational_basis() const;
  bool contains(const RatVector& v) const;
  bool contains(const LatticeBasis& other) const;

  // g acts on column vectors; the image lattice is g(L).
  LatticeBasis image(const RatMatrix& g) const;
  // g(L) subset of L. For |det g| = 1 this is equivalent to g(L) = L.
  bool maps_into_self(const RatMatrix& g) const;

  LatticeBasis scaled(const Rational& factor) const;

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.denominator_ == b.denominator_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const LatticeBasis& a, const LatticeBasis& b) { return !(a == b); }

private:
  friend LatticeBasis hnf(const IntMatrix& m);
  LatticeBasis(IntMatrix basis, Integer denominator);

  IntMatrix basis_;
  Integer denominator_ = 1;
};

// Unique row HNF of the Z-rowspan of m: upper triangular, positive pivots,
// entries above a pivot reduced into [0, pivot). Throws RankDeficient.
LatticeBasis hnf(const IntMatrix& m);

LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b);
inline bool lattice_eq(const LatticeBasis& a, const LatticeBasis& b) { return a == b; }

}  // namespace arithlat
