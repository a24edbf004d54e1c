#pragma once

// Rational forms of representations defined over Q(sqrt d): Galois
// averaging, descent of invariant subspaces, the inductive construction for
// even symmetric powers, the odd-pair structures, and the certificate that
// the standard representation itself has no rational form.

#include <arithlat/symrep.hpp>
#include <arithlat/units.hpp>

#include <functional>

namespace arithlat {

// sigma: sqrt d -> -sqrt d, applied entrywise.
struct GaloisContext {
  std::int64_t d;

  QuadVector apply(const QuadVector& v) const { return galois_conjugate(v); }
  QuadMatrix apply(const QuadMatrix& m) const { return galois_conjugate(m); }
};

// Representation of the unit group on the ambient K-space.
using UnitRep = std::function<QuadMatrix(const QuaternionElem&)>;

struct QStructure {
  std::int64_t field_d = 0;
  std::size_t ambient_dim = 0;
  QuadMatrix basis;  // columns; rational span of these is the Q-form
  UnitRep rep;
  std::vector<QuaternionElem> units;
  std::vector<std::string> keys;       // unit_key of units
  std::vector<RatMatrix> witnesses;    // rep(u) restricted to basis, per unit

  std::size_t dim() const { return basis.cols(); }
  // Recomputes the restricted matrix of rep(u); WitnessNotRational if any
  // entry is irrational.
  RatMatrix witness(const QuaternionElem& u) const;
};

// Normalize the first nonzero coordinate to 1, return v + sigma(v).
RatVector galois_average(const GaloisContext& ctx, const QuadVector& v);

struct Descent {
  RatMatrix basis;                  // primitive integer columns
  std::vector<RatMatrix> witnesses; // one per sample
};

constexpr std::uint64_t kDefaultSeed = 20240607;

// summand columns span a subspace invariant under every sample and stable
// under sigma. Returns a rational basis of the same K-span.
Descent descend_summand(const GaloisContext& ctx, const std::vector<QuadMatrix>& samples,
                        const QuadMatrix& summand, std::uint64_t seed = kDefaultSeed);

// True iff sigma(span) = span; NotInvariant if some sample leaves it.
bool isotypic_stability_check(const GaloisContext& ctx, const std::vector<QuadMatrix>& samples,
                              const QuadMatrix& basis);

// Q-form of Sym^m o psi on the given units. m even; m = 0 is the trivial
// representation.
QStructure rationalize_sym_even(int m, const UnitSet& units, std::uint64_t seed = kDefaultSeed);

// Q-form of (Sym^{2l-1} + Sym^{2l-1}) o psi. The ambient is two stacked
// copies of the monomial basis; for l = 1 this is M_2 by columns.
QStructure build_odd_pair_structure(int l, const UnitSet& units, std::uint64_t seed = kDefaultSeed);

struct NonrationalityCertificate {
  std::size_t span_dim = 0;
  bool closed = false;        // span is a subalgebra
  bool equals_psi_D = false;  // span = psi(D)
  bool division = false;      // norm form anisotropic over Q
  bool pass = false;
  std::string conclusion;
};

// Premises of: psi(units) spans a division algebra => psi has no Q-form.
NonrationalityCertificate nonrationality_certificate(const UnitSet& units);

// psi when a is not a square; otherwise the rational splitting with
// sqrt a in Q.
QuadMatrix psi_matrix(const QuaternionElem& u);

}  // namespace arithlat
