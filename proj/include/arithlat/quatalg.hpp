#pragma once

// Rational quaternion algebras (a,b)/Q with i^2 = a, j^2 = b, k = ij = -ji.

#include <arithlat/exactmath.hpp>

#include <array>
#include <optional>
#include <vector>

namespace arithlat {

class QuaternionAlgebra {
public:
  // If a is a rational square and b is not, the algebra is re-presented as
  // (b, a), so that Q(sqrt a) is always a genuine quadratic splitting field
  // whenever one exists.
  QuaternionAlgebra(const Rational& a, const Rational& b);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  bool swapped() const noexcept { return swapped_; }

  // Both parameters squares: the algebra is M_2(Q) and the quadratic
  // splitting embedding is refused.
  bool both_squares() const noexcept { return !field_.has_value(); }
  // Q(sqrt a); throws SquareParameter when a is a square.
  const QuadField& splitting_field() const;
  // sqrt a as an element of the splitting field.
  QuadExt sqrt_a() const;

  friend bool operator==(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

private:
  Rational a_;
  Rational b_;
  bool swapped_ = false;
  std::optional<QuadField> field_;
  Rational sqrt_a_scale_;  // sqrt a = sqrt_a_scale_ * sqrt d
};

class QuaternionElem {
public:
  QuaternionElem(const QuaternionAlgebra& algebra, std::array<Rational, 4> coeffs)
      : algebra_(algebra), c_(std::move(coeffs)) {}

  static QuaternionElem scalar(const QuaternionAlgebra& algebra, const Rational& x) {
    return {algebra, {x, 0, 0, 0}};
  }
  static QuaternionElem basis(const QuaternionAlgebra& algebra, int index);  // 0:1 1:i 2:j 3:k

  const QuaternionAlgebra& algebra() const noexcept { return algebra_; }
  const std::array<Rational, 4>& coeffs() const noexcept { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }

  friend QuaternionElem operator+(const QuaternionElem& p, const QuaternionElem& q);
  friend QuaternionElem operator-(const QuaternionElem& p, const QuaternionElem& q);
  friend QuaternionElem operator*(const QuaternionElem& p, const QuaternionElem& q);
  friend bool operator==(const QuaternionElem& p, const QuaternionElem& q) {
    return p.algebra_ == q.algebra_ && p.c_ == q.c_;
  }
  // Lexicographic on coefficients (algebras assumed equal).
  friend bool operator<(const QuaternionElem& p, const QuaternionElem& q) { return p.c_ < q.c_; }

private:
  QuaternionAlgebra algebra_;
  std::array<Rational, 4> c_;
};

QuaternionElem quat_mul(const QuaternionElem& p, const QuaternionElem& q);
Rational reduced_norm(const QuaternionElem& q);
Rational reduced_trace(const QuaternionElem& q);
QuaternionElem quat_conj(const QuaternionElem& q);
QuaternionElem quat_inv(const QuaternionElem& q);

// Matrix of left multiplication by q in the basis {1, i, j, k}.
RatMatrix left_regular(const QuaternionElem& q);

// "x0,x1,x2,x3" with integers printed bare and non-integers as p/q.
std::string unit_key(const QuaternionElem& q);

struct Place {
  bool infinite = false;
  Integer prime;  // unused when infinite

  static Place infinity() { return {true, 0}; }
  static Place at(const Integer& p) { return {false, p}; }
};

// +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over Q_v.
// Odd p: exhaustive primitive solubility mod p^3; p = 2: mod 2^6.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

struct RamificationReport {
  bool division = false;
  bool split_at_infinity = false;
  std::vector<Integer> ramified_primes;  // ascending
  std::vector<Integer> examined_primes;  // primes dividing 2 * num(ab) * den(ab)
};

RamificationReport ramified_places(const QuaternionAlgebra& algebra);
bool is_division(const QuaternionAlgebra& algebra);
bool split_at_infinity(const QuaternionAlgebra& algebra);

// psi: D -> M_2(Q(sqrt a)), i -> diag(sqrt a, -sqrt a), j -> [[0,1],[b,0]].
QuadMatrix split_embedding(const QuaternionElem& q);

// Prime divisors of |n| in ascending order (n != 0).
std::vector<Integer> prime_divisors(const Integer& n);

}  // namespace arithlat
