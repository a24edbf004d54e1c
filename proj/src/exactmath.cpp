#include <arithlat/exactmath.hpp>

#include <cctype>
#include <cstdlib>

namespace arithlat {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidPlace: return "InvalidPlace";
    case ErrorCode::SquareParameter: return "SquareParameter";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotNormOne: return "NotNormOne";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonFunctorial: return "NonFunctorial";
    case ErrorCode::WeightAbsent: return "WeightAbsent";
    case ErrorCode::DependentSpan: return "DependentSpan";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotGaloisStable: return "NotGaloisStable";
    case ErrorCode::DescentDegenerate: return "DescentDegenerate";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::InsufficientUnits: return "InsufficientUnits";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::NotDivision: return "NotDivision";
    case ErrorCode::NotSplitAtInfinity: return "NotSplitAtInfinity";
    case ErrorCode::EvenDimension: return "EvenDimension";
    case ErrorCode::OddMultiplicityOfEven: return "OddMultiplicityOfEven";
    case ErrorCode::WitnessNotRational: return "WitnessNotRational";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::InvalidInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto parse_int = [&](const std::string& t) {
    if (t.empty() || t == "-" || t == "+") fail(ErrorCode::InvalidInput, "bad rational '" + s + "'");
    for (std::size_t k = 0; k < t.size(); ++k) {
      const char c = t[k];
      if (!(std::isdigit(static_cast<unsigned char>(c)) || (k == 0 && (c == '-' || c == '+'))))
        fail(ErrorCode::InvalidInput, "bad rational '" + s + "'");
    }
    return Integer(t[0] == '+' ? t.substr(1) : t);
  };
  return make_rational(parse_int(num), parse_int(den));
}

bool is_rational_square(const Rational& r) {
  if (sgn(r) < 0) return false;
  return mpz_perfect_square_p(r.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(r.get_den().get_mpz_t()) != 0;
}

namespace {

constexpr long kFactorLimit = 100'000'000;  // trial-division bound for squarefree parts

// n = s^2 * f with f squarefree, n != 0.
std::pair<Integer, Integer> split_square(Integer n) {
  const int sign = sgn(n);
  n = abs(n);
  Integer s = 1;
  Integer f = 1;
  for (long p = 2; Integer(p) * p <= n; ++p) {
    if (p > kFactorLimit) fail(ErrorCode::InvalidInput, "integer too large to factor: " + n.get_str());
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= p;
    if (e % 2 == 1) f *= p;
  }
  f *= n;
  return {s, sign < 0 ? Integer(-f) : f};
}

}  // namespace

SquareClass square_class(const Rational& r) {
  if (is_zero(r)) fail(ErrorCode::InvalidInput, "square class of zero");
  const Integer pq = r.get_num() * r.get_den();
  auto [s, f] = split_square(pq);
  return {f, make_rational(s, r.get_den())};
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  return split_square(n).first == 1;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

QuadField::QuadField(std::int64_t d) : d_(d) {
  if (d == 0 || d == 1) fail(ErrorCode::InvalidInput, "field parameter must be a non-square");
  if (!is_squarefree(Integer(static_cast<long>(d))))
    fail(ErrorCode::InvalidInput, "field parameter must be squarefree: " + std::to_string(d));
}

std::int64_t QuadExt::joint_field(const QuadExt& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  fail(ErrorCode::FieldMismatch,
       "Q(sqrt " + std::to_string(d_) + ") vs Q(sqrt " + std::to_string(o.d_) + ")");
}

QuadExt QuadExt::conjugate() const {
  QuadExt out = *this;
  out.y_ = -y_;
  return out;
}

Rational QuadExt::norm() const { return Rational(x_ * x_ - Rational(static_cast<long>(d_)) * y_ * y_); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) fail(ErrorCode::NotInvertible, "inverse of zero");
  const Rational n = norm();
  QuadExt out = *this;
  out.x_ = x_ / n;
  out.y_ = -y_ / n;
  return out;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = joint_field(o);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = joint_field(o);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  d_ = joint_field(o);
  if (sgn(y_) == 0 && sgn(o.y_) == 0) {
    x_ *= o.x_;
    return *this;
  }
  const Rational x = x_ * o.x_ + Rational(static_cast<long>(d_)) * y_ * o.y_;
  const Rational y = x_ * o.y_ + y_ * o.x_;
  x_ = x;
  y_ = y;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_rational()) {
    if (sgn(o.x_) == 0) fail(ErrorCode::NotInvertible, "division by zero");
    d_ = joint_field(o);
    x_ /= o.x_;
    y_ /= o.x_;
    return *this;
  }
  return *this *= o.inverse();
}

QuadExt QuadExt::operator-() const {
  QuadExt out = *this;
  out.x_ = -x_;
  out.y_ = -y_;
  return out;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (a.x_ != b.x_ || a.y_ != b.y_) return false;
  if (a.is_rational()) return true;
  return a.d_ == b.d_;
}

std::string to_string(const QuadExt& q, std::int64_t field_d) {
  const std::int64_t d = q.d() != 0 ? q.d() : field_d;
  return to_string(q.rational_part()) + "+" + to_string(q.irrational_part()) + "*sqrt(" +
         std::to_string(d) + ")";
}

QuadExt parse_quad(const std::string& s) {
  const auto star = s.find("*sqrt(");
  if (star == std::string::npos) return QuadExt(parse_rational(s));
  const auto plus = s.find('+', 1);
  if (plus == std::string::npos || plus > star || s.back() != ')')
    fail(ErrorCode::InvalidInput, "bad quadratic scalar '" + s + "'");
  const std::string dtext = s.substr(star + 6, s.size() - star - 7);
  char* end = nullptr;
  const long long d = std::strtoll(dtext.c_str(), &end, 10);
  if (dtext.empty() || *end != '\0') fail(ErrorCode::InvalidInput, "bad field parameter in '" + s + "'");
  const Rational x = parse_rational(s.substr(0, plus));
  const Rational y = parse_rational(s.substr(plus + 1, star - plus - 1));
  if (is_zero(y) && d == 0) return QuadExt(x);
  return QuadExt(x, y, QuadField(d));
}

QuadMatrix to_quad(const RatMatrix& m) {
  QuadMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = QuadExt(m(i, j));
  return out;
}

QuadVector to_quad(const RatVector& v) { return QuadVector(v.begin(), v.end()); }

std::optional<RatMatrix> to_rational(const QuadMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_rational()) return std::nullopt;
      out(i, j) = m(i, j).rational_part();
    }
  return out;
}

std::optional<RatVector> to_rational(const QuadVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_rational()) return std::nullopt;
    out.push_back(e.rational_part());
  }
  return out;
}

bool is_rational(const QuadMatrix& m) {
  for (const auto& e : m.entries())
    if (!e.is_rational()) return false;
  return true;
}

QuadMatrix galois_conjugate(const QuadMatrix& m) {
  QuadMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).conjugate();
  return out;
}

QuadVector galois_conjugate(const QuadVector& v) {
  QuadVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(e.conjugate());
  return out;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) fail(ErrorCode::InvalidInput, "non-integer entry " + to_string(m(i, j)));
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace arithlat
