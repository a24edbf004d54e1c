#include <arithlat/lattice_basis.hpp>

#include <algorithm>

namespace arithlat {

namespace {

using Row = std::vector<Integer>;

void sub_multiple(Row& target, const Row& source, const Integer& q) {
  for (std::size_t k = 0; k < target.size(); ++k) target[k] -= q * source[k];
}

}  // namespace

LatticeBasis::LatticeBasis(IntMatrix basis, Integer denominator)
    : basis_(std::move(basis)), denominator_(std::move(denominator)) {
  Integer g = denominator_;
  for (const auto& e : basis_.entries()) g = gcd(g, e);
  if (g > 1) {
    for (std::size_t i = 0; i < basis_.rows(); ++i)
      for (std::size_t j = 0; j < basis_.cols(); ++j) basis_(i, j) /= g;
    denominator_ /= g;
  }
}

LatticeBasis hnf(const IntMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<Row> a;
  a.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));

  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    // Euclid on column c over rows r.. until a single nonzero entry remains.
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i) {
        if (sgn(a[i][c]) == 0) continue;
        if (best == a.size() || abs(a[i][c]) < abs(a[best][c])) best = i;
      }
      if (best == a.size()) fail(ErrorCode::RankDeficient, "rowspan rank below " + std::to_string(n));
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (sgn(a[i][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        sub_multiple(a[i], a[r], q);
        if (sgn(a[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(a[r][c]) < 0)
      for (auto& e : a[r]) e = -e;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (sgn(q) != 0) sub_multiple(a[i], a[r], q);
    }
    ++r;
    // Drop rows that became zero to keep later passes short.
    a.erase(std::remove_if(a.begin() + static_cast<std::ptrdiff_t>(r), a.end(),
                           [](const Row& row) {
                             return std::all_of(row.begin(), row.end(),
                                                [](const Integer& e) { return sgn(e) == 0; });
                           }),
            a.end());
  }

  IntMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = a[i][j];
  return LatticeBasis(std::move(basis), Integer(1));
}

LatticeBasis LatticeBasis::standard(std::size_t n) { return arithlat::hnf(IntMatrix::identity(n)); }

LatticeBasis LatticeBasis::from_rows(const RatMatrix& rows) {
  Integer den = 1;
  for (const auto& e : rows.entries()) den = lcm(den, e.get_den());
  IntMatrix scaled(rows.rows(), rows.cols());
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) {
      const Rational& e = rows(i, j);
      scaled(i, j) = e.get_num() * (den / e.get_den());
    }
  const LatticeBasis integral = arithlat::hnf(scaled);
  return LatticeBasis(integral.basis_, den);
}

RatMatrix LatticeBasis::rational_basis() const {
  RatMatrix out(basis_.rows(), basis_.cols());
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t j = 0; j < basis_.cols(); ++j)
      out(i, j) = make_rational(basis_(i, j), denominator_);
  return out;
}

bool LatticeBasis::contains(const RatVector& v) const {
  if (v.size() != rank()) fail(ErrorCode::DimensionMismatch, "lattice membership");
  // Back-substitute x * B = den * v over the upper-triangular basis.
  const std::size_t n = rank();
  RatVector rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs[j] = v[j] * Rational(denominator_);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational x = rhs[j] / Rational(basis_(j, j));
    if (!is_integer(x)) return false;
    if (is_zero(x)) continue;
    for (std::size_t k = j; k < n; ++k) rhs[k] -= x * Rational(basis_(j, k));
  }
  return true;
}

bool LatticeBasis::contains(const LatticeBasis& other) const {
  const RatMatrix rows = other.rational_basis();
  for (std::size_t i = 0; i < rows.rows(); ++i)
    if (!contains(rows.row(i))) return false;
  return true;
}

LatticeBasis LatticeBasis::image(const RatMatrix& g) const {
  if (g.rows() != rank() || g.cols() != rank()) fail(ErrorCode::DimensionMismatch, "lattice image");
  return from_rows(rational_basis() * g.transpose());
}

bool LatticeBasis::maps_into_self(const RatMatrix& g) const {
  if (g.rows() != rank() || g.cols() != rank()) fail(ErrorCode::DimensionMismatch, "lattice image");
  const RatMatrix images = rational_basis() * g.transpose();
  for (std::size_t i = 0; i < images.rows(); ++i)
    if (!contains(images.row(i))) return false;
  return true;
}

LatticeBasis LatticeBasis::scaled(const Rational& factor) const {
  if (is_zero(factor)) fail(ErrorCode::RankDeficient, "scaling by zero");
  return from_rows(factor * rational_basis());
}

LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.rank() != b.rank()) fail(ErrorCode::DimensionMismatch, "lattice_sum rank mismatch");
  const Integer den = lcm(a.denominator(), b.denominator());
  const Integer fa = den / a.denominator();
  const Integer fb = den / b.denominator();
  const std::size_t n = a.rank();
  IntMatrix rows(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows(i, j) = a.hnf()(i, j) * fa;
      rows(n + i, j) = b.hnf()(i, j) * fb;
    }
  return LatticeBasis::from_rows(make_rational(1, den) * to_rational(rows));
}

}  // namespace arithlat
