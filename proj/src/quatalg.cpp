#include <arithlat/quatalg.hpp>

#include <algorithm>

namespace arithlat {

QuaternionAlgebra::QuaternionAlgebra(const Rational& a, const Rational& b) : a_(a), b_(b) {
  if (is_zero(a) || is_zero(b)) fail(ErrorCode::InvalidInput, "quaternion parameters must be nonzero");
  if (is_rational_square(a_) && !is_rational_square(b_)) {
    std::swap(a_, b_);
    swapped_ = true;
  }
  if (!is_rational_square(a_)) {
    const SquareClass sc = square_class(a_);
    if (!sc.squarefree.fits_slong_p()) fail(ErrorCode::InvalidInput, "splitting parameter out of range");
    field_.emplace(sc.squarefree.get_si());
    sqrt_a_scale_ = sc.root;
  }
}

const QuadField& QuaternionAlgebra::splitting_field() const {
  if (!field_) fail(ErrorCode::SquareParameter, "both parameters are squares; the algebra is split");
  return *field_;
}

QuadExt QuaternionAlgebra::sqrt_a() const { return QuadExt(0, sqrt_a_scale_, splitting_field()); }

QuaternionElem QuaternionElem::basis(const QuaternionAlgebra& algebra, int index) {
  std::array<Rational, 4> c{0, 0, 0, 0};
  c.at(static_cast<std::size_t>(index)) = 1;
  return {algebra, c};
}

namespace {

void require_same(const QuaternionElem& p, const QuaternionElem& q) {
  if (!(p.algebra() == q.algebra())) fail(ErrorCode::AlgebraMismatch, "operands from different algebras");
}

}  // namespace

QuaternionElem operator+(const QuaternionElem& p, const QuaternionElem& q) {
  require_same(p, q);
  std::array<Rational, 4> c;
  for (std::size_t k = 0; k < 4; ++k) c[k] = p[k] + q[k];
  return {p.algebra(), c};
}

QuaternionElem operator-(const QuaternionElem& p, const QuaternionElem& q) {
  require_same(p, q);
  std::array<Rational, 4> c;
  for (std::size_t k = 0; k < 4; ++k) c[k] = p[k] - q[k];
  return {p.algebra(), c};
}

QuaternionElem operator*(const QuaternionElem& p, const QuaternionElem& q) {
  require_same(p, q);
  const Rational& a = p.algebra().a();
  const Rational& b = p.algebra().b();
  const Rational ab = a * b;
  const auto& x = p.coeffs();
  const auto& y = q.coeffs();
  // ij = k, ji = -k, jk = -b i, kj = b i, ki = -a j, ik = a j, k^2 = -ab
  std::array<Rational, 4> c;
  c[0] = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - ab * x[3] * y[3];
  c[1] = x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2];
  c[2] = x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1];
  c[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
  return {p.algebra(), c};
}

QuaternionElem quat_mul(const QuaternionElem& p, const QuaternionElem& q) { return p * q; }

Rational reduced_norm(const QuaternionElem& q) {
  const Rational& a = q.algebra().a();
  const Rational& b = q.algebra().b();
  return Rational(q[0] * q[0] - a * q[1] * q[1] - b * q[2] * q[2] + a * b * q[3] * q[3]);
}

Rational reduced_trace(const QuaternionElem& q) { return Rational(2 * q[0]); }

QuaternionElem quat_conj(const QuaternionElem& q) {
  return {q.algebra(), {q[0], -q[1], -q[2], -q[3]}};
}

QuaternionElem quat_inv(const QuaternionElem& q) {
  const Rational n = reduced_norm(q);
  if (is_zero(n)) fail(ErrorCode::NotInvertible, "reduced norm is zero");
  const auto c = quat_conj(q).coeffs();
  return {q.algebra(), {c[0] / n, c[1] / n, c[2] / n, c[3] / n}};
}

RatMatrix left_regular(const QuaternionElem& q) {
  RatMatrix m(4, 4);
  for (int col = 0; col < 4; ++col) {
    const QuaternionElem image = q * QuaternionElem::basis(q.algebra(), col);
    for (std::size_t row = 0; row < 4; ++row) m(row, static_cast<std::size_t>(col)) = image[row];
  }
  return m;
}

std::string unit_key(const QuaternionElem& q) {
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) out += ",";
    out += is_integer(q[k]) ? q[k].get_num().get_str() : to_string(q[k]);
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  if (n == 0) fail(ErrorCode::InvalidInput, "prime divisors of zero");
  Integer m = abs(n);
  std::vector<Integer> out;
  for (long p = 2; Integer(p) * p <= m; ++p) {
    if (p > 100'000'000) fail(ErrorCode::InvalidInput, "integer too large to factor: " + n.get_str());
    if (m % p != 0) continue;
    out.emplace_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

namespace {

using u128 = unsigned __int128;

struct ModSearch {
  std::uint64_t p;
  int depth;
  std::vector<std::uint64_t> powers;  // p^0 .. p^depth
  std::uint64_t a;                    // residues mod p^depth
  std::uint64_t b;

  std::uint64_t mod_at(int level) const { return powers[static_cast<std::size_t>(level)]; }

  // z^2 - a x^2 - b y^2 == 0 mod p^level
  bool holds(const std::array<std::uint64_t, 3>& v, int level) const {
    const u128 m = mod_at(level);
    const u128 x = v[0] % m, y = v[1] % m, z = v[2] % m;
    const u128 lhs = (z * z) % m;
    const u128 rhs = ((a % m) * ((x * x) % m) % m + (b % m) * ((y * y) % m) % m) % m;
    return lhs == rhs;
  }

  bool lift(const std::array<std::uint64_t, 3>& v, int level, int fixed) const {
    if (level == depth) return true;
    const std::uint64_t step = mod_at(level);
    const int free0 = fixed == 0 ? 1 : 0;
    const int free1 = fixed == 2 ? 1 : 2;
    for (std::uint64_t s = 0; s < p; ++s)
      for (std::uint64_t t = 0; t < p; ++t) {
        auto w = v;
        w[static_cast<std::size_t>(free0)] += s * step;
        w[static_cast<std::size_t>(free1)] += t * step;
        if (holds(w, level + 1) && lift(w, level + 1, fixed)) return true;
      }
    return false;
  }

  // Primitive solutions, normalized so the first unit coordinate among
  // (z, x, y) equals 1.
  bool solvable() const {
    // fixed variable index into (x, y, z), and which others must be 0 mod p
    struct Case {
      int fixed;
      bool x_zero, z_zero;
    };
    const Case cases[] = {{2, false, false}, {0, false, true}, {1, true, true}};
    for (const auto& c : cases) {
      for (std::uint64_t s = 0; s < p; ++s)
        for (std::uint64_t t = 0; t < p; ++t) {
          std::array<std::uint64_t, 3> v{};
          v[static_cast<std::size_t>(c.fixed)] = 1;
          const int free0 = c.fixed == 0 ? 1 : 0;
          const int free1 = c.fixed == 2 ? 1 : 2;
          v[static_cast<std::size_t>(free0)] = s;
          v[static_cast<std::size_t>(free1)] = t;
          if (c.x_zero && v[0] % p != 0) continue;
          if (c.z_zero && v[2] % p != 0) continue;
          if (holds(v, 1) && lift(v, 1, c.fixed)) return true;
        }
    }
    return false;
  }
};

std::uint64_t residue(const Integer& n, std::uint64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), m);
  return r.get_ui();
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (is_zero(a) || is_zero(b)) fail(ErrorCode::InvalidInput, "Hilbert symbol of zero");
  if (place.infinite) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  if (!is_prime(place.prime)) fail(ErrorCode::InvalidPlace, place.prime.get_str() + " is not prime");
  if (place.prime > 5000)
    fail(ErrorCode::InvalidInput, "prime too large for exhaustive solubility: " + place.prime.get_str());

  // The symbol depends only on square classes.
  const Integer A = square_class(a).squarefree;
  const Integer B = square_class(b).squarefree;

  ModSearch search;
  search.p = place.prime.get_ui();
  search.depth = search.p == 2 ? 6 : 3;
  search.powers.push_back(1);
  for (int k = 0; k < search.depth; ++k) search.powers.push_back(search.powers.back() * search.p);
  const std::uint64_t m = search.powers.back();
  search.a = residue(A, m);
  search.b = residue(B, m);
  return search.solvable() ? 1 : -1;
}

RamificationReport ramified_places(const QuaternionAlgebra& algebra) {
  RamificationReport report;
  const Rational ab = algebra.a() * algebra.b();
  report.examined_primes = prime_divisors(Integer(2 * ab.get_num() * ab.get_den()));
  for (const auto& p : report.examined_primes)
    if (hilbert_symbol(algebra.a(), algebra.b(), Place::at(p)) == -1) report.ramified_primes.push_back(p);
  report.split_at_infinity = hilbert_symbol(algebra.a(), algebra.b(), Place::infinity()) == 1;
  report.division = !report.ramified_primes.empty() || !report.split_at_infinity;
  return report;
}

bool is_division(const QuaternionAlgebra& algebra) { return ramified_places(algebra).division; }

bool split_at_infinity(const QuaternionAlgebra& algebra) {
  return hilbert_symbol(algebra.a(), algebra.b(), Place::infinity()) == 1;
}

QuadMatrix split_embedding(const QuaternionElem& q) {
  const QuaternionAlgebra& alg = q.algebra();
  if (alg.both_squares())
    fail(ErrorCode::SquareParameter, "a = " + to_string(alg.a()) + " is a square; no quadratic splitting");
  const QuadExt s = alg.sqrt_a();
  const QuadExt b(alg.b());
  const QuadExt x0(q[0]), x1(q[1]), x2(q[2]), x3(q[3]);
  return QuadMatrix{{x0 + x1 * s, x2 + x3 * s}, {b * x2 - b * x3 * s, x0 - x1 * s}};
}

}  // namespace arithlat
