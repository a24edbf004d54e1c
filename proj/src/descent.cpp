#include <arithlat/descent.hpp>

#include <numeric>

namespace arithlat {

namespace {

Rational rational_sqrt(const Rational& r) {
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
  return make_rational(n, d);
}

QuadExt root_of_a(const QuaternionAlgebra& alg) {
  return alg.both_squares() ? QuadExt(rational_sqrt(alg.a())) : alg.sqrt_a();
}

std::int64_t field_of(const QuaternionAlgebra& alg) {
  return alg.both_squares() ? 0 : alg.splitting_field().d();
}

// Scale to integer entries with gcd 1.
RatVector primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& e : v) l = lcm(l, e.get_den());
  Integer g = 0;
  for (const auto& e : v) g = gcd(g, Rational(e * l).get_num());
  if (g == 0) fail(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  RatVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.emplace_back(Rational(e * l) / Rational(g));
  return out;
}

QuadVector scale(const QuadExt& s, const QuadVector& v) {
  QuadVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(s * e);
  return out;
}

bool is_zero_vector(const QuadVector& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

void require_unit_determinant(const RatMatrix& w, const std::string& key) {
  if (determinant(w) != 1) fail(ErrorCode::NotUnimodular, "restricted matrix of " + key + " has det != 1");
}

QuadMatrix vec_column_major(const QuadMatrix& x) {
  QuadMatrix out(x.rows() * x.cols(), 1);
  for (std::size_t j = 0; j < x.cols(); ++j)
    for (std::size_t i = 0; i < x.rows(); ++i) out(j * x.rows() + i, 0) = x(i, j);
  return out;
}

// Fill units, keys and witnesses, and check the intertwining relation
// rep(u) basis = basis witness(u) for each unit.
void attach_witnesses(QStructure& q, const UnitSet& units, const std::vector<RatMatrix>* known) {
  q.units = units.elements;
  q.keys.clear();
  q.witnesses.clear();
  for (std::size_t k = 0; k < q.units.size(); ++k) {
    const QuaternionElem& u = q.units[k];
    q.keys.push_back(unit_key(u));
    RatMatrix w = known ? (*known)[k] : q.witness(u);
    if (known && q.rep(u) * q.basis != q.basis * to_quad(w))
      fail(ErrorCode::NotInvariant, "descended basis does not intertwine for " + q.keys.back());
    require_unit_determinant(w, q.keys.back());
    q.witnesses.push_back(std::move(w));
  }
}

std::vector<QuadMatrix> tensor_samples(const QStructure& left, const QStructure& right) {
  std::vector<QuadMatrix> out;
  out.reserve(left.witnesses.size());
  for (std::size_t k = 0; k < left.witnesses.size(); ++k)
    out.push_back(to_quad(kron(left.witnesses[k], right.witnesses[k])));
  return out;
}

// Shared tail of the inductive constructions: descend the summand p (given
// in ambient tensor coordinates, equivariant for the target rep) through the
// rational structure tq of the tensor space.
QStructure descend_through(const QuadMatrix& tq, const RatMatrix& p, const std::vector<QuadMatrix>& samples,
                           std::int64_t d, UnitRep rep, const UnitSet& units, std::uint64_t seed,
                           bool isotypic) {
  const GaloisContext ctx{d};
  const QuadMatrix pq = to_quad(p);
  const QuadMatrix in_tensor_coords = inverse(tq) * pq;
  if (isotypic && !isotypic_stability_check(ctx, samples, in_tensor_coords))
    fail(ErrorCode::NotGaloisStable, "isotypic component is not Galois stable");
  const Descent desc = descend_summand(ctx, samples, in_tensor_coords, seed);
  const auto t = solve(pq, tq * to_quad(desc.basis));
  if (!t) fail(ErrorCode::DescentDegenerate, "descended basis left the summand");

  QStructure q;
  q.field_d = d;
  q.ambient_dim = p.cols();
  q.basis = *t;
  q.rep = std::move(rep);
  attach_witnesses(q, units, &desc.witnesses);
  return q;
}

}  // namespace

QuadMatrix psi_matrix(const QuaternionElem& u) {
  const QuaternionAlgebra& alg = u.algebra();
  if (!alg.both_squares()) return split_embedding(u);
  const QuadExt s = root_of_a(alg);
  const QuadExt b(alg.b());
  const QuadExt x0(u[0]), x1(u[1]), x2(u[2]), x3(u[3]);
  return QuadMatrix{{x0 + x1 * s, x2 + x3 * s}, {b * x2 - b * x3 * s, x0 - x1 * s}};
}

RatMatrix QStructure::witness(const QuaternionElem& u) const {
  const auto w = solve(basis, rep(u) * basis);
  if (!w) fail(ErrorCode::NotInvariant, "rep(" + unit_key(u) + ") leaves the structure");
  auto r = to_rational(*w);
  if (!r) fail(ErrorCode::WitnessNotRational, "restricted matrix of " + unit_key(u) + " is irrational");
  return *r;
}

RatVector galois_average(const GaloisContext& ctx, const QuadVector& v) {
  std::size_t first = 0;
  while (first < v.size() && v[first].is_zero()) ++first;
  if (first == v.size()) fail(ErrorCode::ZeroVector, "Galois average of the zero vector");
  const QuadVector n = scale(v[first].inverse(), v);
  const QuadVector c = ctx.apply(n);
  RatVector out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const QuadExt s = n[k] + c[k];
    if (!s.is_rational()) fail(ErrorCode::InvalidInput, "vector is not over the context field");
    out.push_back(s.rational_part());
  }
  return out;
}

bool isotypic_stability_check(const GaloisContext& ctx, const std::vector<QuadMatrix>& samples,
                              const QuadMatrix& basis) {
  for (const auto& s : samples) {
    if (s.cols() != basis.rows()) fail(ErrorCode::DimensionMismatch, "sample does not act on the ambient");
    if (!spans_contain(basis, s * basis)) fail(ErrorCode::NotInvariant, "span is not invariant under a sample");
  }
  return same_column_span(basis, ctx.apply(basis));
}

Descent descend_summand(const GaloisContext& ctx, const std::vector<QuadMatrix>& samples,
                        const QuadMatrix& summand, std::uint64_t seed) {
  const std::size_t n = summand.rows();
  const std::size_t dim = summand.cols();
  if (dim == 0) fail(ErrorCode::InvalidInput, "empty summand");
  if (rank(summand) != dim) fail(ErrorCode::RankDeficient, "summand basis is dependent");
  if (!isotypic_stability_check(ctx, samples, summand))
    fail(ErrorCode::NotGaloisStable, "summand span is not stable under sqrt d -> -sqrt d");

  std::vector<RatVector> chosen;
  auto offer = [&](const RatVector& r) {
    if (chosen.size() == dim) return;
    bool zero = true;
    for (const auto& e : r) zero = zero && is_zero(e);
    if (zero) return;
    std::vector<RatVector> trial = chosen;
    trial.push_back(r);
    if (rank(from_columns(n, trial)) == trial.size()) chosen = std::move(trial);
  };
  auto trace = [&](const QuadVector& v) {
    const QuadVector c = ctx.apply(v);
    RatVector out;
    for (std::size_t k = 0; k < n; ++k) out.push_back((v[k] + c[k]).rational_part());
    return out;
  };

  std::vector<QuadVector> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(summand.col(j));
  for (const auto& b : cols) offer(galois_average(ctx, b));
  if (chosen.size() < dim) {
    for (const auto& b : cols) offer(trace(b));
    if (ctx.d != 0) {
      const QuadExt root = QuadExt::sqrt_d(QuadField(ctx.d));
      for (const auto& b : cols) offer(trace(scale(root, b)));
    }
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64 && chosen.size() < dim; ++attempt) {
    QuadVector mix(n);
    for (const auto& b : cols) {
      QuadExt c(draw_int(rng, -3, 3));
      if (ctx.d != 0) c = c + QuadExt(0, draw_int(rng, -3, 3), QuadField(ctx.d));
      for (std::size_t k = 0; k < n; ++k) mix[k] += c * b[k];
    }
    if (!is_zero_vector(mix)) offer(galois_average(ctx, mix));
  }
  if (chosen.size() < dim)
    fail(ErrorCode::DescentDegenerate, "found " + std::to_string(chosen.size()) + " of " +
                                           std::to_string(dim) + " independent rational vectors");

  std::vector<RatVector> prim;
  for (const auto& r : chosen) prim.push_back(primitive(r));
  Descent out;
  out.basis = from_columns(n, prim);
  const QuadMatrix rq = to_quad(out.basis);
  if (!same_column_span(rq, summand)) fail(ErrorCode::DescentDegenerate, "rational basis spans a different space");
  for (const auto& s : samples) {
    const auto w = solve(rq, s * rq);
    if (!w) fail(ErrorCode::NotInvariant, "sample leaves the rational span");
    auto r = to_rational(*w);
    if (!r) fail(ErrorCode::WitnessNotRational, "sample does not preserve the rational span");
    out.witnesses.push_back(std::move(*r));
  }
  return out;
}

QStructure rationalize_sym_even(int m, const UnitSet& units, std::uint64_t seed) {
  if (m < 0) fail(ErrorCode::InvalidInput, "negative degree");
  if (m % 2 != 0) fail(ErrorCode::OddDegree, "Sym^" + std::to_string(m) + " o psi has no rational form");
  const QuaternionAlgebra& alg = units.order.algebra();
  const std::int64_t d = field_of(alg);
  UnitRep rep = [m](const QuaternionElem& u) { return sym_power(psi_matrix(u), m).matrix; };

  if (m <= 2) {
    QStructure q;
    q.field_d = d;
    q.ambient_dim = static_cast<std::size_t>(m) + 1;
    if (m == 0) {
      q.basis = QuadMatrix::identity(1);
    } else {
      std::vector<QuadVector> cols;
      for (int e = 1; e <= 3; ++e) cols.push_back(trace_zero_coords(psi_matrix(QuaternionElem::basis(alg, e))));
      q.basis = from_columns(3, cols);
    }
    q.rep = std::move(rep);
    attach_witnesses(q, units, nullptr);
    return q;
  }

  const QStructure lower = rationalize_sym_even(m - 2, units, seed);
  const QStructure two = rationalize_sym_even(2, units, seed);
  const RatMatrix p = summand_embedding(tensor_builder(sym_builder(m - 2), sym_builder(2)), m, 0);
  return descend_through(kron(lower.basis, two.basis), p, tensor_samples(lower, two), d, std::move(rep), units,
                         seed + static_cast<std::uint64_t>(m), false);
}

QStructure build_odd_pair_structure(int l, const UnitSet& units, std::uint64_t seed) {
  if (l < 1) fail(ErrorCode::InvalidInput, "pair index must be at least 1");
  const QuaternionAlgebra& alg = units.order.algebra();
  const std::int64_t d = field_of(alg);
  const int w = 2 * l - 1;
  UnitRep rep = [w](const QuaternionElem& u) {
    const QuadMatrix s = sym_power(psi_matrix(u), w).matrix;
    return block_diag(s, s);
  };

  if (l == 1) {
    QStructure q;
    q.field_d = d;
    q.ambient_dim = 4;
    QuadMatrix basis(4, 0);
    for (int e = 0; e < 4; ++e) basis = hstack(basis, vec_column_major(psi_matrix(QuaternionElem::basis(alg, e))));
    q.basis = basis;
    q.rep = std::move(rep);
    attach_witnesses(q, units, nullptr);
    return q;
  }

  const QStructure lower = build_odd_pair_structure(l - 1, units, seed);
  const QStructure two = rationalize_sym_even(2, units, seed);
  const RepBuilder pair = sum_builder(sym_builder(w - 2), sym_builder(w - 2));
  const RepBuilder builder = tensor_builder(pair, sym_builder(2));
  const RatMatrix p = hstack(summand_embedding(builder, w, 0), summand_embedding(builder, w, 1));
  return descend_through(kron(lower.basis, two.basis), p, tensor_samples(lower, two), d, std::move(rep), units,
                         seed + 1000 + static_cast<std::uint64_t>(l), true);
}

NonrationalityCertificate nonrationality_certificate(const UnitSet& units) {
  const QuaternionAlgebra& alg = units.order.algebra();
  // 2x2 matrices over Q(sqrt d) as 8 rational coordinates.
  auto coords = [](const QuadMatrix& m) {
    RatVector out;
    for (const auto& e : m.entries()) {
      out.push_back(e.rational_part());
      out.push_back(e.irrational_part());
    }
    return out;
  };

  std::vector<RatVector> images;
  for (const auto& u : units.elements) images.push_back(coords(psi_matrix(u)));
  NonrationalityCertificate cert;
  if (images.empty()) fail(ErrorCode::InsufficientUnits, "no units supplied");
  const RatMatrix span = from_columns(8, images);
  const auto ech = rref(span);
  cert.span_dim = ech.pivots.size();
  if (cert.span_dim < 4)
    fail(ErrorCode::InsufficientUnits,
         "units span " + std::to_string(cert.span_dim) + " dimensions; raise the height");

  std::vector<QuadMatrix> basis;
  for (auto c : ech.pivots) basis.push_back(psi_matrix(units.elements[c]));
  std::vector<RatVector> products;
  for (const auto& x : basis)
    for (const auto& y : basis) products.push_back(coords(x * y));
  cert.closed = spans_contain(span, from_columns(8, products));

  std::vector<RatVector> std_images;
  for (int e = 0; e < 4; ++e) std_images.push_back(coords(psi_matrix(QuaternionElem::basis(alg, e))));
  cert.equals_psi_D = same_column_span(span, from_columns(8, std_images));
  cert.division = ramified_places(alg).division;
  cert.pass = cert.span_dim == 4 && cert.closed && cert.equals_psi_D && cert.division;
  if (cert.pass) {
    cert.conclusion = "span of psi(units) is a division algebra, so psi has no Q-form";
  } else if (!cert.division) {
    cert.conclusion = "no certificate: the algebra splits over Q";
  } else {
    cert.conclusion = "no certificate: span is not psi(D)";
  }
  return cert;
}

}  // namespace arithlat
