#include <arithlat/units.hpp>

#include <algorithm>
#include <map>

namespace arithlat {

namespace {

QuaternionAlgebra integral_presentation(const QuaternionAlgebra& alg) {
  const Integer da = alg.a().get_den();
  const Integer db = alg.b().get_den();
  return QuaternionAlgebra(alg.a() * Rational(da * da), alg.b() * Rational(db * db));
}

long max_abs_coeff(const std::vector<QuaternionElem>& elems) {
  Rational best = 0;
  for (const auto& u : elems)
    for (const auto& c : u.coeffs()) best = std::max(best, Rational(abs(c)));
  return is_integer(best) && best.get_num().fits_slong_p() ? best.get_num().get_si() : -1;
}

}  // namespace

QuaternionOrder::QuaternionOrder(const QuaternionAlgebra& algebra)
    : algebra_(integral_presentation(algebra)) {}

UnitSet enumerate_norm_one(const QuaternionOrder& order, long height) {
  if (height < 0) fail(ErrorCode::InvalidInput, "height must be non-negative");
  const QuaternionAlgebra& alg = order.algebra();
  const Integer a = alg.a().get_num();
  const Integer b = alg.b().get_num();
  const Integer ab = a * b;

  std::vector<QuaternionElem> found;
  const Integer bound = height;
  for (long x1 = -height; x1 <= height; ++x1) {
    const Integer t1 = 1 + a * x1 * x1;
    for (long x2 = -height; x2 <= height; ++x2) {
      const Integer t2 = t1 + b * x2 * x2;
      for (long x3 = -height; x3 <= height; ++x3) {
        // x0^2 = 1 + a x1^2 + b x2^2 - ab x3^2
        const Integer rhs = t2 - ab * x3 * x3;
        if (sgn(rhs) < 0 || mpz_perfect_square_p(rhs.get_mpz_t()) == 0) continue;
        const Integer x0 = sqrt(rhs);
        if (x0 > bound) continue;
        found.push_back(QuaternionElem(alg, {Rational(x0), x1, x2, x3}));
        if (x0 != 0) found.push_back(QuaternionElem(alg, {Rational(-x0), x1, x2, x3}));
      }
    }
  }
  found.push_back(QuaternionElem::scalar(alg, 1));
  found.push_back(QuaternionElem::scalar(alg, -1));
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return UnitSet{order, height, std::move(found)};
}

UnitSet sample_group(const UnitSet& units, int word_length) {
  if (word_length < 1) fail(ErrorCode::InvalidInput, "word length must be at least 1");
  std::vector<QuaternionElem> gens;
  for (const auto& u : units.elements) {
    if (reduced_norm(u) != 1) fail(ErrorCode::NotNormOne, "sample_group input " + unit_key(u));
    gens.push_back(u);
    gens.push_back(quat_conj(u));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<QuaternionElem> all = gens;
  std::vector<QuaternionElem> frontier = gens;
  for (int len = 2; len <= word_length; ++len) {
    std::vector<QuaternionElem> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) next.push_back(w * g);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<QuaternionElem> fresh;
    std::set_difference(next.begin(), next.end(), all.begin(), all.end(), std::back_inserter(fresh));
    std::vector<QuaternionElem> merged;
    std::merge(all.begin(), all.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
    all = std::move(merged);
    frontier = std::move(fresh);
  }
  UnitSet out{units.order, max_abs_coeff(all), std::move(all)};
  return out;
}

GodementReport godement_report(const UnitSet& units) {
  GodementReport report;
  const QuaternionAlgebra& alg = units.order.algebra();
  for (std::size_t idx = 0; idx < units.elements.size(); ++idx) {
    const QuaternionElem& u = units.elements[idx];
    bool unipotent = false;
    bool identity = false;
    if (alg.both_squares()) {
      const RatMatrix m = left_regular(u);
      unipotent = is_unipotent(m);
      identity = is_identity(m);
    } else {
      const QuadMatrix m = split_embedding(u);
      unipotent = is_unipotent(m);
      identity = is_identity(m);
    }
    ++report.checked;
    if (!unipotent) continue;
    report.unipotent_indices.push_back(idx);
    report.unipotent_labels.push_back(unit_key(u));
    if (!identity) report.nontrivial_unipotent = true;
  }
  return report;
}

GodementReport godement_report(const std::vector<RatMatrix>& matrices,
                               const std::vector<std::string>& labels) {
  if (labels.size() != matrices.size()) fail(ErrorCode::DimensionMismatch, "one label per matrix");
  GodementReport report;
  for (std::size_t idx = 0; idx < matrices.size(); ++idx) {
    ++report.checked;
    if (!is_unipotent(matrices[idx])) continue;
    report.unipotent_indices.push_back(idx);
    report.unipotent_labels.push_back(labels[idx]);
    if (!is_identity(matrices[idx])) report.nontrivial_unipotent = true;
  }
  return report;
}

}  // namespace arithlat
