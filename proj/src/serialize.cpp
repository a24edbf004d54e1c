#include "serialize.hpp"

namespace arithlat {

Json integer_string(const Integer& z) { return z.get_str(); }

Json rational_matrix(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json quad_matrix(const QuadMatrix& m, std::int64_t field_d) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(field_d == 0 ? to_string(m(i, j).rational_part()) : to_string(m(i, j), field_d));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const QuaternionAlgebra& alg) { return {{"a", to_string(alg.a())}, {"b", to_string(alg.b())}}; }

Json to_json(const RamificationReport& rep) {
  Json primes = Json::array();
  for (const auto& p : rep.ramified_primes) primes.push_back(integer_string(p));
  return {{"division", rep.division}, {"split_at_infinity", rep.split_at_infinity}, {"ramified_primes", primes}};
}

Json to_json(const UnitSet& units) {
  Json list = Json::array();
  for (const auto& u : units.elements) {
    Json t = Json::array();
    for (const auto& c : u.coeffs()) {
      if (!is_integer(c) || !c.get_num().fits_slong_p()) fail(ErrorCode::InvalidInput, "unit coefficient out of range");
      t.push_back(c.get_num().get_si());
    }
    list.push_back(std::move(t));
  }
  return {{"algebra", to_json(units.order.algebra())},
          {"height", units.height},
          {"count", units.elements.size()},
          {"units", list}};
}

Json to_json(const CGReport& rep) {
  Json mult = Json::object();
  for (const auto& [w, c] : rep.multiplicities) mult[std::to_string(w)] = c;
  return {{"r", rep.r}, {"s", rep.s}, {"multiplicities", mult}};
}

Json to_json(const QStructure& q) {
  Json witnesses = Json::object();
  for (std::size_t k = 0; k < q.keys.size(); ++k) witnesses[q.keys[k]] = rational_matrix(q.witnesses[k]);
  return {{"dim", q.dim()},
          {"ambient_dim", q.ambient_dim},
          {"field_d", q.field_d},
          {"basis", quad_matrix(q.basis, q.field_d)},
          {"witnesses", witnesses}};
}

Json to_json(const NonrationalityCertificate& cert) {
  return {{"span_dim", cert.span_dim},       {"closed", cert.closed},
          {"equals_psi_D", cert.equals_psi_D}, {"division", cert.division},
          {"pass", cert.pass},               {"conclusion", cert.conclusion}};
}

Json to_json(const GodementReport& rep) {
  return {{"checked", rep.checked},
          {"unipotent", rep.unipotent_labels},
          {"nontrivial_unipotent", rep.nontrivial_unipotent}};
}

Json to_json(const LatticeData& data) {
  Json blocks = Json::array();
  for (const auto& b : data.blocks) blocks.push_back({{"dimension", b.dimension}, {"multiplicity", b.multiplicity}});
  Json hnf = Json::array();
  for (std::size_t i = 0; i < data.lattice.hnf().rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < data.lattice.hnf().cols(); ++j) row.push_back(integer_string(data.lattice.hnf()(i, j)));
    hnf.push_back(std::move(row));
  }
  Json gens = Json::array();
  for (std::size_t k = 0; k < data.witnesses.size(); ++k)
    gens.push_back({{"key", data.generator_keys[k]}, {"witness", rational_matrix(data.witnesses[k])}});
  Json trace = Json::array();
  for (const auto& d : data.denominator_trace) trace.push_back(integer_string(d));

  return {{"kind", kind_name(data.kind)},
          {"algebra", data.algebra ? to_json(*data.algebra) : Json(nullptr)},
          {"n", data.n},
          {"blocks", blocks},
          {"field_d", data.field_d},
          {"basis", quad_matrix(data.basis, data.field_d)},
          {"lattice", {{"denominator", integer_string(data.lattice.denominator())}, {"hnf", hnf}}},
          {"generators", gens},
          {"saturation", {{"iterations", data.saturation_iterations}, {"denominator_trace", trace}}},
          {"certificates",
           {{"godement", to_json(data.godement)},
            {"division", data.ramification ? to_json(*data.ramification) : Json(nullptr)},
            {"cocompact", data.cocompact}}}};
}

Json to_json(const VerificationReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"pass", rep.all_pass()}, {"checks", checks}};
}

}  // namespace arithlat
