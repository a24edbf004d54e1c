#pragma once

// JSON forms of the library's reports. Rationals and field elements are
// strings ("p/q", "p/q+r/s*sqrt(d)"); counts, dimensions and unit
// coordinates are JSON integers.

#include <arithlat/latticekit.hpp>

#include <json.hpp>

namespace arithlat {

using Json = nlohmann::json;

Json to_json(const QuaternionAlgebra& alg);
Json to_json(const RamificationReport& rep);
Json to_json(const UnitSet& units);
Json to_json(const CGReport& rep);
Json to_json(const QStructure& q);
Json to_json(const NonrationalityCertificate& cert);
Json to_json(const GodementReport& rep);
Json to_json(const LatticeData& data);
Json to_json(const VerificationReport& rep);

Json rational_matrix(const RatMatrix& m);
Json quad_matrix(const QuadMatrix& m, std::int64_t field_d);
Json integer_string(const Integer& z);

}  // namespace arithlat
