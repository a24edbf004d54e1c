#include <arithlat/units.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace arithlat;

namespace {

std::vector<oracle::Quad> as_tuples(const UnitSet& units) {
  std::vector<oracle::Quad> out;
  for (const auto& u : units.elements) {
    oracle::Quad q{};
    for (std::size_t k = 0; k < 4; ++k) q[k] = u[k].get_num().get_si();
    out.push_back(q);
  }
  return out;
}

bool contains(const UnitSet& units, const std::array<Rational, 4>& c) {
  return std::any_of(units.elements.begin(), units.elements.end(),
                     [&](const QuaternionElem& u) { return u.coeffs() == c; });
}

}  // namespace

TEST(Units, EnumerationExamples) {
  const QuaternionOrder order(QuaternionAlgebra(2, 3));
  // i+j+k has norm -2-3+6 = 1.
  EXPECT_EQ(as_tuples(enumerate_norm_one(order, 1)),
            (std::vector<oracle::Quad>{{-1, 0, 0, 0}, {0, -1, -1, -1}, {0, -1, -1, 1}, {0, -1, 1, -1}, {0, -1, 1, 1}, {0, 1, -1, -1}, {0, 1, -1, 1}, {0, 1, 1, -1}, {0, 1, 1, 1}, {1, 0, 0, 0}}));
  EXPECT_EQ(enumerate_norm_one(order, 0).elements.size(), 2u);
  const UnitSet h3 = enumerate_norm_one(order, 3);
  EXPECT_TRUE(contains(h3, {1, 0, 0, 0}));
  EXPECT_TRUE(contains(h3, {3, 2, 0, 0}));
  EXPECT_TRUE(contains(h3, {2, 0, 1, 0}));
  EXPECT_TRUE(contains(h3, {0, 1, 1, 1}));
}

TEST(Units, MatchesNaiveOracle) {
  for (const auto& [a, b] : {std::pair{2L, 3L}, {-1L, 3L}, {5L, 7L}, {1L, 1L}, {3L, -2L}}) {
    const QuaternionOrder order(QuaternionAlgebra(a, b));
    const long oa = order.algebra().a().get_num().get_si();
    const long ob = order.algebra().b().get_num().get_si();
    for (long h = 1; h <= 4; ++h) EXPECT_EQ(as_tuples(enumerate_norm_one(order, h)), oracle::naive_units(oa, ob, h)) << a << "," << b << " H=" << h;
  }
}

TEST(Units, RationalParametersAreRescaled) {
  const QuaternionOrder order(QuaternionAlgebra(Rational(2, 9), 3));
  EXPECT_EQ(order.algebra().a(), 18);
  for (const auto& u : enumerate_norm_one(order, 3).elements) EXPECT_EQ(reduced_norm(u), 1);
}

TEST(Units, PsiTimesConjugateIsIdentity) {
  const UnitSet units = enumerate_norm_one(QuaternionOrder(QuaternionAlgebra(2, 3)), 6);
  for (const auto& u : units.elements)
    EXPECT_EQ(split_embedding(u) * split_embedding(quat_conj(u)), QuadMatrix::identity(2)) << unit_key(u);
}

TEST(SampleGroup, ContainsProductsAndInverses) {
  const QuaternionAlgebra alg(2, 3);
  const UnitSet gens{QuaternionOrder(alg), 3, {QuaternionElem(alg, {3, 2, 0, 0}), QuaternionElem(alg, {2, 0, 1, 0})}};
  const UnitSet closure = sample_group(gens, 2);
  EXPECT_TRUE(contains(closure, {6, 4, 3, 2}));
  std::set<std::string> keys;
  for (const auto& u : closure.elements) {
    EXPECT_EQ(reduced_norm(u), 1);
    keys.insert(unit_key(u));
  }
  for (const auto& u : closure.elements) EXPECT_TRUE(keys.count(unit_key(quat_conj(u)))) << unit_key(u);
  for (const auto& g : gens.elements) EXPECT_TRUE(keys.count(unit_key(g)));

  const UnitSet one{QuaternionOrder(alg), 1, {QuaternionElem::scalar(alg, 1)}};
  EXPECT_EQ(sample_group(one, 3).elements.size(), 1u);
}

TEST(SampleGroup, RejectsNonUnits) {
  const QuaternionAlgebra alg(2, 3);
  const UnitSet bad{QuaternionOrder(alg), 3, {QuaternionElem(alg, {2, 0, 0, 0})}};
  try {
    sample_group(bad, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormOne);
  }
}

TEST(Unipotent, Examples) {
  EXPECT_TRUE(is_unipotent(RatMatrix::identity(3)));
  EXPECT_TRUE(is_unipotent(RatMatrix{{1, 1}, {0, 1}}));
  EXPECT_FALSE(is_unipotent(split_embedding(QuaternionElem(QuaternionAlgebra(2, 3), {3, 2, 0, 0}))));
  try {
    is_unipotent(RatMatrix{{1, 2, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonSquare);
  }
}

TEST(Godement, DivisionAlgebraHasOnlyTrivialUnipotent) {
  for (long h : {3L, 8L, 12L}) {
    const GodementReport r = godement_report(enumerate_norm_one(QuaternionOrder(QuaternionAlgebra(2, 3)), h));
    EXPECT_FALSE(r.nontrivial_unipotent) << h;
    ASSERT_EQ(r.unipotent_labels.size(), 1u);
    EXPECT_EQ(r.unipotent_labels[0], "1,0,0,0");
  }
}

TEST(Godement, SplitCases) {
  const RatMatrix s{{0, -1}, {1, 0}}, t{{1, 1}, {0, 1}};
  const GodementReport r = godement_report({s, t}, {"S", "T"});
  EXPECT_TRUE(r.nontrivial_unipotent);
  EXPECT_EQ(r.unipotent_labels, std::vector<std::string>{"T"});
  EXPECT_EQ(godement_report({}, {}).checked, 0u);

  // In (1,1), 1 + j + k is unipotent since (j + k)^2 = 0.
  const GodementReport m2 = godement_report(enumerate_norm_one(QuaternionOrder(QuaternionAlgebra(1, 1)), 2));
  EXPECT_TRUE(m2.nontrivial_unipotent);
}
