#include <arithlat/latticekit.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace arithlat;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidInput;
}

RatVector random_vector(std::mt19937_64& rng, std::size_t n) {
  RatVector v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(make_rational(draw_int(rng, -9, 9), draw_int(rng, 1, 4)));
  return v;
}

SemidirectElem random_elem(std::mt19937_64& rng) {
  return {random_vector(rng, 3), sym_power(random_unimodular(rng), 2).matrix};
}

bool stabilizes(const LatticeBasis& l, const RatMatrix& g) {
  return l.maps_into_self(g) && l.maps_into_self(inverse(g));
}

// Index-p sublattices of l: kernels of the nonzero functionals mod p on the
// coordinates of the HNF basis, one per projective point.
std::vector<LatticeBasis> index_p_sublattices(const LatticeBasis& l, long p) {
  const RatMatrix b = l.rational_basis();
  const std::size_t n = b.rows();
  std::vector<LatticeBasis> out;
  std::vector<long> f(n, 0);
  long total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= p;
  for (long code = 1; code < total; ++code) {
    long c = code;
    for (std::size_t k = 0; k < n; ++k) {
      f[k] = c % p;
      c /= p;
    }
    std::size_t lead = 0;
    while (f[lead] == 0) ++lead;
    if (f[lead] != 1) continue;
    RatMatrix rows(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == lead)
          rows(i, j) = Rational(p) * b(lead, j);
        else
          rows(i, j) = b(i, j) - Rational(f[i]) * b(lead, j);
      }
    out.push_back(LatticeBasis::from_rows(rows));
  }
  return out;
}

}  // namespace

TEST(Semidirect, Examples) {
  const SemidirectElem x{{1, 2}, RatMatrix::identity(2)}, y{{3, -1}, RatMatrix::identity(2)};
  EXPECT_EQ(semidirect_mul(x, y), (SemidirectElem{{4, 1}, RatMatrix::identity(2)}));
  const SemidirectElem z{{1, Rational(1, 2)}, RatMatrix{{2, 1}, {1, 1}}};
  EXPECT_EQ(semidirect_mul(z, semidirect_inv(z)), semidirect_identity(2));
  EXPECT_EQ(code_of([&] { semidirect_mul(x, semidirect_identity(3)); }), ErrorCode::DimensionMismatch);
}

TEST(Semidirect, GroupAxioms) {
  std::mt19937_64 rng(2024);
  const SemidirectElem e = semidirect_identity(3);
  for (int t = 0; t < 1000; ++t) {
    const SemidirectElem x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
    ASSERT_EQ(semidirect_mul(semidirect_mul(x, y), z), semidirect_mul(x, semidirect_mul(y, z)));
    ASSERT_EQ(semidirect_mul(x, e), x);
    ASSERT_EQ(semidirect_mul(e, x), x);
    ASSERT_EQ(semidirect_mul(semidirect_inv(x), x), e);
  }
}

TEST(Saturation, IntegerWitnessesKeepZn) {
  const auto r = invariant_lattice_saturation({RatMatrix{{1, 1}, {0, 1}}, RatMatrix{{0, -1}, {1, 0}}},
                                              LatticeBasis::standard(2));
  EXPECT_EQ(r.lattice, LatticeBasis::standard(2));
  EXPECT_EQ(r.iterations, 1);
}

TEST(Saturation, AdjointWitnessesKeepZ3) {
  const QuaternionAlgebra alg(2, 3);
  const std::vector<RatMatrix> w{adjoint_on_trace_zero(QuaternionElem(alg, {3, 2, 0, 0})).matrix,
                                 adjoint_on_trace_zero(QuaternionElem(alg, {2, 0, 1, 0})).matrix};
  EXPECT_EQ(invariant_lattice_saturation(w, LatticeBasis::standard(3)).lattice, LatticeBasis::standard(3));
}

TEST(Saturation, HalfShear) {
  const RatMatrix g{{1, Rational(1, 2)}, {0, 1}};
  const auto r = invariant_lattice_saturation({g}, LatticeBasis::standard(2));
  const LatticeBasis expect = LatticeBasis::from_rows(RatMatrix{{Rational(1, 2), 0}, {0, 1}});
  EXPECT_EQ(r.lattice, expect);
  EXPECT_TRUE(stabilizes(r.lattice, g));
  EXPECT_EQ(r.iterations, 2);
  EXPECT_EQ(r.denominator_trace.back(), 2);
}

TEST(Saturation, Errors) {
  EXPECT_EQ(code_of([] { invariant_lattice_saturation({RatMatrix{{2, 0}, {0, 1}}}, LatticeBasis::standard(2)); }),
            ErrorCode::NotUnimodular);
  const RatMatrix hyperbolic{{2, 0}, {0, Rational(1, 2)}};
  EXPECT_EQ(code_of([&] { invariant_lattice_saturation({hyperbolic}, LatticeBasis::standard(2), 6); }),
            ErrorCode::NoStabilization);
}

TEST(Saturation, MonotoneInvariantAndMinimal) {
  // Conjugate integral adjoint witnesses by diag(7, 1, 1) so that Z^3 is no
  // longer invariant.
  const QuaternionAlgebra alg(2, 3);
  const RatMatrix c{{7, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const RatMatrix ci = inverse(c);
  std::vector<RatMatrix> w;
  for (const auto& u : enumerate_norm_one(QuaternionOrder(alg), 3).elements)
    w.push_back(ci * adjoint_on_trace_zero(u).matrix * c);
  ASSERT_TRUE(std::any_of(w.begin(), w.end(), [](const RatMatrix& g) {
    return std::any_of(g.entries().begin(), g.entries().end(), [](const Rational& e) { return !is_integer(e); });
  }));
  const LatticeBasis start = LatticeBasis::standard(3);
  const auto r = invariant_lattice_saturation(w, start);
  EXPECT_NE(r.lattice, start);
  EXPECT_TRUE(r.lattice.contains(start));
  for (const auto& g : w) EXPECT_TRUE(stabilizes(r.lattice, g));
  int candidates = 0;
  for (long p : {2L, 3L, 5L, 7L})
    for (const auto& m : index_p_sublattices(r.lattice, p)) {
      if (!m.contains(start)) continue;
      ++candidates;
      bool broken = false;
      for (const auto& g : w) broken = broken || !stabilizes(m, g);
      EXPECT_TRUE(broken) << "invariant sublattice of index " << p;
    }
  EXPECT_GT(candidates, 0);
}

TEST(Blocks, Parse) {
  const auto b = parse_blocks("4:2,3:1");
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].dimension, 4);
  EXPECT_EQ(b[0].multiplicity, 2);
  EXPECT_EQ(b[1].dimension, 3);
  for (const char* bad : {"", "4", "4:", "a:1", "4:2,", "0:1", "3:-1", "3:1x"})
    EXPECT_EQ(code_of([&] { parse_blocks(bad); }), ErrorCode::InvalidInput) << bad;
}

TEST(Build, CocompactThree) {
  BuildOptions opts;
  opts.height = 5;
  const LatticeData d = build_cocompact_lattice(2, 3, 3, opts);
  EXPECT_EQ(d.n, 3u);
  EXPECT_EQ(d.lattice, LatticeBasis::standard(3));
  EXPECT_TRUE(d.cocompact);
  EXPECT_FALSE(d.godement.nontrivial_unipotent);
  for (const auto& w : d.witnesses)
    for (const auto& e : w.entries()) EXPECT_TRUE(is_integer(e));
  const VerificationReport rep = verify_lattice(d);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  EXPECT_TRUE(rep.all_pass());
}

TEST(Build, Refusals) {
  EXPECT_EQ(code_of([] { build_cocompact_lattice(2, 3, 4); }), ErrorCode::EvenDimension);
  EXPECT_EQ(code_of([] { build_cocompact_lattice(2, 3, 2); }), ErrorCode::EvenDimension);
  EXPECT_EQ(code_of([] { build_cocompact_lattice(1, 1, 3); }), ErrorCode::NotDivision);
  EXPECT_EQ(code_of([] { build_cocompact_lattice(-1, -1, 3); }), ErrorCode::NotSplitAtInfinity);
  EXPECT_EQ(code_of([] { build_cocompact_lattice(2, 3, 1); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { build_multiplicity_lattice({{2, 1}}, 2, 3); }), ErrorCode::OddMultiplicityOfEven);
  EXPECT_EQ(code_of([] { build_multiplicity_lattice({{3, 1}}, 1, 1); }), ErrorCode::NotDivision);
}

TEST(Build, SingleOddBlockMatchesCocompact) {
  const LatticeData a = build_cocompact_lattice(2, 3, 3);
  const LatticeData b = build_multiplicity_lattice({{3, 1}}, 2, 3);
  EXPECT_EQ(a.witnesses, b.witnesses);
  EXPECT_EQ(a.lattice, b.lattice);
  EXPECT_TRUE(verify_lattice(b).all_pass());
}

TEST(Build, MixedBlocks) {
  const LatticeData d = build_multiplicity_lattice({{3, 2}, {1, 1}}, 2, 3);
  EXPECT_EQ(d.n, 7u);
  EXPECT_TRUE(verify_lattice(d).all_pass());
}

TEST(Build, Split) {
  const LatticeData d2 = build_split_lattice(2);
  EXPECT_EQ(d2.witnesses[0], (RatMatrix{{0, -1}, {1, 0}}));
  EXPECT_EQ(d2.witnesses[1], (RatMatrix{{1, 1}, {0, 1}}));
  const LatticeData d3 = build_split_lattice(3);
  EXPECT_EQ(d3.witnesses[1], (RatMatrix{{1, 1, 1}, {0, 1, 2}, {0, 0, 1}}));
  EXPECT_TRUE(is_unipotent(d3.witnesses[1]));
  EXPECT_TRUE(d3.godement.nontrivial_unipotent);
  EXPECT_FALSE(d3.cocompact);
  EXPECT_TRUE(verify_lattice(d3).all_pass());
}

TEST(Verify, WrongLatticeFailsInvariance) {
  LatticeData d = build_split_lattice(2);
  d.witnesses[1] = RatMatrix{{1, Rational(1, 2)}, {0, 1}};
  d.lattice = LatticeBasis::from_rows(RatMatrix{{2, 0}, {0, 2}});
  const VerificationReport rep = verify_lattice(d);
  EXPECT_FALSE(rep.all_pass());
  for (const auto& c : rep.checks)
    if (c.name == "generator_invariance") EXPECT_FALSE(c.pass);
}

TEST(Verify, TamperedWitnessIsCaught) {
  LatticeData d = build_cocompact_lattice(2, 3, 3);
  std::size_t k = 0;
  while (k < d.witnesses.size() && d.witnesses[k] == RatMatrix::identity(3)) ++k;
  ASSERT_LT(k, d.witnesses.size());
  d.witnesses[k] = d.witnesses[k] * d.witnesses[k];
  const VerificationReport rep = verify_lattice(d);
  EXPECT_FALSE(rep.checks[0].pass);
  EXPECT_EQ(rep.checks[0].name, "witness_recomputation");
}
